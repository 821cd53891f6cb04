//! Structures derived from a Dyck word: level vectors, area sequences,
//! peaks, right-step positions, and the word symmetries.

use std::collections::BTreeMap;

use crate::word::{DyckWord, Step};

/// Post-step heights of a Dyck word: entry `i` (1-based) is the height
/// after step `i`, with an implicit height 0 before step 1.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LevelVector {
    levels: Vec<i32>,
}

impl LevelVector {
    /// Height after the step at a 1-based position.
    pub fn level(&self, position: usize) -> i32 {
        self.levels[position - 1]
    }

    /// Height before the step at a 1-based position (`level(position - 1)`,
    /// or 0 for position 1).
    pub fn pre_level(&self, position: usize) -> i32 {
        if position == 1 {
            0
        } else {
            self.levels[position - 2]
        }
    }

    /// All post-step heights in position order.
    pub fn as_slice(&self) -> &[i32] {
        &self.levels
    }

    /// The path maximum.
    pub fn max(&self) -> i32 {
        self.levels.iter().copied().max().unwrap_or(0)
    }
}

/// Per-row cell counts between the path and the diagonal, rows numbered
/// from the bottom. Row `i` holds the height of the path just before its
/// `i`-th up-step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AreaSequence {
    rows: Vec<u32>,
}

impl AreaSequence {
    /// Row entries `a_1 ..= a_n`.
    pub fn rows(&self) -> &[u32] {
        &self.rows
    }

    /// Total area.
    pub fn sum(&self) -> u32 {
        self.rows.iter().sum()
    }

    /// Largest row entry (0 for the staircase).
    pub fn max(&self) -> u32 {
        self.rows.iter().copied().max().unwrap_or(0)
    }
}

/// Peak positions grouped by peak height. A peak is a 1-based position
/// `i < 2n` with an up-step at `i` followed by a down-step at `i + 1`;
/// its height is the post-step level at `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PeakSet {
    by_level: BTreeMap<u32, Vec<usize>>,
    max_level: u32,
}

impl PeakSet {
    /// Peak positions at the given height, in increasing position order.
    pub fn at_level(&self, level: u32) -> &[usize] {
        self.by_level.get(&level).map_or(&[], Vec::as_slice)
    }

    /// Grouped view, keyed by height.
    pub fn by_level(&self) -> &BTreeMap<u32, Vec<usize>> {
        &self.by_level
    }

    /// Height of the highest peak, which is also the path maximum.
    pub fn max_level(&self) -> u32 {
        self.max_level
    }
}

/// The set `R` of 1-based positions carrying a down-step.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RightStepSet {
    mask: u32,
    len: usize,
}

impl RightStepSet {
    /// Whether the 1-based position is a down-step.
    pub fn contains(&self, position: usize) -> bool {
        position >= 1 && position <= self.len && self.mask >> (self.len - position) & 1 == 1
    }

    /// Number of down-steps (always the semilength).
    pub fn count(&self) -> usize {
        self.mask.count_ones() as usize
    }

    /// Positions in increasing order.
    pub fn positions(&self) -> impl Iterator<Item = usize> + '_ {
        (1..=self.len).filter(|&i| self.contains(i))
    }
}

impl DyckWord {
    /// Post-step heights: the running sum of step deltas.
    pub fn levels(&self) -> LevelVector {
        LevelVector {
            levels: levels_raw_iter(self.steps()),
        }
    }

    /// Area sequence: `a_i` is the height just before the `i`-th up-step,
    /// equivalently the number of whole cells between path and diagonal
    /// in row `i` from the bottom.
    pub fn area_sequence(&self) -> AreaSequence {
        let mut rows = Vec::with_capacity(self.semilength());
        let mut height = 0i32;
        for step in self.steps() {
            if step == Step::Up {
                rows.push(height as u32);
            }
            height += step.delta();
        }
        AreaSequence { rows }
    }

    /// Peaks grouped by height.
    pub fn peaks(&self) -> PeakSet {
        let mut by_level: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        let mut height = 0i32;
        for position in 1..=self.len() {
            height += self.step(position).delta();
            if position < self.len()
                && self.step(position) == Step::Up
                && self.step(position + 1) == Step::Down
            {
                by_level.entry(height as u32).or_default().push(position);
            }
        }
        let max_level = by_level.keys().next_back().copied().unwrap_or(0);
        debug_assert_eq!(i64::from(max_level), i64::from(self.levels().max()));
        PeakSet {
            by_level,
            max_level,
        }
    }

    /// Positions of the down-steps.
    pub fn right_steps(&self) -> RightStepSet {
        RightStepSet {
            mask: !self.bits() & (u32::MAX >> (32 - self.len())),
            len: self.len(),
        }
    }

    /// The reversed step sequence. Not a Dyck word in general, so the
    /// result is a raw step sequence.
    pub fn reversed(&self) -> Vec<Step> {
        (1..=self.len()).rev().map(|i| self.step(i)).collect()
    }

    /// Reverse-complement: reverse the word and swap up-steps with
    /// down-steps. Always a valid Dyck word (the path reflected
    /// end-to-end).
    pub fn rev_complement(&self) -> DyckWord {
        let steps: Vec<Step> = (1..=self.len())
            .rev()
            .map(|i| self.step(i).complement())
            .collect();
        DyckWord::from_steps(&steps).expect("reverse-complement of a Dyck word is a Dyck word")
    }
}

/// Running heights of an arbitrary step sequence. Unlike
/// [`DyckWord::levels`] this enforces no nonnegativity, which is what
/// reversed Dyck words need.
pub fn levels_raw(steps: &[Step]) -> Vec<i32> {
    levels_raw_iter(steps.iter().copied())
}

fn levels_raw_iter(steps: impl Iterator<Item = Step>) -> Vec<i32> {
    let mut height = 0i32;
    steps
        .map(|step| {
            height += step.delta();
            height
        })
        .collect()
}

/// Renders a raw step sequence as `1`/`0` text.
pub fn render_steps(steps: &[Step]) -> String {
    steps.iter().map(|s| s.symbol()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> DyckWord {
        DyckWord::parse(text).unwrap()
    }

    #[test]
    fn levels_of_smallest_word() {
        assert_eq!(w("10").levels().as_slice(), &[1, 0]);
    }

    #[test]
    fn levels_of_semilength_eight_example() {
        assert_eq!(
            w("1110101100011000").levels().as_slice(),
            &[1, 2, 3, 2, 3, 2, 3, 4, 3, 2, 1, 2, 3, 2, 1, 0]
        );
    }

    #[test]
    fn raw_levels_handle_negative_heights() {
        let steps: Vec<Step> = "0001100011010111"
            .chars()
            .map(|c| if c == '1' { Step::Up } else { Step::Down })
            .collect();
        assert_eq!(
            levels_raw(&steps),
            vec![-1, -2, -3, -2, -1, -2, -3, -4, -3, -2, -3, -2, -3, -2, -1, 0]
        );
        assert_eq!(levels_raw(&[]), Vec::<i32>::new());
        assert_eq!(levels_raw(&[Step::Down, Step::Up]), vec![-1, 0]);
    }

    #[test]
    fn pre_levels_shift_by_one() {
        let levels = w("110100").levels();
        assert_eq!(levels.pre_level(1), 0);
        assert_eq!(levels.pre_level(2), 1);
        assert_eq!(levels.pre_level(6), 1);
    }

    #[test]
    fn area_sequence_examples() {
        assert_eq!(w("1010").area_sequence().rows(), &[0, 0]);
        assert_eq!(w("110100").area_sequence().rows(), &[0, 1, 1]);
        assert_eq!(
            w("1110101100011000").area_sequence().rows(),
            &[0, 1, 2, 2, 2, 3, 1, 2]
        );
    }

    /// Geometric cell count: cell (column c, row r), both 0-based, lies
    /// between the path and the diagonal iff the path has already passed
    /// its column when crossing row r.
    fn cell_count(word: &DyckWord) -> u32 {
        let n = word.semilength();
        let mut x_at_row = vec![0usize; n];
        let mut x = 0;
        let mut row = 0;
        for step in word.steps() {
            match step {
                Step::Up => {
                    x_at_row[row] = x;
                    row += 1;
                }
                Step::Down => x += 1,
            }
        }
        let mut cells = 0;
        for r in 0..n {
            for c in 0..n {
                if x_at_row[r] <= c && c < r {
                    cells += 1;
                }
            }
        }
        cells as u32
    }

    #[test]
    fn area_sequence_sum_matches_cell_count_exhaustively() {
        for n in 1..=8 {
            for word in crate::enumerate(n).unwrap().iter() {
                assert_eq!(word.area_sequence().sum(), cell_count(&word), "{word}");
            }
        }
    }

    #[test]
    fn peaks_examples() {
        let p = w("10").peaks();
        assert_eq!(p.at_level(1), &[1]);
        assert_eq!(p.max_level(), 1);

        let p = w("1110101100011000").peaks();
        assert_eq!(p.at_level(4), &[8]);
        assert_eq!(p.at_level(3), &[3, 5, 13]);
        assert_eq!(p.at_level(2), &[] as &[usize]);
        assert_eq!(p.max_level(), 4);

        let p = w("110100").peaks();
        assert_eq!(p.at_level(2), &[2, 4]);
        assert_eq!(p.max_level(), 2);
    }

    #[test]
    fn peaks_via_adjacency_scan_exhaustively() {
        for n in 1..=7 {
            for word in crate::enumerate(n).unwrap().iter() {
                let text = word.render();
                let bytes = text.as_bytes();
                let levels = word.levels();
                let peaks = word.peaks();
                let mut listed = 0;
                for i in 1..word.len() {
                    if bytes[i - 1] == b'1' && bytes[i] == b'0' {
                        let level = levels.level(i) as u32;
                        assert!(peaks.at_level(level).contains(&i), "{word} peak {i}");
                        listed += 1;
                    }
                }
                let stored: usize = peaks.by_level().values().map(Vec::len).sum();
                assert_eq!(listed, stored, "{word}");
                assert_eq!(peaks.max_level() as i32, levels.max(), "{word}");
            }
        }
    }

    #[test]
    fn right_steps_of_example() {
        let r = w("1110101100011000").right_steps();
        let positions: Vec<usize> = r.positions().collect();
        assert_eq!(positions, vec![4, 6, 9, 10, 11, 14, 15, 16]);
        assert_eq!(r.count(), 8);
        assert!(!r.contains(1));
        assert!(r.contains(16));
    }

    #[test]
    fn derived_structures_at_the_packed_cap() {
        // semilength 16 occupies the full 32-bit pattern
        let text = format!("{}{}", "10".repeat(8), "1100".repeat(4));
        let word = w(&text);
        assert_eq!(word.semilength(), 16);
        let r = word.right_steps();
        assert_eq!(r.count(), 16);
        assert!(r.contains(32));
        assert!(!r.contains(1));
        assert_eq!(word.levels().level(32), 0);
        assert_eq!(word.area_sequence().rows().len(), 16);
        assert_eq!(word.rev_complement().rev_complement(), word);
    }

    #[test]
    fn reversal_examples() {
        assert_eq!(
            render_steps(&w("1110101100011000").reversed()),
            "0001100011010111"
        );
        assert_eq!(render_steps(&w("10").reversed()), "01");
    }

    #[test]
    fn rev_complement_examples() {
        assert_eq!(w("10").rev_complement(), w("10"));
        assert_eq!(w("110100").rev_complement(), w("110100"));
        assert_eq!(
            w("1110101100011000").rev_complement(),
            w("1110011100101000")
        );
    }

    #[test]
    fn rev_complement_is_an_involution_exhaustively() {
        for n in 1..=8 {
            for word in crate::enumerate(n).unwrap().iter() {
                assert_eq!(word.rev_complement().rev_complement(), word);
            }
        }
    }

    #[test]
    fn reversed_levels_mirror_forward_levels() {
        // levels_raw(reversed(w))[i] == -levels(w)[2n - i], 1-based both sides
        for n in 1..=8 {
            for word in crate::enumerate(n).unwrap().iter() {
                let forward = word.levels();
                let backward = levels_raw(&word.reversed());
                let len = word.len();
                for i in 1..len {
                    assert_eq!(backward[i - 1], -forward.level(len - i), "{word} at {i}");
                }
                assert_eq!(backward[len - 1], 0);
            }
        }
    }
}

//! The two classical routes to the zeta image: the sweep and the
//! area-sequence passes. Both send a Dyck word to the word obtained by
//! reading its steps level by level, and agree on every input.

use dyck_core::{levels_raw, render_steps, DyckWord, Step};

use crate::error::MapError;

/// Validates the collected steps as a Dyck word of the input's
/// semilength.
pub(crate) fn validate_output(
    map: &'static str,
    input: &DyckWord,
    steps: &[Step],
) -> Result<DyckWord, MapError> {
    let fail = || MapError::InvariantViolation {
        map,
        input: input.render(),
        output: render_steps(steps),
    };
    if steps.len() != input.len() {
        return Err(fail());
    }
    let word = DyckWord::from_steps(steps).map_err(|_| fail())?;
    if word.semilength() != input.semilength() {
        return Err(fail());
    }
    Ok(word)
}

/// Zeta image via the sweep: reverse the word, attach post-step heights,
/// then collect entries for heights `0, -1, -2, ...`, left to right
/// within each height.
pub fn zeta_sweep(word: &DyckWord) -> Result<DyckWord, MapError> {
    let reversed = word.reversed();
    let heights = levels_raw(&reversed);
    let lowest = heights.iter().copied().min().unwrap_or(0);
    let mut steps = Vec::with_capacity(word.len());
    let mut target = 0i32;
    while target >= lowest {
        for (idx, &height) in heights.iter().enumerate() {
            if height == target {
                steps.push(reversed[idx]);
            }
        }
        target -= 1;
    }
    debug_assert_eq!(
        steps,
        sweep_by_pre_levels(word),
        "sweep forms disagree on {word}"
    );
    validate_output("zeta_sweep", word, &steps)
}

/// Equivalent sweep on the original word: group positions by pre-step
/// height `k = 0, 1, 2, ...`, taking positions in decreasing order within
/// each group.
pub(crate) fn sweep_by_pre_levels(word: &DyckWord) -> Vec<Step> {
    let levels = word.levels();
    let highest = levels
        .as_slice()
        .iter()
        .enumerate()
        .map(|(idx, _)| levels.pre_level(idx + 1))
        .max()
        .unwrap_or(0);
    let mut steps = Vec::with_capacity(word.len());
    for target in 0..=highest {
        for position in (1..=word.len()).rev() {
            if levels.pre_level(position) == target {
                steps.push(word.step(position));
            }
        }
    }
    steps
}

/// The per-step source heights of the sweep output, in emission order.
/// Useful for checking the sweep's grouping against a known level row.
pub fn sweep_level_row(word: &DyckWord) -> Vec<i32> {
    let reversed = word.reversed();
    let heights = levels_raw(&reversed);
    let lowest = heights.iter().copied().min().unwrap_or(0);
    let mut row = Vec::with_capacity(word.len());
    let mut target = 0i32;
    while target >= lowest {
        row.extend(heights.iter().filter(|&&h| h == target));
        target -= 1;
    }
    row
}

/// Zeta image computed from the area sequence alone.
///
/// Pass `k` collects, top row first, the steps whose pre-step height is
/// `k`: the descending run after row `i` (with `a_{n+1} = 0`) holds such
/// a down-step exactly when `a_{i+1} + 1 <= k <= a_i + 1`, and row `i`'s
/// up-step qualifies when `a_i = k`. Concatenating the passes for
/// `k = 0, 1, 2, ...` rebuilds the sweep image without touching the word
/// itself.
pub fn zeta_area_vector(word: &DyckWord) -> Result<DyckWord, MapError> {
    let seq = word.area_sequence();
    let rows = seq.rows();
    let len = word.len();
    let mut steps = Vec::with_capacity(len);
    let mut pass = 0u32;
    let last_pass = seq.max() + 1;
    while steps.len() < len {
        if pass > last_pass {
            // no step has a higher pre-step height; a short output here
            // means the pass bookkeeping broke
            return Err(MapError::InvariantViolation {
                map: "zeta_area_vector",
                input: word.render(),
                output: render_steps(&steps),
            });
        }
        for i in (0..rows.len()).rev() {
            let below = if i + 1 < rows.len() { rows[i + 1] } else { 0 };
            if below + 1 <= pass && pass <= rows[i] + 1 {
                steps.push(Step::Down);
            }
            if rows[i] == pass {
                steps.push(Step::Up);
            }
        }
        pass += 1;
    }
    validate_output("zeta_area_vector", word, &steps)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(text: &str) -> DyckWord {
        DyckWord::parse(text).unwrap()
    }

    #[test]
    fn sweep_fixes_the_smallest_word() {
        assert_eq!(zeta_sweep(&w("10")).unwrap(), w("10"));
        assert_eq!(zeta_area_vector(&w("10")).unwrap(), w("10"));
    }

    #[test]
    fn sweep_on_the_semilength_eight_example() {
        let image = zeta_sweep(&w("1110101100011000")).unwrap();
        assert_eq!(image, w("1011010111001000"));
    }

    #[test]
    fn sweep_level_row_on_the_semilength_eight_example() {
        assert_eq!(
            sweep_level_row(&w("1110101100011000")),
            vec![0, -1, -1, -1, -2, -2, -2, -2, -2, -2, -3, -3, -3, -3, -3, -4]
        );
    }

    #[test]
    fn sweep_swaps_the_two_words_of_semilength_two() {
        assert_eq!(zeta_sweep(&w("1010")).unwrap(), w("1100"));
        assert_eq!(zeta_sweep(&w("1100")).unwrap(), w("1010"));
    }

    #[test]
    fn area_vector_examples() {
        assert_eq!(zeta_area_vector(&w("110100")).unwrap(), w("101100"));
        assert_eq!(
            zeta_area_vector(&w("1110101100011000")).unwrap(),
            w("1011010111001000")
        );
    }

    #[test]
    fn the_two_routes_agree_exhaustively() {
        for n in 1..=9 {
            for word in dyck_core::enumerate(n).unwrap().iter() {
                assert_eq!(
                    zeta_area_vector(&word).unwrap(),
                    zeta_sweep(&word).unwrap(),
                    "{word}"
                );
            }
        }
    }

    #[test]
    fn maps_agree_at_the_packed_cap() {
        let e = dyck_core::enumerate(16).unwrap();
        for start in [0u64, 17_000_000, e.count() - 50] {
            for word in e.range(start, start + 50) {
                let sweep = zeta_sweep(&word).unwrap();
                assert_eq!(zeta_area_vector(&word).unwrap(), sweep, "{word}");
                assert_eq!(
                    crate::scaffolding::scaffolding_conjugate(&word).unwrap(),
                    sweep,
                    "{word}"
                );
            }
        }
    }

    #[test]
    fn sweep_is_injective_exhaustively() {
        for n in 1..=9 {
            let mut images = std::collections::HashSet::new();
            let mut count = 0u64;
            for word in dyck_core::enumerate(n).unwrap().iter() {
                images.insert(zeta_sweep(&word).unwrap().bits());
                count += 1;
            }
            assert_eq!(images.len() as u64, count, "n={n}");
        }
    }
}

//! Lexicographic enumeration of Dyck words with ranked access, plus exact
//! Catalan counting.
//!
//! Words of a fixed semilength are ordered by their text with `'0' < '1'`,
//! so the staircase `1010…` comes first and the pyramid `1…10…0` last.
//! Enumeration state is a packed bit pattern advanced by a constant-space
//! successor rule; arbitrary ranks are reachable through `unrank`, which
//! is what makes contiguous chunking for parallel consumers cheap.

use std::sync::OnceLock;

use num_bigint::BigUint;
use thiserror::Error;

use crate::word::{DyckWord, MAX_SEMILENGTH};

/// A semilength outside the supported range of an operation.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
#[error("semilength {n} is outside the supported range {min}..={max}")]
pub struct SemilengthOutOfRange {
    pub n: usize,
    pub min: usize,
    pub max: usize,
}

impl SemilengthOutOfRange {
    pub fn check(n: usize, min: usize, max: usize) -> Result<(), Self> {
        if n < min || n > max {
            Err(SemilengthOutOfRange { n, min, max })
        } else {
            Ok(())
        }
    }
}

/// `completions[r][s]`: number of ways to finish `r` steps from height `s`
/// ending at height 0 without going negative. Ballot numbers; column 0 of
/// the even rows holds the Catalan numbers.
fn completions() -> &'static [[u64; 34]; 33] {
    static TABLE: OnceLock<[[u64; 34]; 33]> = OnceLock::new();
    TABLE.get_or_init(|| {
        let mut t = [[0u64; 34]; 33];
        t[0][0] = 1;
        for r in 1..33 {
            for s in 0..33 {
                let up = t[r - 1][s + 1];
                let down = if s > 0 { t[r - 1][s - 1] } else { 0 };
                t[r][s] = up + down;
            }
        }
        t
    })
}

/// Exact Catalan number `C(n) = binomial(2n, n) / (n + 1)`.
pub fn catalan(n: usize) -> BigUint {
    let mut binom = BigUint::from(1u32);
    for k in 1..=n {
        binom = binom * (n + k) as u64 / k as u64;
    }
    binom / (n as u64 + 1)
}

/// Catalan number as a machine word; valid for every supported semilength.
pub fn catalan_u64(n: usize) -> u64 {
    assert!(n <= MAX_SEMILENGTH, "semilength {n} above the packed cap");
    completions()[2 * n][0]
}

/// The set of Dyck words of one semilength, in lexicographic order.
#[derive(Clone, Copy, Debug)]
pub struct Enumeration {
    n: usize,
    count: u64,
}

impl Enumeration {
    pub fn new(n: usize) -> Result<Self, SemilengthOutOfRange> {
        SemilengthOutOfRange::check(n, 1, MAX_SEMILENGTH)?;
        Ok(Enumeration {
            n,
            count: catalan_u64(n),
        })
    }

    pub fn semilength(&self) -> usize {
        self.n
    }

    /// Number of words, `C(n)`.
    pub fn count(&self) -> u64 {
        self.count
    }

    /// Iterates every word once, lexicographically.
    pub fn iter(&self) -> Words {
        self.range(0, self.count)
    }

    /// Iterates the contiguous rank range `start..end`. Ranges of a
    /// partition may be consumed concurrently.
    pub fn range(&self, start: u64, end: u64) -> Words {
        assert!(
            start <= end && end <= self.count,
            "bad range {start}..{end}"
        );
        let state = if start < end {
            Some(self.unrank(start).bits())
        } else {
            None
        };
        Words {
            n: self.n,
            remaining: end - start,
            state,
        }
    }

    /// The word at a 0-based rank.
    pub fn unrank(&self, rank: u64) -> DyckWord {
        assert!(rank < self.count, "rank {rank} out of range");
        let table = completions();
        let mut rank = rank;
        let mut bits = 0u32;
        let mut height = 0usize;
        let len = 2 * self.n;
        for position in 1..=len {
            let remaining = len - position;
            // Try the lexicographically smaller down-step first.
            let with_down = if height > 0 {
                table[remaining][height - 1]
            } else {
                0
            };
            bits <<= 1;
            if rank < with_down {
                height -= 1;
            } else {
                rank -= with_down;
                bits |= 1;
                height += 1;
            }
        }
        DyckWord::from_bits_unchecked(self.n, bits)
    }

    /// The 0-based rank of a word of this semilength.
    pub fn rank(&self, word: &DyckWord) -> u64 {
        assert_eq!(word.semilength(), self.n, "semilength mismatch");
        let table = completions();
        let mut rank = 0u64;
        let mut height = 0usize;
        let len = 2 * self.n;
        for position in 1..=len {
            let remaining = len - position;
            let with_down = if height > 0 {
                table[remaining][height - 1]
            } else {
                0
            };
            if word.bits() >> (len - position) & 1 == 1 {
                rank += with_down;
                height += 1;
            } else {
                height -= 1;
            }
        }
        rank
    }
}

/// Iterator over a rank range of an enumeration.
#[derive(Clone, Debug)]
pub struct Words {
    n: usize,
    remaining: u64,
    state: Option<u32>,
}

impl Words {
    /// Advances a packed word to its lexicographic successor: flip the
    /// rightmost feasible down-step to an up-step, then refill the suffix
    /// with the smallest valid completion.
    fn successor(n: usize, bits: u32) -> Option<u32> {
        let len = 2 * n;
        let step_up = |b: u32, pos: usize| b >> (len - pos) & 1 == 1;
        // Running counts just before each scanned position.
        let mut ups_before = n;
        for position in (1..=len).rev() {
            if step_up(bits, position) {
                ups_before -= 1;
                continue;
            }
            if ups_before == n {
                continue;
            }
            // Flipping is feasible iff enough positions remain for the
            // unplaced up-steps.
            let remaining = len - position;
            let ups_left = n - ups_before - 1;
            if ups_left > remaining {
                continue;
            }
            let keep_mask = if position == 1 {
                0
            } else {
                !0u32 << (len - position + 1)
            };
            let mut next = (bits & keep_mask) | 1 << (len - position);
            let downs_before = position - 1 - ups_before;
            let mut height = (ups_before + 1) as i64 - downs_before as i64;
            let mut downs_left = remaining - ups_left;
            for fill in position + 1..=len {
                if height > 0 && downs_left > 0 {
                    downs_left -= 1;
                    height -= 1;
                } else {
                    next |= 1 << (len - fill);
                    height += 1;
                }
            }
            return Some(next);
        }
        None
    }
}

impl Iterator for Words {
    type Item = DyckWord;

    fn next(&mut self) -> Option<DyckWord> {
        if self.remaining == 0 {
            return None;
        }
        let bits = self.state?;
        let word = DyckWord::from_bits_unchecked(self.n, bits);
        self.remaining -= 1;
        self.state = if self.remaining > 0 {
            Self::successor(self.n, bits)
        } else {
            None
        };
        Some(word)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        (self.remaining as usize, Some(self.remaining as usize))
    }
}

impl ExactSizeIterator for Words {}

/// Enumerates Dyck words of semilength `n` in lexicographic order.
pub fn enumerate(n: usize) -> Result<Enumeration, SemilengthOutOfRange> {
    Enumeration::new(n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn catalan_values() {
        for (n, expected) in [(0u32, 1u64), (1, 1), (2, 2), (3, 5), (4, 14), (5, 42)] {
            assert_eq!(catalan(n as usize), BigUint::from(expected));
        }
        assert_eq!(catalan(11), BigUint::from(58786u64));
        assert_eq!(catalan(16), BigUint::from(35357670u64));
        assert_eq!(catalan(20), BigUint::from(6564120420u64));
        for n in 0..=MAX_SEMILENGTH {
            assert_eq!(catalan(n), BigUint::from(catalan_u64(n)));
        }
    }

    #[test]
    fn n_equals_one_yields_single_word() {
        let words: Vec<String> = enumerate(1).unwrap().iter().map(|w| w.render()).collect();
        assert_eq!(words, vec!["10"]);
    }

    #[test]
    fn n_equals_three_yields_five_words_in_lex_order() {
        let words: Vec<String> = enumerate(3).unwrap().iter().map(|w| w.render()).collect();
        assert_eq!(
            words,
            vec!["101010", "101100", "110010", "110100", "111000"]
        );
    }

    #[test]
    fn counts_and_distinctness_match_catalan() {
        for n in 1..=10 {
            let e = enumerate(n).unwrap();
            let mut seen = std::collections::HashSet::new();
            let mut previous: Option<DyckWord> = None;
            let mut count = 0u64;
            for word in e.iter() {
                assert!(seen.insert(word.bits()), "duplicate {word}");
                if let Some(p) = previous {
                    assert!(p < word, "order violated at {word}");
                }
                previous = Some(word);
                count += 1;
            }
            assert_eq!(count, catalan_u64(n), "n={n}");
        }
    }

    #[test]
    fn rejects_out_of_range_semilengths() {
        assert!(enumerate(0).is_err());
        assert!(enumerate(17).is_err());
        let err = enumerate(20).unwrap_err();
        assert_eq!(err.n, 20);
        assert_eq!(err.max, 16);
    }

    #[test]
    fn unrank_agrees_with_iteration() {
        for n in [1usize, 2, 3, 5, 7] {
            let e = enumerate(n).unwrap();
            for (rank, word) in e.iter().enumerate() {
                assert_eq!(e.unrank(rank as u64), word, "n={n} rank={rank}");
                assert_eq!(e.rank(&word), rank as u64, "n={n} rank={rank}");
            }
        }
    }

    #[test]
    fn chunked_ranges_cover_the_enumeration() {
        for n in [4usize, 6, 8] {
            let e = enumerate(n).unwrap();
            for chunk in [1u64, 3, 7, 64] {
                let mut stitched = Vec::new();
                let mut start = 0;
                while start < e.count() {
                    let end = (start + chunk).min(e.count());
                    stitched.extend(e.range(start, end));
                    start = end;
                }
                let full: Vec<DyckWord> = e.iter().collect();
                assert_eq!(stitched, full, "n={n} chunk={chunk}");
            }
        }
    }

    #[test]
    fn ranked_access_at_the_packed_cap() {
        let e = enumerate(16).unwrap();
        assert_eq!(e.count(), 35_357_670);
        assert_eq!(e.unrank(0).render(), "10".repeat(16));
        assert_eq!(
            e.unrank(e.count() - 1).render(),
            format!("{}{}", "1".repeat(16), "0".repeat(16))
        );
        for start in [0u64, 1_234_567, e.count() - 100] {
            let words: Vec<DyckWord> = e.range(start, start + 100).collect();
            assert_eq!(words.len(), 100);
            for (offset, word) in words.iter().enumerate() {
                assert_eq!(e.rank(word), start + offset as u64);
            }
        }
    }

    #[test]
    fn parse_render_round_trip() {
        for n in 1..=8 {
            for word in enumerate(n).unwrap().iter() {
                assert_eq!(DyckWord::parse(&word.render()).unwrap(), word);
            }
        }
    }
}

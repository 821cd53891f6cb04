//! Dyck word representation, parsing and validation.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

/// Largest supported semilength. A word of semilength `n` occupies `2n`
/// bits, so everything up to `n = 16` fits a `u32` step pattern.
pub const MAX_SEMILENGTH: usize = 16;

/// A single lattice step. `Up` is the north step (symbol `1`),
/// `Down` the east step (symbol `0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Step {
    Up,
    Down,
}

impl Step {
    /// Canonical text symbol: `'1'` for `Up`, `'0'` for `Down`.
    pub fn symbol(self) -> char {
        match self {
            Step::Up => '1',
            Step::Down => '0',
        }
    }

    /// Height change of the step.
    pub fn delta(self) -> i32 {
        match self {
            Step::Up => 1,
            Step::Down => -1,
        }
    }

    /// The opposite step.
    pub fn complement(self) -> Step {
        match self {
            Step::Up => Step::Down,
            Step::Down => Step::Up,
        }
    }
}

/// Why a piece of text is not a valid Dyck word. Positions are 1-based.
#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum ParseError {
    #[error("symbol '{symbol}' at position {position} is not a step symbol (1/0, N/E, U/D)")]
    NonBinaryAlphabet { position: usize, symbol: char },
    #[error("word is not balanced: {ups} up-steps vs {downs} down-steps")]
    NotBalanced { ups: usize, downs: usize },
    #[error("path falls below the diagonal at position {position}")]
    BelowDiagonal { position: usize },
    #[error("empty word")]
    Empty,
    #[error("semilength {n} exceeds the supported maximum {max}")]
    TooLong { n: usize, max: usize },
}

/// A validated Dyck word of semilength `n`: a balanced word over `{1, 0}`
/// of length `2n` whose prefix sums (counting `1` as `+1`, `0` as `-1`)
/// never go negative.
///
/// Steps are packed most-significant-bit first, so for a fixed semilength
/// the derived ordering is the lexicographic order of the word text with
/// `'0' < '1'`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckWord {
    n: u8,
    bits: u32,
}

impl DyckWord {
    /// Validates a step sequence.
    pub fn from_steps(steps: &[Step]) -> Result<Self, ParseError> {
        if steps.is_empty() {
            return Err(ParseError::Empty);
        }
        let ups = steps.iter().filter(|s| **s == Step::Up).count();
        let downs = steps.len() - ups;
        if ups != downs {
            return Err(ParseError::NotBalanced { ups, downs });
        }
        let n = ups;
        if n > MAX_SEMILENGTH {
            return Err(ParseError::TooLong {
                n,
                max: MAX_SEMILENGTH,
            });
        }
        let mut height = 0i32;
        for (idx, step) in steps.iter().enumerate() {
            height += step.delta();
            if height < 0 {
                return Err(ParseError::BelowDiagonal { position: idx + 1 });
            }
        }
        let mut bits = 0u32;
        for step in steps {
            bits <<= 1;
            if *step == Step::Up {
                bits |= 1;
            }
        }
        Ok(DyckWord { n: n as u8, bits })
    }

    /// Parses word text. Accepts `1`/`0` and the aliases `N`/`E` and
    /// `U`/`D`, case-insensitive.
    pub fn parse(text: &str) -> Result<Self, ParseError> {
        let mut steps = Vec::with_capacity(text.len());
        for (idx, ch) in text.chars().enumerate() {
            let step = match ch {
                '1' | 'n' | 'N' | 'u' | 'U' => Step::Up,
                '0' | 'e' | 'E' | 'd' | 'D' => Step::Down,
                _ => {
                    return Err(ParseError::NonBinaryAlphabet {
                        position: idx + 1,
                        symbol: ch,
                    })
                }
            };
            steps.push(step);
        }
        Self::from_steps(&steps)
    }

    /// Builds a word from a packed pattern without validating.
    ///
    /// Callers must guarantee that the low `2n` bits of `bits` encode a
    /// valid Dyck word, most-significant step first.
    pub(crate) fn from_bits_unchecked(n: usize, bits: u32) -> Self {
        let word = DyckWord { n: n as u8, bits };
        debug_assert!(word.check_valid(), "invalid packed word {bits:#b} (n={n})");
        word
    }

    fn check_valid(&self) -> bool {
        let mut height = 0i32;
        for step in self.steps() {
            height += step.delta();
            if height < 0 {
                return false;
            }
        }
        height == 0
    }

    /// Semilength `n`.
    pub fn semilength(&self) -> usize {
        self.n as usize
    }

    /// Word length `2n`.
    pub fn len(&self) -> usize {
        2 * self.n as usize
    }

    /// Never true: words of semilength 0 are unrepresentable.
    pub fn is_empty(&self) -> bool {
        false
    }

    /// The packed step pattern, most-significant step first.
    pub fn bits(&self) -> u32 {
        self.bits
    }

    /// Step at a 1-based position.
    ///
    /// Panics if `position` is 0 or past the end of the word.
    pub fn step(&self, position: usize) -> Step {
        assert!(
            position >= 1 && position <= self.len(),
            "position {position} out of range 1..={}",
            self.len()
        );
        if self.bits >> (self.len() - position) & 1 == 1 {
            Step::Up
        } else {
            Step::Down
        }
    }

    /// Iterates the steps from position 1 to `2n`.
    pub fn steps(&self) -> impl Iterator<Item = Step> + '_ {
        (1..=self.len()).map(move |i| self.step(i))
    }

    /// Renders the word as `1`/`0` text.
    pub fn render(&self) -> String {
        self.steps().map(Step::symbol).collect()
    }
}

impl fmt::Display for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in self.steps() {
            write!(f, "{}", step.symbol())?;
        }
        Ok(())
    }
}

impl fmt::Debug for DyckWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckWord(\"{self}\")")
    }
}

impl FromStr for DyckWord {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        Self::parse(s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_smallest_word() {
        let w = DyckWord::parse("10").unwrap();
        assert_eq!(w.semilength(), 1);
        assert_eq!(w.render(), "10");
    }

    #[test]
    fn parses_semilength_eight_example() {
        let w = DyckWord::parse("1110101100011000").unwrap();
        assert_eq!(w.semilength(), 8);
        assert_eq!(w.to_string(), "1110101100011000");
    }

    #[test]
    fn accepts_step_aliases() {
        let canonical = DyckWord::parse("1100").unwrap();
        assert_eq!(DyckWord::parse("NNEE").unwrap(), canonical);
        assert_eq!(DyckWord::parse("uUdD").unwrap(), canonical);
        assert_eq!(DyckWord::parse("Nn0d").unwrap(), canonical);
    }

    #[test]
    fn rejects_unknown_symbol_with_position() {
        assert_eq!(
            DyckWord::parse("10x0"),
            Err(ParseError::NonBinaryAlphabet {
                position: 3,
                symbol: 'x'
            })
        );
    }

    #[test]
    fn rejects_unbalanced_word() {
        assert_eq!(
            DyckWord::parse("110"),
            Err(ParseError::NotBalanced { ups: 2, downs: 1 })
        );
    }

    #[test]
    fn reports_first_position_below_diagonal() {
        assert_eq!(
            DyckWord::parse("1001"),
            Err(ParseError::BelowDiagonal { position: 3 })
        );
        assert_eq!(
            DyckWord::parse("0101"),
            Err(ParseError::BelowDiagonal { position: 1 })
        );
    }

    #[test]
    fn rejects_empty_and_oversized_words() {
        assert_eq!(DyckWord::parse(""), Err(ParseError::Empty));
        let text = format!("{}{}", "1".repeat(17), "0".repeat(17));
        assert_eq!(
            DyckWord::parse(&text),
            Err(ParseError::TooLong { n: 17, max: 16 })
        );
    }

    #[test]
    fn ordering_matches_text_order() {
        let a = DyckWord::parse("1010").unwrap();
        let b = DyckWord::parse("1100").unwrap();
        assert!(a < b);
        assert!(a.render() < b.render());
    }

    #[test]
    fn step_access_is_one_based() {
        let w = DyckWord::parse("110100").unwrap();
        assert_eq!(w.step(1), Step::Up);
        assert_eq!(w.step(3), Step::Down);
        assert_eq!(w.step(6), Step::Down);
    }
}

//! Dyck words and the structures every map on them is built from.
//!
//! A Dyck word of semilength `n` is a balanced word over `{1, 0}` of
//! length `2n` whose prefix sums never go negative; `1` is an up (north)
//! step and `0` a down (east) step. This crate provides the validated
//! [`DyckWord`] type, its derived structures (level vector, area
//! sequence, peaks, right-step set), the reversal and reverse-complement
//! symmetries, and ranked lexicographic enumeration with exact Catalan
//! counting.
//!
//! Positions are 1-based in every public contract; packed storage is an
//! internal detail. All values are immutable and cheap to copy, so they
//! can be shared freely across worker threads.

mod derived;
mod enumerate;
mod word;

pub use derived::{levels_raw, render_steps, AreaSequence, LevelVector, PeakSet, RightStepSet};
pub use enumerate::{catalan, catalan_u64, enumerate, Enumeration, SemilengthOutOfRange, Words};
pub use word::{DyckWord, ParseError, Step, MAX_SEMILENGTH};

//! Exhaustive parallel verification over Dyck words.
//!
//! A check walks every word of a semilength range and compares maps,
//! statistics or generated polynomials against their references.
//! Enumerations are split into fixed contiguous rank chunks evaluated on
//! a worker pool; per-chunk outcomes merge associatively in chunk order,
//! so a report's counts and first counterexample are identical for any
//! worker count.

mod check;
mod persist;
mod runner;

pub use check::{
    standard_suite, CheckKind, CheckReport, CheckSpec, Counterexample, MapId, MAX_CHECK_SEMILENGTH,
};
pub use persist::{write_reports, WrittenReports};
pub use runner::{default_workers, run_check, run_suite, SuiteOutcome};

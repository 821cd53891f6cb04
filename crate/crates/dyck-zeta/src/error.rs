//! Error type shared by the map implementations.
//!
//! Every variant here signals a broken internal invariant rather than bad
//! input: the maps are total on valid Dyck words, so surfacing one of
//! these means a convention bug, not a user error.

use thiserror::Error;

#[derive(Error, Debug, Clone, PartialEq, Eq)]
pub enum MapError {
    #[error("{map} produced a non-Dyck output {output:?} for input {input:?}")]
    InvariantViolation {
        map: &'static str,
        input: String,
        output: String,
    },
    #[error("agent {position} inserted twice while mapping {input:?}")]
    DuplicateAgent { position: usize, input: String },
    #[error("no termination after {iterations} iterations while mapping {input:?}")]
    NonTermination { input: String, iterations: usize },
}

//! Command implementations for the `dyck-zeta` binary: maps, statistics,
//! q,t-Catalan polynomials, scaffolding traces, the verification suite,
//! and dataset emission.

mod commands;
mod dataset;

use std::fmt;

pub use commands::{
    cmd_map, cmd_qtcatalan, cmd_stats, cmd_trace, cmd_verify, open_output, parse_range,
    select_checks, Algorithm, PolyFormat, WordSource, REPORT_DIR_ENV,
};
pub use dataset::{
    format_pair, parse_token_pair, write_dataset, DatasetFormat, DatasetMap, MAX_DATASET_SEMILENGTH,
};

/// Command failures, split by exit code: usage and parse problems exit
/// with 2, broken internal invariants with 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CliError {
    Usage(String),
    Internal(String),
}

impl CliError {
    pub fn usage(err: impl fmt::Display) -> Self {
        CliError::Usage(err.to_string())
    }

    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(msg) | CliError::Internal(msg) => write!(f, "{msg}"),
        }
    }
}

impl std::error::Error for CliError {}

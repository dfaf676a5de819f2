//! Command-line front end: generate curve families, apply successor
//! transformations, run the invariant suites and convert exported geometry.

pub mod args;
pub mod commands;
pub mod config;
pub mod job;
pub mod table;

use std::path::PathBuf;

pub use args::{Cli, Command};
pub use commands::run;

/// Failure of a CLI invocation, with its exit code.
#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),

    #[error(transparent)]
    Core(#[from] sc_core::Error),

    #[error("{}: {source}", path.display())]
    Io { path: PathBuf, source: std::io::Error },

    #[error("{}: {source}", path.display())]
    Csv { path: PathBuf, source: csv::Error },

    #[error("{0} check(s) failed")]
    ChecksFailed(usize),
}

impl CliError {
    /// `2` for invalid input, `3` for numerical failures (domain,
    /// singularity, failed checks).
    pub fn exit_code(&self) -> u8 {
        match self {
            CliError::Core(e) if e.is_numeric() => 3,
            CliError::ChecksFailed(_) => 3,
            _ => 2,
        }
    }
}

pub(crate) fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

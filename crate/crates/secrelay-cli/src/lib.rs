//! Command-line front end: figure sweeps, validation suites, and
//! reproducible Monte Carlo runs. Everything a command writes is accompanied
//! by a run manifest so the run can be replayed and byte-compared.

pub mod args;
pub mod commands;
pub mod config;
pub mod manifest;
pub mod output;

use std::fmt;

/// Process exit codes: 0 success, 1 validation failure, 2 domain/config
/// error.
#[derive(Debug)]
pub enum CliError {
    /// Bad inputs, bad config, IO trouble. Exit code 2.
    Usage(String),
    /// A validation suite or replay comparison failed. Exit code 1.
    Validation(String),
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Validation(_) => 1,
        }
    }
}

impl fmt::Display for CliError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CliError::Usage(m) => write!(f, "{m}"),
            CliError::Validation(m) => write!(f, "{m}"),
        }
    }
}

impl std::error::Error for CliError {}

impl From<secrelay::Error> for CliError {
    fn from(e: secrelay::Error) -> Self {
        CliError::Usage(e.to_string())
    }
}

impl From<std::io::Error> for CliError {
    fn from(e: std::io::Error) -> Self {
        CliError::Usage(format!("io error: {e}"))
    }
}

pub type CliResult<T> = Result<T, CliError>;

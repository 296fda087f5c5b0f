//! Crate-wide error type.

use thiserror::Error;

/// Errors produced by parsing, validation and simulation.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed input row; carries the 1-based line number.
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    /// Input violates a structural invariant (duplicate ids, unsorted
    /// timestamps, non-uniform ticks, ...).
    #[error("validation error: {0}")]
    Validation(String),

    /// Argument outside its mathematical domain.
    #[error("domain error: {0}")]
    Domain(String),

    /// Inconsistent or infeasible configuration.
    #[error("config error: {0}")]
    Config(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

impl Error {
    pub(crate) fn parse(line: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            line,
            msg: msg.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

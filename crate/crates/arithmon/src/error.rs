//! Crate-wide error type and its mapping to process exit codes.

use thiserror::Error;

/// Errors produced by monoid construction and invariant computations.
#[derive(Debug, Error)]
pub enum Error {
    /// Malformed monoid description or option text.
    #[error("parse error: {0}")]
    Parse(String),

    /// Structurally valid input that violates a precondition.
    #[error("invalid input: {0}")]
    Input(String),

    /// Element dimension does not match the monoid's ambient dimension.
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },

    /// The operation is not defined for the given family.
    #[error("unsupported for this family: {0}")]
    Unsupported(String),

    /// A search exhausted its budget; `partial` results were produced.
    #[error("search budget exceeded after {partial} results")]
    BudgetExceeded { partial: u64 },

    /// An internal consistency check failed. Always a bug.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

impl Error {
    /// Exit code reported by the command-line tool for this error.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Parse(_) | Error::Input(_) | Error::Dimension { .. } | Error::Unsupported(_) => {
                2
            }
            Error::BudgetExceeded { .. } => 3,
            Error::Internal(_) => 5,
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

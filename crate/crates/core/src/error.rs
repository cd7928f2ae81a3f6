use thiserror::Error;

/// Errors shared across the crate.
#[derive(Debug, Error)]
pub enum Error {
    #[error("shape mismatch: expected {expected:?}, found {found:?}")]
    ShapeMismatch {
        expected: Vec<usize>,
        found: Vec<usize>,
    },

    #[error("invalid tensor: {0}")]
    InvalidTensor(String),

    #[error("mode {mode} out of range for order-{order} tensor")]
    ModeOutOfRange { mode: usize, order: usize },

    #[error("vector length {found} does not match extent {expected} of mode {mode}")]
    LengthMismatch {
        mode: usize,
        expected: usize,
        found: usize,
    },

    #[error("input is not symmetric: {0}")]
    NotSymmetric(String),

    #[error("degenerate input: {0}")]
    DegenerateInput(String),

    #[error("unsupported input: {0}")]
    Unsupported(String),

    #[error("iteration failed to converge: {0}")]
    NonConvergence(String),

    #[error("parse error at line {line}: {message}")]
    Parse { line: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;

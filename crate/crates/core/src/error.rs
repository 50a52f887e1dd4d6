//! Error type shared across the crate.

use thiserror::Error;

#[derive(Debug, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("inconsistent mesh: {0}")]
    InconsistentMesh(String),

    #[error("index out of range: {0}")]
    IndexOutOfRange(String),

    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    /// Iterative solver failed to reach its tolerance.
    #[error("linear solver breakdown: {detail} (residual {residual:.3e})")]
    SolverBreakdown { detail: String, residual: f64 },

    /// Direct factorization hit a non-positive pivot or a rank-deficient block.
    #[error("singular system: {0}")]
    SingularSystem(String),

    #[error("i/o error: {0}")]
    Io(#[from] std::io::Error),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Error type shared by all modules of the crate.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ArcError {
    #[error("dimension mismatch: expected length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("cone is not strictly convex")]
    NotStrictlyConvex,

    #[error("lattice point lies outside the cone")]
    OutsideCone,

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("invalid input at {path}: {message}")]
    InvalidInput { path: String, message: String },
}

pub type Result<T> = std::result::Result<T, ArcError>;

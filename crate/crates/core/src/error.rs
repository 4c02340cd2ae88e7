use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid hypergraph: {0}")]
    InvalidHypergraph(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("expected a {expected}-uniform hypergraph, got m = {actual}")]
    WrongUniformity { expected: usize, actual: usize },

    #[error("vertex set {0:?} is not independent")]
    NotIndependent(Vec<usize>),

    #[error("length mismatch: expected {expected}, got {actual}")]
    LengthMismatch { expected: usize, actual: usize },

    #[error("vector {vector:?} is not a {k}-cover")]
    NotKCover { vector: Vec<u32>, k: u32 },

    #[error("a monomial ideal needs at least one generator")]
    EmptyIdeal,

    #[error("instance too large: {what} needs {size} cells, limit is {limit}")]
    GuardExceeded {
        what: &'static str,
        size: u128,
        limit: u128,
    },

    /// Two independent computations of the same object disagreed.
    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

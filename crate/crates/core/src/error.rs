use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("division by zero")]
    DivisionByZero,
    #[error("domain error: {0}")]
    Domain(String),
    #[error("size limit exceeded: {0}")]
    LimitExceeded(String),
    #[error("length mismatch: expected {expected}, got {got}")]
    LengthMismatch { expected: usize, got: usize },
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("invalid region: {0}")]
    InvalidRegion(String),
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("linear system has no solution: {0}")]
    Unsolvable(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

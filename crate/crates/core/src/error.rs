use thiserror::Error;

/// Errors raised by constructions, parsers and verification drivers.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),
    #[error("invalid tableau: {0}")]
    InvalidTableau(String),
    #[error("shape mismatch: {left} vs {right}")]
    ShapeMismatch { left: String, right: String },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("{0} is not a supported prime")]
    NotPrime(u64),
    #[error("invalid Garnir label: {0}")]
    InvalidLabel(String),
    #[error("letter {letter} outside alphabet 1..={d}")]
    LetterOutOfRange { letter: usize, d: usize },
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("decomposition data: {0}")]
    DecompositionData(String),
    #[error("solver: {0}")]
    Solver(String),
    #[error("io: {0}")]
    Io(String),
}

pub type Result<T> = std::result::Result<T, Error>;

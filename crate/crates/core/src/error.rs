use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum AlgebraError {
    #[error("division by zero in the cyclotomic field")]
    DivisionByZero,
    #[error("parameter out of range: {0}")]
    OutOfRange(String),
    #[error("sector mismatch: {0}")]
    SectorMismatch(String),
    #[error("unsupported: {0}")]
    Unsupported(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
}

pub type Result<T> = std::result::Result<T, AlgebraError>;

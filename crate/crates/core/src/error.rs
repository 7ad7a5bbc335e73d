use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("the zero ideal cannot be represented (empty generator set)")]
    ZeroIdeal,

    #[error("exponent vectors must have at least one coordinate")]
    EmptyVector,

    #[error("parse error: {0}")]
    Parse(String),

    #[error("invalid lambda: {0}")]
    InvalidLambda(String),

    #[error("contract violation: {0}")]
    Contract(String),

    #[error("integer overflow while computing {0}")]
    Overflow(&'static str),

    /// Two independent routes to the same theorem disagree. Always a bug.
    #[error("internal consistency violation: {0}")]
    Inconsistency(String),
}

pub type Result<T> = std::result::Result<T, Error>;

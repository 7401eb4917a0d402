use thiserror::Error;

/// Errors raised by the exact pipeline.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("zero denominator")]
    ZeroDenominator,
    #[error("out of unit range: {0}")]
    OutOfUnitRange(String),
    #[error("non-canonical expansion: {0}")]
    NonCanonical(String),
    #[error("domain violation: {value} is not in {space}")]
    DomainViolation { value: String, space: String },
    #[error("composition mismatch: {left} does not feed {right}")]
    CompositionMismatch { left: String, right: String },
    #[error("zero arity")]
    ZeroArity,
    #[error("arity mismatch: expected {expected}, got {got}")]
    ArityMismatch { expected: usize, got: usize },
    #[error("not a basis: {0}")]
    NotABasis(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("expansion needs {needed} digits, over the limit of {limit}")]
    DigitLimit { needed: u128, limit: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the algebra engine.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AlgebraError {
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("configuration mismatch: expected {expected} symbols, found {found}")]
    ConfigMismatch { expected: usize, found: usize },

    #[error("generator index {index} out of range 1..={max}")]
    IndexOutOfRange { index: usize, max: usize },

    #[error("negative power {power} on non-invertible generator {name}")]
    NegativePower { name: String, power: i64 },

    #[error("missing assignment for {0}")]
    MissingAssignment(String),

    #[error("cannot assign zero to invertible parameter {0}")]
    ZeroAssignment(String),

    #[error("truncation order must be at least 1")]
    ZeroOrder,

    #[error("expected a 1-form, found a term of degree {0}")]
    NotOneForm(usize),
}

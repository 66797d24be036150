use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("variable index {index} out of range for arity {arity}")]
    VariableIndex { index: usize, arity: usize },

    #[error("exponent overflow")]
    ExponentOverflow,

    #[error("dimension of the zero ring is undefined (unit ideal)")]
    UnitIdealDimension,

    #[error("arity {arity} exceeds the supported maximum {max}")]
    ArityTooLarge { arity: usize, max: usize },

    #[error("ring must have at least one variable")]
    NoVariables,

    #[error("defining ideal of a quotient ring must be proper")]
    UnitQuotient,

    #[error("expected {expected} variable names, found {found}")]
    NameCount { expected: usize, found: usize },

    #[error("duplicate variable name `{0}`")]
    DuplicateName(String),

    #[error("ideals belong to different rings")]
    RingMismatch,

    #[error("containment violated: {0}")]
    NotContained(String),

    #[error("quotient has infinite length: {0}")]
    InfiniteLength(String),

    #[error("need at least {needed} consecutive entries, got {got}")]
    TooFewEntries { needed: usize, got: usize },

    #[error("sequence indices must be consecutive and start at 1 or later")]
    NonConsecutive,

    #[error("dim N = {dim_nilradical} is not below dim R = {dim_ring}")]
    HypothesisViolation { dim_nilradical: i64, dim_ring: usize },

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

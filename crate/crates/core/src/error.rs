use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("degree mismatch: {left} vs {right}")]
    DegreeMismatch { left: usize, right: usize },

    #[error("invalid product spec: {0}")]
    InvalidSpec(String),

    #[error("invalid part context: {0}")]
    InvalidContext(String),

    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("cannot parse partition {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("expected a partition of class {expected}, got {found}")]
    ClassMismatch { expected: String, found: String },

    #[error("parameter out of range: {0}")]
    OutOfRange(String),

    #[error("no strictness witness exists for n = {n}: the coefficient vanishes there")]
    NoWitness { n: u64 },

    #[error("theorem hypothesis violated: {0}")]
    Hypothesis(String),

    #[error("internal consistency failure: {0}")]
    Inconsistency(String),
}

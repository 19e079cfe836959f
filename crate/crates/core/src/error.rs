use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum Error {
    #[error("dimension mismatch: expected {expected}, got {actual}")]
    DimensionMismatch { expected: usize, actual: usize },

    #[error("invalid search space: {0}")]
    InvalidSpace(String),

    #[error("invalid configuration: {0}")]
    InvalidConfig(String),

    #[error("unknown objective `{name}`; available: {available}")]
    UnknownObjective { name: String, available: String },

    #[error("objective `{0}` has no known optimum, success is undefined")]
    NoKnownOptimum(String),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid partition: {0}")]
    InvalidPartition(String),

    #[error("partitions have different sizes ({left} and {right})")]
    MismatchedSize { left: usize, right: usize },

    #[error("operation is undefined on the empty partition")]
    EmptyPartition,

    #[error("size mismatch: expected {expected} cells, found {found}")]
    SizeMismatch { expected: usize, found: usize },

    #[error("invalid tableau: {0}")]
    InvalidTableau(String),

    #[error("invalid filling: {0}")]
    InvalidFilling(String),

    #[error("class functions of different degrees ({left} and {right})")]
    DegreeMismatch { left: usize, right: usize },

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("subspace is not invariant under the operator")]
    NotInvariant,

    #[error("orthogonalization failed: {0}")]
    OrthogonalizationFailure(String),

    #[error("{what}: n = {n} exceeds the configured maximum {max}")]
    LimitExceeded {
        what: &'static str,
        n: usize,
        max: usize,
    },

    #[error("certificate check failed: {0}")]
    CertificateFailure(String),

    #[error("parse error: {0}")]
    Parse(String),
}

pub type Result<T> = std::result::Result<T, Error>;

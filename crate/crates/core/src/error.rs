use alloc::string::String;

pub type Result<T, E = Error> = core::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, thiserror::Error)]
pub enum Error {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("matrix is not Hermitian (deviation {deviation:e} exceeds {tolerance:e})")]
    NotHermitian { deviation: f64, tolerance: f64 },

    #[error("non-finite entry in operator")]
    NonFinite,

    #[error("dimension {0} is not an odd prime")]
    NotOddPrime(usize),

    #[error("invalid Γ split: {0}")]
    InvalidSplit(String),

    #[error("unsupported combination: {0}")]
    Unsupported(String),

    #[error("unknown catalog entry `{0}`")]
    UnknownName(String),

    #[error("not a state: {0}")]
    NotAState(String),

    #[error("zero vector cannot be normalized")]
    ZeroVector,

    #[error("empty input: {0}")]
    Empty(String),
}

use thiserror::Error;

/// Errors raised by the library.
#[derive(Debug, Error)]
pub enum Error {
    #[error("fold order must be at least 1, got {0}")]
    InvalidFoldOrder(u32),

    #[error("Suffridge index k = {k} outside 1..={degree}")]
    InvalidSuffridgeIndex { degree: usize, k: usize },

    #[error("polynomial needs at least one term")]
    EmptyPolynomial,

    #[error("leading symmetric coefficient must be exactly 1, got {0}")]
    NotNormalized(f64),

    #[error("curve parameter {t} is within {tolerance:e} of a pole (denominator {denominator:e})")]
    PoleProximity { t: f64, denominator: f64, tolerance: f64 },

    #[error("exponents must satisfy 1 < k < m, got k = {k}, m = {m}")]
    InvalidExponents { k: u32, m: u32 },

    #[error("L3 is undefined where 1 + a + b = 0")]
    UndefinedObjective,

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error(transparent)]
    Csv(#[from] csv::Error),

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

/// Errors raised by the arithmetic, census and report layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("characteristic 2 unsupported")]
    Characteristic2,

    #[error("{0} is not a prime")]
    NotPrime(u64),

    #[error("invalid parameter: {0}")]
    InvalidParameter(String),

    #[error("division by zero")]
    DivisionByZero,

    #[error("field level mismatch")]
    LevelMismatch,

    #[error("element index {index} out of range for a field of {size} elements")]
    ElementOutOfRange { index: u64, size: u64 },

    #[error("zero polynomial not allowed here")]
    ZeroPolynomial,

    #[error("constant polynomial not allowed here")]
    ConstantPolynomial,

    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    #[error("scale guard: {what} needs {needed} work units, budget is {budget}")]
    ScaleGuard {
        what: String,
        needed: u128,
        budget: u128,
    },

    #[error("cross-check failed: {0}")]
    CrossCheck(String),

    #[error("{0}")]
    Unsupported(String),
}

impl Error {
    pub(crate) fn parse(position: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: message.into(),
        }
    }

    pub(crate) fn invalid(message: impl Into<String>) -> Self {
        Error::InvalidParameter(message.into())
    }

    pub(crate) fn cross_check(message: impl Into<String>) -> Self {
        Error::CrossCheck(message.into())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

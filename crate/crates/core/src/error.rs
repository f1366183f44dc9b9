use thiserror::Error;

/// Errors raised by the arithmetic, factoring and classification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("operation on the zero polynomial")]
    ZeroPolynomial,
    #[error("division by zero")]
    DivisionByZero,
    #[error("polynomial degree {0} is too small for this operation")]
    DegreeTooSmall(usize),
    #[error("coefficient domains do not match: {0}")]
    MixedContext(String),
    #[error("{0} is a rational square; use the rational branch instead")]
    SquareRadicand(String),
    #[error("degenerate parameter: {0}")]
    DegenerateParameter(String),
    #[error("inseparable polynomial: {0}")]
    Inseparable(String),
    #[error("unsupported input: {0}")]
    Unsupported(String),
    #[error("indeterminate: {0}")]
    Indeterminate(String),
    #[error("cannot parse `{token}`: {reason}")]
    Parse { token: String, reason: String },
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(token: impl Into<String>, reason: impl Into<String>) -> Self {
        Error::Parse {
            token: token.into(),
            reason: reason.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

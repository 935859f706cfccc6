use thiserror::Error;

/// Errors raised by graph construction, exact algebra and the spectral engine.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid parameters: {0}")]
    InvalidParameters(String),

    #[error("size mismatch: {0}")]
    SizeMismatch(String),

    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),

    #[error("inexact polynomial division: {0}")]
    InexactDivision(String),

    #[error("subset out of range: {0}")]
    SubsetOutOfRange(String),

    #[error("matrix is not symmetric")]
    NonSymmetric,

    #[error("parameter gamma must be zero on this route (got {0})")]
    GammaNonzero(String),

    #[error("closed form does not apply: {0}")]
    HypothesisNotMet(String),

    #[error("cospectrality hypothesis failed: {0}")]
    HypothesisFailed(String),

    #[error("input too large: {0}")]
    TooLarge(String),

    #[error("identity violated: {0}")]
    IdentityViolated(String),

    #[error("parse error at {pointer}: {message}")]
    Parse { pointer: String, message: String },

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// True for failures of a checked mathematical invariant, as opposed to bad input.
    pub fn is_violation(&self) -> bool {
        matches!(
            self,
            Error::InexactDivision(_) | Error::IdentityViolated(_) | Error::HypothesisFailed(_)
        )
    }

    pub(crate) fn parse(pointer: impl Into<String>, message: impl Into<String>) -> Self {
        Error::Parse {
            pointer: pointer.into(),
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

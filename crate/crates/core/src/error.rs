use thiserror::Error;

/// Errors raised by state construction, correlation measures and file I/O.
#[derive(Debug, Error)]
pub enum Error {
    /// A state or matrix violates a physical invariant (norm, trace, Hermiticity, positivity).
    #[error("invalid state: {0}")]
    InvalidState(String),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// The input is valid but outside the domain of the requested closed form.
    #[error("unsupported input: {0}")]
    Unsupported(String),

    /// An internal consistency check failed; indicates a numerical or logic bug.
    #[error("internal consistency failure: {0}")]
    Internal(String),

    #[error("parse error at byte {offset}: {message}")]
    Parse { offset: usize, message: String },

    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn state(msg: impl Into<String>) -> Self {
        Error::InvalidState(msg.into())
    }

    pub(crate) fn arg(msg: impl Into<String>) -> Self {
        Error::InvalidArgument(msg.into())
    }

    pub(crate) fn unsupported(msg: impl Into<String>) -> Self {
        Error::Unsupported(msg.into())
    }
}

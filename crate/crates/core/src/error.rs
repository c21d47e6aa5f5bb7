use thiserror::Error;

/// Errors raised by the arithmetic, representation and verification layers.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// An argument lies outside the domain of an operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A theorem verifier was called with inputs that violate its hypotheses.
    #[error("precondition violated: {0}")]
    Precondition(String),

    /// Text could not be parsed; `position` is a byte offset into the input.
    #[error("parse error at position {position}: {message}")]
    Parse { position: usize, message: String },

    /// Malformed request that is neither a domain nor a parse problem.
    #[error("usage error: {0}")]
    Usage(String),
}

impl Error {
    pub(crate) fn domain(msg: impl Into<String>) -> Self {
        Error::Domain(msg.into())
    }

    pub(crate) fn precondition(msg: impl Into<String>) -> Self {
        Error::Precondition(msg.into())
    }

    pub(crate) fn parse(position: usize, msg: impl Into<String>) -> Self {
        Error::Parse {
            position,
            message: msg.into(),
        }
    }
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

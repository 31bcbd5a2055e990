use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Arguments outside the region where the quantity is defined.
    #[error("domain error: {0}")]
    Domain(String),
    /// A consistency guard tripped. This indicates a bug, not bad input.
    #[error("internal consistency error: {0}")]
    Internal(String),
    /// The request would exceed a configured cost cap.
    #[error("resource limit: {0}")]
    Resource(String),
    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },
}

pub(crate) fn domain(msg: impl Into<String>) -> Error {
    Error::Domain(msg.into())
}

pub(crate) fn internal(msg: impl Into<String>) -> Error {
    Error::Internal(msg.into())
}

use thiserror::Error;

/// Errors surfaced by the combinatorial and series kernels.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    /// Malformed input object (bad block, bad partition, bad permutation).
    #[error("validation error: {0}")]
    Validation(String),
    /// Structurally valid input outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),
    /// An internal invariant failed. Reaching this means a bug, since the
    /// underlying mathematical statements guarantee it cannot happen.
    #[error("internal invariant violated: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn validation<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Validation(msg.into()))
}

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

pub(crate) fn internal<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Internal(msg.into()))
}

use thiserror::Error;

/// Errors reported by primlab operations.
#[derive(Debug, Error)]
pub enum Error {
    /// A precondition of the called operation was violated.
    #[error("usage: {0}")]
    Usage(String),
    /// An input lies outside the numeric range the implementation supports.
    #[error("range: {0}")]
    Range(String),
    /// An enumeration or materialization budget was exceeded. Raise the
    /// budget explicitly instead of waiting; results are never truncated.
    #[error("resource: {what} (n={n})")]
    Resource { what: String, n: u64 },
    /// A structural invariant the library relies on failed to hold. Seeing
    /// this means a bug, not bad input.
    #[error("internal consistency: {0}")]
    Internal(String),
    /// Output could not be written.
    #[error(transparent)]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

impl Error {
    pub(crate) fn usage(msg: impl Into<String>) -> Self {
        Error::Usage(msg.into())
    }

    pub(crate) fn range(msg: impl Into<String>) -> Self {
        Error::Range(msg.into())
    }

    pub(crate) fn resource(what: impl Into<String>, n: u64) -> Self {
        Error::Resource {
            what: what.into(),
            n,
        }
    }
}

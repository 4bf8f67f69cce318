use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// A carrier or enumeration exceeded the configured guard or budget.
    #[error("resource limit: {0}")]
    Resource(String),
    /// An input violated an operation's precondition.
    #[error("precondition failed: {0}")]
    Precondition(String),
    /// A constructed object failed an invariant the engine relies on.
    #[error("engine invariant violated: {0}")]
    Invariant(String),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("unknown monad: {0}")]
    UnknownMonad(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn resource(msg: impl Into<String>) -> Error {
    Error::Resource(msg.into())
}

pub(crate) fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

pub(crate) fn invariant(msg: impl Into<String>) -> Error {
    Error::Invariant(msg.into())
}

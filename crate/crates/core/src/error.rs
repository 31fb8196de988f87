use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    /// An argument lies outside the domain of the operation.
    #[error("domain error: {0}")]
    Domain(String),

    /// A size bound was exceeded (degree of the symmetric-function engine,
    /// character-table order, exact-summation limit).
    #[error("resource bound exceeded: {what} = {requested} > {limit}")]
    Resource {
        what: &'static str,
        requested: usize,
        limit: usize,
    },

    #[error("unsupported: {0}")]
    Unsupported(String),

    #[error("parse error: {0}")]
    Parse(String),

    /// A required hypothesis fails for the supplied input.
    #[error("hypothesis violated: {0}")]
    Hypothesis(String),

    /// An exact computation hit a state that cannot occur for valid input.
    #[error("internal failure: {0}")]
    Internal(String),
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn domain<T>(msg: impl Into<String>) -> Result<T> {
    Err(Error::Domain(msg.into()))
}

use thiserror::Error;

/// Errors raised by the solvers and the instance parser.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    /// A caller handed in a value that breaks the documented precondition
    /// (for example a matching that is not a matching of the auxiliary graph).
    #[error("contract violation: {0}")]
    Contract(String),

    #[error("instance has {n} vertices, exhaustive search is limited to {limit}")]
    OracleLimit { n: usize, limit: usize },
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

impl Error {
    pub(crate) fn parse(line: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            message: message.into(),
        }
    }

    pub(crate) fn contract(message: impl Into<String>) -> Self {
        Error::Contract(message.into())
    }
}

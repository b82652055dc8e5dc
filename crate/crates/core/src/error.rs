use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid vertex {vertex} (expected a label in 1..={n})")]
    InvalidVertex { vertex: usize, n: usize },

    #[error("a vertex pair needs two distinct endpoints, got ({0}, {0})")]
    SelfPair(usize),

    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("length mismatch: {left} != {right}")]
    LengthMismatch { left: usize, right: usize },

    #[error("protocol contract violated: {0}")]
    ProtocolContract(String),

    #[error("protocol did not terminate within {limit} messages")]
    Nontermination { limit: usize },

    #[error("tournament is not transitive")]
    NotTransitive,

    #[error("unsupported size: {0}")]
    UnsupportedSize(String),
}

impl Error {
    pub(crate) fn parse(line: usize, column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line,
            column,
            message: message.into(),
        }
    }
}

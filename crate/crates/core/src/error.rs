use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("unsupported structure: {0}")]
    UnsupportedStructure(String),

    #[error("n = {requested} exceeds the enumeration cap of {cap}; {guidance}")]
    CapExceeded {
        requested: usize,
        cap: usize,
        guidance: &'static str,
    },

    #[error(transparent)]
    Parse(#[from] ParseError),
}

/// A `.sg` parse failure, positioned at a 1-based line and column.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("line {line}, column {column}: {message}")]
pub struct ParseError {
    pub line: usize,
    pub column: usize,
    pub message: String,
}

pub(crate) fn invalid(msg: impl Into<String>) -> Error {
    Error::InvalidArgument(msg.into())
}

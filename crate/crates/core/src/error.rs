use thiserror::Error;

/// Errors raised by lattice, code and density operations.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum Error {
    #[error("invalid argument: {0}")]
    InvalidArgument(String),

    #[error("invalid parameters: {0}")]
    Parameter(String),

    #[error("rank error: {0}")]
    Rank(String),

    #[error("capacity exceeded: {what} is {actual}, limit {limit}")]
    Capacity {
        what: &'static str,
        actual: u128,
        limit: u128,
    },

    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("field error: {0}")]
    Field(String),

    #[error("composition error: {0}")]
    Composition(String),

    #[error("code is not a subcode of the even-weight code: {0}")]
    Subcode(String),

    #[error("code distance {actual} is below the required {required}")]
    Distance { required: usize, actual: usize },

    #[error("vector is not a lattice member")]
    Membership,

    #[error("outside the supported regime: {0}")]
    Regime(String),

    #[error("domain error: {0}")]
    Domain(String),

    #[error("construction inapplicable: {0}")]
    Inapplicable(String),

    #[error("no record for dimension {0}")]
    Lookup(usize),

    #[error("i/o error: {0}")]
    Io(String),
}

impl Error {
    /// Process exit status used by the command-line front end.
    pub fn exit_code(&self) -> i32 {
        match self {
            Error::Capacity { .. } => 3,
            _ => 2,
        }
    }

    pub(crate) fn capacity(what: &'static str, actual: impl Into<u128>, limit: impl Into<u128>) -> Self {
        Error::Capacity {
            what,
            actual: actual.into(),
            limit: limit.into(),
        }
    }
}

impl From<std::io::Error> for Error {
    fn from(e: std::io::Error) -> Self {
        Error::Io(e.to_string())
    }
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("invalid degree {0}: a permutation acts on at least one point")]
    InvalidDegree(usize),

    #[error("incompatible degrees {left} and {right}")]
    IncompatibleDegrees { left: usize, right: usize },

    #[error("not a permutation: {0}")]
    NotABijection(String),

    #[error("cannot parse {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("malformed cycle type: {0}")]
    InvalidCycleType(String),

    #[error("{what} of size {size} exceeds the enumeration ceiling {ceiling}")]
    EnumerationTooLarge {
        what: &'static str,
        size: usize,
        ceiling: usize,
    },

    #[error("invalid head: {0}")]
    InvalidHead(String),

    #[error("ground sets differ: {left} points vs {right} points")]
    GroundSetMismatch { left: usize, right: usize },

    #[error("invalid argument: {0}")]
    InvalidArgument(String),
}

impl Error {
    pub(crate) fn parse(input: &str, reason: impl Into<String>) -> Self {
        Error::Parse {
            input: input.to_owned(),
            reason: reason.into(),
        }
    }
}

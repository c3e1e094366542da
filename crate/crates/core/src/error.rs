use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("cannot parse rational {input:?}: {reason}")]
    Parse { input: String, reason: String },

    #[error("a line needs two distinct points")]
    IdenticalPoints,

    #[error("points {first} and {second} coincide")]
    DuplicatePoint { first: usize, second: usize },

    #[error("index {index} out of range for {len} points")]
    IndexOutOfRange { index: usize, len: usize },

    #[error("expected {expected} points, found {found}")]
    WrongSize { expected: usize, found: usize },

    #[error("{found} elements exceed the size limit of {limit}")]
    SizeLimit { found: usize, limit: usize },

    #[error("precondition violated: {0}")]
    Precondition(String),

    #[error("configuration is not shattered by unions of {k} lines")]
    NotShattered { k: usize },

    #[error("shattered configuration does not match any known case: {0}")]
    Unclassified(String),

    #[error("dimension mismatch: expected {expected}, found {found}")]
    DimensionMismatch { expected: usize, found: usize },

    #[error("no admissible translate among the first {bound} candidates")]
    BoundExceeded { bound: usize },

    #[error("family is not closed under intersection")]
    NotIntersectionClosed,

    #[error("no member of the family contains the given set")]
    NoContainingSet,

    #[error("malformed JSON at byte {offset} (line {line}, column {column}): {message}")]
    Json {
        offset: usize,
        line: usize,
        column: usize,
        message: String,
    },
}

use thiserror::Error;

/// Errors produced by the library.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("strand count mismatch: {left} vs {right}")]
    StrandMismatch { left: usize, right: usize },

    #[error("{what} index {index} out of range 1..={bound}")]
    IndexOutOfRange {
        what: &'static str,
        index: i64,
        bound: usize,
    },

    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),

    #[error("arity mismatch: expected {expected}, found {found}")]
    ArityMismatch { expected: usize, found: usize },

    #[error("instance mismatch: {left} vs {right}")]
    InstanceMismatch { left: String, right: String },

    #[error("morphisms are not composable: {0}")]
    NotComposable(String),

    #[error("invalid morphism: {0}")]
    InvalidMorphism(String),

    #[error("ill-typed map data: {0}")]
    IllTypedData(String),

    #[error("tree has no numbered leaf")]
    AllStarTree,

    #[error("lambda = {0} is even; exact mode requires an odd lambda")]
    EvenLambda(i64),

    #[error("mode mismatch: {0}")]
    ModeMismatch(String),

    #[error("pair fails the defining relations: {0}")]
    RelationFailure(String),

    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
}

impl Error {
    /// A parse error on the first line.
    pub fn parse(column: usize, message: impl Into<String>) -> Self {
        Error::Parse {
            line: 1,
            column,
            message: message.into(),
        }
    }
}

pub type Result<T> = std::result::Result<T, Error>;

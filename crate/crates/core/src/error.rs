use thiserror::Error;

/// A malformed literal, with the byte offset where parsing stopped.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
#[error("parse error at byte {offset}: {message}")]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    pub fn new(offset: usize, message: impl Into<String>) -> Self {
        ParseError {
            offset,
            message: message.into(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error("operands are over different alphabets")]
    AlphabetMismatch,
    #[error("degree must be at least 1")]
    ZeroDegree,
    #[error("empty alphabet")]
    EmptyAlphabet,
    #[error("vertex set must be nonempty")]
    EmptyVertexSet,
    #[error("vertex {0} does not exist in the tree")]
    InvalidVertex(String),
    #[error("expected {expected} operands, got {got}")]
    Arity { expected: usize, got: usize },
    #[error("dimension mismatch: expected {expected}, got {got}")]
    Dimension { expected: usize, got: usize },
    #[error("no image assigned to color `{0}`")]
    UnassignedColor(String),
    #[error("multiplication tables violate {0}")]
    NotCompatible(String),
    #[error("map is not a right semi-homomorphism: {0}")]
    NotSemiHomomorphism(String),
    #[error("arithmetic overflow in {0}")]
    Overflow(&'static str),
}

pub type Result<T, E = Error> = std::result::Result<T, E>;

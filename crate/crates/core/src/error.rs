use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} outside universe of size {universe}")]
    VertexOutOfRange { vertex: usize, universe: usize },
    #[error("universe of size {0} exceeds the 64-vertex limit")]
    UniverseTooLarge(usize),
    #[error("edge list is not an antichain: {0}")]
    NotAntichain(String),
    #[error("empty edge")]
    EmptyEdge,
    #[error("universe mismatch: {left} vs {right}")]
    UniverseMismatch { left: usize, right: usize },
    #[error("generator supports overlap; use the general-monomial oracle for this product")]
    OverlappingSupports,
    #[error("operation undefined for the {0} ideal")]
    DegenerateIdeal(&'static str),
    #[error("input is not a graph (all edges must have two vertices)")]
    NotAGraph,
    #[error("input is not a block graph")]
    NotABlockGraph,
    #[error("k = {k} outside the valid range 1..={max}")]
    KOutOfRange { k: i64, max: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("budget exceeded: {0}")]
    BudgetExceeded(String),
    #[error("exponent overflow (cap 255 per variable)")]
    ExponentOverflow,
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    #[error("internal consistency failure: {0}")]
    Internal(String),
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

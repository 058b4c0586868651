use thiserror::Error;

/// Errors shared across the solver toolkit.
#[derive(Debug, Error)]
pub enum Error {
    #[error("parse error at line {line}: {msg}")]
    Parse { line: usize, msg: String },

    #[error("vertex {vertex} out of range (graph has {n} vertices)")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("invalid input: {0}")]
    Invalid(String),

    #[error("tree decomposition invalid: {0}")]
    BadDecomposition(String),

    #[error("class `{0}` is not supported by this solver")]
    UnsupportedClass(String),

    #[error(
        "decomposition width {width} exceeds the cap {cap}; try the branching \
         driver or supply a narrower decomposition"
    )]
    WidthCapExceeded { width: usize, cap: usize },

    #[error("instance too large for exhaustive search: n = {n}, cap = {cap}")]
    OverCap { n: usize, cap: usize },

    #[error("no balanced separator within budget {budget} for a subgraph on {stuck:?}")]
    SeparatorBudget { budget: usize, stuck: Vec<usize> },

    #[error("io error: {0}")]
    Io(#[from] std::io::Error),
}

pub type Result<T> = std::result::Result<T, Error>;

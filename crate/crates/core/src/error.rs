use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),

    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },

    #[error("loop edge at vertex {0}")]
    LoopEdge(usize),

    #[error("operation would leave a graph with no vertices")]
    EmptyResult,

    #[error("combined vertex count {0} exceeds 64")]
    SizeOverflow(usize),

    /// Parameters fall outside the hypotheses of the named result.
    #[error("{result}: {violated}")]
    Hypothesis {
        result: &'static str,
        violated: String,
    },

    #[error("invalid graph6 input: {0}")]
    Graph6(String),

    #[error("exhaustive search is capped at n = {cap}, got n = {n}")]
    SearchCap { n: usize, cap: usize },

    #[error("checkpoint: {0}")]
    Checkpoint(String),

    #[error("internal error: {0}")]
    Internal(String),
}

impl Error {
    pub(crate) fn hypothesis(result: &'static str, violated: impl Into<String>) -> Self {
        Error::Hypothesis {
            result,
            violated: violated.into(),
        }
    }
}

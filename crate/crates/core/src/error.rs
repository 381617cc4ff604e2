use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("graph has {n} vertices but {operation} supports at most {limit}")]
    Capacity {
        operation: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("edge ({u}, {v}) has an endpoint outside 0..{n}")]
    VertexOutOfRange { u: usize, v: usize, n: usize },
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("expected {expected} weights, got {found}")]
    WeightLength { expected: usize, found: usize },
    #[error("weight of vertex {0} is negative")]
    NegativeWeight(usize),
    #[error("edge probability {0} is outside [0, 1]")]
    Probability(f64),
    #[error("unknown pattern `{0}`")]
    UnknownPattern(String),
    #[error(transparent)]
    Graph6(#[from] crate::graph6::Graph6Error),
    #[error("edge list line {line}: {message}")]
    EdgeList { line: usize, message: String },
    #[error("invalid sample spec: {0}")]
    SampleSpec(String),
}

impl Error {
    /// True when the input was well formed but too large for the requested operation.
    pub fn is_capacity(&self) -> bool {
        matches!(
            self,
            Error::Capacity { .. } | Error::Graph6(crate::graph6::Graph6Error::LongForm)
        )
    }
}

pub(crate) fn ensure_capacity(operation: &'static str, n: usize, limit: usize) -> Result<()> {
    if n > limit {
        return Err(Error::Capacity { operation, n, limit });
    }
    Ok(())
}

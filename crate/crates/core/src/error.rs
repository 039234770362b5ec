use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for a graph of order {n}")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("edge {0}-{1} already present")]
    EdgeExists(usize, usize),
    #[error("edge {0}-{1} not present")]
    EdgeMissing(usize, usize),
    #[error("invalid circulant connection set: {0}")]
    InvalidCirculant(String),
    #[error("malformed graph6: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("graph has no edges")]
    Edgeless,
    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error("graph is complete")]
    CompleteGraph,
    #[error("graph has an efficient dominating set")]
    HasEfficientDominatingSet,
    #[error("graph is not hypo-UD")]
    NotHypoUd,
    #[error("graph is not hypo-ED")]
    NotHypoEd,
    #[error("order {n} exceeds the limit {limit} for {what}")]
    OrderTooLarge {
        what: &'static str,
        n: usize,
        limit: usize,
    },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
    #[error("unknown claim `{0}`")]
    UnknownClaim(String),
    #[error("unknown problem `{0}`")]
    UnknownProblem(String),
    #[error("unknown family `{0}`")]
    UnknownFamily(String),
    #[error("range guard exceeded: {0}")]
    RangeGuard(String),
}

pub type Result<T> = std::result::Result<T, Error>;

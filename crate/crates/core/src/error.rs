use thiserror::Error;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {vertex} out of range for graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("graph6: {0}")]
    Graph6(String),
    #[error("edge list: {0}")]
    EdgeList(String),
    #[error("empty vertex set")]
    EmptyVertexSet,
    #[error("operation needs at least {needed} vertices, graph has {n}")]
    TooFewVertices { needed: usize, n: usize },
    #[error("not a modular partition: {0}")]
    NotModular(String),
    #[error("not a partition of the vertex set: {0}")]
    NotAPartition(String),
    #[error("graph on {n} vertices exceeds the brute-force cap of {cap}")]
    CapExceeded { n: usize, cap: usize },
    #[error("input graph is not a tree")]
    NotATree,
    #[error("graph is neither complete nor edgeless")]
    NotCompleteOrEdgeless,
    #[error("spider decomposition inconsistent with graph: {0}")]
    BadSpider(String),
    #[error("unsupported prime quotient on {quotient_size} vertices (module of {module_size} vertices): not a tree, co-tree or spider and above the prime cap {cap}")]
    Unsupported {
        module_size: usize,
        quotient_size: usize,
        cap: usize,
    },
    #[error("invalid permutation: {0}")]
    InvalidPermutation(String),
    #[error("coloring or mask does not match the graph: {0}")]
    InstanceMismatch(String),
    #[error("precondition violated: {0}")]
    Precondition(String),
    #[error("internal error: {0}")]
    Internal(String),
}

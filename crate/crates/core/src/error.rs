use thiserror::Error;

use crate::graph::VertexId;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    MissingVertex(VertexId),
    #[error("self-loop at vertex {0}")]
    SelfLoop(VertexId),
    #[error("invalid bipartition: {0}")]
    InvalidBipartition(String),
    #[error("invalid argument: {0}")]
    InvalidArgument(String),
    /// A caller broke a documented precondition, or an internal invariant
    /// that should be guaranteed by rule ordering failed.
    #[error("contract violation: {0}")]
    ContractViolation(String),
    #[error("instance too large: {size} exceeds the cap of {cap}")]
    CapExceeded { size: usize, cap: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

use thiserror::Error;

use crate::codec::adjlist::AdjListError;
use crate::codec::graph6::Graph6Error;
use crate::families::FamilyError;

pub type Result<T, E = Error> = std::result::Result<T, E>;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("vertex count {0} outside 1..=64")]
    VertexCount(usize),
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("adjacency is not symmetric at {u}-{v}")]
    Asymmetric { u: usize, v: usize },
    #[error("graph is disconnected; diameter undefined")]
    Disconnected,
    #[error("{a}-{b} is not an edge")]
    NotAnEdge { a: usize, b: usize },
    #[error("predicate inapplicable: {0}")]
    Inapplicable(String),
    #[error("balance parameter k must be a positive integer, got {0}")]
    InvalidK(u32),
    #[error("n={n} outside the enumeration range 1..={max}")]
    EnumerationRange { n: usize, max: usize },
    #[error(transparent)]
    Graph6(#[from] Graph6Error),
    #[error(transparent)]
    AdjList(#[from] AdjListError),
    #[error(transparent)]
    Family(#[from] FamilyError),
}

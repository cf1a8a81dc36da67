use crate::graph::EdgeId;
use thiserror::Error;

pub type Result<T> = std::result::Result<T, Error>;

#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("vertex {0} is not in the graph")]
    UnknownVertex(usize),
    #[error("self-loop at vertex {0}")]
    SelfLoop(usize),
    #[error("edge {0} is already present")]
    ParallelEdge(EdgeId),
    #[error("edge {0} is not in the graph")]
    MissingEdge(EdgeId),
    #[error("graph has no vertices")]
    EmptyGraph,
    #[error("vertex {vertex} has degree {degree}, expected 2")]
    DegreeNotTwo { vertex: usize, degree: usize },
    #[error("suppressing vertex {vertex} would duplicate edge {edge}")]
    SuppressParallel { vertex: usize, edge: EdgeId },
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph is not planar")]
    NotPlanar,
    #[error("invalid rotation at vertex {vertex}: {reason}")]
    InvalidRotation { vertex: usize, reason: String },
    #[error("coloring is not total: edge {0} is uncolored")]
    PartialColoring(EdgeId),
    #[error("color {color} on edge {edge} is outside the palette 1..={palette}")]
    ColorOutOfRange {
        edge: EdgeId,
        color: usize,
        palette: usize,
    },
    #[error("coloring is not proper: edges {e1} and {e2} share color {color} at vertex {vertex}")]
    ImproperColoring {
        vertex: usize,
        e1: EdgeId,
        e2: EdgeId,
        color: usize,
    },
    #[error("both colors {a} and {b} appear at vertex {vertex}, walk start is ambiguous")]
    AmbiguousPathStart { vertex: usize, a: usize, b: usize },
    #[error("alpha is undefined for degree {k} with {n5minus} neighbors of degree at most 5")]
    AlphaDomain { k: usize, n5minus: usize },
    #[error("no vertex of degree at least 3 survives stripping")]
    EmptyStrip,
    #[error("unknown graph name {0:?}")]
    UnknownName(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("search budget exceeded")]
    BudgetExceeded,
    #[error("stale configuration: {0}")]
    StaleConfiguration(String),
    #[error("no acyclic edge coloring with {palette} colors found for a planar graph")]
    TheoremContradiction { palette: usize },
}

//! Error type shared by graph-level operations.

use thiserror::Error;

use crate::validate::ValidationReport;

/// Failures reported by graph queries and comparisons.
#[derive(Debug, Error)]
pub enum GraphError {
    /// The graph violates a structural invariant; the report lists them.
    #[error("graph is not structurally valid:\n{0}")]
    InvalidGraph(ValidationReport),
    /// A node id was referenced that the graph does not contain.
    #[error("unknown node `{0}`")]
    UnknownNode(String),
    /// An edge id was referenced that the graph does not contain.
    #[error("unknown edge `{0}`")]
    UnknownEdge(String),
    /// Canonical comparison is exact and bounded; larger graphs are refused
    /// rather than answered heuristically.
    #[error("graph with {nodes} nodes exceeds the exact-comparison bound of {limit}")]
    TooLarge { nodes: usize, limit: usize },
}

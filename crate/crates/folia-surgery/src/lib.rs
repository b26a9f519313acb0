//! Local rewrites of foliation graphs.
//!
//! Each operation consumes a structurally valid graph and produces a new
//! valid graph plus a [`MoveRecord`] listing exactly which nodes and families
//! were removed, added or modified. Records are replayable: applying the
//! recorded move sequence to the original graph reproduces the result
//! identically, including generated identifiers.

mod moves;
mod simplify;

pub use moves::{
    apply_move, create_saddle_pair, eliminate_double_separatrix, eliminate_saddle_pair,
    eliminate_trivial_couple, replace_singular_reeb,
};
pub use simplify::{replay, simplify, Strategy};

use folia_arrangements::ArrangementError;
use folia_core::{IndexEntry, NodeId, ValidationReport};
use thiserror::Error;

/// Identifier of a leaf family.
pub type EdgeId = String;

/// A rewrite request, addressed by the ids in the graph it applies to.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Move {
    /// Cancel a center against the extreme-index saddle it reaches through a
    /// majority-sign port.
    EliminateTrivialCouple { center: NodeId },
    /// Cancel a center against the extreme-index saddle it reaches through
    /// the odd-sign port, merging the two majority families.
    EliminateDoubleSeparatrix { center: NodeId },
    /// Trade a singular Reeb cap (center plus self-connected saddle) for a
    /// novikov node.
    ReplaceSingularReeb { center: NodeId },
    /// Split a compact family with a strongly connected saddle pair of
    /// indices (l, l+1).
    CreateSaddlePair { edge: EdgeId, index: u32 },
    /// Cancel a strongly connected saddle pair, addressed by its middle
    /// family.
    EliminateSaddlePair { edge: EdgeId },
}

/// What one applied move did to the graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MoveRecord {
    pub applied: Move,
    pub removed_nodes: Vec<NodeId>,
    pub removed_edges: Vec<EdgeId>,
    pub added_nodes: Vec<NodeId>,
    pub added_edges: Vec<EdgeId>,
    /// Nodes kept but modified (ports remapped, self-connection promoted).
    pub touched_nodes: Vec<NodeId>,
    /// Families kept but modified (an endpoint rewired).
    pub touched_edges: Vec<EdgeId>,
    pub index_before: Vec<IndexEntry>,
    pub index_after: Vec<IndexEntry>,
}

/// An ordered list of applied moves.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct MoveTrace {
    pub records: Vec<MoveRecord>,
}

impl MoveTrace {
    pub fn moves(&self) -> Vec<Move> {
        self.records.iter().map(|r| r.applied.clone()).collect()
    }
}

/// Failures of rewrite operations.
#[derive(Debug, Error)]
pub enum SurgeryError {
    #[error("graph is not structurally valid:\n{0}")]
    InvalidGraph(ValidationReport),
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    /// The graph does not present the shape the move needs.
    #[error("move does not apply: {0}")]
    NotApplicable(String),
    /// The shape is present but degenerate in a way the rewrite cannot
    /// handle without producing an invalid graph.
    #[error("move is blocked: {0}")]
    Blocked(String),
    /// Internal invariant failure: a move produced an invalid graph. This is
    /// a bug in the rewrite, surfaced instead of silently returned.
    #[error("rewrite produced an invalid graph (internal error):\n{0}")]
    Internal(ValidationReport),
}

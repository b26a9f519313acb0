//! Counting and summary queries over validated graphs.

use crate::error::GraphError;
use crate::graph::{FoliationGraph, NodeKind};
use crate::validate::validate;

/// Node-kind census of a graph.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Counts {
    pub centers: usize,
    pub saddles: usize,
    pub stable_circles: usize,
    pub marked_leaves: usize,
    pub novikov: usize,
    pub boundary_tangents: usize,
    pub edges: usize,
}

impl Counts {
    /// Total number of singular points of the transverse structure: centers
    /// plus saddles. Stable circles and marked leaves are regular leaves.
    pub fn singularities(&self) -> usize {
        self.centers + self.saddles
    }
}

/// One entry of the singularity index multiset.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum IndexEntry {
    /// A center: local extremum of a defining function (index 0 or n).
    Extremum,
    /// A saddle of the given middle index.
    Saddle(u32),
    /// A circle of stable singular points (only in the non-generic closed
    /// one-form picture; contributes no Morse index).
    CircleComponent,
}

/// Tally node kinds. Works on any graph, valid or not.
pub fn counts(g: &FoliationGraph) -> Counts {
    let mut c = Counts {
        edges: g.edges.len(),
        ..Counts::default()
    };
    for node in &g.nodes {
        match &node.kind {
            NodeKind::Center => c.centers += 1,
            NodeKind::Saddle(_) => c.saddles += 1,
            NodeKind::StableCircle => c.stable_circles += 1,
            NodeKind::MarkedLeaf { .. } => c.marked_leaves += 1,
            NodeKind::Novikov => c.novikov += 1,
            NodeKind::BoundaryTangent => c.boundary_tangents += 1,
        }
    }
    c
}

/// The sorted multiset of singularity indices. Refuses structurally invalid
/// graphs, since index data on a broken graph is meaningless.
pub fn index_multiset(g: &FoliationGraph) -> Result<Vec<IndexEntry>, GraphError> {
    let report = validate(g);
    if !report.is_clean() {
        return Err(GraphError::InvalidGraph(report));
    }
    let mut out = Vec::new();
    for node in &g.nodes {
        match &node.kind {
            NodeKind::Center => out.push(IndexEntry::Extremum),
            NodeKind::Saddle(s) => out.push(IndexEntry::Saddle(s.index)),
            NodeKind::StableCircle => out.push(IndexEntry::CircleComponent),
            _ => {}
        }
    }
    out.sort();
    Ok(out)
}

//! The quotient space of leaves in the all-compact regime, and existence of
//! closed curves transverse to every leaf.

use std::collections::BTreeMap;

use folia_core::graph::EdgeId;
use folia_core::{validate, FoliationGraph, HolonomyLabel, Node, NodeId, NodeKind};

use crate::{EndpointKind, LeafSpaceShape, TheoremError};

fn precondition(reason: impl Into<String>) -> TheoremError {
    TheoremError::Precondition {
        reason: reason.into(),
    }
}

fn endpoint_kind(node: &Node) -> EndpointKind {
    match &node.kind {
        NodeKind::Center => EndpointKind::StableSingularity,
        NodeKind::StableCircle => EndpointKind::StableCircle,
        NodeKind::BoundaryTangent => EndpointKind::BoundaryLeaf,
        NodeKind::MarkedLeaf {
            holonomy: HolonomyLabel::Z2,
            ..
        } => EndpointKind::Z2Leaf,
        NodeKind::MarkedLeaf { .. } => EndpointKind::BoundaryLeaf,
        NodeKind::Saddle(_) | NodeKind::Novikov => {
            unreachable!("saddles and novikov nodes are rejected before endpoint analysis")
        }
    }
}

/// Classify the space of leaves when every leaf is compact and no saddles
/// are present: the quotient is a circle exactly when the graph is a closed
/// transversely orientable cycle of regular families, and a segment
/// otherwise, with the two endpoint collapses named. Graphs without a
/// transverse orientation yield the orbifold segment.
pub fn classify_leaf_space(g: &FoliationGraph) -> Result<LeafSpaceShape, TheoremError> {
    let report = validate(g);
    if !report.is_clean() {
        return Err(precondition(format!(
            "graph fails structural validation:\n{report}"
        )));
    }
    if let Some(s) = g
        .nodes
        .iter()
        .find(|n| matches!(n.kind, NodeKind::Saddle(_)))
    {
        return Err(precondition(format!(
            "saddle `{}` present: not the all-compact regime",
            s.id
        )));
    }
    if let Some(nv) = g.nodes.iter().find(|n| matches!(n.kind, NodeKind::Novikov)) {
        return Err(precondition(format!(
            "novikov region `{}` carries open leaves",
            nv.id
        )));
    }
    if let Some(e) = g.edges.iter().find(|e| !e.topology.is_compact()) {
        return Err(precondition(format!(
            "family `{}` has non-compact leaves",
            e.id
        )));
    }

    let mut ends: Vec<&Node> = g.nodes.iter().filter(|n| g.degree(&n.id) == 1).collect();
    ends.sort_by(|a, b| a.id.cmp(&b.id));
    match ends.as_slice() {
        [] => {
            if g.closed && g.transversely_orientable {
                Ok(LeafSpaceShape::Circle)
            } else {
                Err(TheoremError::ModelInconsistency {
                    clause: "a cycle of leaf families needs a closed, transversely orientable \
                             foliation to quotient to a circle"
                        .into(),
                })
            }
        }
        [a, b] => {
            let (end0, end1) = (endpoint_kind(a), endpoint_kind(b));
            if g.transversely_orientable {
                Ok(LeafSpaceShape::Interval { end0, end1 })
            } else {
                Ok(LeafSpaceShape::OrbifoldInterval { end0, end1 })
            }
        }
        other => Err(TheoremError::ModelInconsistency {
            clause: format!(
                "leaf space is neither a segment nor a circle: {} endpoint nodes",
                other.len()
            ),
        }),
    }
}

/// What certifies a closed transversal.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum TransversalWitness {
    /// A region of open leaves: a closed transversal lives inside it.
    NovikovNode(NodeId),
    /// A family of non-compact leaves: a transverse circle crosses it.
    OpenFamily(EdgeId),
    /// A cycle of co-oriented families; crossing each in turn closes up.
    DirectedCycle(Vec<EdgeId>),
}

/// Existence of a closed curve transverse to every leaf, with a witness when
/// one exists and, when none does, the interval leaf space certifying that
/// every leaf is compact and totally ordered.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TransversalReport {
    pub exists: bool,
    pub witness: Option<TransversalWitness>,
    pub certificate: Option<LeafSpaceShape>,
}

fn directed_cycle(g: &FoliationGraph) -> Option<Vec<EdgeId>> {
    if let Some(id) = g
        .edges
        .iter()
        .filter(|e| e.is_loop())
        .map(|e| e.id.clone())
        .min()
    {
        return Some(vec![id]);
    }

    fn visit<'g>(
        g: &'g FoliationGraph,
        node: &'g str,
        state: &mut BTreeMap<&'g str, u8>,
        path: &mut Vec<(&'g str, &'g str)>,
    ) -> Option<Vec<EdgeId>> {
        state.insert(node, 1);
        let mut outs: Vec<(&str, &str)> = g
            .edges
            .iter()
            .filter(|e| e.from == node)
            .map(|e| (e.id.as_str(), e.to.as_str()))
            .collect();
        outs.sort_unstable();
        for (eid, to) in outs {
            match state.get(to).copied().unwrap_or(0) {
                1 => {
                    let pos = path
                        .iter()
                        .position(|(n, _)| *n == to)
                        .expect("gray nodes sit on the path");
                    let mut cycle: Vec<EdgeId> =
                        path[pos..].iter().map(|(_, e)| e.to_string()).collect();
                    cycle.push(eid.to_string());
                    return Some(cycle);
                }
                0 => {
                    path.push((node, eid));
                    if let Some(cycle) = visit(g, to, state, path) {
                        return Some(cycle);
                    }
                    path.pop();
                }
                _ => {}
            }
        }
        state.insert(node, 2);
        None
    }

    let mut state: BTreeMap<&str, u8> = BTreeMap::new();
    let mut roots: Vec<&str> = g.nodes.iter().map(|n| n.id.as_str()).collect();
    roots.sort_unstable();
    for root in roots {
        if state.get(root).copied().unwrap_or(0) == 0 {
            let mut path = Vec::new();
            if let Some(cycle) = visit(g, root, &mut state, &mut path) {
                return Some(cycle);
            }
        }
    }
    None
}

/// Decide whether a closed transversal exists: yes exactly when the graph
/// carries a novikov region, a family of open leaves, or a co-oriented cycle
/// of families. The witness names the cheapest certificate found, in that
/// order; absence comes with the interval leaf space when the all-compact
/// classifier applies.
pub fn closed_transversal_exists(g: &FoliationGraph) -> Result<TransversalReport, TheoremError> {
    let report = validate(g);
    if !report.is_clean() {
        return Err(precondition(format!(
            "graph fails structural validation:\n{report}"
        )));
    }
    if !g.transversely_orientable {
        return Err(precondition(
            "requires a transverse orientation (pass the double-cover graph)",
        ));
    }

    let mut novikov: Vec<&str> = g
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Novikov))
        .map(|n| n.id.as_str())
        .collect();
    novikov.sort_unstable();
    if let Some(id) = novikov.first() {
        return Ok(TransversalReport {
            exists: true,
            witness: Some(TransversalWitness::NovikovNode(id.to_string())),
            certificate: None,
        });
    }
    if let Some(id) = g
        .edges
        .iter()
        .filter(|e| !e.topology.is_compact())
        .map(|e| e.id.clone())
        .min()
    {
        return Ok(TransversalReport {
            exists: true,
            witness: Some(TransversalWitness::OpenFamily(id)),
            certificate: None,
        });
    }
    if let Some(cycle) = directed_cycle(g) {
        return Ok(TransversalReport {
            exists: true,
            witness: Some(TransversalWitness::DirectedCycle(cycle)),
            certificate: None,
        });
    }
    Ok(TransversalReport {
        exists: false,
        witness: None,
        certificate: classify_leaf_space(g).ok(),
    })
}

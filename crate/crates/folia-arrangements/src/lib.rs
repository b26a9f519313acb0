//! Center components and the local arrangement at their boundary.
//!
//! A *center component* is the maximal path of sphere-leaf families growing
//! out of a center: it passes through trivial-holonomy waypoints and stops at
//! the first node that is not one — a saddle, another center, or an
//! obstruction. Everything downstream (couple elimination, sphere
//! recognition) is driven by how that path meets its boundary node, which is
//! read off the saddle's port decorations.

use folia_core::graph::{FoliationGraph, HolonomyLabel, LeafTopology, NodeKind, PortSign, Saddle};
use folia_core::{validate, NodeId, ValidationReport};
use thiserror::Error;

/// Identifier of a leaf family.
pub type EdgeId = String;

/// Failures of arrangement queries.
#[derive(Debug, Error)]
pub enum ArrangementError {
    #[error("graph is not structurally valid:\n{0}")]
    InvalidGraph(ValidationReport),
    #[error("node `{0}` is not a center")]
    NotACenter(String),
    #[error("node `{0}` is neither a singularity nor a circle of singular points")]
    NotSingular(String),
    #[error(
        "self-connected saddle `{saddle}`: semi-holonomy says the odd-port side is {} but its family is {}",
        if *minus_trivial { "trivial (closed leaves)" } else { "nontrivial (spiralling leaves)" },
        if *compact_family { "compact" } else { "non-compact" }
    )]
    SemiHolonomyMismatch {
        saddle: String,
        minus_trivial: bool,
        compact_family: bool,
    },
    #[error("saddle `{saddle}` has malformed ports: {detail}")]
    MalformedSaddle { saddle: String, detail: String },
}

fn ensure_valid(g: &FoliationGraph) -> Result<(), ArrangementError> {
    let report = validate(g);
    if report.is_clean() {
        Ok(())
    } else {
        Err(ArrangementError::InvalidGraph(report))
    }
}

/// The maximal waypoint path out of one center.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CenterComponent {
    /// The center the component grows from.
    pub center: NodeId,
    /// Nodes of the path, starting at the center, including waypoints but not
    /// the boundary node.
    pub interior_nodes: Vec<NodeId>,
    /// Families of the path in traversal order; the last one meets the
    /// boundary node.
    pub interior_edges: Vec<EdgeId>,
    /// First node past the waypoints. `None` only for a closed single-center
    /// graph, which validation already rejects, so in practice always set.
    pub boundary: Option<NodeId>,
}

impl CenterComponent {
    /// The family through which the component reaches its boundary node.
    pub fn entry_edge(&self) -> Option<&EdgeId> {
        self.interior_edges.last()
    }
}

/// How a center component meets its boundary node.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ArrangementCase {
    /// The path ends at another center: the graph is a round-sphere path.
    CenterToCenter { other: NodeId },
    /// The path enters an extreme-index saddle through one of its two
    /// same-sign ports: the couple (center, saddle) cancels trivially,
    /// splicing `odd_edge` to `companion`.
    SingleSeparatrix {
        saddle: NodeId,
        /// Family on the odd-sign port.
        odd_edge: EdgeId,
        /// The other same-sign family.
        companion: EdgeId,
    },
    /// The path enters an extreme-index saddle through its single odd-sign
    /// port; removing the couple merges the two same-sign families `f1`,
    /// `f2` (equal when they are one loop family, which then closes up).
    DoubleSeparatrix {
        saddle: NodeId,
        f1: EdgeId,
        f2: EdgeId,
    },
    /// The path enters a self-connected saddle through its paired ports: a
    /// singular Reeb cap whose leaves continue along `continuation`.
    SelfConnectedSaddle {
        saddle: NodeId,
        continuation: EdgeId,
    },
    /// The path ends at a middle-index saddle.
    MiddleIndex { saddle: NodeId, index: u32 },
    /// The path ends at a node that blocks all couple moves: a marked leaf
    /// with holonomy, a stable circle, a novikov region, or the boundary.
    Obstructed { node: NodeId },
}

fn is_waypoint(g: &FoliationGraph, id: &str) -> bool {
    matches!(
        g.node(id).map(|n| &n.kind),
        Some(NodeKind::MarkedLeaf {
            holonomy: HolonomyLabel::Trivial,
            topology,
            ..
        }) if *topology == LeafTopology::sphere_label(g.dimension)
    )
}

/// Grow the component of `center`: follow sphere families through
/// trivial-holonomy waypoints until a boundary node appears.
pub fn center_component(
    g: &FoliationGraph,
    center: &str,
) -> Result<CenterComponent, ArrangementError> {
    ensure_valid(g)?;
    if !matches!(g.node(center).map(|n| &n.kind), Some(NodeKind::Center)) {
        return Err(ArrangementError::NotACenter(center.to_string()));
    }
    let mut interior_nodes = vec![center.to_string()];
    let mut interior_edges = Vec::new();
    let mut at = center.to_string();
    let mut via: Option<String> = None;
    loop {
        let edge = g
            .incident_edges(&at)
            .into_iter()
            .find(|e| Some(&e.id) != via.as_ref())
            .expect("interior nodes have a continuing family");
        let next = edge.other_endpoint(&at).to_string();
        interior_edges.push(edge.id.clone());
        if is_waypoint(g, &next) {
            interior_nodes.push(next.clone());
            via = Some(edge.id.clone());
            at = next;
        } else {
            return Ok(CenterComponent {
                center: center.to_string(),
                interior_nodes,
                interior_edges,
                boundary: Some(next),
            });
        }
    }
}

/// Split an extreme-index saddle's ports into (odd-sign port, the two
/// majority-sign ports).
fn split_ports<'s>(
    id: &str,
    s: &'s Saddle,
) -> Result<(&'s folia_core::Port, [&'s folia_core::Port; 2]), ArrangementError> {
    let plus: Vec<_> = s.ports.iter().filter(|p| p.sign == PortSign::Plus).collect();
    let minus: Vec<_> = s.ports.iter().filter(|p| p.sign == PortSign::Minus).collect();
    match (plus.len(), minus.len()) {
        (1, 2) => Ok((plus[0], [minus[0], minus[1]])),
        (2, 1) => Ok((minus[0], [plus[0], plus[1]])),
        _ => Err(ArrangementError::MalformedSaddle {
            saddle: id.to_string(),
            detail: "an extreme-index saddle carries one odd-sign and two same-sign ports".into(),
        }),
    }
}

/// Classify how the component meets its boundary node; see
/// [`ArrangementCase`].
pub fn classify_boundary(
    g: &FoliationGraph,
    component: &CenterComponent,
) -> Result<ArrangementCase, ArrangementError> {
    let boundary = component
        .boundary
        .clone()
        .expect("components of valid graphs have a boundary node");
    let entry = component
        .entry_edge()
        .expect("components have at least the center's own family")
        .clone();
    let node = g.node(&boundary).expect("boundary node exists");
    let saddle = match &node.kind {
        NodeKind::Center => {
            return Ok(ArrangementCase::CenterToCenter { other: boundary });
        }
        NodeKind::Saddle(s) => s,
        _ => return Ok(ArrangementCase::Obstructed { node: boundary }),
    };

    let entry_ports: Vec<_> = saddle.ports.iter().filter(|p| p.edge == entry).collect();
    match entry_ports.len() {
        2 if entry_ports.iter().all(|p| p.paired) => {
            let continuation = saddle
                .ports
                .iter()
                .find(|p| !p.paired)
                .ok_or_else(|| ArrangementError::MalformedSaddle {
                    saddle: boundary.clone(),
                    detail: "paired entry needs a third, unpaired port".into(),
                })?
                .edge
                .clone();
            check_semi_holonomy(g, &boundary, saddle, &continuation)?;
            Ok(ArrangementCase::SelfConnectedSaddle {
                saddle: boundary,
                continuation,
            })
        }
        1 => {
            if !(saddle.index == 1 || saddle.index == g.dimension - 1) {
                return Ok(ArrangementCase::MiddleIndex {
                    saddle: boundary,
                    index: saddle.index,
                });
            }
            let (odd, majority) = split_ports(&boundary, saddle)?;
            if entry_ports[0].sign == odd.sign {
                let mut fams = [majority[0].edge.clone(), majority[1].edge.clone()];
                fams.sort();
                let [f1, f2] = fams;
                Ok(ArrangementCase::DoubleSeparatrix {
                    saddle: boundary,
                    f1,
                    f2,
                })
            } else {
                let companion = majority
                    .iter()
                    .find(|p| p.edge != entry)
                    .map(|p| p.edge.clone())
                    .ok_or_else(|| ArrangementError::MalformedSaddle {
                        saddle: boundary.clone(),
                        detail: "majority ports must include one family besides the entry".into(),
                    })?;
                Ok(ArrangementCase::SingleSeparatrix {
                    saddle: boundary,
                    odd_edge: odd.edge.clone(),
                    companion,
                })
            }
        }
        n => Err(ArrangementError::MalformedSaddle {
            saddle: boundary,
            detail: format!("entry family is referenced by {n} ports, expected 1 or a paired 2"),
        }),
    }
}

/// The semi-holonomy of a self-connected saddle promises whether leaves on
/// the odd-port side close up; the family label there must agree.
fn check_semi_holonomy(
    g: &FoliationGraph,
    id: &str,
    s: &Saddle,
    continuation: &str,
) -> Result<(), ArrangementError> {
    let semi = s
        .semi_holonomy
        .as_ref()
        .ok_or_else(|| ArrangementError::MalformedSaddle {
            saddle: id.to_string(),
            detail: "self-connected saddles carry semi-holonomy data".into(),
        })?;
    let compact_family = g
        .edge(continuation)
        .map(|e| e.topology.is_compact())
        .unwrap_or(true);
    if semi.minus_trivial != compact_family {
        return Err(ArrangementError::SemiHolonomyMismatch {
            saddle: id.to_string(),
            minus_trivial: semi.minus_trivial,
            compact_family,
        });
    }
    Ok(())
}

/// A center and the saddle it cancels against trivially.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrivialCouple {
    pub center: NodeId,
    pub saddle: NodeId,
}

/// All trivially cancellable (center, saddle) couples, sorted by center id.
pub fn find_trivial_couples(g: &FoliationGraph) -> Result<Vec<TrivialCouple>, ArrangementError> {
    ensure_valid(g)?;
    let mut centers: Vec<&str> = g
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Center))
        .map(|n| n.id.as_str())
        .collect();
    centers.sort();
    let mut out = Vec::new();
    for c in centers {
        let component = center_component(g, c)?;
        if let ArrangementCase::SingleSeparatrix { saddle, .. } = classify_boundary(g, &component)?
        {
            out.push(TrivialCouple {
                center: c.to_string(),
                saddle,
            });
        }
    }
    Ok(out)
}

/// A strong connection between saddles of consecutive indices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StrongConnection {
    pub edge: EdgeId,
    /// Saddle of the smaller index.
    pub lower: NodeId,
    /// Saddle of the larger index.
    pub upper: NodeId,
}

/// All strongly connected saddle pairs, sorted by edge id.
pub fn find_strong_connections(
    g: &FoliationGraph,
) -> Result<Vec<StrongConnection>, ArrangementError> {
    ensure_valid(g)?;
    let mut out: Vec<StrongConnection> = g
        .edges
        .iter()
        .filter(|e| e.strong_connection)
        .map(|e| {
            let fi = g.saddle(&e.from).expect("validated strong endpoint").index;
            let ti = g.saddle(&e.to).expect("validated strong endpoint").index;
            let (lower, upper) = if fi < ti {
                (e.from.clone(), e.to.clone())
            } else {
                (e.to.clone(), e.from.clone())
            };
            StrongConnection {
                edge: e.id.clone(),
                lower,
                upper,
            }
        })
        .collect();
    out.sort_by(|a, b| a.edge.cmp(&b.edge));
    Ok(out)
}

/// Whether a singular component is weakly stable: its nearby leaves stay
/// nearby. Centers and circles of stable singular points are; saddles never
/// are (their separatrices leave every neighbourhood).
pub fn weakly_stable(g: &FoliationGraph, id: &str) -> Result<bool, ArrangementError> {
    match g.node(id).map(|n| &n.kind) {
        Some(NodeKind::Center) | Some(NodeKind::StableCircle) => Ok(true),
        Some(NodeKind::Saddle(_)) => Ok(false),
        _ => Err(ArrangementError::NotSingular(id.to_string())),
    }
}

/// True when every singularity of the graph is weakly stable, i.e. there are
/// no saddles.
pub fn all_singular_weakly_stable(g: &FoliationGraph) -> bool {
    !g.nodes
        .iter()
        .any(|n| matches!(n.kind, NodeKind::Saddle(_)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use folia_testkit::fixtures;

    #[test]
    fn round_sphere_component_spans_the_graph() {
        let g = fixtures::two_center(3);
        let c = center_component(&g, "p").unwrap();
        assert_eq!(c.interior_nodes, vec!["p"]);
        assert_eq!(c.interior_edges, vec!["e0"]);
        assert_eq!(
            classify_boundary(&g, &c).unwrap(),
            ArrangementCase::CenterToCenter { other: "q".into() }
        );
    }

    #[test]
    fn bumpy_sphere_has_one_double_and_two_single_separatrices() {
        let g = fixtures::bumpy_sphere();
        let bottom = center_component(&g, "s").unwrap();
        assert_eq!(
            classify_boundary(&g, &bottom).unwrap(),
            ArrangementCase::DoubleSeparatrix {
                saddle: "q".into(),
                f1: "e1".into(),
                f2: "e2".into(),
            }
        );
        for (center, odd, companion) in [("m1", "e3", "e2"), ("m2", "e3", "e1")] {
            let c = center_component(&g, center).unwrap();
            assert_eq!(
                classify_boundary(&g, &c).unwrap(),
                ArrangementCase::SingleSeparatrix {
                    saddle: "q".into(),
                    odd_edge: odd.into(),
                    companion: companion.into(),
                }
            );
        }
        let couples = find_trivial_couples(&g).unwrap();
        assert_eq!(
            couples,
            vec![
                TrivialCouple {
                    center: "m1".into(),
                    saddle: "q".into()
                },
                TrivialCouple {
                    center: "m2".into(),
                    saddle: "q".into()
                },
            ]
        );
    }

    #[test]
    fn torus_minimum_enters_through_the_odd_port() {
        let g = fixtures::torus_height();
        let c = center_component(&g, "p").unwrap();
        assert_eq!(
            classify_boundary(&g, &c).unwrap(),
            ArrangementCase::DoubleSeparatrix {
                saddle: "q".into(),
                f1: "e2".into(),
                f2: "e3".into(),
            }
        );
        assert!(find_trivial_couples(&g).unwrap().is_empty());
    }

    #[test]
    fn singular_reeb_cap_is_a_self_connection_entry() {
        let g = fixtures::singular_reeb_s3();
        let c = center_component(&g, "p").unwrap();
        assert_eq!(
            classify_boundary(&g, &c).unwrap(),
            ArrangementCase::SelfConnectedSaddle {
                saddle: "q".into(),
                continuation: "e2".into(),
            }
        );
    }

    #[test]
    fn semi_holonomy_must_match_the_continuation_family() {
        let mut g = fixtures::singular_reeb_s3();
        // Claim closed leaves on the odd-port side while the family there is
        // an open spiral: contradiction.
        if let folia_core::NodeKind::Saddle(s) = &mut g
            .nodes
            .iter_mut()
            .find(|n| n.id == "q")
            .unwrap()
            .kind
        {
            s.semi_holonomy = Some(folia_core::SemiHolonomy {
                minus_trivial: true,
                plus_trivial: None,
            });
        }
        let c = center_component(&g, "p").unwrap();
        assert!(matches!(
            classify_boundary(&g, &c),
            Err(ArrangementError::SemiHolonomyMismatch { .. })
        ));
    }

    #[test]
    fn middle_index_boundary_is_reported_with_its_index() {
        let g = fixtures::middle_saddle(5, 2);
        let c = center_component(&g, "p1").unwrap();
        assert_eq!(
            classify_boundary(&g, &c).unwrap(),
            ArrangementCase::MiddleIndex {
                saddle: "q".into(),
                index: 2
            }
        );
    }

    #[test]
    fn holonomy_leaves_obstruct_components() {
        let g = fixtures::sphere_spiral_holonomy();
        let c = center_component(&g, "c0").unwrap();
        assert_eq!(
            classify_boundary(&g, &c).unwrap(),
            ArrangementCase::Obstructed { node: "a".into() }
        );
    }

    #[test]
    fn waypoints_extend_components() {
        use folia_core::graph::{LeafFamily, LeafTopology, NodeKind};
        let mut g = fixtures::two_center(3);
        // p -e0-> w -e1-> q
        g.edges[0].to = "w".into();
        g.add_node(
            "w",
            NodeKind::MarkedLeaf {
                topology: LeafTopology::Sphere(2),
                holonomy: folia_core::HolonomyLabel::Trivial,
                unresolved_boundary: false,
            },
        );
        g.add_edge(LeafFamily::new("e1", "w", "q", LeafTopology::Sphere(2)));
        let c = center_component(&g, "p").unwrap();
        assert_eq!(c.interior_nodes, vec!["p", "w"]);
        assert_eq!(c.interior_edges, vec!["e0", "e1"]);
        assert_eq!(
            classify_boundary(&g, &c).unwrap(),
            ArrangementCase::CenterToCenter { other: "q".into() }
        );
    }

    #[test]
    fn strong_connections_identify_created_pairs() {
        let g = fixtures::created_pair_n3();
        let strong = find_strong_connections(&g).unwrap();
        assert_eq!(
            strong,
            vec![StrongConnection {
                edge: "m".into(),
                lower: "s1".into(),
                upper: "s2".into(),
            }]
        );
        assert!(find_strong_connections(&fixtures::two_center(3))
            .unwrap()
            .is_empty());
    }

    #[test]
    fn stability_follows_node_kind() {
        let g = fixtures::singular_reeb_s3();
        assert!(weakly_stable(&g, "p").unwrap());
        assert!(!weakly_stable(&g, "q").unwrap());
        assert!(weakly_stable(&g, "S").unwrap());
        assert!(matches!(
            weakly_stable(&g, "L"),
            Err(ArrangementError::NotSingular(_))
        ));
        assert!(!all_singular_weakly_stable(&g));
        assert!(all_singular_weakly_stable(&fixtures::s3_two_circles()));
    }

    #[test]
    fn invalid_graphs_are_rejected_up_front() {
        let mut g = fixtures::two_center(2);
        g.edges[0].topology = folia_core::LeafTopology::Torus;
        assert!(matches!(
            center_component(&g, "p"),
            Err(ArrangementError::InvalidGraph(_))
        ));
    }
}

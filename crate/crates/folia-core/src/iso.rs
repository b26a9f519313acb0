//! Exact graph comparison up to renaming of nodes and families.
//!
//! Presentation details (identifier spelling, declaration order) carry no
//! meaning, so equality of graphs is isomorphism of decorated graphs. This
//! module canonicalises a graph by colour refinement with exact interned
//! signatures followed by individualisation backtracking, then compares the
//! canonical strings. No hashing is involved anywhere, so the answer is never
//! wrong; graphs over 64 nodes are refused instead of answered heuristically.

use std::collections::BTreeMap;

use crate::error::GraphError;
use crate::graph::{FoliationGraph, NodeKind, PortSign};

/// Hard ceiling for exact canonicalisation.
pub const MAX_NODES: usize = 64;

/// Attributes of a node other than its identifier and adjacency.
fn node_attr(kind: &NodeKind) -> String {
    match kind {
        NodeKind::Center => "center".to_string(),
        NodeKind::StableCircle => "stable_circle".to_string(),
        NodeKind::Novikov => "novikov".to_string(),
        NodeKind::BoundaryTangent => "boundary_tangent".to_string(),
        NodeKind::MarkedLeaf {
            topology,
            holonomy,
            unresolved_boundary,
        } => format!("leaf|{topology:?}|{holonomy:?}|{unresolved_boundary}"),
        NodeKind::Saddle(s) => {
            let mut port_sigs: Vec<String> = s
                .ports
                .iter()
                .map(|p| format!("{:?}{}", p.sign, p.paired))
                .collect();
            port_sigs.sort();
            format!(
                "saddle|{}|{}|{:?}|{}",
                s.index,
                s.selfconnected,
                s.semi_holonomy,
                port_sigs.join(",")
            )
        }
    }
}

struct Canon<'g> {
    g: &'g FoliationGraph,
    node_attrs: Vec<String>,
    /// Per node: (edge index, leaves this node) — loops appear twice.
    incident: Vec<Vec<(usize, bool)>>,
    edge_ends: Vec<(usize, usize)>,
    edge_attrs: Vec<String>,
    /// Port decorations at (edge index, endpoint node index).
    end_ports: BTreeMap<(usize, usize), String>,
}

impl<'g> Canon<'g> {
    fn new(g: &'g FoliationGraph) -> Self {
        let index: BTreeMap<&str, usize> = g
            .nodes
            .iter()
            .enumerate()
            .map(|(i, n)| (n.id.as_str(), i))
            .collect();
        let node_attrs = g.nodes.iter().map(|n| node_attr(&n.kind)).collect();
        let mut incident = vec![Vec::new(); g.nodes.len()];
        let mut edge_ends = Vec::with_capacity(g.edges.len());
        let mut edge_attrs = Vec::with_capacity(g.edges.len());
        let mut end_ports = BTreeMap::new();
        for (ei, e) in g.edges.iter().enumerate() {
            let u = index[e.from.as_str()];
            let v = index[e.to.as_str()];
            edge_ends.push((u, v));
            edge_attrs.push(format!("{:?}|{}", e.topology, e.strong_connection));
            incident[u].push((ei, true));
            incident[v].push((ei, false));
            for end in [u, v] {
                let mut ports: Vec<(PortSign, bool)> = match &g.nodes[end].kind {
                    NodeKind::Saddle(s) => s
                        .ports
                        .iter()
                        .filter(|p| p.edge == e.id)
                        .map(|p| (p.sign, p.paired))
                        .collect(),
                    _ => Vec::new(),
                };
                ports.sort();
                end_ports.insert((ei, end), format!("{ports:?}"));
            }
        }
        Canon {
            g,
            node_attrs,
            incident,
            edge_ends,
            edge_attrs,
            end_ports,
        }
    }

    /// Assign canonical colour ids: identical signatures share an id, and ids
    /// are ranks in sorted signature order, so they are comparable across
    /// graphs.
    fn rank(signatures: &[String]) -> Vec<u32> {
        let mut sorted: Vec<&String> = signatures.iter().collect();
        sorted.sort();
        sorted.dedup();
        let table: BTreeMap<&String, u32> = sorted
            .into_iter()
            .enumerate()
            .map(|(i, s)| (s, i as u32))
            .collect();
        signatures.iter().map(|s| table[s]).collect()
    }

    /// One refinement round: each node's new signature is its colour plus the
    /// sorted view of its incident families and their far-end colours.
    fn refine(&self, colors: &[u32], marks: &BTreeMap<usize, u32>) -> Vec<u32> {
        let directional = self.g.transversely_orientable;
        let mut colors = colors.to_vec();
        loop {
            let signatures: Vec<String> = (0..colors.len())
                .map(|v| {
                    let mut parts: Vec<String> = self.incident[v]
                        .iter()
                        .map(|&(ei, leaves)| {
                            let (u, w) = self.edge_ends[ei];
                            let other = if leaves { w } else { u };
                            let role = if !directional {
                                "u"
                            } else if leaves {
                                "o"
                            } else {
                                "i"
                            };
                            format!(
                                "{role}|{}|{}|{}|{}",
                                self.edge_attrs[ei],
                                self.end_ports[&(ei, v)],
                                self.end_ports[&(ei, other)],
                                colors[other]
                            )
                        })
                        .collect();
                    parts.sort();
                    format!(
                        "{}|{:?}|[{}]",
                        colors[v],
                        marks.get(&v),
                        parts.join(";")
                    )
                })
                .collect();
            let next = Self::rank(&signatures);
            let classes = |cs: &[u32]| cs.iter().collect::<std::collections::BTreeSet<_>>().len();
            if classes(&next) == classes(&colors) {
                return next;
            }
            colors = next;
        }
    }

    /// Canonical string of the whole graph for a discrete colouring.
    fn emit(&self, colors: &[u32]) -> String {
        let mut order: Vec<usize> = (0..colors.len()).collect();
        order.sort_by_key(|&v| colors[v]);
        let mut rank_of = vec![0usize; colors.len()];
        for (r, &v) in order.iter().enumerate() {
            rank_of[v] = r;
        }
        let nodes: Vec<String> = order.iter().map(|&v| self.node_attrs[v].clone()).collect();
        let mut edges: Vec<String> = (0..self.edge_ends.len())
            .map(|ei| {
                let (u, v) = self.edge_ends[ei];
                let fu = format!("{}|{}", rank_of[u], self.end_ports[&(ei, u)]);
                let fv = format!("{}|{}", rank_of[v], self.end_ports[&(ei, v)]);
                if self.g.transversely_orientable {
                    format!("{fu}>{fv}|{}", self.edge_attrs[ei])
                } else {
                    let mut ends = [fu, fv];
                    ends.sort();
                    format!("{}~{}|{}", ends[0], ends[1], self.edge_attrs[ei])
                }
            })
            .collect();
        edges.sort();
        format!("nodes[{}] edges[{}]", nodes.join(","), edges.join(","))
    }

    /// Individualisation-refinement search for the minimal canonical string.
    fn canonical(&self, colors: Vec<u32>, marks: BTreeMap<usize, u32>) -> String {
        let mut class_members: BTreeMap<u32, Vec<usize>> = BTreeMap::new();
        for (v, &c) in colors.iter().enumerate() {
            class_members.entry(c).or_default().push(v);
        }
        let split = class_members.values().find(|m| m.len() > 1);
        match split {
            None => self.emit(&colors),
            Some(members) => {
                let next_mark = marks.len() as u32;
                members
                    .iter()
                    .map(|&v| {
                        let mut marks = marks.clone();
                        marks.insert(v, next_mark);
                        let refined = self.refine(&colors, &marks);
                        self.canonical(refined, marks)
                    })
                    .min()
                    .expect("non-empty colour class")
            }
        }
    }
}

/// The canonical presentation-independent description of a graph. Two graphs
/// have equal canonical forms exactly when they are isomorphic as decorated
/// graphs (with matching headers).
pub fn canonical_form(g: &FoliationGraph) -> Result<String, GraphError> {
    if g.nodes.len() > MAX_NODES {
        return Err(GraphError::TooLarge {
            nodes: g.nodes.len(),
            limit: MAX_NODES,
        });
    }
    let header = format!(
        "dim={};closed={};to={};nht={}",
        g.dimension, g.closed, g.transversely_orientable, g.has_null_homotopic_transversal
    );
    let canon = Canon::new(g);
    let initial = Canon::rank(&canon.node_attrs);
    let refined = canon.refine(&initial, &BTreeMap::new());
    Ok(format!("{header} {}", canon.canonical(refined, BTreeMap::new())))
}

/// Decide whether two graphs are the same up to renaming nodes and families.
/// Headers (dimension and the three flags) must match; edge direction counts
/// only for transversely orientable graphs.
pub fn graphs_equal(a: &FoliationGraph, b: &FoliationGraph) -> Result<bool, GraphError> {
    if (a.dimension, a.closed, a.transversely_orientable, a.has_null_homotopic_transversal)
        != (b.dimension, b.closed, b.transversely_orientable, b.has_null_homotopic_transversal)
    {
        return Ok(false);
    }
    if a.nodes.len() != b.nodes.len() || a.edges.len() != b.edges.len() {
        return Ok(false);
    }
    Ok(canonical_form(a)? == canonical_form(b)?)
}

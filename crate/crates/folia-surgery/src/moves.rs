//! The individual rewrite operations.
//!
//! Every operation clones the input graph, performs one local rewrite and
//! validates the result before returning it. Fresh identifiers are derived
//! from the ids present in the input graph, so applying the same move to the
//! same graph always produces byte-identical output.

use std::collections::BTreeSet;

use folia_arrangements::{center_component, classify_boundary, ArrangementCase, CenterComponent};
use folia_core::{
    index_multiset, validate, FoliationGraph, HolonomyLabel, IndexEntry, LeafFamily, LeafTopology,
    NodeId, NodeKind, Port, PortSign, Saddle, SemiHolonomy,
};

use crate::{EdgeId, Move, MoveRecord, SurgeryError};

type MoveResult = Result<(FoliationGraph, MoveRecord), SurgeryError>;

/// Dispatch a [`Move`] to the operation it names.
pub fn apply_move(g: &FoliationGraph, mv: &Move) -> MoveResult {
    match mv {
        Move::EliminateTrivialCouple { center } => eliminate_trivial_couple(g, center),
        Move::EliminateDoubleSeparatrix { center } => eliminate_double_separatrix(g, center),
        Move::ReplaceSingularReeb { center } => replace_singular_reeb(g, center),
        Move::CreateSaddlePair { edge, index } => create_saddle_pair(g, edge, *index),
        Move::EliminateSaddlePair { edge } => eliminate_saddle_pair(g, edge),
    }
}

/// Shared bookkeeping for one rewrite: what was removed, added and modified,
/// plus the index multiset before the move.
struct Edit {
    applied: Move,
    index_before: Vec<IndexEntry>,
    removed_nodes: BTreeSet<NodeId>,
    removed_edges: BTreeSet<EdgeId>,
    added_nodes: BTreeSet<NodeId>,
    added_edges: BTreeSet<EdgeId>,
    touched_nodes: BTreeSet<NodeId>,
    touched_edges: BTreeSet<EdgeId>,
}

impl Edit {
    fn begin(g: &FoliationGraph, applied: Move) -> Result<Edit, SurgeryError> {
        let report = validate(g);
        if !report.is_clean() {
            return Err(SurgeryError::InvalidGraph(report));
        }
        Ok(Edit {
            applied,
            index_before: index_multiset(g).expect("graph was just validated"),
            removed_nodes: BTreeSet::new(),
            removed_edges: BTreeSet::new(),
            added_nodes: BTreeSet::new(),
            added_edges: BTreeSet::new(),
            touched_nodes: BTreeSet::new(),
            touched_edges: BTreeSet::new(),
        })
    }

    fn finish(self, g: FoliationGraph) -> MoveResult {
        let report = validate(&g);
        if !report.is_clean() {
            return Err(SurgeryError::Internal(report));
        }
        let index_after = index_multiset(&g).expect("graph was just validated");
        let record = MoveRecord {
            applied: self.applied,
            removed_nodes: self.removed_nodes.into_iter().collect(),
            removed_edges: self.removed_edges.into_iter().collect(),
            added_nodes: self.added_nodes.into_iter().collect(),
            added_edges: self.added_edges.into_iter().collect(),
            touched_nodes: self.touched_nodes.into_iter().collect(),
            touched_edges: self.touched_edges.into_iter().collect(),
            index_before: self.index_before,
            index_after,
        };
        Ok((g, record))
    }
}

fn describe_case(case: &ArrangementCase) -> &'static str {
    match case {
        ArrangementCase::CenterToCenter { .. } => "another center (round component)",
        ArrangementCase::SingleSeparatrix { .. } => "a same-sign saddle port (trivial couple)",
        ArrangementCase::DoubleSeparatrix { .. } => "the odd-sign saddle port",
        ArrangementCase::SelfConnectedSaddle { .. } => "a self-connected saddle (singular cap)",
        ArrangementCase::MiddleIndex { .. } => "a middle-index saddle",
        ArrangementCase::Obstructed { .. } => "an obstructing node",
    }
}

fn remove_node(g: &mut FoliationGraph, id: &str) {
    g.nodes.retain(|n| n.id != id);
}

fn remove_edge(g: &mut FoliationGraph, id: &str) {
    g.edges.retain(|e| e.id != id);
}

/// Remove a center component's interior and the saddle it feeds into.
fn remove_component(g: &mut FoliationGraph, edit: &mut Edit, c: &CenterComponent, saddle: &str) {
    for id in &c.interior_nodes {
        remove_node(g, id);
        edit.removed_nodes.insert(id.clone());
    }
    for id in &c.interior_edges {
        remove_edge(g, id);
        edit.removed_edges.insert(id.clone());
    }
    remove_node(g, saddle);
    edit.removed_nodes.insert(saddle.to_string());
}

/// Repoint every port of `node` that references one of `old` onto `new_edge`,
/// optionally forcing a sign. Marks the node as touched when it is a saddle
/// with matching ports.
fn remap_ports(
    g: &mut FoliationGraph,
    edit: &mut Edit,
    node: &str,
    old: &[&str],
    new_edge: &str,
    force_sign: Option<PortSign>,
) {
    let Some(n) = g.nodes.iter_mut().find(|n| n.id == node) else {
        return;
    };
    let NodeKind::Saddle(s) = &mut n.kind else {
        return;
    };
    let mut changed = false;
    for p in &mut s.ports {
        if old.contains(&p.edge.as_str()) {
            p.edge = new_edge.to_string();
            if let Some(sign) = force_sign {
                p.sign = sign;
            }
            changed = true;
        }
    }
    if changed {
        edit.touched_nodes.insert(node.to_string());
    }
}

/// Whether forcing the sign of `node`'s ports on `edge` to `sign` keeps its
/// plus/minus counts legal for its index.
fn sign_rewrite_is_legal(g: &FoliationGraph, node: &str, edge: &str, sign: PortSign) -> bool {
    let Some(s) = g.saddle(node) else {
        return true; // only saddles carry signs
    };
    let plus = s
        .ports
        .iter()
        .map(|p| if p.edge == edge { sign } else { p.sign })
        .filter(|&x| x == PortSign::Plus)
        .count();
    let minus = s.ports.len() - plus;
    let n = g.dimension;
    if s.index == 1 || s.index == n - 1 {
        if n == 2 {
            matches!((plus, minus), (1, 2) | (2, 1))
        } else if s.index == 1 {
            (plus, minus) == (1, 2)
        } else {
            (plus, minus) == (2, 1)
        }
    } else {
        (plus, minus) == (1, 1)
    }
}

/// After two families have merged into a loop at `node`, promote the node to
/// a self-connected saddle when its two loop ports carry the same sign. The
/// semi-holonomy on the odd-port side is synthesized from the compactness of
/// the odd port's family: compact families mean the leaves there close up.
fn promote_self_connection(g: &mut FoliationGraph, node: &str, loop_edge: &str) {
    let odd_compact = {
        let Some(s) = g.saddle(node) else { return };
        let on_loop: Vec<&Port> = s.ports.iter().filter(|p| p.edge == loop_edge).collect();
        if s.selfconnected || on_loop.len() != 2 || on_loop[0].sign != on_loop[1].sign {
            return;
        }
        let extreme = s.index == 1 || s.index == g.dimension - 1;
        if !extreme {
            return;
        }
        let Some(odd) = s.ports.iter().find(|p| p.edge != loop_edge) else {
            return;
        };
        g.edge(&odd.edge)
            .map(|e| e.topology.is_compact())
            .unwrap_or(true)
    };
    let Some(n) = g.nodes.iter_mut().find(|n| n.id == node) else {
        return;
    };
    if let NodeKind::Saddle(s) = &mut n.kind {
        s.selfconnected = true;
        s.semi_holonomy = Some(SemiHolonomy {
            minus_trivial: odd_compact,
            plus_trivial: None,
        });
        for p in &mut s.ports {
            p.paired = p.edge == loop_edge;
        }
    }
}

/// Close a family both of whose remaining port references sit on `saddle`:
/// once the saddle is removed the family has no ends left and its leaves
/// sweep a circle. A fresh trivially-holonomic waypoint carries the loop.
fn close_family(g: &mut FoliationGraph, edit: &mut Edit, family: &str) {
    let label = g.edge(family).expect("closing an existing family").topology.clone();
    let w = g.fresh_id("w");
    let loop_id = g.fresh_id("e");
    g.add_node(
        w.clone(),
        NodeKind::MarkedLeaf {
            topology: label.clone(),
            holonomy: HolonomyLabel::Trivial,
            unresolved_boundary: false,
        },
    );
    g.add_edge(LeafFamily::new(loop_id.clone(), w.clone(), w.clone(), label));
    remove_edge(g, family);
    edit.removed_edges.insert(family.to_string());
    edit.added_nodes.insert(w);
    edit.added_edges.insert(loop_id);
}

/// Merge families `a` and `b` across the removed saddle, preserving the port
/// signs at their far ends. Used by the trivial-couple move, whose splice is
/// orientation-compatible by construction: one family enters the saddle and
/// the other leaves it.
fn splice_preserving_signs(
    g: &mut FoliationGraph,
    edit: &mut Edit,
    saddle: &str,
    a: &str,
    b: &str,
) -> Result<(), SurgeryError> {
    let ea = g.edge(a).expect("splice edge exists").clone();
    let eb = g.edge(b).expect("splice edge exists").clone();
    if ea.topology != eb.topology {
        return Err(SurgeryError::Blocked(format!(
            "families `{a}` and `{b}` would merge across the removed saddle but carry \
             different leaf types"
        )));
    }
    let far_a = ea.other_endpoint(saddle).clone();
    let far_b = eb.other_endpoint(saddle).clone();
    // Keep the transverse direction: the family entering the saddle flows
    // into the merged family, the leaving one flows out of it.
    let (from, to) = if ea.to == saddle && eb.from == saddle {
        (far_a.clone(), far_b.clone())
    } else if eb.to == saddle && ea.from == saddle {
        (far_b.clone(), far_a.clone())
    } else {
        // Only reachable in non-orientable graphs, where direction is
        // ignored anyway.
        (far_a.clone(), far_b.clone())
    };
    let merged = g.fresh_id("e");
    g.add_edge(LeafFamily::new(merged.clone(), from, to, ea.topology.clone()));
    remap_ports(g, edit, &far_a, &[a, b], &merged, None);
    if far_b != far_a {
        remap_ports(g, edit, &far_b, &[a, b], &merged, None);
    } else {
        promote_self_connection(g, &far_a, &merged);
    }
    remove_edge(g, a);
    remove_edge(g, b);
    edit.removed_edges.insert(a.to_string());
    edit.removed_edges.insert(b.to_string());
    edit.added_edges.insert(merged);
    Ok(())
}

/// Merge the two same-sign separatrix families `f1`, `f2` of a removed
/// extreme saddle. When their far ends coincide the merged family is a loop
/// and keeps its sector signs (the transverse coordinate wraps around it);
/// otherwise, in a transversely orientable graph, the far-end port signs are
/// rewritten to match the merged family's direction slots, and the move is
/// blocked if that would break a far saddle's sign shape.
fn merge_separatrix_pair(
    g: &mut FoliationGraph,
    edit: &mut Edit,
    saddle: &str,
    f1: &str,
    f2: &str,
) -> Result<(), SurgeryError> {
    let e1 = g.edge(f1).expect("separatrix family exists").clone();
    let e2 = g.edge(f2).expect("separatrix family exists").clone();
    if e1.topology != e2.topology {
        return Err(SurgeryError::Blocked(format!(
            "separatrix families `{f1}` and `{f2}` carry different leaf types and cannot merge"
        )));
    }
    let far1 = e1.other_endpoint(saddle).clone();
    let far2 = e2.other_endpoint(saddle).clone();
    let merged = g.fresh_id("e");
    if far1 == far2 {
        g.add_edge(LeafFamily::new(
            merged.clone(),
            far1.clone(),
            far1.clone(),
            e1.topology.clone(),
        ));
        remap_ports(g, edit, &far1, &[f1, f2], &merged, None);
        promote_self_connection(g, &far1, &merged);
    } else {
        if g.transversely_orientable {
            if !sign_rewrite_is_legal(g, &far1, f1, PortSign::Plus) {
                return Err(SurgeryError::Blocked(format!(
                    "merging `{f1}` and `{f2}` would flip a port sign at `{far1}` and break \
                     its index shape"
                )));
            }
            if !sign_rewrite_is_legal(g, &far2, f2, PortSign::Minus) {
                return Err(SurgeryError::Blocked(format!(
                    "merging `{f1}` and `{f2}` would flip a port sign at `{far2}` and break \
                     its index shape"
                )));
            }
            remap_ports(g, edit, &far1, &[f1], &merged, Some(PortSign::Plus));
            remap_ports(g, edit, &far2, &[f2], &merged, Some(PortSign::Minus));
        } else {
            remap_ports(g, edit, &far1, &[f1], &merged, None);
            remap_ports(g, edit, &far2, &[f2], &merged, None);
        }
        g.add_edge(LeafFamily::new(
            merged.clone(),
            far1,
            far2,
            e1.topology.clone(),
        ));
    }
    remove_edge(g, f1);
    remove_edge(g, f2);
    edit.removed_edges.insert(f1.to_string());
    edit.removed_edges.insert(f2.to_string());
    edit.added_edges.insert(merged);
    Ok(())
}

/// Cancel a center against the extreme saddle it reaches through one of the
/// two same-sign ports. The capped separatrix sheet disappears and the odd
/// family splices onto the surviving same-sign family.
pub fn eliminate_trivial_couple(g: &FoliationGraph, center: &str) -> MoveResult {
    let mut edit = Edit::begin(
        g,
        Move::EliminateTrivialCouple {
            center: center.to_string(),
        },
    )?;
    let component = center_component(g, center)?;
    let case = classify_boundary(g, &component)?;
    let ArrangementCase::SingleSeparatrix {
        saddle,
        odd_edge,
        companion,
    } = case
    else {
        return Err(SurgeryError::NotApplicable(format!(
            "center `{center}` does not form a trivial couple; its component ends at {}",
            describe_case(&case)
        )));
    };
    let mut out = g.clone();
    if odd_edge == companion {
        // One loop family carries both surviving ports: it closes up.
        close_family(&mut out, &mut edit, &odd_edge);
    } else {
        splice_preserving_signs(&mut out, &mut edit, &saddle, &odd_edge, &companion)?;
    }
    remove_component(&mut out, &mut edit, &component, &saddle);
    edit.finish(out)
}

/// Cancel a center against the extreme saddle it reaches through the odd-sign
/// port. Both separatrix sheets are capped at once and the two same-sign
/// families merge into one; when they are a single loop family it closes up
/// into a circle of leaves.
pub fn eliminate_double_separatrix(g: &FoliationGraph, center: &str) -> MoveResult {
    let mut edit = Edit::begin(
        g,
        Move::EliminateDoubleSeparatrix {
            center: center.to_string(),
        },
    )?;
    let component = center_component(g, center)?;
    let case = classify_boundary(g, &component)?;
    let ArrangementCase::DoubleSeparatrix { saddle, f1, f2 } = case else {
        return Err(SurgeryError::NotApplicable(format!(
            "center `{center}` does not enter through the odd port; its component ends at {}",
            describe_case(&case)
        )));
    };
    let mut out = g.clone();
    if f1 == f2 {
        let family = out.edge(&f1).expect("separatrix family exists").clone();
        if family.is_loop() {
            // Both ends of the family die with the saddle: it closes up.
            close_family(&mut out, &mut edit, &f1);
        } else {
            // One family meets the saddle through both paired sectors, so its
            // leaves wrap twice around the removed singular leaf. Capping it
            // off makes them double-cover a one-sided core leaf — which only
            // a non transversely orientable foliation can contain.
            if out.transversely_orientable {
                return Err(SurgeryError::Blocked(format!(
                    "family `{f1}` meets saddle `{saddle}` through both paired sectors; \
                     capping it would create a one-sided leaf, impossible in a transversely \
                     orientable foliation"
                )));
            }
            let cap = out.fresh_id("z");
            out.add_node(
                cap.clone(),
                NodeKind::MarkedLeaf {
                    topology: z2_core_label(&family.topology),
                    holonomy: HolonomyLabel::Z2,
                    unresolved_boundary: false,
                },
            );
            let e = out
                .edges
                .iter_mut()
                .find(|e| e.id == f1)
                .expect("separatrix family exists");
            if e.from == saddle {
                e.from = cap.clone();
            } else {
                e.to = cap.clone();
            }
            edit.added_nodes.insert(cap);
            edit.touched_edges.insert(f1.clone());
        }
    } else {
        merge_separatrix_pair(&mut out, &mut edit, &saddle, &f1, &f2)?;
    }
    remove_component(&mut out, &mut edit, &component, &saddle);
    edit.finish(out)
}

/// The leaf a doubly-covering family collapses onto when it is capped off:
/// the free quotient of the family's leaf by the deck involution.
fn z2_core_label(leaf: &LeafTopology) -> LeafTopology {
    match leaf {
        // The connected double cover of a circle is a circle.
        LeafTopology::Circle => LeafTopology::Circle,
        other => LeafTopology::Custom {
            name: "z2-quotient".into(),
            compact: other.is_compact(),
            euler_characteristic: other.euler_characteristic().map(|chi| chi / 2),
        },
    }
}

/// Replace a singular cap — a center feeding a self-connected saddle — by an
/// opaque novikov region on the saddle's continuation family. The spiralling
/// or closing behaviour recorded in the saddle's semi-holonomy must match the
/// continuation family's compactness (checked during classification).
pub fn replace_singular_reeb(g: &FoliationGraph, center: &str) -> MoveResult {
    let mut edit = Edit::begin(
        g,
        Move::ReplaceSingularReeb {
            center: center.to_string(),
        },
    )?;
    let component = center_component(g, center)?;
    let case = classify_boundary(g, &component)?;
    let ArrangementCase::SelfConnectedSaddle {
        saddle,
        continuation,
    } = case
    else {
        return Err(SurgeryError::NotApplicable(format!(
            "center `{center}` does not cap a self-connected saddle; its component ends at {}",
            describe_case(&case)
        )));
    };
    let mut out = g.clone();
    let nov = out.fresh_id("nov");
    out.add_node(nov.clone(), NodeKind::Novikov);
    let e = out
        .edges
        .iter_mut()
        .find(|e| e.id == continuation)
        .expect("continuation family exists");
    if e.from == saddle {
        e.from = nov.clone();
    } else {
        e.to = nov.clone();
    }
    // A strong connection marks a cancellable saddle pair; with one of its
    // saddles traded for an opaque region the pair is gone.
    e.strong_connection = false;
    edit.added_nodes.insert(nov);
    edit.touched_edges.insert(continuation);
    remove_component(&mut out, &mut edit, &component, &saddle);
    edit.finish(out)
}

/// Split a compact family with a strongly connected saddle pair of indices
/// (l, l+1). The middle family records the surgered leaf type so that
/// elimination can restore the original family exactly.
pub fn create_saddle_pair(g: &FoliationGraph, edge: &str, index: u32) -> MoveResult {
    let mut edit = Edit::begin(
        g,
        Move::CreateSaddlePair {
            edge: edge.to_string(),
            index,
        },
    )?;
    let n = g.dimension;
    if n < 3 {
        return Err(SurgeryError::NotApplicable(
            "saddle pairs need a middle leaf type, so the dimension must be at least 3".into(),
        ));
    }
    if index < 1 || index > n - 2 {
        return Err(SurgeryError::NotApplicable(format!(
            "pair indices (l, l+1) must fit in 1..={}, got l = {index}",
            n - 1
        )));
    }
    let Some(e) = g.edge(edge).cloned() else {
        return Err(SurgeryError::NotApplicable(format!(
            "graph has no family `{edge}`"
        )));
    };
    let base = e.topology.clone();
    if !base.is_compact() {
        return Err(SurgeryError::Blocked(format!(
            "family `{edge}` has non-compact leaves; surgery is defined on compact families only"
        )));
    }
    // A loop family at a saddle whose two ports share a sign wraps the
    // transverse coordinate; there is no well-defined spot to insert a pair.
    if e.is_loop() {
        if let Some(s) = g.saddle(&e.from) {
            let signs: Vec<PortSign> = s
                .ports
                .iter()
                .filter(|p| p.edge == edge)
                .map(|p| p.sign)
                .collect();
            if signs.len() == 2 && signs[0] == signs[1] {
                return Err(SurgeryError::Blocked(format!(
                    "family `{edge}` wraps around saddle `{}`; it has no consistent direction \
                     to split along",
                    e.from
                )));
            }
        }
    }

    let mut out = g.clone();
    let saddles = out.fresh_ids("s", 2);
    let (s1, s2) = (saddles[0].clone(), saddles[1].clone());
    let names = out.fresh_ids("e", 3);
    let (a, m, b) = (names[0].clone(), names[1].clone(), names[2].clone());
    let middle_label = LeafTopology::Surgered(Box::new(base.clone()), index);

    let lower_ports = if index == 1 {
        vec![
            Port::paired(PortSign::Minus, a.clone()),
            Port::paired(PortSign::Minus, a.clone()),
            Port::new(PortSign::Plus, m.clone()),
        ]
    } else {
        vec![
            Port::new(PortSign::Minus, a.clone()),
            Port::new(PortSign::Plus, m.clone()),
        ]
    };
    let upper_ports = if index + 1 == n - 1 {
        vec![
            Port::paired(PortSign::Plus, b.clone()),
            Port::paired(PortSign::Plus, b.clone()),
            Port::new(PortSign::Minus, m.clone()),
        ]
    } else {
        vec![
            Port::new(PortSign::Minus, m.clone()),
            Port::new(PortSign::Plus, b.clone()),
        ]
    };
    // Self-connected ends pair their ports on the outer family; the odd port
    // then faces the middle family, which is compact here, so the synthesized
    // semi-holonomy closes up on that side.
    let self_holonomy = Some(SemiHolonomy {
        minus_trivial: true,
        plus_trivial: None,
    });
    out.add_node(
        s1.clone(),
        NodeKind::Saddle(Saddle {
            index,
            selfconnected: index == 1,
            semi_holonomy: if index == 1 { self_holonomy } else { None },
            ports: lower_ports,
        }),
    );
    out.add_node(
        s2.clone(),
        NodeKind::Saddle(Saddle {
            index: index + 1,
            selfconnected: index + 1 == n - 1,
            semi_holonomy: if index + 1 == n - 1 { self_holonomy } else { None },
            ports: upper_ports,
        }),
    );
    out.add_edge(LeafFamily::new(a.clone(), e.from.clone(), s1.clone(), base.clone()));
    out.add_edge(LeafFamily {
        id: m.clone(),
        from: s1.clone(),
        to: s2.clone(),
        topology: middle_label,
        strong_connection: true,
    });
    out.add_edge(LeafFamily::new(b.clone(), s2.clone(), e.to.clone(), base));

    // Repoint the split family's far ports onto the new outer families. For a
    // loop the endpoints coincide: the plus port (the end the family left
    // from) goes to `a`, the minus port to `b`.
    if e.is_loop() {
        if let Some(node) = out.nodes.iter_mut().find(|nd| nd.id == e.from) {
            if let NodeKind::Saddle(s) = &mut node.kind {
                let mut changed = false;
                for p in &mut s.ports {
                    if p.edge == edge {
                        p.edge = if p.sign == PortSign::Plus { a.clone() } else { b.clone() };
                        changed = true;
                    }
                }
                if changed {
                    edit.touched_nodes.insert(e.from.clone());
                }
            }
        }
    } else {
        remap_ports(&mut out, &mut edit, &e.from, &[edge], &a, None);
        remap_ports(&mut out, &mut edit, &e.to, &[edge], &b, None);
    }
    remove_edge(&mut out, edge);
    edit.removed_edges.insert(edge.to_string());
    edit.added_nodes.insert(s1);
    edit.added_nodes.insert(s2);
    edit.added_edges.insert(a);
    edit.added_edges.insert(m);
    edit.added_edges.insert(b);
    edit.finish(out)
}

/// Cancel a strongly connected saddle pair, addressed by the middle family
/// joining it. The outer families merge back into the family whose leaf type
/// the middle family recorded at creation.
pub fn eliminate_saddle_pair(g: &FoliationGraph, edge: &str) -> MoveResult {
    let mut edit = Edit::begin(
        g,
        Move::EliminateSaddlePair {
            edge: edge.to_string(),
        },
    )?;
    let Some(middle) = g.edge(edge).cloned() else {
        return Err(SurgeryError::NotApplicable(format!(
            "graph has no family `{edge}`"
        )));
    };
    if !middle.strong_connection {
        return Err(SurgeryError::NotApplicable(format!(
            "family `{edge}` is not a strong connection between a saddle pair"
        )));
    }
    let (i_from, i_to) = (
        g.saddle(&middle.from).expect("strong endpoints are saddles").index,
        g.saddle(&middle.to).expect("strong endpoints are saddles").index,
    );
    let (s1, s2) = if i_from < i_to {
        (middle.from.clone(), middle.to.clone())
    } else {
        (middle.to.clone(), middle.from.clone())
    };
    let lower_index = i_from.min(i_to);
    let LeafTopology::Surgered(base, l) = &middle.topology else {
        return Err(SurgeryError::Blocked(format!(
            "middle family `{edge}` does not record a surgered leaf type; the original \
             family cannot be restored"
        )));
    };
    if *l != lower_index {
        return Err(SurgeryError::Blocked(format!(
            "middle family `{edge}` records an index-{l} surgery but the pair has lower \
             index {lower_index}"
        )));
    }
    let base = (**base).clone();

    let outer = |s: &str| -> Result<LeafFamily, SurgeryError> {
        let ids: Vec<&LeafFamily> = g
            .incident_edges(s)
            .into_iter()
            .filter(|e| e.id != edge)
            .collect();
        match ids.len() {
            1 if ids[0].is_loop() => Err(SurgeryError::Blocked(format!(
                "outer family of `{s}` is a loop; the wrapped separatrix cannot be undone"
            ))),
            1 => Ok(ids[0].clone()),
            0 => Err(SurgeryError::Blocked(format!(
                "saddle `{s}` has no outer family to restore"
            ))),
            _ => Err(SurgeryError::Blocked(format!(
                "saddle `{s}` has several outer families; the pair is not a plain split"
            ))),
        }
    };
    let a = outer(&s1)?;
    let b = outer(&s2)?;
    if a.topology != base || b.topology != base {
        return Err(SurgeryError::Blocked(format!(
            "outer families of `{edge}` do not both carry the recorded pre-surgery leaf type"
        )));
    }

    let mut out = g.clone();
    if a.id == b.id {
        // The two outer ends belong to one family running parallel to the
        // middle one: removing the pair closes it up.
        close_family(&mut out, &mut edit, &a.id);
    } else {
        let u = a.other_endpoint(&s1).clone();
        let v = b.other_endpoint(&s2).clone();
        let merged = out.fresh_id("e");
        // Preserve the transverse direction of the chain u -> s1 -> s2 -> v
        // (or its mirror image).
        let (from, to) = if a.from == u.as_str() { (u.clone(), v.clone()) } else { (v.clone(), u.clone()) };
        out.add_edge(LeafFamily::new(merged.clone(), from, to, base));
        remap_ports(&mut out, &mut edit, &u, &[a.id.as_str(), b.id.as_str()], &merged, None);
        if v != u {
            remap_ports(&mut out, &mut edit, &v, &[a.id.as_str(), b.id.as_str()], &merged, None);
        } else {
            promote_self_connection(&mut out, &u, &merged);
        }
        remove_edge(&mut out, &a.id);
        remove_edge(&mut out, &b.id);
        edit.removed_edges.insert(a.id.clone());
        edit.removed_edges.insert(b.id.clone());
        edit.added_edges.insert(merged);
    }
    remove_node(&mut out, &s1);
    remove_node(&mut out, &s2);
    remove_edge(&mut out, edge);
    edit.removed_nodes.insert(s1);
    edit.removed_nodes.insert(s2);
    edit.removed_edges.insert(edge.to_string());
    edit.finish(out)
}

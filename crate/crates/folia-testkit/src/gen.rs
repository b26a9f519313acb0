//! Seeded generation of random structurally valid graphs.
//!
//! Growth starts from the round two-center sphere and applies local
//! expansions that each preserve validity, so every generated graph is valid
//! by construction. All choices come from a `ChaCha8` stream seeded by the
//! caller: the same seed always yields the same graph.

use std::collections::BTreeMap;

use folia_core::graph::{
    FoliationGraph, HolonomyLabel, LeafFamily, LeafTopology, NodeKind, Port, PortSign, Saddle,
    SemiHolonomy,
};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::fixtures::two_center;

/// Build a random valid graph of the given dimension by applying `steps`
/// growth operations to the two-center sphere.
pub fn random_valid_graph(dimension: u32, steps: usize, seed: u64) -> FoliationGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut g = two_center(dimension);
    for _ in 0..steps {
        grow_once(&mut g, &mut rng);
    }
    g
}

fn grow_once(g: &mut FoliationGraph, rng: &mut ChaCha8Rng) {
    // 0: bump a center into saddle-plus-two-centers
    // 1: split a family with a saddle pair (needs dimension >= 3)
    // 2: cap a center with an eddy (self-connected saddle + new center)
    // 3: mark an interior leaf of a family as a waypoint
    let mut ops = vec![0, 2, 3];
    if g.dimension >= 3 && !splittable_edges(g).is_empty() {
        ops.push(1);
    }
    match *ops.choose(rng).expect("non-empty op list") {
        0 => bump_split(g, rng),
        1 => pair_insert(g, rng),
        2 => eddy_cap(g, rng),
        _ => waypoint_insert(g, rng),
    }
}

fn center_ids(g: &FoliationGraph) -> Vec<String> {
    let mut ids: Vec<String> = g
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Center))
        .map(|n| n.id.clone())
        .collect();
    ids.sort();
    ids
}

fn splittable_edges(g: &FoliationGraph) -> Vec<String> {
    let mut ids: Vec<String> = g
        .edges
        .iter()
        .filter(|e| !e.strong_connection && !e.is_loop() && e.topology.is_compact())
        .map(|e| e.id.clone())
        .collect();
    ids.sort();
    ids
}

fn pick(rng: &mut ChaCha8Rng, items: &[String]) -> String {
    items[rng.gen_range(0..items.len())].clone()
}

/// Move every port on `node` that references `old_edge` to `new_edge`.
fn remap_ports(g: &mut FoliationGraph, node: &str, old_edge: &str, new_edge: &str) {
    if let Some(NodeKind::Saddle(s)) = g
        .nodes
        .iter_mut()
        .find(|n| n.id == node)
        .map(|n| &mut n.kind)
    {
        for p in &mut s.ports {
            if p.edge == old_edge {
                p.edge = new_edge.to_string();
            }
        }
    }
}

/// Replace a center by a saddle holding two fresh centers, like a Morse
/// function growing a bump near an extremum.
fn bump_split(g: &mut FoliationGraph, rng: &mut ChaCha8Rng) {
    let c = pick(rng, &center_ids(g));
    let e_id = g.incident_edges(&c)[0].id.clone();
    let n = g.dimension;
    let q = g.fresh_id("s");
    let centers = g.fresh_ids("c", 2);
    let fams = g.fresh_ids("e", 2);
    let (m1, m2) = (&centers[0], &centers[1]);
    let (f1, f2) = (&fams[0], &fams[1]);
    g.nodes.retain(|node| node.id != c);

    let points_away = g.edge(&e_id).unwrap().from == c;
    let e = g.edges.iter_mut().find(|e| e.id == e_id).unwrap();
    let (index, ports, f1_edge, f2_edge) = if points_away {
        // The family used to leave the removed center: the new saddle sits
        // below it with two fresh centers underneath.
        e.from = q.clone();
        (
            1,
            vec![
                Port::new(PortSign::Minus, f1.as_str()),
                Port::new(PortSign::Minus, f2.as_str()),
                Port::new(PortSign::Plus, e_id.as_str()),
            ],
            LeafFamily::new(f1, m1, &q, LeafTopology::sphere_label(n)),
            LeafFamily::new(f2, m2, &q, LeafTopology::sphere_label(n)),
        )
    } else {
        e.to = q.clone();
        (
            n - 1,
            vec![
                Port::new(PortSign::Minus, e_id.as_str()),
                Port::new(PortSign::Plus, f1.as_str()),
                Port::new(PortSign::Plus, f2.as_str()),
            ],
            LeafFamily::new(f1, &q, m1, LeafTopology::sphere_label(n)),
            LeafFamily::new(f2, &q, m2, LeafTopology::sphere_label(n)),
        )
    };
    g.add_node(
        &q,
        NodeKind::Saddle(Saddle {
            index,
            selfconnected: false,
            semi_holonomy: None,
            ports,
        }),
    );
    g.add_node(m1, NodeKind::Center);
    g.add_node(m2, NodeKind::Center);
    g.add_edge(f1_edge);
    g.add_edge(f2_edge);
}

/// Split a compact family with a saddle pair of indices (l, l+1), the shape
/// the saddle-pair creation rewrite produces.
fn pair_insert(g: &mut FoliationGraph, rng: &mut ChaCha8Rng) {
    let e_id = pick(rng, &splittable_edges(g));
    let n = g.dimension;
    let l = rng.gen_range(1..=n - 2);

    let saddles = g.fresh_ids("s", 2);
    let (s1, s2) = (&saddles[0], &saddles[1]);
    let edges = g.fresh_ids("e", 2);
    let (m_id, b_id) = (&edges[0], &edges[1]);

    let (v, base) = {
        let e = g.edge(&e_id).unwrap();
        (e.to.clone(), e.topology.clone())
    };
    // Reuse the original id for the lower outer family, keeping ports at the
    // `from` endpoint valid; ports at `v` move to the new upper family.
    g.edges.iter_mut().find(|e| e.id == e_id).unwrap().to = s1.clone();
    remap_ports(g, &v, &e_id, b_id);

    g.add_node(s1, saddle_for_pair(l, n, &e_id, m_id, true));
    g.add_node(s2, saddle_for_pair(l + 1, n, b_id, m_id, false));
    let mut m = LeafFamily::new(
        m_id,
        s1,
        s2,
        LeafTopology::Surgered(Box::new(base.clone()), l),
    );
    m.strong_connection = true;
    g.add_edge(m);
    g.add_edge(LeafFamily::new(b_id, s2, &v, base));
}

/// Ports for one saddle of an inserted pair. `lower` picks the saddle whose
/// outer family arrives from below.
fn saddle_for_pair(index: u32, n: u32, outer: &str, middle: &str, lower: bool) -> NodeKind {
    let (outer_sign, middle_sign) = if lower {
        (PortSign::Minus, PortSign::Plus)
    } else {
        (PortSign::Plus, PortSign::Minus)
    };
    let selfconnected = index == 1 || index == n - 1;
    let ports = if selfconnected {
        vec![
            Port::paired(outer_sign, outer),
            Port::paired(outer_sign, outer),
            Port::new(middle_sign, middle),
        ]
    } else {
        vec![Port::new(outer_sign, outer), Port::new(middle_sign, middle)]
    };
    NodeKind::Saddle(Saddle {
        index,
        selfconnected,
        semi_holonomy: selfconnected.then_some(SemiHolonomy {
            minus_trivial: true,
            plus_trivial: None,
        }),
        ports,
    })
}

/// Replace a center by a self-connected saddle with a fresh center inside one
/// lobe: an eddy island next to the old cap.
fn eddy_cap(g: &mut FoliationGraph, rng: &mut ChaCha8Rng) {
    let c = pick(rng, &center_ids(g));
    let e_id = g.incident_edges(&c)[0].id.clone();
    let n = g.dimension;
    let q = g.fresh_id("s");
    let c2 = g.fresh_id("c");
    let a_id = g.fresh_id("e");
    g.nodes.retain(|node| node.id != c);

    let arrives = g.edge(&e_id).unwrap().to == c;
    let e = g.edges.iter_mut().find(|e| e.id == e_id).unwrap();
    let (index, ports, a_edge) = if arrives {
        e.to = q.clone();
        (
            n - 1,
            vec![
                Port::paired(PortSign::Plus, a_id.as_str()),
                Port::paired(PortSign::Plus, a_id.as_str()),
                Port::new(PortSign::Minus, e_id.as_str()),
            ],
            LeafFamily::new(&a_id, &q, &c2, LeafTopology::sphere_label(n)),
        )
    } else {
        e.from = q.clone();
        (
            1,
            vec![
                Port::paired(PortSign::Minus, a_id.as_str()),
                Port::paired(PortSign::Minus, a_id.as_str()),
                Port::new(PortSign::Plus, e_id.as_str()),
            ],
            LeafFamily::new(&a_id, &c2, &q, LeafTopology::sphere_label(n)),
        )
    };
    g.add_node(
        &q,
        NodeKind::Saddle(Saddle {
            index,
            selfconnected: true,
            semi_holonomy: Some(SemiHolonomy {
                minus_trivial: true,
                plus_trivial: None,
            }),
            ports,
        }),
    );
    g.add_node(&c2, NodeKind::Center);
    g.add_edge(a_edge);
}

/// Mark an interior leaf of a family, splitting the edge at a fresh
/// trivial-holonomy waypoint.
fn waypoint_insert(g: &mut FoliationGraph, rng: &mut ChaCha8Rng) {
    let mut candidates: Vec<String> = g
        .edges
        .iter()
        .filter(|e| !e.strong_connection && !e.is_loop())
        .map(|e| e.id.clone())
        .collect();
    candidates.sort();
    if candidates.is_empty() {
        return;
    }
    let e_id = pick(rng, &candidates);
    let w = g.fresh_id("w");
    let f_id = g.fresh_id("e");

    let (v, topology) = {
        let e = g.edge(&e_id).unwrap();
        (e.to.clone(), e.topology.clone())
    };
    g.edges.iter_mut().find(|e| e.id == e_id).unwrap().to = w.clone();
    remap_ports(g, &v, &e_id, &f_id);
    g.add_node(
        &w,
        NodeKind::MarkedLeaf {
            topology: topology.clone(),
            holonomy: HolonomyLabel::Trivial,
            unresolved_boundary: false,
        },
    );
    g.add_edge(LeafFamily::new(&f_id, &w, &v, topology));
}

/// Rename every node and edge with fresh shuffled identifiers, returning the
/// renamed graph and the old-to-new map. The result is isomorphic to the
/// input by construction.
pub fn permute_ids(g: &FoliationGraph, seed: u64) -> (FoliationGraph, BTreeMap<String, String>) {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut node_targets: Vec<String> = (0..g.nodes.len()).map(|i| format!("n{i}")).collect();
    let mut edge_targets: Vec<String> = (0..g.edges.len()).map(|i| format!("x{i}")).collect();
    node_targets.shuffle(&mut rng);
    edge_targets.shuffle(&mut rng);

    let mut map = BTreeMap::new();
    for (node, target) in g.nodes.iter().zip(&node_targets) {
        map.insert(node.id.clone(), target.clone());
    }
    for (edge, target) in g.edges.iter().zip(&edge_targets) {
        map.insert(edge.id.clone(), target.clone());
    }

    let mut out = g.clone();
    // Shuffle presentation order as well: isomorphism must not depend on it.
    out.nodes.shuffle(&mut rng);
    out.edges.shuffle(&mut rng);
    for node in &mut out.nodes {
        node.id = map[&node.id].clone();
        if let NodeKind::Saddle(s) = &mut node.kind {
            for p in &mut s.ports {
                p.edge = map[&p.edge].clone();
            }
        }
    }
    for edge in &mut out.edges {
        edge.id = map[&edge.id].clone();
        edge.from = map[&edge.from].clone();
        edge.to = map[&edge.to].clone();
    }
    (out, map)
}

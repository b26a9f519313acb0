//! Brute-force reference implementations.
//!
//! `iso_oracle` decides graph isomorphism by backtracking over node
//! bijections. It is exponential in the worst case and meant for graphs of a
//! dozen nodes or so; the fast canonical comparison in the core crate is
//! checked against it.

use std::collections::BTreeMap;

use folia_core::graph::{FoliationGraph, NodeKind, PortSign};

/// Everything that must match on a node besides its adjacency.
fn node_key(g: &FoliationGraph, idx: usize) -> String {
    let node = &g.nodes[idx];
    let kind = match &node.kind {
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
    };
    format!("{kind}|deg{}", g.degree(&node.id))
}

/// Multiset of port attributes attached at `node` for the end(s) of `edge`.
fn port_data(g: &FoliationGraph, node: &str, edge: &str) -> Vec<(PortSign, bool)> {
    let mut out = Vec::new();
    if let Some(s) = g.saddle(node) {
        for p in &s.ports {
            if p.edge == edge {
                out.push((p.sign, p.paired));
            }
        }
    }
    out.sort();
    out
}

/// A comparable description of one edge under a node relabelling: endpoints
/// are replaced by the mapped indices. Direction matters only when the graph
/// is transversely orientable.
fn edge_key(g: &FoliationGraph, edge_idx: usize, node_index: &BTreeMap<&str, usize>, map: &[usize]) -> String {
    let e = &g.edges[edge_idx];
    let from = map[node_index[e.from.as_str()]];
    let to = map[node_index[e.to.as_str()]];
    let from_ports = port_data(g, &e.from, &e.id);
    let to_ports = port_data(g, &e.to, &e.id);
    let attrs = format!("{:?}|{}", e.topology, e.strong_connection);
    if g.transversely_orientable {
        format!("{from}>{to}|{from_ports:?}|{to_ports:?}|{attrs}")
    } else {
        let mut ends = [
            format!("{from}|{from_ports:?}"),
            format!("{to}|{to_ports:?}"),
        ];
        ends.sort();
        format!("{}~{}|{attrs}", ends[0], ends[1])
    }
}

/// Edge keys of `g` where endpoint node-indices pass through `map`; for the
/// right-hand graph pass the identity map.
fn edge_multiset(g: &FoliationGraph, map: &[usize]) -> Vec<String> {
    let node_index: BTreeMap<&str, usize> = g
        .nodes
        .iter()
        .enumerate()
        .map(|(i, n)| (n.id.as_str(), i))
        .collect();
    let mut keys: Vec<String> = (0..g.edges.len())
        .map(|i| edge_key(g, i, &node_index, map))
        .collect();
    keys.sort();
    keys
}

/// Decide whether two graphs are isomorphic: equal headers and a bijection of
/// nodes and families preserving every decoration, with edge direction
/// significant only for transversely orientable graphs.
pub fn iso_oracle(a: &FoliationGraph, b: &FoliationGraph) -> bool {
    if (a.dimension, a.closed, a.transversely_orientable, a.has_null_homotopic_transversal)
        != (b.dimension, b.closed, b.transversely_orientable, b.has_null_homotopic_transversal)
    {
        return false;
    }
    if a.nodes.len() != b.nodes.len() || a.edges.len() != b.edges.len() {
        return false;
    }
    let n = a.nodes.len();
    if n == 0 {
        return true;
    }

    let a_keys: Vec<String> = (0..n).map(|i| node_key(a, i)).collect();
    let b_keys: Vec<String> = (0..n).map(|i| node_key(b, i)).collect();
    {
        let mut ka = a_keys.clone();
        let mut kb = b_keys.clone();
        ka.sort();
        kb.sort();
        if ka != kb {
            return false;
        }
    }

    // Undirected adjacency as index lists, for incremental pruning.
    let a_index: BTreeMap<&str, usize> = a
        .nodes
        .iter()
        .enumerate()
        .map(|(i, node)| (node.id.as_str(), i))
        .collect();
    let b_index: BTreeMap<&str, usize> = b
        .nodes
        .iter()
        .enumerate()
        .map(|(i, node)| (node.id.as_str(), i))
        .collect();
    let mut a_adj = vec![vec![]; n];
    for e in &a.edges {
        let (u, v) = (a_index[e.from.as_str()], a_index[e.to.as_str()]);
        a_adj[u].push(v);
        if u != v {
            a_adj[v].push(u);
        }
    }
    // Pairwise edge-count pruning table for b.
    let mut b_pair_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in &b.edges {
        let (u, v) = (b_index[e.from.as_str()], b_index[e.to.as_str()]);
        let key = (u.min(v), u.max(v));
        *b_pair_count.entry(key).or_default() += 1;
    }
    let mut a_pair_count: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in &a.edges {
        let (u, v) = (a_index[e.from.as_str()], a_index[e.to.as_str()]);
        let key = (u.min(v), u.max(v));
        *a_pair_count.entry(key).or_default() += 1;
    }

    let b_identity: Vec<usize> = (0..n).collect();
    let b_edges_sorted = edge_multiset(b, &b_identity);

    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    backtrack(
        a,
        &a_keys,
        &b_keys,
        &a_adj,
        &a_pair_count,
        &b_pair_count,
        &b_edges_sorted,
        &mut map,
        &mut used,
        0,
    )
}

#[allow(clippy::too_many_arguments)]
fn backtrack(
    a: &FoliationGraph,
    a_keys: &[String],
    b_keys: &[String],
    a_adj: &[Vec<usize>],
    a_pair_count: &BTreeMap<(usize, usize), usize>,
    b_pair_count: &BTreeMap<(usize, usize), usize>,
    b_edges_sorted: &[String],
    map: &mut Vec<usize>,
    used: &mut Vec<bool>,
    depth: usize,
) -> bool {
    let n = map.len();
    if depth == n {
        return edge_multiset(a, map) == b_edges_sorted;
    }
    for candidate in 0..n {
        if used[candidate] || a_keys[depth] != b_keys[candidate] {
            continue;
        }
        // Mapped neighbours must be joined by the same number of families.
        let consistent = a_adj[depth].iter().all(|&nb| {
            if nb > depth || map[nb] == usize::MAX {
                return true;
            }
            let a_key = (nb.min(depth), nb.max(depth));
            let b_pair = (map[nb].min(candidate), map[nb].max(candidate));
            a_pair_count.get(&a_key) == b_pair_count.get(&b_pair)
        });
        if !consistent {
            continue;
        }
        map[depth] = candidate;
        used[candidate] = true;
        if backtrack(
            a,
            a_keys,
            b_keys,
            a_adj,
            a_pair_count,
            b_pair_count,
            b_edges_sorted,
            map,
            used,
            depth + 1,
        ) {
            return true;
        }
        map[depth] = usize::MAX;
        used[candidate] = false;
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures;
    use crate::gen::{permute_ids, random_valid_graph};

    #[test]
    fn permuted_copies_are_isomorphic() {
        for seed in 0..10 {
            let g = random_valid_graph(3, 4, seed);
            let (h, _) = permute_ids(&g, seed + 100);
            assert!(iso_oracle(&g, &h), "seed {seed}");
        }
    }

    #[test]
    fn distinct_fixtures_are_not_isomorphic() {
        let all = fixtures::all_named();
        for (i, (name_a, a)) in all.iter().enumerate() {
            for (name_b, b) in all.iter().skip(i + 1) {
                assert!(
                    !iso_oracle(a, b),
                    "{name_a} and {name_b} should be distinguishable"
                );
            }
        }
    }

    #[test]
    fn direction_matters_only_when_orientable() {
        let mut a = fixtures::two_center(2);
        let mut b = fixtures::two_center(2);
        b.edges[0].from = "q".into();
        b.edges[0].to = "p".into();
        // Orientable: p->q vs q->p differ, but swapping node roles is still an
        // isomorphism, so these are equal.
        assert!(iso_oracle(&a, &b));
        // Break the symmetry with distinct endpoints kinds.
        a.nodes[1].kind = NodeKind::StableCircle;
        b.nodes[1].kind = NodeKind::StableCircle;
        assert!(!iso_oracle(&a, &b));
        a.transversely_orientable = false;
        b.transversely_orientable = false;
        assert!(iso_oracle(&a, &b));
    }

    #[test]
    fn decorations_are_compared() {
        let a = fixtures::created_pair_n3();
        let mut b = fixtures::created_pair_n3();
        b.edges.iter_mut().find(|e| e.id == "m").unwrap().strong_connection = false;
        assert!(!iso_oracle(&a, &b));
    }
}

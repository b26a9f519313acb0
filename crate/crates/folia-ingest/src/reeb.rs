//! Sweep construction of the leaf-space graph of the level-set foliation.
//!
//! Vertices are visited in the simulated-simplicity order while the sweep
//! maintains the set of mesh edges the current level crosses, grouped into
//! level components ("arcs"). Regular vertices pass their component through;
//! extrema open and close components; a simple saddle either merges two
//! components or splits one, yielding the {-,-,+} and {-,+,+} port patterns
//! of the graph's saddle nodes. Every arc becomes one leaf family of the
//! output graph, directed from lower to higher field values.

use std::collections::HashMap;

use folia_core::{FoliationGraph, LeafFamily, LeafTopology, NodeKind, Port, PortSign, Saddle};

use crate::critical::{classify_critical, CriticalKind};
use crate::mesh::ScalarMesh;
use crate::IngestError;

fn open_arc(origins: &mut Vec<String>, families: &mut Vec<Option<LeafFamily>>, at: &str) -> usize {
    origins.push(at.to_string());
    families.push(None);
    origins.len() - 1
}

fn close_arc(origins: &[String], families: &mut [Option<LeafFamily>], arc: usize, at: &str) {
    families[arc] = Some(LeafFamily::new(
        format!("e{arc}"),
        origins[arc].clone(),
        at,
        LeafTopology::Circle,
    ));
}

/// Builds the leaf-space graph of the field's level-set foliation.
///
/// Requires [`classify_critical`] to succeed with simple saddles only. The
/// result is a dimension-2, closed, transversely orientable graph whose
/// centers are the extrema (node `v{i}` for mesh vertex i), whose saddles are
/// the PL saddles with three ports signed by side, and whose edges (`e{k}` in
/// order of appearance during the sweep) are all circle-labeled compact
/// families directed along increasing field values. Its first Betti number
/// equals the genus of the mesh.
pub fn build_reeb(mesh: &ScalarMesh) -> Result<FoliationGraph, IngestError> {
    let critical = classify_critical(mesh)?;
    let kind_of: HashMap<usize, CriticalKind> =
        critical.iter().map(|p| (p.vertex, p.kind)).collect();
    let links = mesh.link_cycles()?;
    let order = mesh.sweep_order();
    let mut rank = vec![0usize; mesh.vertex_count()];
    for (r, &v) in order.iter().enumerate() {
        rank[v] = r;
    }
    let key = |a: usize, b: usize| (a.min(b), a.max(b));
    let mut edge_triangles: HashMap<(usize, usize), Vec<usize>> = HashMap::new();
    for (ti, tri) in mesh.triangles.iter().enumerate() {
        for k in 0..3 {
            edge_triangles
                .entry(key(tri[k], tri[(k + 1) % 3]))
                .or_default()
                .push(ti);
        }
    }

    let mut graph = FoliationGraph::new(2);
    // Arc k is the k-th level component the sweep has seen; `origins[k]` is
    // the node it grew out of and `families[k]` its edge record once closed.
    let mut origins: Vec<String> = Vec::new();
    let mut families: Vec<Option<LeafFamily>> = Vec::new();
    let mut active: HashMap<(usize, usize), usize> = HashMap::new();

    for &v in &order {
        let vid = format!("v{v}");
        let fail = |detail: &str| IngestError::SweepInvariant {
            vertex: v,
            detail: detail.to_string(),
        };
        let cycle = &links[v];
        let above: Vec<bool> = cycle.iter().map(|&u| rank[u] > rank[v]).collect();
        // Maximal cyclic runs of equal side, each listing the crossing mesh
        // edges from v into that run.
        let n = above.len();
        let start = (0..n)
            .find(|&i| above[(i + n - 1) % n] != above[i])
            .unwrap_or(0);
        let mut runs: Vec<(bool, Vec<(usize, usize)>)> = Vec::new();
        for k in 0..n {
            let i = (start + k) % n;
            let edge = key(v, cycle[i]);
            match runs.last_mut() {
                Some((side, run)) if *side == above[i] => run.push(edge),
                _ => runs.push((above[i], vec![edge])),
            }
        }
        let lower: Vec<&Vec<(usize, usize)>> = runs
            .iter()
            .filter(|(side, _)| !side)
            .map(|(_, r)| r)
            .collect();
        let upper: Vec<&Vec<(usize, usize)>> = runs
            .iter()
            .filter(|(side, _)| *side)
            .map(|(_, r)| r)
            .collect();

        let arc_of = |active: &HashMap<(usize, usize), usize>,
                      run: &[(usize, usize)]|
         -> Result<usize, IngestError> {
            let first = *active
                .get(&run[0])
                .ok_or_else(|| fail("a crossing edge was never activated"))?;
            if run.iter().any(|e| active.get(e) != Some(&first)) {
                return Err(fail("one local sector spans two level components"));
            }
            Ok(first)
        };

        match kind_of.get(&v) {
            None => {
                if lower.len() != 1 || upper.len() != 1 {
                    return Err(fail("a regular vertex must touch one component per side"));
                }
                let arc = arc_of(&active, lower[0])?;
                for e in lower[0] {
                    active.remove(e);
                }
                for &e in upper[0] {
                    active.insert(e, arc);
                }
            }
            Some(CriticalKind::Minimum) => {
                if !lower.is_empty() || upper.len() != 1 {
                    return Err(fail("a minimum must see its whole link above itself"));
                }
                let arc = open_arc(&mut origins, &mut families, &vid);
                graph.add_node(vid, NodeKind::Center);
                for &e in upper[0] {
                    active.insert(e, arc);
                }
            }
            Some(CriticalKind::Maximum) => {
                if lower.len() != 1 || !upper.is_empty() {
                    return Err(fail("a maximum must see its whole link below itself"));
                }
                let arc = arc_of(&active, lower[0])?;
                for e in lower[0] {
                    active.remove(e);
                }
                close_arc(&origins, &mut families, arc, &vid);
                graph.add_node(vid, NodeKind::Center);
            }
            Some(CriticalKind::Saddle { multiplicity: 1 }) => {
                if lower.len() != 2 || upper.len() != 2 {
                    return Err(fail("a simple saddle must have two sectors per side"));
                }
                let first = arc_of(&active, lower[0])?;
                let second = arc_of(&active, lower[1])?;
                for run in &lower {
                    for e in *run {
                        active.remove(e);
                    }
                }
                let ports;
                if first != second {
                    // Two level components run into the saddle and one leaves.
                    // Surviving crossing edges away from the saddle still
                    // carry the two old arcs and are relabeled wholesale.
                    let (lo, hi) = (first.min(second), first.max(second));
                    close_arc(&origins, &mut families, lo, &vid);
                    close_arc(&origins, &mut families, hi, &vid);
                    let merged = open_arc(&mut origins, &mut families, &vid);
                    for arc in active.values_mut() {
                        if *arc == first || *arc == second {
                            *arc = merged;
                        }
                    }
                    for run in &upper {
                        for &e in *run {
                            active.insert(e, merged);
                        }
                    }
                    ports = vec![
                        Port::new(PortSign::Minus, format!("e{lo}")),
                        Port::new(PortSign::Minus, format!("e{hi}")),
                        Port::new(PortSign::Plus, format!("e{merged}")),
                    ];
                } else {
                    // One level component runs in and two leave. The rising
                    // sectors seed the two successors; crossing edges away
                    // from the saddle still carry the old arc and are
                    // relabeled by flooding out of the first sector.
                    close_arc(&origins, &mut families, first, &vid);
                    let left = open_arc(&mut origins, &mut families, &vid);
                    let right = open_arc(&mut origins, &mut families, &vid);
                    for &e in upper[0] {
                        active.insert(e, left);
                    }
                    for &e in upper[1] {
                        active.insert(e, right);
                    }
                    let mut stack: Vec<(usize, usize)> = upper[0].clone();
                    while let Some(e) = stack.pop() {
                        for &ti in &edge_triangles[&e] {
                            let tri = mesh.triangles[ti];
                            for k in 0..3 {
                                let other = key(tri[k], tri[(k + 1) % 3]);
                                if other == e {
                                    continue;
                                }
                                let Some(&arc) = active.get(&other) else {
                                    continue;
                                };
                                if arc == first {
                                    active.insert(other, left);
                                    stack.push(other);
                                } else if arc == right {
                                    return Err(fail(
                                        "the saddle's rising sectors reconnect; the surface \
                                         cannot be consistently oriented",
                                    ));
                                } else if arc != left {
                                    return Err(fail("flood crossed into a foreign component"));
                                }
                            }
                        }
                    }
                    for arc in active.values_mut() {
                        if *arc == first {
                            *arc = right;
                        }
                    }
                    ports = vec![
                        Port::new(PortSign::Minus, format!("e{first}")),
                        Port::new(PortSign::Plus, format!("e{left}")),
                        Port::new(PortSign::Plus, format!("e{right}")),
                    ];
                }
                graph.add_node(
                    vid,
                    NodeKind::Saddle(Saddle {
                        index: 1,
                        selfconnected: false,
                        semi_holonomy: None,
                        ports,
                    }),
                );
            }
            Some(CriticalKind::Saddle { .. }) => {
                return Err(fail("degenerate saddles cannot be swept"));
            }
        }
    }

    debug_assert!(active.is_empty(), "every crossing edge closes by the top");
    for family in families {
        graph.add_edge(family.expect("the sweep closes every family at a maximum or merge"));
    }
    Ok(graph)
}

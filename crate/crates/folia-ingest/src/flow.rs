//! Discrete gradient flow around singular vertices.

use std::collections::BTreeSet;

use crate::critical::{CriticalKind, CriticalPoint};
use crate::mesh::ScalarMesh;

/// Whether the critical point attracts its whole neighborhood under the
/// discrete gradient (the steepest neighbor step): true exactly when every
/// steepest path started in the 2-ring of `p` runs into `p` -- forward for a
/// maximum, backward for a minimum. Saddles are never stable: points
/// arbitrarily close to one flow past it along the crossing directions.
pub fn stable_test(mesh: &ScalarMesh, p: &CriticalPoint) -> bool {
    let upward = match p.kind {
        CriticalKind::Saddle { .. } => return false,
        CriticalKind::Maximum => true,
        CriticalKind::Minimum => false,
    };
    let adjacency = adjacency(mesh);
    two_ring(&adjacency, p.vertex)
        .into_iter()
        .all(|x| steepest_limit(mesh, &adjacency, x, upward) == p.vertex)
}

fn adjacency(mesh: &ScalarMesh) -> Vec<BTreeSet<usize>> {
    let mut around = vec![BTreeSet::new(); mesh.vertex_count()];
    for tri in &mesh.triangles {
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            around[a].insert(b);
            around[b].insert(a);
        }
    }
    around
}

fn two_ring(adjacency: &[BTreeSet<usize>], v: usize) -> BTreeSet<usize> {
    let mut ring: BTreeSet<usize> = adjacency[v].clone();
    for &u in &adjacency[v] {
        ring.extend(adjacency[u].iter().copied());
    }
    ring.remove(&v);
    ring
}

/// Follows the steepest neighbor (in the simulated-simplicity order) upward
/// or downward until no neighbor continues the climb, and returns the local
/// extremum reached.
fn steepest_limit(mesh: &ScalarMesh, adjacency: &[BTreeSet<usize>], start: usize, upward: bool) -> usize {
    let mut current = start;
    loop {
        let next = if upward {
            adjacency[current]
                .iter()
                .copied()
                .max_by(|&a, &b| {
                    if mesh.is_below(a, b) {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                })
                .filter(|&u| mesh.is_below(current, u))
        } else {
            adjacency[current]
                .iter()
                .copied()
                .min_by(|&a, &b| {
                    if mesh.is_below(a, b) {
                        std::cmp::Ordering::Less
                    } else {
                        std::cmp::Ordering::Greater
                    }
                })
                .filter(|&u| mesh.is_below(u, current))
        };
        match next {
            Some(u) => current = u,
            None => return current,
        }
    }
}

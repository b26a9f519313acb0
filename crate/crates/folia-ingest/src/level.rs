//! Direct level-set component counting, the sweep's independent cross-check.

use std::collections::{BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;

use crate::mesh::ScalarMesh;
use crate::IngestError;

/// Counts the connected components of the level set `{field = t}` by labeling
/// the triangles the level crosses and joining them across crossed edges.
///
/// This never looks at the sweep machinery: it is a brute-force recount of
/// one level, useful as an oracle against the graph the sweep produced (the
/// count equals the number of graph edges whose endpoint values straddle t).
/// A level outside the field range has zero components. The mesh is borrowed
/// immutably, so counts for distinct levels may run concurrently.
///
/// The level must avoid every vertex value; otherwise the level set is a
/// bouquet rather than a disjoint union of circles and the call fails with
/// [`IngestError::LevelThroughVertex`].
pub fn level_component_count(mesh: &ScalarMesh, t: f64) -> Result<usize, IngestError> {
    if let Some(vertex) = mesh.field.iter().position(|&v| v == t) {
        return Err(IngestError::LevelThroughVertex { vertex, value: t });
    }
    let crossed: Vec<usize> = (0..mesh.triangle_count())
        .filter(|&ti| {
            let values = mesh.triangles[ti].map(|v| mesh.field[v]);
            let lo = values.iter().copied().fold(f64::INFINITY, f64::min);
            let hi = values.iter().copied().fold(f64::NEG_INFINITY, f64::max);
            lo < t && t < hi
        })
        .collect();
    let mut joined = UnionFind::new(mesh.triangle_count());
    let mut first_owner: HashMap<(usize, usize), usize> = HashMap::new();
    for &ti in &crossed {
        let tri = mesh.triangles[ti];
        for k in 0..3 {
            let (a, b) = (tri[k], tri[(k + 1) % 3]);
            if (mesh.field[a] - t) * (mesh.field[b] - t) < 0.0 {
                if let Some(tj) = first_owner.insert((a.min(b), a.max(b)), ti) {
                    joined.union(ti, tj);
                }
            }
        }
    }
    let roots: BTreeSet<usize> = crossed.iter().map(|&ti| joined.find(ti)).collect();
    Ok(roots.len())
}

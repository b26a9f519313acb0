//! Piecewise-linear critical-point classification of the sampled field.

use crate::mesh::ScalarMesh;
use crate::IngestError;

/// Local shape of the field around a critical vertex, read off from the
/// number of sign changes of `field(neighbor) - field(vertex)` around the
/// vertex link: 0 changes make an extremum, 2 a regular vertex (not
/// critical), and 2 + 2m a saddle of multiplicity m.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CriticalKind {
    Minimum,
    Maximum,
    Saddle { multiplicity: u32 },
}

impl CriticalKind {
    pub fn is_extremum(self) -> bool {
        matches!(self, CriticalKind::Minimum | CriticalKind::Maximum)
    }

    pub fn is_saddle(self) -> bool {
        matches!(self, CriticalKind::Saddle { .. })
    }
}

/// A critical vertex of the sampled field.
#[derive(Debug, Clone, PartialEq)]
pub struct CriticalPoint {
    pub vertex: usize,
    pub kind: CriticalKind,
    pub value: f64,
}

/// Classifies every vertex of the mesh and returns the critical ones sorted
/// ascending in the simulated-simplicity order; regular vertices are omitted.
///
/// The census always satisfies `#minima + #maxima - sum of multiplicities =
/// Euler characteristic`. A saddle of multiplicity two or more is refused
/// with [`IngestError::DegenerateSaddle`] (naming the lowest such vertex):
/// the level-set foliation of such a field has a worse-than-simple tangency,
/// which the downstream graph model deliberately excludes. [`split_field`]
/// usually separates such a vertex into simple saddles.
pub fn classify_critical(mesh: &ScalarMesh) -> Result<Vec<CriticalPoint>, IngestError> {
    mesh.validate()?;
    let links = mesh.link_cycles()?;
    let mut points = Vec::new();
    for (v, cycle) in links.iter().enumerate() {
        let above: Vec<bool> = cycle.iter().map(|&u| mesh.is_below(v, u)).collect();
        let changes = (0..above.len())
            .filter(|&i| above[i] != above[(i + 1) % above.len()])
            .count();
        debug_assert!(changes % 2 == 0, "cyclic sign changes come in pairs");
        let kind = match changes {
            0 if above[0] => Some(CriticalKind::Minimum),
            0 => Some(CriticalKind::Maximum),
            2 => None,
            c => Some(CriticalKind::Saddle {
                multiplicity: ((c - 2) / 2) as u32,
            }),
        };
        if let Some(kind) = kind {
            points.push(CriticalPoint {
                vertex: v,
                kind,
                value: mesh.field[v],
            });
        }
    }
    points.sort_by(|p, q| {
        p.value
            .total_cmp(&q.value)
            .then_with(|| p.vertex.cmp(&q.vertex))
    });
    if let Some(p) = points.iter().find(
        |p| matches!(p.kind, CriticalKind::Saddle { multiplicity } if multiplicity > 1),
    ) {
        let CriticalKind::Saddle { multiplicity } = p.kind else {
            unreachable!()
        };
        return Err(IngestError::DegenerateSaddle {
            vertex: p.vertex,
            multiplicity,
        });
    }
    debug_assert_eq!(
        points
            .iter()
            .map(|p| match p.kind {
                CriticalKind::Minimum | CriticalKind::Maximum => 1,
                CriticalKind::Saddle { multiplicity } => -(multiplicity as i64),
            })
            .sum::<i64>(),
        mesh.euler_characteristic(),
        "critical census must balance the Euler characteristic"
    );
    Ok(points)
}

/// Returns a copy of the mesh whose field is perturbed by an index-scaled
/// epsilon: value i gains `1e-9 * (max - min) * i`. The perturbation is far
/// below any honest feature scale but separates the colliding link values
/// that make most degenerate saddles, so rerunning [`classify_critical`] on
/// the result usually yields only simple ones.
pub fn split_field(mesh: &ScalarMesh) -> ScalarMesh {
    let lo = mesh.field.iter().copied().fold(f64::INFINITY, f64::min);
    let hi = mesh.field.iter().copied().fold(f64::NEG_INFINITY, f64::max);
    let step = if hi > lo { 1e-9 * (hi - lo) } else { 0.0 };
    let field = mesh
        .field
        .iter()
        .enumerate()
        .map(|(i, v)| v + step * i as f64)
        .collect();
    ScalarMesh {
        field,
        ..mesh.clone()
    }
}

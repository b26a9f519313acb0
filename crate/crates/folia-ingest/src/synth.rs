//! Synthetic fixture meshes: parametric sphere and torus grids, a two-bump
//! sphere, and a small bipyramid carrying a monkey saddle.

use std::f64::consts::PI;

use crate::mesh::ScalarMesh;

/// Unit sphere sampled on a longitude/latitude grid: triangle fans at the two
/// poles, consistently split quads between. The field is the height z, whose
/// only critical points are the poles. Requires `slices >= 3` longitudes and
/// `stacks >= 2` latitude bands; the north pole is vertex 0, the south pole
/// the last vertex.
pub fn uv_sphere(slices: usize, stacks: usize) -> ScalarMesh {
    assert!(slices >= 3 && stacks >= 2, "grid too coarse for a sphere");
    let mut vertices = vec![[0.0, 0.0, 1.0]];
    for j in 1..stacks {
        let phi = PI * j as f64 / stacks as f64;
        for i in 0..slices {
            let theta = 2.0 * PI * i as f64 / slices as f64;
            vertices.push([phi.sin() * theta.cos(), phi.sin() * theta.sin(), phi.cos()]);
        }
    }
    vertices.push([0.0, 0.0, -1.0]);
    let south = vertices.len() - 1;
    let at = |j: usize, i: usize| 1 + (j - 1) * slices + (i % slices);
    let mut triangles = Vec::new();
    for i in 0..slices {
        triangles.push([0, at(1, i), at(1, i + 1)]);
    }
    for j in 1..stacks - 1 {
        for i in 0..slices {
            triangles.push([at(j, i + 1), at(j, i), at(j + 1, i)]);
            triangles.push([at(j, i + 1), at(j + 1, i), at(j + 1, i + 1)]);
        }
    }
    for i in 0..slices {
        triangles.push([south, at(stacks - 1, i + 1), at(stacks - 1, i)]);
    }
    let field = vertices.iter().map(|p| p[2]).collect();
    ScalarMesh {
        vertices,
        triangles,
        field,
    }
}

/// Torus of revolution standing on edge (core circle of radius `ring_radius`
/// in the x-z plane, tube of radius `tube_radius`), sampled on a sweep x tube
/// grid. The field is the height z, which at reasonable resolutions has
/// exactly four simple critical points: bottom and top of the outer equator
/// (the extrema) and of the inner one (the saddles). Vertex `(j, i)` (sweep
/// angle j, tube angle i) has index `j * tube + i`.
pub fn torus(sweep: usize, tube: usize, ring_radius: f64, tube_radius: f64) -> ScalarMesh {
    assert!(sweep >= 3 && tube >= 3, "grid too coarse for a torus");
    assert!(
        ring_radius > tube_radius && tube_radius > 0.0,
        "the tube must be thinner than the ring"
    );
    let mut vertices = Vec::with_capacity(sweep * tube);
    for j in 0..sweep {
        let phi = 2.0 * PI * j as f64 / sweep as f64;
        for i in 0..tube {
            let theta = 2.0 * PI * i as f64 / tube as f64;
            let w = ring_radius + tube_radius * theta.cos();
            vertices.push([w * phi.cos(), tube_radius * theta.sin(), w * phi.sin()]);
        }
    }
    let at = |j: usize, i: usize| (j % sweep) * tube + (i % tube);
    let mut triangles = Vec::new();
    for j in 0..sweep {
        for i in 0..tube {
            triangles.push([at(j, i + 1), at(j, i), at(j + 1, i)]);
            triangles.push([at(j, i + 1), at(j + 1, i), at(j + 1, i + 1)]);
        }
    }
    let field = vertices.iter().map(|p| p[2]).collect();
    ScalarMesh {
        vertices,
        triangles,
        field,
    }
}

/// A [`uv_sphere`] whose height field gains two smooth bumps on the northern
/// hemisphere (amplitude 0.5, width 0.35 rad, centers at colatitude 0.9 rad
/// and azimuths 0 and pi). The result has one minimum at the south pole, one
/// maximum per bump, and a simple saddle on the ridge at the north pole.
pub fn bumpy_sphere(slices: usize, stacks: usize) -> ScalarMesh {
    const AMPLITUDE: f64 = 0.5;
    const WIDTH: f64 = 0.35;
    const COLATITUDE: f64 = 0.9;
    let mut mesh = uv_sphere(slices, stacks);
    let centers = [
        [COLATITUDE.sin(), 0.0, COLATITUDE.cos()],
        [-COLATITUDE.sin(), 0.0, COLATITUDE.cos()],
    ];
    for (value, p) in mesh.field.iter_mut().zip(&mesh.vertices) {
        for c in &centers {
            let dot = p[0] * c[0] + p[1] * c[1] + p[2] * c[2];
            let distance = dot.clamp(-1.0, 1.0).acos();
            *value += AMPLITUDE * (-distance * distance / (2.0 * WIDTH * WIDTH)).exp();
        }
    }
    mesh
}

/// Hexagonal bipyramid (eight vertices, twelve triangles) whose authored
/// field has a multiplicity-2 "monkey" saddle at the upper apex, vertex 6:
/// the equatorial ring alternates above/below it three times. The lower apex,
/// vertex 7, is the global minimum. Ring vertex 4 sits barely above the apex,
/// so the index-scaled perturbation of
/// [`split_field`](crate::critical::split_field) lifts the apex past it and
/// resolves the saddle into a simple one.
pub fn monkey_saddle_bipyramid() -> ScalarMesh {
    let mut vertices = Vec::new();
    for k in 0..6 {
        let a = PI * k as f64 / 3.0;
        vertices.push([a.cos(), a.sin(), 0.0]);
    }
    vertices.push([0.0, 0.0, 1.0]);
    vertices.push([0.0, 0.0, -1.0]);
    let mut triangles = Vec::new();
    for k in 0..6 {
        triangles.push([6, k, (k + 1) % 6]);
        triangles.push([7, (k + 1) % 6, k]);
    }
    let field = vec![1.0, -1.0, 1.0, -1.0, 4e-9, -1.0, 0.0, -2.0];
    ScalarMesh {
        vertices,
        triangles,
        field,
    }
}

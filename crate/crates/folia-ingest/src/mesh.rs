//! Triangulated closed surfaces carrying a per-vertex scalar field.

use std::collections::{BTreeMap, BTreeSet, HashMap};

use petgraph::unionfind::UnionFind;

use crate::IngestError;

/// A scalar field sampled at the vertices of a triangulated surface.
///
/// The triangulation must be a closed, connected, consistently wound
/// 2-manifold complex; [`ScalarMesh::validate`] checks every condition and
/// names the offending simplex when one fails. Field values need not be
/// distinct: every comparison goes through [`ScalarMesh::is_below`], which
/// breaks ties by vertex index, so an arbitrary field behaves like a generic
/// one.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarMesh {
    /// Vertex positions (unitless).
    pub vertices: Vec<[f64; 3]>,
    /// Counterclockwise vertex-index triples.
    pub triangles: Vec<[usize; 3]>,
    /// One field value per vertex.
    pub field: Vec<f64>,
}

impl ScalarMesh {
    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn triangle_count(&self) -> usize {
        self.triangles.len()
    }

    /// Number of distinct undirected edges.
    pub fn edge_count(&self) -> usize {
        let mut edges = BTreeSet::new();
        for tri in &self.triangles {
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                edges.insert((a.min(b), a.max(b)));
            }
        }
        edges.len()
    }

    /// Euler characteristic V - E + F of the complex.
    pub fn euler_characteristic(&self) -> i64 {
        self.vertex_count() as i64 - self.edge_count() as i64 + self.triangle_count() as i64
    }

    /// Simulated-simplicity order: `a` strictly precedes `b` when its field
    /// value is smaller, with equal values ordered by vertex index.
    pub fn is_below(&self, a: usize, b: usize) -> bool {
        match self.field[a].total_cmp(&self.field[b]) {
            std::cmp::Ordering::Less => true,
            std::cmp::Ordering::Greater => false,
            std::cmp::Ordering::Equal => a < b,
        }
    }

    /// Every vertex index, sorted ascending in the [`ScalarMesh::is_below`]
    /// order.
    pub fn sweep_order(&self) -> Vec<usize> {
        let mut order: Vec<usize> = (0..self.vertex_count()).collect();
        order.sort_by(|&a, &b| {
            self.field[a]
                .total_cmp(&self.field[b])
                .then_with(|| a.cmp(&b))
        });
        order
    }

    /// The neighbors of every vertex in cyclic link order, following the
    /// triangle winding and starting from the smallest neighbor index.
    ///
    /// Fails with [`IngestError::BrokenLink`] when some link is not a single
    /// cycle.
    pub fn link_cycles(&self) -> Result<Vec<Vec<usize>>, IngestError> {
        let n = self.vertex_count();
        let mut successor: Vec<HashMap<usize, usize>> = vec![HashMap::new(); n];
        for tri in &self.triangles {
            for k in 0..3 {
                let (v, b, c) = (tri[k], tri[(k + 1) % 3], tri[(k + 2) % 3]);
                if successor[v].insert(b, c).is_some() {
                    return Err(IngestError::BrokenLink { vertex: v });
                }
            }
        }
        let mut cycles = Vec::with_capacity(n);
        for (v, around) in successor.iter().enumerate() {
            let broken = || IngestError::BrokenLink { vertex: v };
            let start = *around.keys().min().ok_or_else(broken)?;
            let mut cycle = vec![start];
            let mut current = *around.get(&start).ok_or_else(broken)?;
            while current != start {
                if cycle.len() > around.len() {
                    return Err(broken());
                }
                cycle.push(current);
                current = *around.get(&current).ok_or_else(broken)?;
            }
            if cycle.len() != around.len() {
                return Err(broken());
            }
            cycles.push(cycle);
        }
        Ok(cycles)
    }

    /// Checks every structural invariant: the field carries one finite value
    /// per vertex, every edge lies in exactly two consistently wound
    /// triangles, every vertex link is a single cycle, and the complex is
    /// connected.
    pub fn validate(&self) -> Result<(), IngestError> {
        if self.field.len() != self.vertices.len() {
            return Err(IngestError::FieldLength {
                vertices: self.vertices.len(),
                values: self.field.len(),
            });
        }
        if let Some(v) = self.field.iter().position(|x| !x.is_finite()) {
            return Err(IngestError::NonFinite { vertex: v });
        }
        if self.triangles.is_empty() {
            return Err(IngestError::Empty);
        }
        let n = self.vertex_count();
        for (index, tri) in self.triangles.iter().enumerate() {
            let [a, b, c] = *tri;
            if a >= n || b >= n || c >= n || a == b || b == c || a == c {
                return Err(IngestError::BadTriangle { index, a, b, c });
            }
        }
        let mut undirected: BTreeMap<(usize, usize), usize> = BTreeMap::new();
        for tri in &self.triangles {
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                *undirected.entry((a.min(b), a.max(b))).or_insert(0) += 1;
            }
        }
        for (&(a, b), &count) in &undirected {
            if count != 2 {
                return Err(IngestError::OpenEdge { a, b, count });
            }
        }
        let mut directed = BTreeSet::new();
        for tri in &self.triangles {
            for k in 0..3 {
                let (a, b) = (tri[k], tri[(k + 1) % 3]);
                if !directed.insert((a, b)) {
                    return Err(IngestError::InconsistentWinding { a, b });
                }
            }
        }
        self.link_cycles()?;
        let mut components = UnionFind::new(n);
        for &(a, b) in undirected.keys() {
            components.union(a, b);
        }
        let root = components.find(0);
        if let Some(v) = (0..n).find(|&v| components.find(v) != root) {
            return Err(IngestError::Disconnected { vertex: v });
        }
        Ok(())
    }
}

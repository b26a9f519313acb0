//! Mesh ingestion: from a scalar field on a triangulated closed surface to a
//! decorated leaf-space graph.
//!
//! The pipeline is piecewise-linear Morse theory over a simulated-simplicity
//! order (field values tie-broken by vertex index, so every input is generic):
//! [`classify_critical`] finds the tangencies of the level-set foliation by
//! counting sign changes around vertex links, [`build_reeb`] sweeps the levels
//! and records their components as a dimension-2 [`folia_core::FoliationGraph`],
//! [`level_component_count`] recounts a single level by direct triangle
//! labeling as an independent cross-check, and [`stable_test`] probes whether
//! the discrete gradient flow near a singular vertex converges to it.
//!
//! Meshes come from the [`synth`] builders or from ASCII OFF files with a
//! one-value-per-line field sidecar ([`off`]).

pub mod critical;
pub mod flow;
pub mod level;
pub mod mesh;
pub mod off;
pub mod reeb;
pub mod synth;

pub use critical::{classify_critical, split_field, CriticalKind, CriticalPoint};
pub use flow::stable_test;
pub use level::level_component_count;
pub use mesh::ScalarMesh;
pub use off::{load_mesh, mesh_from_text, mesh_to_text, save_mesh};
pub use reeb::build_reeb;

use thiserror::Error;

/// Failure modes of mesh loading, structural validation, classification and
/// the level-set sweep.
#[derive(Debug, Error)]
pub enum IngestError {
    /// Underlying file I/O failure.
    #[error("{path}: {source}")]
    Io {
        path: String,
        #[source]
        source: std::io::Error,
    },
    /// Malformed OFF or field file.
    #[error("{file}:{line}: {message}")]
    Format {
        file: String,
        line: usize,
        message: String,
    },
    /// The mesh has no triangles at all.
    #[error("mesh has no triangles")]
    Empty,
    /// A triangle repeats a vertex or references one that does not exist.
    #[error("triangle {index} ({a}, {b}, {c}) repeats a vertex or references one that does not exist")]
    BadTriangle {
        index: usize,
        a: usize,
        b: usize,
        c: usize,
    },
    /// An edge does not lie in exactly two triangles, so the complex is not a
    /// closed surface.
    #[error("edge ({a}, {b}) lies in {count} triangle(s); every edge of a closed surface lies in exactly 2")]
    OpenEdge { a: usize, b: usize, count: usize },
    /// Two triangles traverse an edge in the same direction; the triangulation
    /// is not consistently oriented.
    #[error("edge ({a}, {b}) is traversed twice in the same direction; the triangles are not wound consistently")]
    InconsistentWinding { a: usize, b: usize },
    /// The link of a vertex is not a single cycle (pinch point, isolated
    /// vertex, or worse).
    #[error("the link of vertex {vertex} is not a single cycle")]
    BrokenLink { vertex: usize },
    /// The mesh has more than one connected component.
    #[error("mesh is disconnected: vertex {vertex} cannot be reached from vertex 0")]
    Disconnected { vertex: usize },
    /// The field does not carry exactly one value per vertex.
    #[error("field carries {values} value(s) for {vertices} vertices")]
    FieldLength { vertices: usize, values: usize },
    /// A field value is NaN or infinite.
    #[error("field value at vertex {vertex} is not finite")]
    NonFinite { vertex: usize },
    /// The field has a saddle of multiplicity two or more, which the sweep
    /// refuses to model; perturbing the field (see
    /// [`split_field`]) separates most such vertices into simple saddles.
    #[error("vertex {vertex} is a degenerate saddle of multiplicity {multiplicity}; split the field or refine the sampling")]
    DegenerateSaddle { vertex: usize, multiplicity: u32 },
    /// A query level coincides exactly with a vertex value, so its level set
    /// is not a disjoint union of circles.
    #[error("level {value} passes exactly through vertex {vertex}; nudge the level and retry")]
    LevelThroughVertex { vertex: usize, value: f64 },
    /// The sweep reached a state that is impossible on a valid oriented
    /// closed surface.
    #[error("level-set sweep failed at vertex {vertex}: {detail}")]
    SweepInvariant { vertex: usize, detail: String },
}

//! Decorated leaf-space graphs for singular codimension-one foliations.
//!
//! A foliation of a closed n-manifold whose singularities are isolated centers
//! and saddles (or circles of stable singular points) is recorded here as a
//! finite graph: nodes are singularities and distinguished leaves, edges are
//! one-parameter families of diffeomorphic leaves. The crate provides the data
//! model ([`graph`]), structural validation ([`validate`]), summary queries
//! ([`queries`]), and exact canonical comparison of graphs up to renaming
//! ([`iso`]).

pub mod error;
pub mod graph;
pub mod iso;
pub mod queries;
pub mod validate;

pub use error::GraphError;
pub use graph::{
    FoliationGraph, HolonomyLabel, LeafFamily, LeafTopology, Node, NodeId, NodeKind, Port,
    PortSign, Saddle, SemiHolonomy,
};
pub use iso::{canonical_form, graphs_equal};
pub use queries::{counts, index_multiset, Counts, IndexEntry};
pub use validate::{validate, Severity, ValidationReport, Violation};

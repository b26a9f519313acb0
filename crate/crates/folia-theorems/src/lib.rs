//! Decision procedures over foliation graphs.
//!
//! Each checker inspects a validated [`folia_core::FoliationGraph`] and
//! reports what the underlying closed manifold and foliation can be: a
//! sphere recognized from its stable singularities or by cancelling trivial
//! center-saddle couples, a three-critical-point manifold, an all-compact
//! foliation classified by its leaf space, or a graph carrying Novikov-type
//! regions of open leaves. Checkers return a [`Verdict`] with a certificate
//! (an elimination trace or witness ids) when the question has an answer,
//! and a [`TheoremError`] when the graph lies outside the statement's regime
//! or contradicts its conclusion outright.
//!
//! All checkers are pure functions over immutable graphs and may run
//! concurrently on the same input.

pub mod compactness;
pub mod leaf_space;
pub mod sphere;

pub use compactness::{haefliger_report, novikov_dichotomy};
pub use leaf_space::{
    classify_leaf_space, closed_transversal_exists, TransversalReport, TransversalWitness,
};
pub use sphere::{center_saddle_decision, reeb_sphere_check};

use folia_arrangements::ArrangementError;
use folia_core::NodeId;
use folia_surgery::{MoveTrace, SurgeryError};
use thiserror::Error;

/// What sits over an endpoint of an interval-shaped leaf space.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum EndpointKind {
    /// A boundary component of the manifold, or a leaf whose far side is
    /// declared unresolved by the author.
    BoundaryLeaf,
    /// A center: nearby leaves are spheres collapsing onto a point.
    StableSingularity,
    /// A circle of stable singular points the nearby leaves collapse onto.
    StableCircle,
    /// A one-sided leaf with order-two holonomy; the interval closes up
    /// through it in the orbifold sense.
    Z2Leaf,
}

/// The quotient space of leaves, in the regime where every leaf is compact
/// and no saddles are present.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LeafSpaceShape {
    /// Closed manifold, nonsingular transversely orientable foliation: the
    /// leaves are the fibers of a fibration over the circle.
    Circle,
    /// A segment; the ends record what the leaves degenerate onto.
    Interval { end0: EndpointKind, end1: EndpointKind },
    /// The same segment picture on a graph without a transverse orientation:
    /// at least one end is folded by a one-sided leaf.
    OrbifoldInterval { end0: EndpointKind, end1: EndpointKind },
}

/// Outcome of a checker, together with its certificate.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Verdict {
    /// The graph reduces to the round two-center picture: the manifold is
    /// homeomorphic to a sphere. The trace lists the cancellations used.
    Sphere { trace: MoveTrace },
    /// The graph reduces to two centers and one middle-index saddle: the
    /// manifold admits a function with exactly three nondegenerate critical
    /// points.
    EellsKuiper {
        saddle: NodeId,
        index: u32,
        trace: MoveTrace,
    },
    /// Nonsingular circle leaf space: the foliation fibers over the circle.
    FibrationOverCircle,
    /// Every leaf is compact.
    AllCompact,
    /// A region of open leaves accumulating on a compact leaf is present;
    /// the witness names the node or family certifying it.
    NovikovPresent { witness: String },
    /// The graph is stuck in a state the statement's hypotheses exclude.
    Inconclusive { reason: String },
    /// The graph does not satisfy the statement's preconditions.
    PreconditionFailed { reason: String },
}

impl Verdict {
    /// Stable machine-readable tag of the verdict, independent of its
    /// certificate payload.
    pub fn tag(&self) -> &'static str {
        match self {
            Verdict::Sphere { .. } => "sphere",
            Verdict::EellsKuiper { .. } => "eells_kuiper",
            Verdict::FibrationOverCircle => "fibration_over_circle",
            Verdict::AllCompact => "all_compact",
            Verdict::NovikovPresent { .. } => "novikov_present",
            Verdict::Inconclusive { .. } => "inconclusive",
            Verdict::PreconditionFailed { .. } => "precondition_failed",
        }
    }

    /// The elimination trace backing the verdict, when it carries one.
    pub fn trace(&self) -> Option<&MoveTrace> {
        match self {
            Verdict::Sphere { trace } | Verdict::EellsKuiper { trace, .. } => Some(trace),
            _ => None,
        }
    }
}

/// Failures of the decision procedures.
#[derive(Debug, Error)]
pub enum TheoremError {
    /// The graph is outside the regime the procedure covers.
    #[error("precondition failed: {reason}")]
    Precondition { reason: String },
    /// The graph satisfies the hypotheses but contradicts the conclusion:
    /// no foliation of the claimed kind can produce it.
    #[error("model inconsistency: {clause}")]
    ModelInconsistency { clause: String },
    #[error(transparent)]
    Arrangement(#[from] ArrangementError),
    #[error(transparent)]
    Surgery(#[from] SurgeryError),
}

/// Structural stability of a nondegenerate one-form singularity: the germ of
/// index `l` in dimension `n` is stable under perturbation exactly when the
/// index avoids the two fragile values 2 and n−2.
pub fn wagneur_stable(n: u32, l: u32) -> bool {
    assert!(l <= n, "index {l} exceeds dimension {n}");
    l != 2 && l != n - 2
}

/// Whether a closed n-manifold can admit a function with exactly three
/// nondegenerate critical points: only in dimensions 2, 4, 8 and 16.
pub fn eells_kuiper_admissible(n: u32) -> bool {
    matches!(n, 2 | 4 | 8 | 16)
}

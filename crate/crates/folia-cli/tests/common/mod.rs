//! Shared helpers for the CLI integration tests: the committed fixture
//! corpus roster and the one authored fixture that does not live in the
//! test kit.

// Each integration-test binary compiles its own copy and uses its own slice
// of these helpers.
#![allow(dead_code)]

use std::path::PathBuf;

use folia_core::{
    FoliationGraph, HolonomyLabel, LeafFamily, LeafTopology, Node, NodeKind, Port, PortSign,
    Saddle,
};
use folia_testkit::fixtures;

/// Directory of committed `.fgr` fixtures (regenerated by the ignored test in
/// `fixture_files.rs`).
pub fn fixtures_dir() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("fixtures")
}

pub fn fixture_path(name: &str) -> PathBuf {
    fixtures_dir().join(format!("{name}.fgr"))
}

/// A trivial couple whose cancellation is blocked: the center `m1` pairs
/// with saddle `q` through one of the doubled minus ports, but cancelling
/// them would have to splice the torus family `e2` onto the sphere family
/// `e3`, which carry different leaf types. The sibling center `s` sits at the
/// odd plus port and its double-separatrix elimination is blocked for the
/// same reason, so every strategy is stuck at 2 centers and 1 saddle.
pub fn blocked_couple_n3() -> FoliationGraph {
    FoliationGraph {
        dimension: 3,
        closed: true,
        transversely_orientable: true,
        has_null_homotopic_transversal: false,
        nodes: vec![
            Node {
                id: "s".into(),
                kind: NodeKind::Center,
            },
            Node {
                id: "q".into(),
                kind: NodeKind::Saddle(Saddle {
                    index: 1,
                    selfconnected: false,
                    semi_holonomy: None,
                    ports: vec![
                        Port::new(PortSign::Minus, "e1"),
                        Port::new(PortSign::Minus, "e2"),
                        Port::new(PortSign::Plus, "e3"),
                    ],
                }),
            },
            Node {
                id: "m1".into(),
                kind: NodeKind::Center,
            },
            Node {
                id: "L".into(),
                kind: NodeKind::MarkedLeaf {
                    topology: LeafTopology::Torus,
                    holonomy: HolonomyLabel::Unilateral,
                    unresolved_boundary: true,
                },
            },
        ],
        edges: vec![
            LeafFamily::new("e1", "m1", "q", LeafTopology::Sphere(2)),
            LeafFamily::new("e2", "L", "q", LeafTopology::Torus),
            LeafFamily::new("e3", "q", "s", LeafTopology::Sphere(2)),
        ],
    }
}

/// Every committed graph fixture with its builder: the full test-kit roster
/// plus the authored blocked couple.
pub fn roster() -> Vec<(&'static str, FoliationGraph)> {
    let mut all = fixtures::all_named();
    all.push(("blocked_couple_n3", blocked_couple_n3()));
    all
}

//! Hand-built reference graphs used across the workspace tests.
//!
//! Each fixture is a small foliation graph whose geometric meaning is spelled
//! out in its doc comment. The `.fgr` files under the CLI crate's `fixtures/`
//! directory mirror these builders; drift tests keep the two in sync.

use folia_core::graph::{
    FoliationGraph, HolonomyLabel, LeafFamily, LeafTopology, NodeKind, Port, PortSign, Saddle,
    SemiHolonomy,
};

fn leaf(topology: LeafTopology, holonomy: HolonomyLabel) -> NodeKind {
    NodeKind::MarkedLeaf {
        topology,
        holonomy,
        unresolved_boundary: false,
    }
}

/// The round foliation of the n-sphere: two centers joined by one family of
/// sphere leaves.
pub fn two_center(n: u32) -> FoliationGraph {
    let mut g = FoliationGraph::new(n);
    g.add_node("p", NodeKind::Center);
    g.add_node("q", NodeKind::Center);
    g.add_edge(LeafFamily::new(
        "e0",
        "p",
        "q",
        LeafTopology::sphere_label(n),
    ));
    g
}

/// Height function on the 2-torus standing on end: minimum `p`, two saddles
/// `q` (lower) and `r` (upper), maximum `s`. Between the saddles the level
/// circles come in two parallel families.
pub fn torus_height() -> FoliationGraph {
    let mut g = FoliationGraph::new(2);
    g.add_node("p", NodeKind::Center);
    g.add_node(
        "q",
        NodeKind::Saddle(Saddle {
            index: 1,
            selfconnected: false,
            semi_holonomy: None,
            ports: vec![
                Port::new(PortSign::Minus, "e1"),
                Port::new(PortSign::Plus, "e2"),
                Port::new(PortSign::Plus, "e3"),
            ],
        }),
    );
    g.add_node(
        "r",
        NodeKind::Saddle(Saddle {
            index: 1,
            selfconnected: false,
            semi_holonomy: None,
            ports: vec![
                Port::new(PortSign::Minus, "e2"),
                Port::new(PortSign::Minus, "e3"),
                Port::new(PortSign::Plus, "e4"),
            ],
        }),
    );
    g.add_node("s", NodeKind::Center);
    g.add_edge(LeafFamily::new("e1", "p", "q", LeafTopology::Circle));
    g.add_edge(LeafFamily::new("e2", "q", "r", LeafTopology::Circle));
    g.add_edge(LeafFamily::new("e3", "q", "r", LeafTopology::Circle));
    g.add_edge(LeafFamily::new("e4", "r", "s", LeafTopology::Circle));
    g
}

/// A sphere with one extra bump: minimum `s`, one splitting saddle `q`, two
/// maxima `m1`, `m2`. One center-saddle elimination turns it into the round
/// two-center sphere.
pub fn bumpy_sphere() -> FoliationGraph {
    let mut g = FoliationGraph::new(2);
    g.add_node("s", NodeKind::Center);
    g.add_node(
        "q",
        NodeKind::Saddle(Saddle {
            index: 1,
            selfconnected: false,
            semi_holonomy: None,
            ports: vec![
                Port::new(PortSign::Minus, "e3"),
                Port::new(PortSign::Plus, "e1"),
                Port::new(PortSign::Plus, "e2"),
            ],
        }),
    );
    g.add_node("m1", NodeKind::Center);
    g.add_node("m2", NodeKind::Center);
    g.add_edge(LeafFamily::new("e1", "q", "m1", LeafTopology::Circle));
    g.add_edge(LeafFamily::new("e2", "q", "m2", LeafTopology::Circle));
    g.add_edge(LeafFamily::new("e3", "s", "q", LeafTopology::Circle));
    g
}

/// Two centers separated by a single middle-index saddle: the suspicious
/// configuration in the twisted-sphere decision. Requires `2 <= l <= n-2`.
pub fn middle_saddle(n: u32, l: u32) -> FoliationGraph {
    assert!(n >= 4 && l >= 2 && l <= n - 2, "l must be a middle index");
    let mut g = FoliationGraph::new(n);
    g.add_node("p1", NodeKind::Center);
    g.add_node(
        "q",
        NodeKind::Saddle(Saddle {
            index: l,
            selfconnected: false,
            semi_holonomy: None,
            ports: vec![
                Port::new(PortSign::Minus, "e1"),
                Port::new(PortSign::Plus, "e2"),
            ],
        }),
    );
    g.add_node("p2", NodeKind::Center);
    g.add_edge(LeafFamily::new("e1", "p1", "q", LeafTopology::Sphere(n - 1)));
    g.add_edge(LeafFamily::new("e2", "q", "p2", LeafTopology::Sphere(n - 1)));
    g
}

/// n = 3 double separatrix: minimum `s` entering a top-index saddle `q`
/// through its single minus port; the two plus families cap off at maxima.
/// Eliminating (`s`, `q`) merges `f1` and `f2` into one family.
pub fn double_separatrix_n3() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.add_node("s", NodeKind::Center);
    g.add_node(
        "q",
        NodeKind::Saddle(Saddle {
            index: 2,
            selfconnected: false,
            semi_holonomy: None,
            ports: vec![
                Port::new(PortSign::Minus, "e1"),
                Port::new(PortSign::Plus, "f1"),
                Port::new(PortSign::Plus, "f2"),
            ],
        }),
    );
    g.add_node("m1", NodeKind::Center);
    g.add_node("m2", NodeKind::Center);
    g.add_edge(LeafFamily::new("e1", "s", "q", LeafTopology::Sphere(2)));
    g.add_edge(LeafFamily::new("f1", "q", "m1", LeafTopology::Sphere(2)));
    g.add_edge(LeafFamily::new("f2", "q", "m2", LeafTopology::Sphere(2)));
    g
}

/// The shape produced by splitting the round 3-sphere's family with a saddle
/// pair of indices (1, 2): both inserted saddles are self-connected and the
/// middle family carries the surgered label and a strong connection.
pub fn created_pair_n3() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.add_node("c1", NodeKind::Center);
    g.add_node(
        "s1",
        NodeKind::Saddle(Saddle {
            index: 1,
            selfconnected: true,
            semi_holonomy: Some(SemiHolonomy {
                minus_trivial: true,
                plus_trivial: None,
            }),
            ports: vec![
                Port::paired(PortSign::Minus, "a"),
                Port::paired(PortSign::Minus, "a"),
                Port::new(PortSign::Plus, "m"),
            ],
        }),
    );
    g.add_node(
        "s2",
        NodeKind::Saddle(Saddle {
            index: 2,
            selfconnected: true,
            semi_holonomy: Some(SemiHolonomy {
                minus_trivial: true,
                plus_trivial: None,
            }),
            ports: vec![
                Port::paired(PortSign::Plus, "b"),
                Port::paired(PortSign::Plus, "b"),
                Port::new(PortSign::Minus, "m"),
            ],
        }),
    );
    g.add_node("c2", NodeKind::Center);
    g.add_edge(LeafFamily::new("a", "c1", "s1", LeafTopology::Sphere(2)));
    let mut m = LeafFamily::new(
        "m",
        "s1",
        "s2",
        LeafTopology::Surgered(Box::new(LeafTopology::Sphere(2)), 1),
    );
    m.strong_connection = true;
    g.add_edge(m);
    g.add_edge(LeafFamily::new("b", "s2", "c2", LeafTopology::Sphere(2)));
    g
}

/// A 2-sphere foliated with one spiralling band: circles around each pole,
/// two limit circles `a` and `b` with one-sided holonomy, and a band of
/// planar leaves spiralling between them.
pub fn sphere_spiral_holonomy() -> FoliationGraph {
    let mut g = FoliationGraph::new(2);
    g.add_node("c0", NodeKind::Center);
    g.add_node("a", leaf(LeafTopology::Circle, HolonomyLabel::Unilateral));
    g.add_node("b", leaf(LeafTopology::Circle, HolonomyLabel::Unilateral));
    g.add_node("c1", NodeKind::Center);
    g.add_edge(LeafFamily::new("e0", "c0", "a", LeafTopology::Circle));
    g.add_edge(LeafFamily::new("e1", "a", "b", LeafTopology::OpenRxS(0)));
    g.add_edge(LeafFamily::new("e2", "b", "c1", LeafTopology::Circle));
    g
}

/// The projective plane foliated by circles around one center, limiting on a
/// one-sided circle leaf with order-two holonomy. Not transversely orientable.
pub fn projective_plane() -> FoliationGraph {
    let mut g = FoliationGraph::new(2);
    g.transversely_orientable = false;
    g.add_node("c", NodeKind::Center);
    g.add_node("z", leaf(LeafTopology::Circle, HolonomyLabel::Z2));
    g.add_edge(LeafFamily::new("e0", "c", "z", LeafTopology::Circle));
    g
}

/// A torus carrying two eddy islands and an open band joining the two
/// self-connected saddles: two centers, two saddles, one non-compact family.
pub fn torus_double_reeb() -> FoliationGraph {
    let mut g = FoliationGraph::new(2);
    g.add_node("c1", NodeKind::Center);
    g.add_node(
        "q1",
        NodeKind::Saddle(Saddle {
            index: 1,
            selfconnected: true,
            semi_holonomy: Some(SemiHolonomy {
                minus_trivial: false,
                plus_trivial: None,
            }),
            ports: vec![
                Port::paired(PortSign::Minus, "a1"),
                Port::paired(PortSign::Minus, "a1"),
                Port::new(PortSign::Plus, "m"),
            ],
        }),
    );
    g.add_node(
        "q2",
        NodeKind::Saddle(Saddle {
            index: 1,
            selfconnected: true,
            semi_holonomy: Some(SemiHolonomy {
                minus_trivial: false,
                plus_trivial: None,
            }),
            ports: vec![
                Port::new(PortSign::Minus, "m"),
                Port::paired(PortSign::Plus, "a2"),
                Port::paired(PortSign::Plus, "a2"),
            ],
        }),
    );
    g.add_node("c2", NodeKind::Center);
    g.add_edge(LeafFamily::new("a1", "c1", "q1", LeafTopology::Circle));
    g.add_edge(LeafFamily::new("m", "q1", "q2", LeafTopology::OpenRxS(0)));
    g.add_edge(LeafFamily::new("a2", "q2", "c2", LeafTopology::Circle));
    g
}

/// A singular Reeb component capping a 3-sphere: a center `p` whose sphere
/// family enters a self-connected saddle `q` through the paired ports, an
/// open cylinder family spiralling onto a torus leaf `L`, and a family of
/// tori collapsing onto a stable circle `S`.
pub fn singular_reeb_s3() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.add_node("p", NodeKind::Center);
    g.add_node(
        "q",
        NodeKind::Saddle(Saddle {
            index: 1,
            selfconnected: true,
            semi_holonomy: Some(SemiHolonomy {
                minus_trivial: false,
                plus_trivial: None,
            }),
            ports: vec![
                Port::paired(PortSign::Minus, "e1"),
                Port::paired(PortSign::Minus, "e1"),
                Port::new(PortSign::Plus, "e2"),
            ],
        }),
    );
    g.add_node("L", leaf(LeafTopology::Torus, HolonomyLabel::Unilateral));
    g.add_node("S", NodeKind::StableCircle);
    g.add_edge(LeafFamily::new("e1", "p", "q", LeafTopology::Sphere(2)));
    g.add_edge(LeafFamily::new("e2", "q", "L", LeafTopology::OpenRxS(1)));
    g.add_edge(LeafFamily::new("e3", "L", "S", LeafTopology::Torus));
    g
}

/// A genuine Reeb component plus a circle bundle piece on the 3-sphere:
/// what `singular_reeb_s3` becomes once its singular cap is traded for a
/// novikov node.
pub fn s3_reeb_plus_circle() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.add_node("N", NodeKind::Novikov);
    g.add_node("L", leaf(LeafTopology::Torus, HolonomyLabel::Unilateral));
    g.add_node("S", NodeKind::StableCircle);
    g.add_edge(LeafFamily::new("e2", "N", "L", LeafTopology::OpenRxS(1)));
    g.add_edge(LeafFamily::new("e3", "L", "S", LeafTopology::Torus));
    g
}

/// The 3-sphere split into two solid tori: tori collapsing onto two stable
/// circles, every leaf compact.
pub fn s3_two_circles() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.add_node("S1", NodeKind::StableCircle);
    g.add_node("S2", NodeKind::StableCircle);
    g.add_edge(LeafFamily::new("e1", "S1", "S2", LeafTopology::Torus));
    g
}

/// The two-solid-tori picture turbulized along the middle: two torus leaves
/// with one-sided holonomy flank an open band of cylinder leaves.
pub fn s3_two_circles_open() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.add_node("S1", NodeKind::StableCircle);
    g.add_node("L1", leaf(LeafTopology::Torus, HolonomyLabel::Unilateral));
    g.add_node("L2", leaf(LeafTopology::Torus, HolonomyLabel::Unilateral));
    g.add_node("S2", NodeKind::StableCircle);
    g.add_edge(LeafFamily::new("e1", "S1", "L1", LeafTopology::Torus));
    g.add_edge(LeafFamily::new("e2", "L1", "L2", LeafTopology::OpenRxS(1)));
    g.add_edge(LeafFamily::new("e3", "L2", "S2", LeafTopology::Torus));
    g
}

/// The classical Reeb foliation of the 3-sphere: two Reeb components glued
/// along one torus leaf whose holonomy is nontrivial on both sides.
pub fn s3_double_reeb() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.add_node("N1", NodeKind::Novikov);
    g.add_node("L", leaf(LeafTopology::Torus, HolonomyLabel::Infinite));
    g.add_node("N2", NodeKind::Novikov);
    g.add_edge(LeafFamily::new("e1", "N1", "L", LeafTopology::OpenRxS(1)));
    g.add_edge(LeafFamily::new("e2", "L", "N2", LeafTopology::OpenRxS(1)));
    g
}

/// A graph that is structurally fine but geometrically impossible: a center
/// on one side of a sphere-leaf wall, a Reeb region on the other. With a
/// center present and no saddles the whole foliation must be the round
/// sphere, which has no room for a Reeb component.
pub fn inconsistent_novikov() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.add_node("c", NodeKind::Center);
    g.add_node("W", leaf(LeafTopology::Sphere(2), HolonomyLabel::Unilateral));
    g.add_node("N", NodeKind::Novikov);
    g.add_edge(LeafFamily::new("e1", "c", "W", LeafTopology::Sphere(2)));
    g.add_edge(LeafFamily::new("e2", "W", "N", LeafTopology::Sphere(2)));
    g
}

/// A graph claiming a null-homotopic closed transversal while every marked
/// leaf has two-sided holonomy: the claim forces a one-sided-holonomy leaf,
/// so the model is inconsistent.
pub fn missing_unilateral() -> FoliationGraph {
    let mut g = FoliationGraph::new(3);
    g.has_null_homotopic_transversal = true;
    g.add_node("N", NodeKind::Novikov);
    g.add_node("L", leaf(LeafTopology::Torus, HolonomyLabel::Infinite));
    g.add_node("S", NodeKind::StableCircle);
    g.add_edge(LeafFamily::new("e2", "N", "L", LeafTopology::OpenRxS(1)));
    g.add_edge(LeafFamily::new("e3", "L", "S", LeafTopology::Torus));
    g
}

/// A foliated disc: circles around one center, tangent to the boundary
/// circle. The only fixture on a manifold with boundary.
pub fn disc_boundary() -> FoliationGraph {
    let mut g = FoliationGraph::new(2);
    g.closed = false;
    g.add_node("B", NodeKind::BoundaryTangent);
    g.add_node("c", NodeKind::Center);
    g.add_edge(LeafFamily::new("e0", "B", "c", LeafTopology::Circle));
    g
}

/// A fibration of the 2-torus over the circle: one closed family of circle
/// leaves through a single waypoint, leaf space a circle.
pub fn circle_leaf_space() -> FoliationGraph {
    let mut g = FoliationGraph::new(2);
    g.add_node("w", leaf(LeafTopology::Circle, HolonomyLabel::Trivial));
    g.add_edge(LeafFamily::new("l0", "w", "w", LeafTopology::Circle));
    g
}

/// All fixtures under a stable name, for sweep-style tests.
pub fn all_named() -> Vec<(&'static str, FoliationGraph)> {
    vec![
        ("two_center_s2", two_center(2)),
        ("two_center_n3", two_center(3)),
        ("torus_height", torus_height()),
        ("bumpy_sphere", bumpy_sphere()),
        ("middle_saddle_n4", middle_saddle(4, 2)),
        ("middle_saddle_n5", middle_saddle(5, 2)),
        ("middle_saddle_n6_idx3", middle_saddle(6, 3)),
        ("double_separatrix_n3", double_separatrix_n3()),
        ("created_pair_n3", created_pair_n3()),
        ("sphere_spiral_holonomy", sphere_spiral_holonomy()),
        ("projective_plane", projective_plane()),
        ("torus_double_reeb", torus_double_reeb()),
        ("singular_reeb_s3", singular_reeb_s3()),
        ("s3_reeb_plus_circle", s3_reeb_plus_circle()),
        ("s3_two_circles", s3_two_circles()),
        ("s3_two_circles_open", s3_two_circles_open()),
        ("s3_double_reeb", s3_double_reeb()),
        ("inconsistent_novikov", inconsistent_novikov()),
        ("missing_unilateral", missing_unilateral()),
        ("disc_boundary", disc_boundary()),
        ("circle_leaf_space", circle_leaf_space()),
    ]
}

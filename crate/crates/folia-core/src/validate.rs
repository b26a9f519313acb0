//! Structural validation of foliation graphs.
//!
//! `validate` checks every invariant of the data model and returns a
//! deterministic report sorted by (id, rule). Violations are data, not
//! failures: callers inspect the report. Error-severity entries mark graphs no
//! operation will accept; the single warning-severity rule
//! (`unilateral-unresolved`) marks authored graphs that leave a unilateral
//! leaf's accumulation side unexplained without blocking the checkers.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{FoliationGraph, HolonomyLabel, LeafTopology, NodeKind, PortSign};

/// Severity of a validation finding.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
pub enum Severity {
    Warning,
    Error,
}

/// One violated invariant, anchored at a node or edge id.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    /// Node or edge the finding is about.
    pub id: String,
    /// Stable rule name.
    pub rule: &'static str,
    pub severity: Severity,
    /// Human-readable particulars.
    pub detail: String,
}

/// Deterministic list of violations, sorted by (id, rule).
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct ValidationReport {
    pub violations: Vec<Violation>,
}

impl ValidationReport {
    /// True when no invariant at all is violated (warnings included).
    pub fn is_empty(&self) -> bool {
        self.violations.is_empty()
    }

    /// True when no error-severity invariant is violated. Operation
    /// preconditions use this.
    pub fn is_clean(&self) -> bool {
        self.errors().next().is_none()
    }

    pub fn errors(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Error)
    }

    pub fn warnings(&self) -> impl Iterator<Item = &Violation> {
        self.violations
            .iter()
            .filter(|v| v.severity == Severity::Warning)
    }
}

impl std::fmt::Display for ValidationReport {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        for v in &self.violations {
            let sev = match v.severity {
                Severity::Error => "error",
                Severity::Warning => "warning",
            };
            writeln!(f, "{sev}[{}] {}: {}", v.rule, v.id, v.detail)?;
        }
        Ok(())
    }
}

struct Checker<'g> {
    g: &'g FoliationGraph,
    out: Vec<Violation>,
}

impl<'g> Checker<'g> {
    fn push(&mut self, id: &str, rule: &'static str, severity: Severity, detail: String) {
        self.out.push(Violation {
            id: id.to_string(),
            rule,
            severity,
            detail,
        });
    }

    fn error(&mut self, id: &str, rule: &'static str, detail: String) {
        self.push(id, rule, Severity::Error, detail);
    }

    fn label_fits_dimension(&self, t: &LeafTopology) -> Result<(), String> {
        let n = self.g.dimension;
        match t {
            LeafTopology::Sphere(m) => {
                if *m + 1 != n {
                    return Err(format!("sphere({m}) is not an {}-dimensional leaf", n - 1));
                }
            }
            LeafTopology::Circle => {
                if n != 2 {
                    return Err("circle leaves require dimension 2".into());
                }
            }
            LeafTopology::Torus => {
                if n != 3 {
                    return Err("torus leaves require dimension 3".into());
                }
            }
            LeafTopology::ProductSpheres(l, m) => {
                if l + m + 1 != n {
                    return Err(format!(
                        "product_spheres({l},{m}) is not an {}-dimensional leaf",
                        n - 1
                    ));
                }
            }
            LeafTopology::CylinderS1xS(m) | LeafTopology::OpenRxS(m) => {
                if *m + 2 != n {
                    return Err(format!("cylinder factor S^{m} requires dimension {}", m + 2));
                }
            }
            LeafTopology::GluedProduct(l) | LeafTopology::WedgeQuotient(l) => {
                if *l < 1 || *l > n - 1 {
                    return Err(format!("collapse index {l} outside 1..={}", n - 1));
                }
            }
            LeafTopology::Surgered(base, l) => {
                self.label_fits_dimension(base)?;
                if *l < 1 || n < 3 || *l > n - 2 {
                    return Err(format!("surgery index {l} outside 1..={}", n.max(3) - 2));
                }
            }
            LeafTopology::Custom { .. } => {}
        }
        Ok(())
    }

    fn run(&mut self) {
        let g = self.g;
        let n = g.dimension;
        if n < 2 {
            self.error(
                "graph",
                "dimension",
                format!("dimension must be at least 2, got {n}"),
            );
            // Dimension-relative checks below would be meaningless.
            return;
        }

        // Duplicate identifiers (nodes and edges share a namespace for ids
        // used in ports, but only duplicates within each table are fatal).
        let mut seen = BTreeSet::new();
        for node in &g.nodes {
            if !seen.insert(&node.id) {
                self.error("", "duplicate-id", String::new());
                let v = self.out.last_mut().unwrap();
                v.id = node.id.clone();
                v.detail = "node id declared twice".into();
            }
        }
        let mut seen = BTreeSet::new();
        for edge in &g.edges {
            if !seen.insert(&edge.id) {
                self.error(&edge.id.clone(), "duplicate-id", "edge id declared twice".into());
            }
        }

        let node_ids: BTreeSet<&str> = g.nodes.iter().map(|n| n.id.as_str()).collect();

        // Edge-level checks.
        for edge in &g.edges {
            for end in [&edge.from, &edge.to] {
                if !node_ids.contains(end.as_str()) {
                    self.error(
                        &edge.id,
                        "edge-endpoints",
                        format!("endpoint `{end}` is not a node"),
                    );
                }
            }
            if let Err(msg) = self.label_fits_dimension(&edge.topology) {
                self.error(&edge.id, "label-dimension", msg);
            }
            if !edge.topology.is_compact() && !matches!(edge.topology, LeafTopology::OpenRxS(_)) {
                let has_novikov_end = [&edge.from, &edge.to].iter().any(|end| {
                    matches!(
                        g.node(end).map(|n| &n.kind),
                        Some(NodeKind::Novikov)
                    )
                });
                if !has_novikov_end {
                    self.error(
                        &edge.id,
                        "open-leaf",
                        "non-compact families must use the open cylinder label or touch a novikov node"
                            .into(),
                    );
                }
            }
            if edge.strong_connection {
                let idx = |id: &str| g.saddle(id).map(|s| s.index);
                match (idx(&edge.from), idx(&edge.to)) {
                    (Some(a), Some(b)) if a.abs_diff(b) == 1 => {}
                    _ => self.error(
                        &edge.id,
                        "strong-connection",
                        "strong connections join two saddles of consecutive indices".into(),
                    ),
                }
            }
        }

        // Node-level checks.
        for node in &g.nodes {
            let degree = g.degree(&node.id);
            match &node.kind {
                NodeKind::Center => {
                    if degree != 1 {
                        self.error(
                            &node.id,
                            "center-degree",
                            format!("a center bounds exactly one leaf family, found {degree}"),
                        );
                    }
                    for e in g.incident_edges(&node.id) {
                        if e.topology != LeafTopology::sphere_label(n) {
                            self.error(
                                &node.id,
                                "center-edge-label",
                                format!(
                                    "leaves around a center are spheres; family `{}` is labelled {:?}",
                                    e.id, e.topology
                                ),
                            );
                        }
                    }
                }
                NodeKind::StableCircle => {
                    if degree != 1 {
                        self.error(
                            &node.id,
                            "stable-circle-degree",
                            format!(
                                "a stable circle bounds exactly one leaf family, found {degree}"
                            ),
                        );
                    }
                }
                NodeKind::BoundaryTangent => {
                    if g.closed {
                        self.error(
                            &node.id,
                            "closed-boundary",
                            "closed graphs cannot contain boundary-tangent nodes".into(),
                        );
                    }
                    if degree != 1 {
                        self.error(
                            &node.id,
                            "boundary-degree",
                            format!(
                                "a tangent boundary component bounds exactly one family, found {degree}"
                            ),
                        );
                    }
                }
                NodeKind::Novikov => {
                    if degree == 0 {
                        self.error(
                            &node.id,
                            "novikov-degree",
                            "a novikov region attaches to at least one leaf family".into(),
                        );
                    }
                }
                NodeKind::MarkedLeaf {
                    topology,
                    holonomy,
                    unresolved_boundary,
                } => {
                    if let Err(msg) = self.label_fits_dimension(topology) {
                        self.error(&node.id, "label-dimension", msg);
                    }
                    if *holonomy == HolonomyLabel::Z2 && g.transversely_orientable {
                        self.error(
                            &node.id,
                            "z2-orientable",
                            "order-two one-sided holonomy needs a non-orientable transversal structure"
                                .into(),
                        );
                    }
                    if degree > 2 || degree == 0 {
                        self.error(
                            &node.id,
                            "leaf-degree",
                            format!("a leaf has two sides; found {degree} incident family ends"),
                        );
                    }
                    match holonomy {
                        HolonomyLabel::Trivial => {
                            if degree != 2 {
                                self.error(
                                    &node.id,
                                    "leaf-degree",
                                    "a leaf with trivial holonomy is two-sided regular and needs a family on each side"
                                        .into(),
                                );
                            }
                            for e in g.incident_edges(&node.id) {
                                if &e.topology != topology {
                                    self.error(
                                        &node.id,
                                        "leaf-label",
                                        format!(
                                            "families around a holonomy-free leaf share its topology; `{}` is {:?}, leaf is {:?}",
                                            e.id, e.topology, topology
                                        ),
                                    );
                                }
                            }
                        }
                        HolonomyLabel::Unilateral => {
                            let resolved = *unresolved_boundary
                                || g.incident_edges(&node.id).iter().any(|e| {
                                    !e.topology.is_compact()
                                        || matches!(
                                            g.node(e.other_endpoint(&node.id)).map(|n| &n.kind),
                                            Some(NodeKind::Novikov)
                                        )
                                });
                            if !resolved {
                                self.push(
                                    &node.id,
                                    "unilateral-unresolved",
                                    Severity::Warning,
                                    "unilateral holonomy implies accumulating leaves on one side; attach a novikov node or an open family, or flag unresolved_boundary"
                                        .into(),
                                );
                            }
                        }
                        _ => {}
                    }
                }
                NodeKind::Saddle(s) => self.check_saddle(&node.id, s),
            }
        }

        // Connectivity (undirected), ignoring edges with missing endpoints.
        if !g.nodes.is_empty() {
            let mut adj: BTreeMap<&str, Vec<&str>> = BTreeMap::new();
            for e in &g.edges {
                if node_ids.contains(e.from.as_str()) && node_ids.contains(e.to.as_str()) {
                    adj.entry(e.from.as_str()).or_default().push(e.to.as_str());
                    adj.entry(e.to.as_str()).or_default().push(e.from.as_str());
                }
            }
            let mut visited = BTreeSet::new();
            let start = g.nodes[0].id.as_str();
            let mut stack = vec![start];
            while let Some(v) = stack.pop() {
                if visited.insert(v) {
                    stack.extend(adj.get(v).into_iter().flatten());
                }
            }
            for node in &g.nodes {
                if !visited.contains(node.id.as_str()) {
                    self.error(
                        &node.id,
                        "connected",
                        "graph must be connected; node unreachable from the first node".into(),
                    );
                }
            }
        }
    }

    fn check_saddle(&mut self, id: &str, s: &crate::graph::Saddle) {
        let g = self.g;
        let n = g.dimension;
        if s.index < 1 || s.index > n - 1 {
            self.error(
                id,
                "saddle-index",
                format!("saddle index {} outside 1..={}", s.index, n - 1),
            );
            return;
        }
        let extreme = s.index == 1 || s.index == n - 1;
        if s.selfconnected && !extreme {
            self.error(
                id,
                "selfconnected-index",
                format!(
                    "only saddles of index 1 or {} have a connectable separatrix pair",
                    n - 1
                ),
            );
        }
        if s.selfconnected != s.semi_holonomy.is_some() {
            self.error(
                id,
                "semi-holonomy",
                "semi-holonomy data is present exactly on self-connected saddles".into(),
            );
        }

        // Port counts and signs.
        let expected_ports = if extreme { 3 } else { 2 };
        if s.ports.len() != expected_ports {
            self.error(
                id,
                "port-count",
                format!(
                    "index-{} saddle needs {} ports, found {}",
                    s.index,
                    expected_ports,
                    s.ports.len()
                ),
            );
            return;
        }
        let plus = s.ports.iter().filter(|p| p.sign == PortSign::Plus).count();
        let minus = s.ports.len() - plus;
        let sign_ok = if extreme {
            if n >= 3 && s.index == 1 {
                (plus, minus) == (1, 2)
            } else if n >= 3 {
                (plus, minus) == (2, 1)
            } else {
                matches!((plus, minus), (1, 2) | (2, 1))
            }
        } else {
            (plus, minus) == (1, 1)
        };
        if !sign_ok {
            self.error(
                id,
                "port-sign",
                format!(
                    "index-{} saddle in dimension {n} cannot have {plus} plus / {minus} minus ports",
                    s.index
                ),
            );
        }

        // Pairing marks.
        let paired: Vec<_> = s.ports.iter().filter(|p| p.paired).collect();
        if s.selfconnected {
            let ok = paired.len() == 2 && paired[0].sign == paired[1].sign;
            if !ok {
                self.error(
                    id,
                    "port-pairing",
                    "a self-connected saddle pairs exactly its two same-sign ports".into(),
                );
            }
        } else if !paired.is_empty() {
            self.error(
                id,
                "port-pairing",
                "pairing marks belong to self-connected saddles only".into(),
            );
        }

        // Port-edge incidence: each port references an incident edge; each
        // incident family end is claimed by exactly one port, except that the
        // paired ports of a self-connected saddle may share one non-loop end.
        let mut refs: BTreeMap<&str, usize> = BTreeMap::new();
        for p in &s.ports {
            match g.edge(&p.edge) {
                None => self.error(
                    id,
                    "port-edge",
                    format!("port references unknown family `{}`", p.edge),
                ),
                Some(e) if !e.touches(id) => self.error(
                    id,
                    "port-edge",
                    format!("port references family `{}` not incident to this saddle", p.edge),
                ),
                Some(_) => {
                    *refs.entry(p.edge.as_str()).or_default() += 1;
                }
            }
        }
        let paired_edge = if s.selfconnected && paired.len() == 2 && paired[0].edge == paired[1].edge
        {
            Some(paired[0].edge.as_str())
        } else {
            None
        };
        for e in g.incident_edges(id) {
            let slots = (e.from == id) as usize + (e.to == id) as usize;
            let mut expected = slots;
            if paired_edge == Some(e.id.as_str()) && !e.is_loop() {
                expected += 1;
            }
            let got = refs.get(e.id.as_str()).copied().unwrap_or(0);
            if got != expected {
                self.error(
                    id,
                    "port-edge",
                    format!(
                        "family `{}` has {slots} end(s) here but {got} port reference(s) (expected {expected})",
                        e.id
                    ),
                );
            }
        }

        // In a transversely orientable graph, the port sign of a non-loop
        // family is determined by its direction: plus iff the family leaves
        // the saddle. Loop families are exempt: the transverse coordinate
        // wraps around them, so both ends may sit on the same side.
        if g.transversely_orientable {
            for p in &s.ports {
                if let Some(e) = g.edge(&p.edge) {
                    if e.is_loop() {
                        continue;
                    }
                    let expected = if e.from == id {
                        PortSign::Plus
                    } else {
                        PortSign::Minus
                    };
                    if p.sign != expected {
                        self.error(
                            id,
                            "port-direction",
                            format!(
                                "family `{}` is directed {}; its port here must be {:?}",
                                p.edge,
                                if e.from == id { "outward" } else { "inward" },
                                expected
                            ),
                        );
                    }
                }
            }
        }
    }
}

/// Check every structural invariant of the graph. The report is deterministic:
/// sorted by (id, rule), stable across runs.
pub fn validate(g: &FoliationGraph) -> ValidationReport {
    let mut c = Checker { g, out: Vec::new() };
    c.run();
    let mut violations = c.out;
    violations.sort_by(|a, b| (a.id.as_str(), a.rule).cmp(&(b.id.as_str(), b.rule)));
    ValidationReport { violations }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{LeafFamily, Node, NodeKind, Port, PortSign, Saddle};

    fn two_center(n: u32) -> FoliationGraph {
        let mut g = FoliationGraph::new(n);
        g.add_node("c0", NodeKind::Center);
        g.add_node("c1", NodeKind::Center);
        g.add_edge(LeafFamily::new(
            "e0",
            "c0",
            "c1",
            LeafTopology::sphere_label(n),
        ));
        g
    }

    #[test]
    fn two_center_graph_is_clean() {
        let report = validate(&two_center(3));
        assert!(report.is_empty(), "{report}");
    }

    #[test]
    fn z2_label_requires_nonorientable_transversal_structure() {
        let mut g = two_center(2);
        // Rewire into: c0 - e0 -> leaf (degree-2 violation is avoided by a loop-free reshape)
        g.nodes[1] = Node {
            id: "c1".into(),
            kind: NodeKind::MarkedLeaf {
                topology: LeafTopology::Circle,
                holonomy: HolonomyLabel::Z2,
                unresolved_boundary: false,
            },
        };
        let report = validate(&g);
        assert!(report.violations.iter().any(|v| v.rule == "z2-orientable"));
        g.transversely_orientable = false;
        let report = validate(&g);
        assert!(!report.violations.iter().any(|v| v.rule == "z2-orientable"));
    }

    #[test]
    fn saddle_port_count_is_checked() {
        let mut g = FoliationGraph::new(4);
        g.add_node("c0", NodeKind::Center);
        g.add_node(
            "q",
            NodeKind::Saddle(Saddle {
                index: 2,
                selfconnected: false,
                semi_holonomy: None,
                ports: vec![Port::new(PortSign::Minus, "e0")],
            }),
        );
        g.add_edge(LeafFamily::new("e0", "c0", "q", LeafTopology::Sphere(3)));
        let report = validate(&g);
        assert!(report.violations.iter().any(|v| v.rule == "port-count"));
    }

    #[test]
    fn disconnected_graphs_are_flagged() {
        let mut g = two_center(3);
        let mut h = two_center(3);
        h.nodes[0].id = "d0".into();
        h.nodes[1].id = "d1".into();
        h.edges[0] = LeafFamily::new("f0", "d0", "d1", LeafTopology::Sphere(2));
        g.nodes.extend(h.nodes);
        g.edges.extend(h.edges);
        let report = validate(&g);
        assert!(report.violations.iter().any(|v| v.rule == "connected"));
    }

    #[test]
    fn unresolved_unilateral_leaf_is_a_warning_not_an_error() {
        let mut g = FoliationGraph::new(3);
        g.add_node("s", NodeKind::StableCircle);
        g.add_node(
            "L",
            NodeKind::MarkedLeaf {
                topology: LeafTopology::Torus,
                holonomy: HolonomyLabel::Unilateral,
                unresolved_boundary: false,
            },
        );
        g.add_edge(LeafFamily::new("e0", "L", "s", LeafTopology::Torus));
        let report = validate(&g);
        assert!(report
            .violations
            .iter()
            .any(|v| v.rule == "unilateral-unresolved" && v.severity == Severity::Warning));
        assert!(report.is_clean());
        assert!(!report.is_empty());
    }

    #[test]
    fn loop_family_ports_may_share_a_side() {
        // A self-connected saddle whose merged outer family wraps around the
        // manifold: both loop ends approach from below. The transverse value
        // wraps, so this is orientable and legal.
        let mut g = FoliationGraph::new(2);
        g.add_node("c", NodeKind::Center);
        g.add_node(
            "r",
            NodeKind::Saddle(Saddle {
                index: 1,
                selfconnected: true,
                semi_holonomy: Some(crate::graph::SemiHolonomy {
                    minus_trivial: true,
                    plus_trivial: None,
                }),
                ports: vec![
                    Port::paired(PortSign::Minus, "l"),
                    Port::paired(PortSign::Minus, "l"),
                    Port::new(PortSign::Plus, "a"),
                ],
            }),
        );
        g.add_edge(LeafFamily::new("l", "r", "r", LeafTopology::Circle));
        g.add_edge(LeafFamily::new("a", "r", "c", LeafTopology::Circle));
        let report = validate(&g);
        assert!(report.is_empty(), "{report}");
    }

    #[test]
    fn labels_must_fit_the_ambient_dimension() {
        let mut g = two_center(3);
        g.edges[0].topology = LeafTopology::Sphere(3);
        let report = validate(&g);
        assert!(report.violations.iter().any(|v| v.rule == "label-dimension"));
    }

    #[test]
    fn port_sign_must_match_direction_when_orientable() {
        let mut g = FoliationGraph::new(2);
        g.add_node("c0", NodeKind::Center);
        g.add_node("c1", NodeKind::Center);
        g.add_node("c2", NodeKind::Center);
        g.add_node(
            "q",
            NodeKind::Saddle(Saddle {
                index: 1,
                selfconnected: false,
                semi_holonomy: None,
                ports: vec![
                    Port::new(PortSign::Minus, "e0"),
                    Port::new(PortSign::Minus, "e1"),
                    // e2 leaves q, so this port must be Plus.
                    Port::new(PortSign::Minus, "e2"),
                ],
            }),
        );
        g.add_edge(LeafFamily::new("e0", "c0", "q", LeafTopology::Circle));
        g.add_edge(LeafFamily::new("e1", "c1", "q", LeafTopology::Circle));
        g.add_edge(LeafFamily::new("e2", "q", "c2", LeafTopology::Circle));
        let report = validate(&g);
        assert!(report.violations.iter().any(|v| v.rule == "port-direction"));
        assert!(report.violations.iter().any(|v| v.rule == "port-sign"));
    }
}

//! Graphviz rendering of foliation graphs.
//!
//! Nodes and edges are emitted in stored order with a fixed attribute
//! spelling, so the output is byte-deterministic for a given graph. Node
//! shapes encode the kind (circle = center, diamond = saddle, double circle =
//! stable circle, box = marked leaf, octagon = novikov region, trapezium =
//! boundary tangency); strong connections are bold, families of non-compact
//! leaves dashed.

use folia_core::{FoliationGraph, LeafFamily, Node, NodeKind, PortSign};

use crate::format::{holonomy_token, topology_token};

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn node_statement(node: &Node) -> String {
    let mut lines = vec![node.id.clone()];
    let shape = match &node.kind {
        NodeKind::Center => {
            lines.push("center".into());
            "circle"
        }
        NodeKind::Saddle(s) => {
            let mut d = format!("saddle {}", s.index);
            if s.selfconnected {
                d.push_str(" (self-connected)");
            }
            lines.push(d);
            let minus = s
                .ports
                .iter()
                .filter(|p| p.sign == PortSign::Minus)
                .count();
            lines.push(format!("ports -{minus} +{}", s.ports.len() - minus));
            "diamond"
        }
        NodeKind::StableCircle => {
            lines.push("stable circle".into());
            "doublecircle"
        }
        NodeKind::MarkedLeaf {
            topology,
            holonomy,
            unresolved_boundary,
        } => {
            let mut d = format!("{}, {}", topology_token(topology), holonomy_token(holonomy));
            if *unresolved_boundary {
                d.push_str(", unresolved");
            }
            lines.push(d);
            "box"
        }
        NodeKind::Novikov => {
            lines.push("novikov".into());
            "octagon"
        }
        NodeKind::BoundaryTangent => {
            lines.push("boundary".into());
            "trapezium"
        }
    };
    let label = lines
        .iter()
        .map(|l| escape(l))
        .collect::<Vec<_>>()
        .join("\\n");
    format!("  {} [shape={shape}, label=\"{label}\"];\n", node.id)
}

fn edge_statement(e: &LeafFamily) -> String {
    let mut attrs = vec![format!(
        "label=\"{}: {}\"",
        escape(&e.id),
        escape(&topology_token(&e.topology))
    )];
    if e.strong_connection {
        attrs.push("style=bold".into());
    } else if !e.topology.is_compact() {
        attrs.push("style=dashed".into());
    }
    format!("  {} -> {} [{}];\n", e.from, e.to, attrs.join(", "))
}

/// Renders the graph as a Graphviz `digraph`. The arrow direction is the
/// transverse orientation when the graph has one.
pub fn render_dot(g: &FoliationGraph) -> String {
    let mut props = vec![format!("n={}", g.dimension)];
    if g.closed {
        props.push("closed".into());
    }
    if g.transversely_orientable {
        props.push("transversely orientable".into());
    }
    let mut out = String::from("digraph foliation {\n");
    out.push_str(&format!(
        "  graph [label=\"{}\", labelloc=t];\n",
        props.join(", ")
    ));
    out.push_str("  node [fontname=\"Helvetica\"];\n");
    for node in &g.nodes {
        out.push_str(&node_statement(node));
    }
    for e in &g.edges {
        out.push_str(&edge_statement(e));
    }
    out.push_str("}\n");
    out
}

//! The `.fgr` graph container: a line-oriented text format for a
//! [`FoliationGraph`] with an optional embedded source mesh.
//!
//! Layout (sections in this order, `#` starts a comment outside the raw
//! mesh/field blocks):
//!
//! ```text
//! folia/1
//!
//! [header]
//! dimension = 3
//! closed = true
//! transversely_orientable = true
//!
//! [flags]                       # optional, only for non-default flags
//! has_null_homotopic_transversal = true
//!
//! [nodes]
//! p center
//! q saddle index=1 ports=(-e1,+e2,+e3)
//! r saddle index=1 selfconnected semi_holonomy=(minus=trivial) ports=(-e1,+e2!)
//! L leaf topology=torus holonomy=unilateral unresolved_boundary
//! S stable_circle
//! N novikov
//! B boundary_tangent
//!
//! [edges]
//! e1 p -> q sphere(2)
//! e2 q -> L torus strong
//!
//! [mesh]                        # optional, always together with [field]
//! OFF
//! ...
//!
//! [field]
//! 0.25
//! ...
//! ```
//!
//! Leaf types are written as `circle`, `torus`, `sphere(m)`,
//! `product_spheres(l,m)`, `glued_product(l)`, `wedge_quotient(l)`,
//! `cylinder_s1xs(m)`, `open_rxs(m)`, `surgered(<type>,l)`, or
//! `custom(<name>,compact|open[,chi=N])`. Holonomy labels are `trivial`,
//! `z2`, `unilateral`, `infinite`. A port is a signed edge reference like
//! `-e1` or `+e2`, with a trailing `!` for the pairing mark on self-connected
//! saddles.
//!
//! The schema is strict: unknown sections, node kinds, option keys, or stray
//! tokens are errors with a line and column, never silently skipped. The
//! parser checks syntax and id uniqueness only; referential integrity and the
//! model axioms stay with [`folia_core::validate`], so a file for a broken
//! graph can still be read, inspected, and exported.
//!
//! Identifiers are restricted to `[A-Za-z0-9_]`; the serializer emits one
//! canonical spelling (stored node/edge order, fixed option order, shortest
//! round-trippable floats in the mesh block), so serialize ∘ parse is the
//! identity on files it produced.

use std::collections::HashSet;
use std::fs;
use std::path::Path;

use folia_core::graph::EdgeId;
use folia_core::{
    FoliationGraph, HolonomyLabel, LeafFamily, LeafTopology, Node, NodeKind, Port, PortSign,
    Saddle, SemiHolonomy,
};
use folia_ingest::{mesh_from_text, mesh_to_text, IngestError, ScalarMesh};

use crate::CliError;

/// A parsed `.fgr` file: the graph plus, for ingested graphs, the mesh it
/// came from.
#[derive(Debug, Clone, PartialEq)]
pub struct GraphFile {
    pub graph: FoliationGraph,
    pub mesh: Option<ScalarMesh>,
}

impl GraphFile {
    /// Wraps a bare graph with no mesh attached.
    pub fn bare(graph: FoliationGraph) -> GraphFile {
        GraphFile { graph, mesh: None }
    }
}

fn err(file: &str, line: usize, column: usize, message: impl Into<String>) -> CliError {
    CliError::Parse {
        file: file.to_string(),
        line,
        column,
        message: message.into(),
    }
}

fn is_id(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

/// Splits a comment-stripped line into `(column, token)` pairs, columns
/// 1-based.
fn tokens(line: &str) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut start: Option<usize> = None;
    for (i, c) in line.char_indices() {
        if c.is_whitespace() {
            if let Some(s) = start.take() {
                out.push((s + 1, &line[s..i]));
            }
        } else if start.is_none() {
            start = Some(i);
        }
    }
    if let Some(s) = start {
        out.push((s + 1, &line[s..]));
    }
    out
}

fn strip_comment(line: &str) -> &str {
    match line.find('#') {
        Some(i) => &line[..i],
        None => line,
    }
}

/// Renders a leaf type in the `.fgr` / DOT spelling.
pub fn topology_token(t: &LeafTopology) -> String {
    match t {
        LeafTopology::Circle => "circle".into(),
        LeafTopology::Torus => "torus".into(),
        LeafTopology::Sphere(m) => format!("sphere({m})"),
        LeafTopology::ProductSpheres(l, m) => format!("product_spheres({l},{m})"),
        LeafTopology::GluedProduct(l) => format!("glued_product({l})"),
        LeafTopology::WedgeQuotient(l) => format!("wedge_quotient({l})"),
        LeafTopology::CylinderS1xS(m) => format!("cylinder_s1xs({m})"),
        LeafTopology::OpenRxS(m) => format!("open_rxs({m})"),
        LeafTopology::Surgered(base, l) => format!("surgered({},{l})", topology_token(base)),
        LeafTopology::Custom {
            name,
            compact,
            euler_characteristic,
        } => {
            let mut s = format!("custom({name},{}", if *compact { "compact" } else { "open" });
            if let Some(chi) = euler_characteristic {
                s.push_str(&format!(",chi={chi}"));
            }
            s.push(')');
            s
        }
    }
}

/// Renders a holonomy label in the `.fgr` spelling.
pub fn holonomy_token(h: &HolonomyLabel) -> &'static str {
    match h {
        HolonomyLabel::Trivial => "trivial",
        HolonomyLabel::Z2 => "z2",
        HolonomyLabel::Unilateral => "unilateral",
        HolonomyLabel::Infinite => "infinite",
    }
}

fn semi_holonomy_token(h: &SemiHolonomy) -> String {
    let word = |t: bool| if t { "trivial" } else { "nontrivial" };
    match h.plus_trivial {
        None => format!("minus={}", word(h.minus_trivial)),
        Some(p) => format!("minus={},plus={}", word(h.minus_trivial), word(p)),
    }
}

fn port_token(p: &Port) -> String {
    format!(
        "{}{}{}",
        match p.sign {
            PortSign::Minus => '-',
            PortSign::Plus => '+',
        },
        p.edge,
        if p.paired { "!" } else { "" }
    )
}

fn node_line(node: &Node) -> String {
    match &node.kind {
        NodeKind::Center => format!("{} center\n", node.id),
        NodeKind::Saddle(s) => {
            let mut line = format!("{} saddle index={}", node.id, s.index);
            if s.selfconnected {
                line.push_str(" selfconnected");
            }
            if let Some(h) = &s.semi_holonomy {
                line.push_str(&format!(" semi_holonomy=({})", semi_holonomy_token(h)));
            }
            line.push_str(" ports=(");
            let ports: Vec<String> = s.ports.iter().map(port_token).collect();
            line.push_str(&ports.join(","));
            line.push_str(")\n");
            line
        }
        NodeKind::StableCircle => format!("{} stable_circle\n", node.id),
        NodeKind::MarkedLeaf {
            topology,
            holonomy,
            unresolved_boundary,
        } => format!(
            "{} leaf topology={} holonomy={}{}\n",
            node.id,
            topology_token(topology),
            holonomy_token(holonomy),
            if *unresolved_boundary {
                " unresolved_boundary"
            } else {
                ""
            }
        ),
        NodeKind::Novikov => format!("{} novikov\n", node.id),
        NodeKind::BoundaryTangent => format!("{} boundary_tangent\n", node.id),
    }
}

fn edge_line(e: &LeafFamily) -> String {
    format!(
        "{} {} -> {} {}{}\n",
        e.id,
        e.from,
        e.to,
        topology_token(&e.topology),
        if e.strong_connection { " strong" } else { "" }
    )
}

/// Renders the file in canonical form: fixed section and option order, one
/// node or edge per line in stored order. Repeated calls are byte-identical.
pub fn serialize_graph_file(gf: &GraphFile) -> String {
    let g = &gf.graph;
    let mut out = String::from("folia/1\n\n[header]\n");
    out.push_str(&format!("dimension = {}\n", g.dimension));
    out.push_str(&format!("closed = {}\n", g.closed));
    out.push_str(&format!(
        "transversely_orientable = {}\n",
        g.transversely_orientable
    ));
    if g.has_null_homotopic_transversal {
        out.push_str("\n[flags]\nhas_null_homotopic_transversal = true\n");
    }
    out.push_str("\n[nodes]\n");
    for node in &g.nodes {
        out.push_str(&node_line(node));
    }
    out.push_str("\n[edges]\n");
    for e in &g.edges {
        out.push_str(&edge_line(e));
    }
    if let Some(mesh) = &gf.mesh {
        let (off, field) = mesh_to_text(mesh);
        out.push_str("\n[mesh]\n");
        out.push_str(&off);
        out.push_str("\n[field]\n");
        out.push_str(&field);
    }
    out
}

/// Cursor over a single leaf-type token, tracking the absolute column for
/// error messages.
struct TopoCursor<'a> {
    file: &'a str,
    line: usize,
    base: usize,
    src: &'a [u8],
    pos: usize,
}

impl<'a> TopoCursor<'a> {
    fn fail(&self, message: impl Into<String>) -> CliError {
        err(self.file, self.line, self.base + self.pos, message)
    }

    fn peek(&self) -> Option<u8> {
        self.src.get(self.pos).copied()
    }

    fn expect(&mut self, c: u8) -> Result<(), CliError> {
        if self.peek() == Some(c) {
            self.pos += 1;
            Ok(())
        } else {
            Err(self.fail(format!("expected `{}` in leaf type", c as char)))
        }
    }

    fn take_while(&mut self, keep: impl Fn(u8) -> bool) -> &'a str {
        let start = self.pos;
        while self.peek().is_some_and(&keep) {
            self.pos += 1;
        }
        std::str::from_utf8(&self.src[start..self.pos]).unwrap()
    }

    fn ident(&mut self) -> Result<&'a str, CliError> {
        let word = self.take_while(|c| c.is_ascii_lowercase() || c.is_ascii_digit() || c == b'_');
        if word.is_empty() {
            Err(self.fail("expected a name in leaf type"))
        } else {
            Ok(word)
        }
    }

    fn number_u32(&mut self) -> Result<u32, CliError> {
        let start = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            return Err(self.fail("expected a number in leaf type"));
        }
        digits.parse().map_err(|_| {
            err(
                self.file,
                self.line,
                self.base + start,
                format!("number `{digits}` out of range"),
            )
        })
    }

    fn number_i64(&mut self) -> Result<i64, CliError> {
        let start = self.pos;
        if self.peek() == Some(b'-') {
            self.pos += 1;
        }
        let end_sign = self.pos;
        let digits = self.take_while(|c| c.is_ascii_digit());
        if digits.is_empty() {
            self.pos = end_sign;
            return Err(self.fail("expected a number in leaf type"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| {
                err(
                    self.file,
                    self.line,
                    self.base + start,
                    "number out of range",
                )
            })
    }

    fn topology(&mut self) -> Result<LeafTopology, CliError> {
        let name_pos = self.pos;
        let name = self.ident()?;
        match name {
            "circle" => Ok(LeafTopology::Circle),
            "torus" => Ok(LeafTopology::Torus),
            "sphere" => {
                self.expect(b'(')?;
                let m = self.number_u32()?;
                self.expect(b')')?;
                Ok(LeafTopology::Sphere(m))
            }
            "product_spheres" => {
                self.expect(b'(')?;
                let l = self.number_u32()?;
                self.expect(b',')?;
                let m = self.number_u32()?;
                self.expect(b')')?;
                Ok(LeafTopology::ProductSpheres(l, m))
            }
            "glued_product" => {
                self.expect(b'(')?;
                let l = self.number_u32()?;
                self.expect(b')')?;
                Ok(LeafTopology::GluedProduct(l))
            }
            "wedge_quotient" => {
                self.expect(b'(')?;
                let l = self.number_u32()?;
                self.expect(b')')?;
                Ok(LeafTopology::WedgeQuotient(l))
            }
            "cylinder_s1xs" => {
                self.expect(b'(')?;
                let m = self.number_u32()?;
                self.expect(b')')?;
                Ok(LeafTopology::CylinderS1xS(m))
            }
            "open_rxs" => {
                self.expect(b'(')?;
                let m = self.number_u32()?;
                self.expect(b')')?;
                Ok(LeafTopology::OpenRxS(m))
            }
            "surgered" => {
                self.expect(b'(')?;
                let base = self.topology()?;
                self.expect(b',')?;
                let l = self.number_u32()?;
                self.expect(b')')?;
                Ok(LeafTopology::Surgered(Box::new(base), l))
            }
            "custom" => {
                self.expect(b'(')?;
                let name = self.take_while(|c| {
                    c.is_ascii_alphanumeric() || c == b'_' || c == b'-'
                });
                if name.is_empty() {
                    return Err(self.fail("expected a custom leaf name"));
                }
                self.expect(b',')?;
                let word_pos = self.pos;
                let compact = match self.ident()? {
                    "compact" => true,
                    "open" => false,
                    other => {
                        return Err(err(
                            self.file,
                            self.line,
                            self.base + word_pos,
                            format!("expected `compact` or `open`, found `{other}`"),
                        ))
                    }
                };
                let mut chi = None;
                if self.peek() == Some(b',') {
                    self.pos += 1;
                    let key_pos = self.pos;
                    let key = self.ident()?;
                    if key != "chi" {
                        return Err(err(
                            self.file,
                            self.line,
                            self.base + key_pos,
                            format!("unknown custom leaf field `{key}`"),
                        ));
                    }
                    self.expect(b'=')?;
                    chi = Some(self.number_i64()?);
                }
                self.expect(b')')?;
                Ok(LeafTopology::Custom {
                    name: name.to_string(),
                    compact,
                    euler_characteristic: chi,
                })
            }
            _ => Err(err(
                self.file,
                self.line,
                self.base + name_pos,
                format!("unknown leaf type `{name}`"),
            )),
        }
    }
}

fn parse_topology(
    token: &str,
    col: usize,
    line: usize,
    file: &str,
) -> Result<LeafTopology, CliError> {
    if !token.is_ascii() {
        return Err(err(file, line, col, "leaf type must be ASCII"));
    }
    let mut cur = TopoCursor {
        file,
        line,
        base: col,
        src: token.as_bytes(),
        pos: 0,
    };
    let t = cur.topology()?;
    if cur.pos != token.len() {
        return Err(cur.fail(format!(
            "trailing characters `{}` after leaf type",
            &token[cur.pos..]
        )));
    }
    Ok(t)
}

fn parse_holonomy(value: &str, col: usize, line: usize, file: &str) -> Result<HolonomyLabel, CliError> {
    match value {
        "trivial" => Ok(HolonomyLabel::Trivial),
        "z2" => Ok(HolonomyLabel::Z2),
        "unilateral" => Ok(HolonomyLabel::Unilateral),
        "infinite" => Ok(HolonomyLabel::Infinite),
        _ => Err(err(
            file,
            line,
            col,
            format!("unknown holonomy label `{value}`; expected trivial, z2, unilateral, or infinite"),
        )),
    }
}

fn parse_ports(value: &str, col: usize, line: usize, file: &str) -> Result<Vec<Port>, CliError> {
    let inner = value
        .strip_prefix('(')
        .and_then(|v| v.strip_suffix(')'))
        .ok_or_else(|| {
            err(
                file,
                line,
                col,
                "ports must be a parenthesized list like ports=(-e1,+e2,+e3)",
            )
        })?;
    if inner.is_empty() {
        return Ok(Vec::new());
    }
    let mut ports = Vec::new();
    let mut offset = 0usize;
    for part in inner.split(',') {
        let pcol = col + 1 + offset;
        offset += part.len() + 1;
        let (sign, rest) = match part.as_bytes().first() {
            Some(b'-') => (PortSign::Minus, &part[1..]),
            Some(b'+') => (PortSign::Plus, &part[1..]),
            _ => {
                return Err(err(
                    file,
                    line,
                    pcol,
                    format!("port `{part}` must start with a sign (+ or -)"),
                ))
            }
        };
        let (edge, paired) = match rest.strip_suffix('!') {
            Some(r) => (r, true),
            None => (rest, false),
        };
        if !is_id(edge) {
            return Err(err(file, line, pcol, format!("bad edge id `{edge}` in port")));
        }
        ports.push(Port {
            sign,
            edge: edge.to_string(),
            paired,
        });
    }
    Ok(ports)
}

fn parse_semi_holonomy(
    value: &str,
    col: usize,
    line: usize,
    file: &str,
) -> Result<SemiHolonomy, CliError> {
    let usage = "semi_holonomy must look like (minus=trivial) or (minus=nontrivial,plus=trivial)";
    let inner = value
        .strip_prefix('(')
        .and_then(|v| v.strip_suffix(')'))
        .ok_or_else(|| err(file, line, col, usage))?;
    let germ = |word: &str| match word {
        "trivial" => Some(true),
        "nontrivial" => Some(false),
        _ => None,
    };
    let parts: Vec<&str> = inner.split(',').collect();
    if parts.is_empty() || parts.len() > 2 {
        return Err(err(file, line, col, usage));
    }
    let minus_trivial = parts[0]
        .strip_prefix("minus=")
        .and_then(germ)
        .ok_or_else(|| err(file, line, col, usage))?;
    let plus_trivial = match parts.get(1) {
        None => None,
        Some(p) => Some(
            p.strip_prefix("plus=")
                .and_then(germ)
                .ok_or_else(|| err(file, line, col, usage))?,
        ),
    };
    Ok(SemiHolonomy {
        minus_trivial,
        plus_trivial,
    })
}

fn parse_node_line(
    toks: &[(usize, &str)],
    seen: &mut HashSet<String>,
    line: usize,
    file: &str,
) -> Result<Node, CliError> {
    let (id_col, id) = toks[0];
    if !is_id(id) {
        return Err(err(file, line, id_col, format!("bad node id `{id}`")));
    }
    if !seen.insert(id.to_string()) {
        return Err(err(file, line, id_col, format!("duplicate node id `{id}`")));
    }
    let Some(&(kind_col, kind)) = toks.get(1) else {
        return Err(err(
            file,
            line,
            id_col + id.len(),
            "expected a node kind after the id",
        ));
    };
    let plain = |kind: NodeKind| -> Result<Node, CliError> {
        if let Some(&(c, tok)) = toks.get(2) {
            return Err(err(file, line, c, format!("unexpected token `{tok}`")));
        }
        Ok(Node {
            id: id.to_string(),
            kind,
        })
    };
    match kind {
        "center" => plain(NodeKind::Center),
        "stable_circle" => plain(NodeKind::StableCircle),
        "novikov" => plain(NodeKind::Novikov),
        "boundary_tangent" => plain(NodeKind::BoundaryTangent),
        "saddle" => {
            let mut index = None;
            let mut selfconnected = false;
            let mut semi_holonomy = None;
            let mut ports = None;
            for &(c, tok) in &toks[2..] {
                match tok.split_once('=') {
                    None => {
                        if tok != "selfconnected" {
                            return Err(err(
                                file,
                                line,
                                c,
                                format!("unknown saddle option `{tok}`"),
                            ));
                        }
                        if selfconnected {
                            return Err(err(file, line, c, "duplicate `selfconnected`"));
                        }
                        selfconnected = true;
                    }
                    Some((key, value)) => {
                        let vcol = c + key.len() + 1;
                        match key {
                            "index" => {
                                if index.is_some() {
                                    return Err(err(file, line, c, "duplicate `index`"));
                                }
                                index = Some(value.parse::<u32>().map_err(|_| {
                                    err(file, line, vcol, format!("bad saddle index `{value}`"))
                                })?);
                            }
                            "ports" => {
                                if ports.is_some() {
                                    return Err(err(file, line, c, "duplicate `ports`"));
                                }
                                ports = Some(parse_ports(value, vcol, line, file)?);
                            }
                            "semi_holonomy" => {
                                if semi_holonomy.is_some() {
                                    return Err(err(file, line, c, "duplicate `semi_holonomy`"));
                                }
                                semi_holonomy = Some(parse_semi_holonomy(value, vcol, line, file)?);
                            }
                            _ => {
                                return Err(err(
                                    file,
                                    line,
                                    c,
                                    format!("unknown saddle option `{key}`"),
                                ))
                            }
                        }
                    }
                }
            }
            let index = index
                .ok_or_else(|| err(file, line, kind_col, format!("saddle `{id}` needs index=N")))?;
            let ports = ports.ok_or_else(|| {
                err(file, line, kind_col, format!("saddle `{id}` needs ports=(...)"))
            })?;
            Ok(Node {
                id: id.to_string(),
                kind: NodeKind::Saddle(Saddle {
                    index,
                    selfconnected,
                    semi_holonomy,
                    ports,
                }),
            })
        }
        "leaf" => {
            let mut topology = None;
            let mut holonomy = None;
            let mut unresolved_boundary = false;
            for &(c, tok) in &toks[2..] {
                match tok.split_once('=') {
                    None => {
                        if tok != "unresolved_boundary" {
                            return Err(err(file, line, c, format!("unknown leaf option `{tok}`")));
                        }
                        if unresolved_boundary {
                            return Err(err(file, line, c, "duplicate `unresolved_boundary`"));
                        }
                        unresolved_boundary = true;
                    }
                    Some((key, value)) => {
                        let vcol = c + key.len() + 1;
                        match key {
                            "topology" => {
                                if topology.is_some() {
                                    return Err(err(file, line, c, "duplicate `topology`"));
                                }
                                topology = Some(parse_topology(value, vcol, line, file)?);
                            }
                            "holonomy" => {
                                if holonomy.is_some() {
                                    return Err(err(file, line, c, "duplicate `holonomy`"));
                                }
                                holonomy = Some(parse_holonomy(value, vcol, line, file)?);
                            }
                            _ => {
                                return Err(err(
                                    file,
                                    line,
                                    c,
                                    format!("unknown leaf option `{key}`"),
                                ))
                            }
                        }
                    }
                }
            }
            let topology = topology.ok_or_else(|| {
                err(file, line, kind_col, format!("leaf `{id}` needs topology=..."))
            })?;
            let holonomy = holonomy.ok_or_else(|| {
                err(file, line, kind_col, format!("leaf `{id}` needs holonomy=..."))
            })?;
            Ok(Node {
                id: id.to_string(),
                kind: NodeKind::MarkedLeaf {
                    topology,
                    holonomy,
                    unresolved_boundary,
                },
            })
        }
        _ => Err(err(
            file,
            line,
            kind_col,
            format!("unknown node kind `{kind}`"),
        )),
    }
}

fn parse_edge_line(
    toks: &[(usize, &str)],
    seen: &mut HashSet<EdgeId>,
    line: usize,
    file: &str,
) -> Result<LeafFamily, CliError> {
    let usage = "expected `<id> <from> -> <to> <leaf-type> [strong]`";
    if toks.len() < 5 {
        let (c, t) = *toks.last().unwrap();
        return Err(err(file, line, c + t.len(), usage));
    }
    let (id_col, id) = toks[0];
    if !is_id(id) {
        return Err(err(file, line, id_col, format!("bad edge id `{id}`")));
    }
    if !seen.insert(id.to_string()) {
        return Err(err(file, line, id_col, format!("duplicate edge id `{id}`")));
    }
    let (from_col, from) = toks[1];
    if !is_id(from) {
        return Err(err(file, line, from_col, format!("bad node id `{from}`")));
    }
    if toks[2].1 != "->" {
        return Err(err(file, line, toks[2].0, "expected `->` between the endpoints"));
    }
    let (to_col, to) = toks[3];
    if !is_id(to) {
        return Err(err(file, line, to_col, format!("bad node id `{to}`")));
    }
    let topology = parse_topology(toks[4].1, toks[4].0, line, file)?;
    let strong_connection = match toks.get(5) {
        None => false,
        Some(&(c, tok)) => {
            if tok != "strong" {
                return Err(err(file, line, c, format!("unexpected token `{tok}`")));
            }
            true
        }
    };
    if let Some(&(c, tok)) = toks.get(6) {
        return Err(err(file, line, c, format!("unexpected token `{tok}`")));
    }
    Ok(LeafFamily {
        id: id.to_string(),
        from: from.to_string(),
        to: to.to_string(),
        topology,
        strong_connection,
    })
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Section {
    Header,
    Flags,
    Nodes,
    Edges,
    Mesh,
    Field,
}

impl Section {
    fn of(name: &str) -> Option<Section> {
        match name {
            "header" => Some(Section::Header),
            "flags" => Some(Section::Flags),
            "nodes" => Some(Section::Nodes),
            "edges" => Some(Section::Edges),
            "mesh" => Some(Section::Mesh),
            "field" => Some(Section::Field),
            _ => None,
        }
    }
}

/// Parses `.fgr` text. `file` labels the source in diagnostics. The graph is
/// returned unvalidated (see the module docs); callers that need a sound
/// model must run [`folia_core::validate`] on it.
pub fn parse_graph_file(file: &str, text: &str) -> Result<GraphFile, CliError> {
    let mut tag_seen = false;
    let mut section: Option<Section> = None;
    let mut dimension: Option<u32> = None;
    let mut closed: Option<bool> = None;
    let mut transversely_orientable: Option<bool> = None;
    let mut has_null_homotopic_transversal = false;
    let mut header_line = 0usize;
    let mut seen_sections: Vec<Section> = Vec::new();
    let mut nodes: Vec<Node> = Vec::new();
    let mut node_ids: HashSet<String> = HashSet::new();
    let mut edges: Vec<LeafFamily> = Vec::new();
    let mut edge_ids: HashSet<EdgeId> = HashSet::new();
    let mut mesh_line = 0usize;
    let mut mesh_text = String::new();
    let mut field_line = 0usize;
    let mut field_text = String::new();

    for (i, raw) in text.lines().enumerate() {
        let line = i + 1;

        // The mesh and field blocks are captured verbatim; only the [field]
        // header is recognized inside [mesh], and nothing inside [field].
        if section == Some(Section::Mesh) && raw.trim() != "[field]" {
            mesh_text.push_str(raw);
            mesh_text.push('\n');
            continue;
        }
        if section == Some(Section::Field) {
            field_text.push_str(raw);
            field_text.push('\n');
            continue;
        }

        let content = strip_comment(raw);
        let trimmed = content.trim();
        if trimmed.is_empty() {
            continue;
        }
        let col = content.len() - content.trim_start().len() + 1;

        if !tag_seen {
            if trimmed == "folia/1" {
                tag_seen = true;
                continue;
            }
            let msg = if trimmed.starts_with("folia/") {
                format!("unsupported format tag `{trimmed}`; expected `folia/1`")
            } else {
                "expected format tag `folia/1` on the first line".to_string()
            };
            return Err(err(file, line, col, msg));
        }

        if let Some(name) = trimmed.strip_prefix('[').and_then(|t| t.strip_suffix(']')) {
            let Some(next) = Section::of(name) else {
                return Err(err(file, line, col, format!("unknown section [{name}]")));
            };
            if seen_sections.contains(&next) {
                return Err(err(file, line, col, format!("duplicate section [{name}]")));
            }
            if seen_sections.last().is_some_and(|&last| next < last) {
                return Err(err(
                    file,
                    line,
                    col,
                    format!("section [{name}] is out of order"),
                ));
            }
            if seen_sections.is_empty() && next != Section::Header {
                return Err(err(file, line, col, "the first section must be [header]"));
            }
            match next {
                Section::Header => header_line = line,
                Section::Mesh => mesh_line = line,
                Section::Field => field_line = line,
                _ => {}
            }
            seen_sections.push(next);
            section = Some(next);
            continue;
        }

        match section {
            None => {
                return Err(err(
                    file,
                    line,
                    col,
                    "expected a section header like [header]",
                ))
            }
            Some(Section::Header) | Some(Section::Flags) => {
                let Some(eq) = content.find('=') else {
                    return Err(err(file, line, col, "expected `key = value`"));
                };
                let key = content[..eq].trim();
                let value = content[eq + 1..].trim();
                let vcol = eq + 2 + content[eq + 1..].len() - content[eq + 1..].trim_start().len();
                let boolean = |b: &mut Option<bool>| -> Result<(), CliError> {
                    if b.is_some() {
                        return Err(err(file, line, col, format!("duplicate key `{key}`")));
                    }
                    *b = Some(match value {
                        "true" => true,
                        "false" => false,
                        _ => return Err(err(file, line, vcol, "expected `true` or `false`")),
                    });
                    Ok(())
                };
                match (section, key) {
                    (Some(Section::Header), "dimension") => {
                        if dimension.is_some() {
                            return Err(err(file, line, col, "duplicate key `dimension`"));
                        }
                        let d: u32 = value.parse().map_err(|_| {
                            err(file, line, vcol, format!("bad dimension `{value}`"))
                        })?;
                        if d < 2 {
                            return Err(err(file, line, vcol, "dimension must be at least 2"));
                        }
                        dimension = Some(d);
                    }
                    (Some(Section::Header), "closed") => boolean(&mut closed)?,
                    (Some(Section::Header), "transversely_orientable") => {
                        boolean(&mut transversely_orientable)?
                    }
                    (Some(Section::Flags), "has_null_homotopic_transversal") => {
                        let mut b = None;
                        boolean(&mut b)?;
                        has_null_homotopic_transversal = b.unwrap();
                    }
                    _ => {
                        return Err(err(
                            file,
                            line,
                            col,
                            format!("unknown key `{key}` in this section"),
                        ))
                    }
                }
            }
            Some(Section::Nodes) => {
                let toks = tokens(content);
                nodes.push(parse_node_line(&toks, &mut node_ids, line, file)?);
            }
            Some(Section::Edges) => {
                let toks = tokens(content);
                edges.push(parse_edge_line(&toks, &mut edge_ids, line, file)?);
            }
            Some(Section::Mesh) | Some(Section::Field) => unreachable!(),
        }
    }

    if !tag_seen {
        return Err(err(file, 1, 1, "expected format tag `folia/1` on the first line"));
    }
    for (required, name) in [
        (Section::Header, "header"),
        (Section::Nodes, "nodes"),
        (Section::Edges, "edges"),
    ] {
        if !seen_sections.contains(&required) {
            return Err(err(file, 1, 1, format!("missing [{name}] section")));
        }
    }
    let missing_key = |key: &str| err(file, header_line, 1, format!("missing key `{key}` in [header]"));
    let dimension = dimension.ok_or_else(|| missing_key("dimension"))?;
    let closed = closed.ok_or_else(|| missing_key("closed"))?;
    let transversely_orientable =
        transversely_orientable.ok_or_else(|| missing_key("transversely_orientable"))?;

    let has_mesh = seen_sections.contains(&Section::Mesh);
    let has_field = seen_sections.contains(&Section::Field);
    let mesh = match (has_mesh, has_field) {
        (false, false) => None,
        (true, false) => {
            return Err(err(file, mesh_line, 1, "a [mesh] section needs a [field] section"))
        }
        (false, true) => {
            return Err(err(file, field_line, 1, "a [field] section needs a [mesh] section"))
        }
        (true, true) => match mesh_from_text("[mesh]", &mesh_text, "[field]", &field_text) {
            Ok(m) => Some(m),
            Err(IngestError::Format {
                file: src,
                line,
                message,
            }) => {
                let base = if src == "[mesh]" { mesh_line } else { field_line };
                return Err(err(file, base + line, 1, message));
            }
            Err(e) => return Err(CliError::Ingest(e)),
        },
    };

    Ok(GraphFile {
        graph: FoliationGraph {
            dimension,
            closed,
            transversely_orientable,
            has_null_homotopic_transversal,
            nodes,
            edges,
        },
        mesh,
    })
}

/// Reads and parses a `.fgr` file from disk.
pub fn read_graph_file(path: &Path) -> Result<GraphFile, CliError> {
    let text = fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    parse_graph_file(&path.display().to_string(), &text)
}

/// Serializes and writes a `.fgr` file to disk.
pub fn write_graph_file(path: &Path, gf: &GraphFile) -> Result<(), CliError> {
    fs::write(path, serialize_graph_file(gf)).map_err(|e| CliError::io(path, e))
}

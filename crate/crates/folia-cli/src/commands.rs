//! The four subcommands, as pure functions from arguments to an [`Outcome`].
//!
//! Keeping the process boundary out of the command layer makes the exit-code
//! contract testable in-process:
//!
//! | code | meaning                                            |
//! |------|----------------------------------------------------|
//! | 0    | success / definitive verdict                       |
//! | 1    | I/O or format error                                |
//! | 2    | degenerate Morse data during ingestion             |
//! | 3    | inconclusive verdict                               |
//! | 4    | precondition failed (or structurally invalid input)|
//! | 5    | model inconsistency or blocked rewrite             |
//! | 64   | usage error (unknown checker or strategy)          |
//!
//! Findings (verdicts, counts) go to stdout; failures go to stderr as one
//! `error:` line. All commands are deterministic: identical inputs produce
//! identical stdout, files, and exit codes.

use std::fmt::Display;
use std::path::Path;

use folia_arrangements::{find_strong_connections, find_trivial_couples};
use folia_core::{counts, FoliationGraph, IndexEntry, NodeKind};
use folia_ingest::{
    build_reeb, classify_critical, load_mesh, split_field, CriticalKind, IngestError,
};
use folia_surgery::{
    eliminate_double_separatrix, eliminate_saddle_pair, eliminate_trivial_couple,
    replace_singular_reeb, simplify, Strategy, SurgeryError,
};
use folia_theorems::{
    center_saddle_decision, classify_leaf_space, closed_transversal_exists, haefliger_report,
    novikov_dichotomy, reeb_sphere_check, EndpointKind, LeafSpaceShape, TheoremError,
    TransversalWitness, Verdict,
};

use crate::dot::render_dot;
use crate::format::{read_graph_file, write_graph_file, GraphFile};
use crate::trace::{move_token, render_trace};
use crate::CliError;

/// Everything a command run produces; `main` only prints and exits.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Outcome {
    pub code: i32,
    pub stdout: String,
    pub stderr: String,
}

impl Outcome {
    fn success(stdout: String) -> Outcome {
        Outcome {
            code: 0,
            stdout,
            stderr: String::new(),
        }
    }

    fn fail(code: i32, message: impl Display) -> Outcome {
        Outcome {
            code,
            stdout: String::new(),
            stderr: format!("error: {message}\n"),
        }
    }
}

fn read_or_fail(path: &Path) -> Result<GraphFile, Outcome> {
    read_graph_file(path).map_err(|e| Outcome::fail(1, e))
}

/// `folia ingest <mesh.off> <field> <out.fgr> [--split]`: sweep the field,
/// report the critical census and the Euler-characteristic cross-check, and
/// write the graph with the mesh embedded.
pub fn cmd_ingest(mesh_path: &Path, field_path: &Path, out_path: &Path, split: bool) -> Outcome {
    let mesh = match load_mesh(mesh_path, field_path) {
        Ok(m) => m,
        Err(e) => return Outcome::fail(1, e),
    };
    let mesh = if split { split_field(&mesh) } else { mesh };
    let census = match classify_critical(&mesh) {
        Ok(c) => c,
        Err(IngestError::DegenerateSaddle {
            vertex,
            multiplicity,
        }) => {
            return Outcome::fail(
                2,
                format!(
                    "degenerate saddle at vertex {vertex} (multiplicity {multiplicity}); \
                     re-run with --split or refine the sampling"
                ),
            )
        }
        Err(e) => return Outcome::fail(1, e),
    };
    let graph = match build_reeb(&mesh) {
        Ok(g) => g,
        Err(e) => return Outcome::fail(1, e),
    };

    let minima = census
        .iter()
        .filter(|c| c.kind == CriticalKind::Minimum)
        .count();
    let maxima = census
        .iter()
        .filter(|c| c.kind == CriticalKind::Maximum)
        .count();
    let saddles = census.len() - minima - maxima;
    let census_chi: i64 = census
        .iter()
        .map(|c| match c.kind {
            CriticalKind::Minimum | CriticalKind::Maximum => 1,
            CriticalKind::Saddle { multiplicity } => -i64::from(multiplicity),
        })
        .sum();
    let mesh_chi = mesh.vertex_count() as i64 - mesh.edge_count() as i64
        + mesh.triangle_count() as i64;
    if census_chi != mesh_chi {
        return Outcome::fail(
            1,
            format!("critical census sums to {census_chi} but the mesh has chi={mesh_chi}"),
        );
    }

    let c = counts(&graph);
    let mut out = format!("critical points: minima {minima}, saddles {saddles}, maxima {maxima}\n");
    out.push_str(&format!("counts ({},{})\n", c.centers, c.saddles));
    out.push_str(&format!("chi={mesh_chi} OK\n"));
    let gf = GraphFile {
        graph,
        mesh: Some(mesh),
    };
    if let Err(e) = write_graph_file(out_path, &gf) {
        return Outcome::fail(1, e);
    }
    out.push_str(&format!("wrote {}\n", out_path.display()));
    Outcome::success(out)
}

fn index_counts(entries: &[IndexEntry]) -> (usize, usize) {
    let k = entries.iter().filter(|e| **e == IndexEntry::Extremum).count();
    let l = entries
        .iter()
        .filter(|e| matches!(e, IndexEntry::Saddle(_)))
        .count();
    (k, l)
}

fn trace_lines(out: &mut String, trace: &folia_surgery::MoveTrace) {
    let n = trace.records.len();
    out.push_str(&format!(
        "trace: {n} move{}\n",
        if n == 1 { "" } else { "s" }
    ));
    for (i, r) in trace.records.iter().enumerate() {
        out.push_str(&format!("  move {}: {}\n", i + 1, move_token(&r.applied)));
    }
}

fn endpoint_token(e: &EndpointKind) -> &'static str {
    match e {
        EndpointKind::BoundaryLeaf => "boundary-leaf",
        EndpointKind::StableSingularity => "stable-singularity",
        EndpointKind::StableCircle => "stable-circle",
        EndpointKind::Z2Leaf => "z2-leaf",
    }
}

fn shape_token(s: &LeafSpaceShape) -> String {
    match s {
        LeafSpaceShape::Circle => "circle".into(),
        LeafSpaceShape::Interval { end0, end1 } => {
            format!("interval[{}, {}]", endpoint_token(end0), endpoint_token(end1))
        }
        LeafSpaceShape::OrbifoldInterval { end0, end1 } => format!(
            "orbifold-interval[{}, {}]",
            endpoint_token(end0),
            endpoint_token(end1)
        ),
    }
}

fn witness_token(w: &TransversalWitness) -> String {
    match w {
        TransversalWitness::NovikovNode(id) => format!("novikov node {id}"),
        TransversalWitness::OpenFamily(id) => format!("open family {id}"),
        TransversalWitness::DirectedCycle(edges) => {
            format!("directed cycle {}", edges.join(","))
        }
    }
}

fn theorem_error_outcome(e: TheoremError) -> Outcome {
    match e {
        TheoremError::Precondition { reason } => Outcome {
            code: 4,
            stdout: format!("PRECONDITION-FAILED: {reason}\n"),
            stderr: String::new(),
        },
        TheoremError::ModelInconsistency { clause } => Outcome {
            code: 5,
            stdout: format!("MODEL-INCONSISTENCY: {clause}\n"),
            stderr: String::new(),
        },
        other => Outcome::fail(5, other),
    }
}

fn verdict_outcome(g: &FoliationGraph, verdict: Verdict) -> Outcome {
    match verdict {
        Verdict::Sphere { trace } => {
            let c = counts(g);
            let (k0, l0) = (c.centers, c.saddles);
            let (k1, l1) = match trace.records.last() {
                Some(r) => index_counts(&r.index_after),
                None => (k0, l0),
            };
            let mut out = format!("SPHERE (k={k0},l={l0} -> k={k1},l={l1})\n");
            trace_lines(&mut out, &trace);
            Outcome::success(out)
        }
        Verdict::EellsKuiper {
            saddle,
            index,
            trace,
        } => {
            let mut out = format!("EELLS-KUIPER (n={}, saddle index {index})\n", g.dimension);
            out.push_str(&format!("witness saddle: {saddle}\n"));
            trace_lines(&mut out, &trace);
            Outcome::success(out)
        }
        Verdict::FibrationOverCircle => Outcome::success("FIBRATION-OVER-CIRCLE\n".into()),
        Verdict::AllCompact => Outcome::success("ALL-COMPACT\n".into()),
        Verdict::NovikovPresent { witness } => {
            Outcome::success(format!("NOVIKOV-PRESENT (witness {witness})\n"))
        }
        Verdict::Inconclusive { reason } => Outcome {
            code: 3,
            stdout: format!("INCONCLUSIVE: {reason}\n"),
            stderr: String::new(),
        },
        Verdict::PreconditionFailed { reason } => Outcome {
            code: 4,
            stdout: format!("PRECONDITION-FAILED: {reason}\n"),
            stderr: String::new(),
        },
    }
}

/// `folia classify <graph.fgr> --checker <name>`: run one decision procedure
/// and encode its verdict in the exit code.
pub fn cmd_classify(graph_path: &Path, checker: &str) -> Outcome {
    let gf = match read_or_fail(graph_path) {
        Ok(gf) => gf,
        Err(o) => return o,
    };
    let g = &gf.graph;
    let verdict = match checker {
        "reeb-sphere" => Ok(reeb_sphere_check(g)),
        "center-saddle" => center_saddle_decision(g),
        "novikov" => novikov_dichotomy(g),
        "haefliger" => haefliger_report(g),
        "leaf-space" => {
            return match classify_leaf_space(g) {
                Ok(shape) => Outcome::success(format!("LEAF-SPACE {}\n", shape_token(&shape))),
                Err(e) => theorem_error_outcome(e),
            }
        }
        "transversal" => {
            return match closed_transversal_exists(g) {
                Ok(report) => {
                    let line = if report.exists {
                        let w = report
                            .witness
                            .as_ref()
                            .map(witness_token)
                            .unwrap_or_else(|| "unrecorded".into());
                        format!("TRANSVERSAL yes (witness {w})\n")
                    } else {
                        let cert = report
                            .certificate
                            .as_ref()
                            .map(shape_token)
                            .unwrap_or_else(|| "unrecorded".into());
                        format!("TRANSVERSAL no (leaf space {cert})\n")
                    };
                    Outcome::success(line)
                }
                Err(e) => theorem_error_outcome(e),
            }
        }
        other => {
            return Outcome::fail(
                64,
                format!(
                    "unknown checker `{other}`; expected reeb-sphere, center-saddle, \
                     leaf-space, transversal, novikov, or haefliger"
                ),
            )
        }
    };
    match verdict {
        Ok(v) => verdict_outcome(g, v),
        Err(e) => theorem_error_outcome(e),
    }
}

/// First rule that stops a still-available rewrite at the fixed point, probed
/// in the same candidate order the simplifier uses for `strategy`.
fn blocked_rule(g: &FoliationGraph, strategy: Strategy) -> Option<String> {
    let couples = matches!(strategy, Strategy::TrivialCouples | Strategy::Full);
    let pairs = matches!(strategy, Strategy::SaddlePairs | Strategy::Full);
    let full = matches!(strategy, Strategy::Full);
    let blocked = |r: Result<(FoliationGraph, folia_surgery::MoveRecord), SurgeryError>| match r {
        Err(SurgeryError::Blocked(msg)) => Some(msg),
        _ => None,
    };
    let centers = || {
        let mut ids: Vec<&str> = g
            .nodes
            .iter()
            .filter(|n| n.kind == NodeKind::Center)
            .map(|n| n.id.as_str())
            .collect();
        ids.sort_unstable();
        ids
    };
    if couples {
        for couple in find_trivial_couples(g).ok()? {
            if let Some(msg) = blocked(eliminate_trivial_couple(g, &couple.center)) {
                return Some(msg);
            }
        }
    }
    if full {
        for center in centers() {
            if let Some(msg) = blocked(eliminate_double_separatrix(g, center)) {
                return Some(msg);
            }
        }
    }
    if pairs {
        for conn in find_strong_connections(g).ok()? {
            if let Some(msg) = blocked(eliminate_saddle_pair(g, &conn.edge)) {
                return Some(msg);
            }
        }
    }
    if full {
        for center in centers() {
            if let Some(msg) = blocked(replace_singular_reeb(g, center)) {
                return Some(msg);
            }
        }
    }
    None
}

/// `folia simplify <graph.fgr> <out.fgr> [--strategy <s>]`: rewrite to a
/// fixed point, write the result and a `.trace` sidecar. A rewrite that is
/// still available but blocked by a side condition is an error (exit 5) and
/// writes nothing. The embedded mesh, if any, is dropped: after surgery the
/// graph no longer describes the mesh's level sets.
pub fn cmd_simplify(graph_path: &Path, out_path: &Path, strategy: &str) -> Outcome {
    let strategy = match strategy {
        "trivial-couples" => Strategy::TrivialCouples,
        "saddle-pairs" => Strategy::SaddlePairs,
        "full" => Strategy::Full,
        other => {
            return Outcome::fail(
                64,
                format!(
                    "unknown strategy `{other}`; expected trivial-couples, saddle-pairs, or full"
                ),
            )
        }
    };
    let gf = match read_or_fail(graph_path) {
        Ok(gf) => gf,
        Err(o) => return o,
    };
    let before = counts(&gf.graph).singularities();
    let (g, trace) = match simplify(&gf.graph, strategy) {
        Ok(pair) => pair,
        Err(SurgeryError::InvalidGraph(report)) => {
            return Outcome::fail(4, format!("graph is not structurally valid:\n{report}"))
        }
        Err(e) => return Outcome::fail(5, e),
    };
    if let Some(rule) = blocked_rule(&g, strategy) {
        return Outcome::fail(5, format!("simplification blocked: {rule}"));
    }
    let after = counts(&g).singularities();

    let trace_path = out_path.with_extension("trace");
    if let Err(e) = write_graph_file(out_path, &GraphFile::bare(g)) {
        return Outcome::fail(1, e);
    }
    if let Err(e) =
        std::fs::write(&trace_path, render_trace(&trace)).map_err(|e| CliError::io(&trace_path, e))
    {
        return Outcome::fail(1, e);
    }

    let n = trace.records.len();
    let mut out = format!("applied {n} move{}\n", if n == 1 { "" } else { "s" });
    for (i, r) in trace.records.iter().enumerate() {
        out.push_str(&format!("  move {}: {}\n", i + 1, move_token(&r.applied)));
    }
    out.push_str(&format!("singularities: {before} -> {after}\n"));
    out.push_str(&format!(
        "wrote {} and {}\n",
        out_path.display(),
        trace_path.display()
    ));
    Outcome::success(out)
}

/// `folia export-dot <graph.fgr> <out.dot>`: deterministic Graphviz render.
pub fn cmd_export_dot(graph_path: &Path, out_path: &Path) -> Outcome {
    let gf = match read_or_fail(graph_path) {
        Ok(gf) => gf,
        Err(o) => return o,
    };
    let dot = render_dot(&gf.graph);
    if let Err(e) = std::fs::write(out_path, dot).map_err(|e| CliError::io(out_path, e)) {
        return Outcome::fail(1, e);
    }
    Outcome::success(format!("wrote {}\n", out_path.display()))
}

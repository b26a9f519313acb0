//! Rendering of surgery traces as `.trace` sidecar files.
//!
//! The format is line-oriented and append-only friendly:
//!
//! ```text
//! trace/1
//! moves = 2
//!
//! move 1: eliminate_trivial_couple center=m1
//!   removed nodes: q, m1
//!   removed edges: e1, e2
//!   touched edges: e3
//!   index: extremum x3, saddle(1) -> extremum x2
//! move 2: ...
//! ```
//!
//! Every applied move lists exactly what it removed, added, and rewired, plus
//! the singularity-index multiset before and after, so a reader can audit
//! each step without replaying it. Empty detail lines are omitted. The
//! rendering is a pure function of the trace, so repeated runs produce
//! byte-identical files.

use folia_core::IndexEntry;
use folia_surgery::{Move, MoveRecord, MoveTrace};

/// One-token spelling of a move with its target, e.g.
/// `eliminate_saddle_pair edge=m`.
pub fn move_token(m: &Move) -> String {
    match m {
        Move::EliminateTrivialCouple { center } => {
            format!("eliminate_trivial_couple center={center}")
        }
        Move::EliminateDoubleSeparatrix { center } => {
            format!("eliminate_double_separatrix center={center}")
        }
        Move::ReplaceSingularReeb { center } => format!("replace_singular_reeb center={center}"),
        Move::CreateSaddlePair { edge, index } => {
            format!("create_saddle_pair edge={edge} index={index}")
        }
        Move::EliminateSaddlePair { edge } => format!("eliminate_saddle_pair edge={edge}"),
    }
}

fn index_entry_token(e: &IndexEntry) -> String {
    match e {
        IndexEntry::Extremum => "extremum".into(),
        IndexEntry::Saddle(k) => format!("saddle({k})"),
        IndexEntry::CircleComponent => "circle".into(),
    }
}

/// Renders a sorted index multiset with run-length grouping:
/// `extremum x2, saddle(1)`.
pub fn index_multiset_token(entries: &[IndexEntry]) -> String {
    if entries.is_empty() {
        return "(none)".into();
    }
    let mut groups: Vec<(String, usize)> = Vec::new();
    for e in entries {
        let token = index_entry_token(e);
        match groups.last_mut() {
            Some((t, n)) if *t == token => *n += 1,
            _ => groups.push((token, 1)),
        }
    }
    groups
        .into_iter()
        .map(|(t, n)| if n == 1 { t } else { format!("{t} x{n}") })
        .collect::<Vec<_>>()
        .join(", ")
}

fn detail_line(out: &mut String, label: &str, ids: &[String]) {
    if !ids.is_empty() {
        out.push_str(&format!("  {label}: {}\n", ids.join(", ")));
    }
}

fn record_block(out: &mut String, number: usize, r: &MoveRecord) {
    out.push_str(&format!("move {number}: {}\n", move_token(&r.applied)));
    detail_line(out, "removed nodes", &r.removed_nodes);
    detail_line(out, "removed edges", &r.removed_edges);
    detail_line(out, "added nodes", &r.added_nodes);
    detail_line(out, "added edges", &r.added_edges);
    detail_line(out, "touched nodes", &r.touched_nodes);
    detail_line(out, "touched edges", &r.touched_edges);
    out.push_str(&format!(
        "  index: {} -> {}\n",
        index_multiset_token(&r.index_before),
        index_multiset_token(&r.index_after)
    ));
}

/// Renders a full trace file.
pub fn render_trace(trace: &MoveTrace) -> String {
    let mut out = format!("trace/1\nmoves = {}\n", trace.records.len());
    for (i, r) in trace.records.iter().enumerate() {
        out.push('\n');
        record_block(&mut out, i + 1, r);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use folia_surgery::{simplify, Strategy};
    use folia_testkit::fixtures;

    #[test]
    fn the_bumpy_sphere_trace_reads_back_every_detail() {
        let (_, trace) = simplify(&fixtures::bumpy_sphere(), Strategy::TrivialCouples).unwrap();
        let text = render_trace(&trace);
        assert!(text.starts_with("trace/1\nmoves = 1\n"));
        assert!(text.contains("move 1: eliminate_trivial_couple center="));
        assert!(text.contains("  index: extremum x3, saddle(1) -> extremum x2\n"));
        assert_eq!(text, render_trace(&trace), "rendering is deterministic");
    }

    #[test]
    fn an_empty_trace_is_just_the_header() {
        assert_eq!(render_trace(&MoveTrace::default()), "trace/1\nmoves = 0\n");
    }

    #[test]
    fn every_move_spelling_is_distinct() {
        let moves = [
            Move::EliminateTrivialCouple { center: "c".into() },
            Move::EliminateDoubleSeparatrix { center: "c".into() },
            Move::ReplaceSingularReeb { center: "c".into() },
            Move::CreateSaddlePair {
                edge: "e".into(),
                index: 1,
            },
            Move::EliminateSaddlePair { edge: "e".into() },
        ];
        let tokens: Vec<String> = moves.iter().map(move_token).collect();
        let unique: std::collections::HashSet<&String> = tokens.iter().collect();
        assert_eq!(unique.len(), moves.len());
    }
}

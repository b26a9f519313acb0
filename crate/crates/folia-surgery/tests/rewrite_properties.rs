//! Properties every rewrite must keep on randomly grown graphs: validity,
//! the exact singularity-index delta, untouched parts staying byte-identical,
//! and deterministic replay.

use std::collections::BTreeSet;

use folia_core::{validate, FoliationGraph, IndexEntry, NodeKind};
use folia_surgery::{
    apply_move, create_saddle_pair, eliminate_double_separatrix, eliminate_saddle_pair,
    eliminate_trivial_couple, replace_singular_reeb, Move, MoveRecord, SurgeryError,
};
use folia_testkit::gen::random_valid_graph;

/// Multiset difference `a - b` (entries of `a` with one matching entry of `b`
/// removed per occurrence).
fn multiset_diff(a: &[IndexEntry], b: &[IndexEntry]) -> Vec<IndexEntry> {
    let mut rest = b.to_vec();
    let mut out = Vec::new();
    for x in a {
        if let Some(pos) = rest.iter().position(|y| y == x) {
            rest.remove(pos);
        } else {
            out.push(*x);
        }
    }
    out
}

fn expected_delta(g: &FoliationGraph, record: &MoveRecord) -> (Vec<IndexEntry>, Vec<IndexEntry>) {
    let removed_indices: Vec<IndexEntry> = record
        .removed_nodes
        .iter()
        .filter_map(|id| match &g.node(id).expect("removed node existed").kind {
            NodeKind::Center => Some(IndexEntry::Extremum),
            NodeKind::Saddle(s) => Some(IndexEntry::Saddle(s.index)),
            NodeKind::StableCircle => Some(IndexEntry::CircleComponent),
            _ => None,
        })
        .collect();
    match &record.applied {
        Move::CreateSaddlePair { index, .. } => (
            vec![IndexEntry::Saddle(*index), IndexEntry::Saddle(*index + 1)],
            Vec::new(),
        ),
        _ => {
            let mut lost = removed_indices;
            lost.sort();
            (Vec::new(), lost)
        }
    }
}

/// Every node and family the record does not claim to have removed, added or
/// touched must be byte-identical between input and output.
fn assert_complement_untouched(g: &FoliationGraph, out: &FoliationGraph, record: &MoveRecord) {
    let claimed_nodes: BTreeSet<&String> = record
        .removed_nodes
        .iter()
        .chain(&record.added_nodes)
        .chain(&record.touched_nodes)
        .collect();
    let claimed_edges: BTreeSet<&String> = record
        .removed_edges
        .iter()
        .chain(&record.added_edges)
        .chain(&record.touched_edges)
        .collect();
    for node in &g.nodes {
        if !claimed_nodes.contains(&node.id) {
            assert_eq!(
                out.node(&node.id),
                Some(node),
                "unclaimed node `{}` changed",
                node.id
            );
        }
    }
    for edge in &g.edges {
        if !claimed_edges.contains(&edge.id) {
            assert_eq!(
                out.edge(&edge.id),
                Some(edge),
                "unclaimed family `{}` changed",
                edge.id
            );
        }
    }
    for node in &out.nodes {
        assert!(
            g.node(&node.id).is_some() || record.added_nodes.contains(&node.id),
            "node `{}` appeared without being recorded",
            node.id
        );
    }
    for edge in &out.edges {
        assert!(
            g.edge(&edge.id).is_some() || record.added_edges.contains(&edge.id),
            "family `{}` appeared without being recorded",
            edge.id
        );
    }
}

fn check_one(
    g: &FoliationGraph,
    label: &str,
    result: Result<(FoliationGraph, MoveRecord), SurgeryError>,
) -> bool {
    let (out, record) = match result {
        Ok(pair) => pair,
        Err(SurgeryError::NotApplicable(_)) | Err(SurgeryError::Blocked(_)) => return false,
        Err(e) => panic!("rewrite {label} failed structurally: {e}\ninput graph: {g:#?}"),
    };
    assert!(
        validate(&out).is_clean(),
        "rewrite produced an invalid graph"
    );
    let (gained, lost) = expected_delta(g, &record);
    assert_eq!(
        multiset_diff(&record.index_after, &record.index_before),
        gained,
        "unexpected indices gained by {:?}",
        record.applied
    );
    assert_eq!(
        multiset_diff(&record.index_before, &record.index_after),
        lost,
        "unexpected indices lost by {:?}",
        record.applied
    );
    assert_complement_untouched(g, &out, &record);

    // Determinism: the same move on the same graph gives identical output.
    let (again, re_record) = apply_move(g, &record.applied).expect("replay applies");
    assert_eq!(out, again, "replay diverged for {:?}", record.applied);
    assert_eq!(record, re_record);
    true
}

/// Every applicable move on the graph, attempted and checked. Returns how
/// many applied.
fn exercise_all_moves(g: &FoliationGraph) -> usize {
    let mut applied = 0;
    let centers: Vec<String> = g
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Center))
        .map(|n| n.id.clone())
        .collect();
    for c in &centers {
        applied += check_one(g, "trivial-couple", eliminate_trivial_couple(g, c)) as usize;
        applied += check_one(g, "double-separatrix", eliminate_double_separatrix(g, c)) as usize;
        applied += check_one(g, "singular-cap", replace_singular_reeb(g, c)) as usize;
    }
    for e in &g.edges {
        if e.strong_connection {
            applied += check_one(g, "pair-elimination", eliminate_saddle_pair(g, &e.id)) as usize;
        }
        if g.dimension >= 3 {
            applied += check_one(g, "pair-creation-low", create_saddle_pair(g, &e.id, 1)) as usize;
            applied += check_one(
                g,
                "pair-creation-high",
                create_saddle_pair(g, &e.id, g.dimension - 2),
            ) as usize;
        }
    }
    applied
}

#[test]
fn every_applicable_move_keeps_the_graph_sound() {
    let mut total = 0;
    for dimension in 2..=5 {
        for seed in 0..12 {
            let g = random_valid_graph(dimension, 6, seed);
            total += exercise_all_moves(&g);
        }
    }
    assert!(
        total >= 150,
        "expected a rich move corpus, only {total} moves applied"
    );
}

#[test]
fn longer_random_histories_stay_sound() {
    for dimension in [2, 3, 6] {
        for seed in 100..104 {
            let g = random_valid_graph(dimension, 14, seed);
            exercise_all_moves(&g);
        }
    }
}

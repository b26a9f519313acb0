//! Deterministic simplification loops and trace replay.

use folia_arrangements::{find_strong_connections, find_trivial_couples};
use folia_core::{validate, FoliationGraph, NodeKind};

use crate::moves::{
    apply_move, eliminate_double_separatrix, eliminate_saddle_pair, eliminate_trivial_couple,
    replace_singular_reeb,
};
use crate::{Move, MoveRecord, MoveTrace, SurgeryError};

/// Which rewrites a simplification run is allowed to use.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Strategy {
    /// Only trivial-couple eliminations.
    TrivialCouples,
    /// Only saddle-pair eliminations.
    SaddlePairs,
    /// All singularity-removing rewrites. Each round tries, in order: a
    /// trivial couple, a double-separatrix elimination, a saddle-pair
    /// elimination, a singular-cap replacement; candidates are visited in id
    /// order and the first applicable one is taken.
    Full,
}

/// Apply singularity-removing rewrites until none applies. The candidate
/// order is deterministic, so the same input always yields the same trace.
/// Blocked candidates are skipped; structural errors abort the run.
pub fn simplify(
    g: &FoliationGraph,
    strategy: Strategy,
) -> Result<(FoliationGraph, MoveTrace), SurgeryError> {
    let report = validate(g);
    if !report.is_clean() {
        return Err(SurgeryError::InvalidGraph(report));
    }
    let mut current = g.clone();
    let mut trace = MoveTrace::default();
    while let Some((next, record)) = next_move(&current, strategy)? {
        current = next;
        trace.records.push(record);
    }
    Ok((current, trace))
}

fn next_move(
    g: &FoliationGraph,
    strategy: Strategy,
) -> Result<Option<(FoliationGraph, MoveRecord)>, SurgeryError> {
    let couples = matches!(strategy, Strategy::TrivialCouples | Strategy::Full);
    let pairs = matches!(strategy, Strategy::SaddlePairs | Strategy::Full);
    let full = matches!(strategy, Strategy::Full);

    if couples {
        for couple in find_trivial_couples(g)? {
            match eliminate_trivial_couple(g, &couple.center) {
                Ok(applied) => return Ok(Some(applied)),
                Err(SurgeryError::Blocked(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    if full {
        for center in sorted_centers(g) {
            match eliminate_double_separatrix(g, &center) {
                Ok(applied) => return Ok(Some(applied)),
                Err(SurgeryError::NotApplicable(_)) | Err(SurgeryError::Blocked(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    if pairs {
        for connection in find_strong_connections(g)? {
            match eliminate_saddle_pair(g, &connection.edge) {
                Ok(applied) => return Ok(Some(applied)),
                Err(SurgeryError::Blocked(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    if full {
        for center in sorted_centers(g) {
            match replace_singular_reeb(g, &center) {
                Ok(applied) => return Ok(Some(applied)),
                Err(SurgeryError::NotApplicable(_)) | Err(SurgeryError::Blocked(_)) => continue,
                Err(e) => return Err(e),
            }
        }
    }
    Ok(None)
}

fn sorted_centers(g: &FoliationGraph) -> Vec<String> {
    let mut out: Vec<String> = g
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Center))
        .map(|n| n.id.clone())
        .collect();
    out.sort();
    out
}

/// Re-apply a recorded move sequence to a graph. Since every operation
/// derives its fresh identifiers from the graph it is applied to, replaying a
/// trace on the graph it was recorded from reproduces the result exactly.
pub fn replay(
    g: &FoliationGraph,
    moves: &[Move],
) -> Result<(FoliationGraph, MoveTrace), SurgeryError> {
    let mut current = g.clone();
    let mut trace = MoveTrace::default();
    for mv in moves {
        let (next, record) = apply_move(&current, mv)?;
        current = next;
        trace.records.push(record);
    }
    Ok((current, trace))
}

#[cfg(test)]
mod tests {
    use super::*;
    use folia_core::graphs_equal;
    use folia_testkit::fixtures;

    #[test]
    fn bumpy_sphere_simplifies_by_one_couple() {
        let g = fixtures::bumpy_sphere();
        let (out, trace) = simplify(&g, Strategy::TrivialCouples).unwrap();
        assert_eq!(trace.records.len(), 1);
        assert!(graphs_equal(&out, &fixtures::two_center(2)).unwrap());
    }

    #[test]
    fn torus_fibration_simplifies_in_two_moves() {
        let g = fixtures::torus_height();
        let (out, trace) = simplify(&g, Strategy::Full).unwrap();
        assert_eq!(trace.records.len(), 2);
        assert!(graphs_equal(&out, &fixtures::circle_leaf_space()).unwrap());
        assert!(out
            .nodes
            .iter()
            .all(|n| matches!(n.kind, folia_core::NodeKind::MarkedLeaf { .. })));
    }

    #[test]
    fn round_sphere_is_already_minimal() {
        let g = fixtures::two_center(4);
        let (out, trace) = simplify(&g, Strategy::Full).unwrap();
        assert!(trace.records.is_empty());
        assert_eq!(out, g);
    }

    #[test]
    fn created_pair_cancels_under_the_pair_strategy() {
        let g = fixtures::created_pair_n3();
        let (out, trace) = simplify(&g, Strategy::SaddlePairs).unwrap();
        assert_eq!(trace.records.len(), 1);
        assert!(graphs_equal(&out, &fixtures::two_center(3)).unwrap());
    }

    #[test]
    fn singular_cap_is_traded_for_a_novikov_region() {
        let g = fixtures::singular_reeb_s3();
        let (out, trace) = simplify(&g, Strategy::Full).unwrap();
        assert_eq!(trace.records.len(), 1);
        assert!(graphs_equal(&out, &fixtures::s3_reeb_plus_circle()).unwrap());
    }

    #[test]
    fn replaying_a_trace_reproduces_the_result_exactly() {
        for g in [
            fixtures::bumpy_sphere(),
            fixtures::torus_height(),
            fixtures::singular_reeb_s3(),
            fixtures::created_pair_n3(),
        ] {
            let (out, trace) = simplify(&g, Strategy::Full).unwrap();
            let (replayed, retrace) = replay(&g, &trace.moves()).unwrap();
            assert_eq!(out, replayed, "replay must be byte-identical");
            assert_eq!(trace, retrace);
        }
    }

    #[test]
    fn strategies_restrict_the_available_moves() {
        // The torus fibration needs double-separatrix merges, which the
        // couples-only strategy may not use.
        let g = fixtures::torus_height();
        let (out, trace) = simplify(&g, Strategy::TrivialCouples).unwrap();
        assert!(trace.records.is_empty());
        assert_eq!(out, g);
    }
}

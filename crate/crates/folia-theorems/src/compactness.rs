//! Compactness dichotomies: every leaf compact versus a Novikov-type region
//! of open leaves, with consistency checks tying the singularity census to
//! the leaf labels.

use folia_arrangements::all_singular_weakly_stable;
use folia_core::{counts, validate, FoliationGraph, HolonomyLabel, LeafTopology, NodeKind};

use crate::{TheoremError, Verdict};

fn precondition(reason: String) -> Verdict {
    Verdict::PreconditionFailed { reason }
}

fn inconsistency(clause: String) -> TheoremError {
    TheoremError::ModelInconsistency { clause }
}

fn sorted_novikov_nodes(g: &FoliationGraph) -> Vec<&str> {
    let mut out: Vec<&str> = g
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Novikov))
        .map(|n| n.id.as_str())
        .collect();
    out.sort_unstable();
    out
}

fn sorted_open_families(g: &FoliationGraph) -> Vec<&str> {
    let mut out: Vec<&str> = g
        .edges
        .iter()
        .filter(|e| !e.topology.is_compact())
        .map(|e| e.id.as_str())
        .collect();
    out.sort_unstable();
    out
}

fn sorted_leaves_where(g: &FoliationGraph, keep: impl Fn(HolonomyLabel) -> bool) -> Vec<&str> {
    let mut out: Vec<&str> = g
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::MarkedLeaf { holonomy, .. } if keep(holonomy)))
        .map(|n| n.id.as_str())
        .collect();
    out.sort_unstable();
    out
}

/// The best available witness of open-leaf behaviour: a leaf the open leaves
/// accumulate on (one-sided holonomy preferred), else a novikov node, else
/// the open family itself.
fn accumulation_witness(g: &FoliationGraph) -> Option<String> {
    sorted_leaves_where(g, |h| h == HolonomyLabel::Unilateral)
        .first()
        .or(sorted_leaves_where(g, |h| h != HolonomyLabel::Trivial).first())
        .map(|id| id.to_string())
        .or_else(|| sorted_novikov_nodes(g).first().map(|id| id.to_string()))
        .or_else(|| sorted_open_families(g).first().map(|id| id.to_string()))
}

/// The three-dimensional dichotomy for foliations whose singular components
/// are all weakly stable: either every leaf is compact, or a Novikov-type
/// region is present, witnessed by a novikov node or by a leaf the open
/// leaves accumulate on. Exactly one of the two verdicts holds on every
/// graph in the regime.
pub fn novikov_dichotomy(g: &FoliationGraph) -> Result<Verdict, TheoremError> {
    let report = validate(g);
    if !report.is_clean() {
        return Ok(precondition(format!(
            "graph fails structural validation:\n{report}"
        )));
    }
    if g.dimension != 3 {
        return Ok(precondition(format!(
            "stated for dimension 3, got {}",
            g.dimension
        )));
    }
    if !all_singular_weakly_stable(g) {
        let saddle = g
            .nodes
            .iter()
            .find(|n| matches!(n.kind, NodeKind::Saddle(_)))
            .map(|n| n.id.clone())
            .unwrap_or_default();
        return Ok(precondition(format!(
            "saddle `{saddle}` is not weakly stable"
        )));
    }

    if let Some(node) = sorted_novikov_nodes(g).first() {
        return Ok(Verdict::NovikovPresent {
            witness: node.to_string(),
        });
    }
    if !sorted_open_families(g).is_empty() {
        let witness = accumulation_witness(g).expect("an open family is its own fallback witness");
        return Ok(Verdict::NovikovPresent { witness });
    }
    Ok(Verdict::AllCompact)
}

/// Closed-leaf structure from the singularity census, in dimension at least
/// three on a transversely orientable graph. With k centers and l saddles:
///
/// - k >= l+1 forces every leaf compact — any novikov node or open family is
///   a model inconsistency — and when k >= l+2 or the manifold has boundary,
///   every family must consist of spheres;
/// - k = l splits into the all-compact case and the case of a leaf with
///   one-sided accumulation, reported with its witness; open leaves with
///   nothing to accumulate on are inconsistent;
/// - k < l is outside the statement and reported inconclusive.
///
/// A graph flagged as carrying a null-homotopic closed transversal over a
/// weakly stable singular set must exhibit a leaf with unilateral holonomy.
pub fn haefliger_report(g: &FoliationGraph) -> Result<Verdict, TheoremError> {
    let report = validate(g);
    if !report.is_clean() {
        return Ok(precondition(format!(
            "graph fails structural validation:\n{report}"
        )));
    }
    if !g.transversely_orientable {
        return Ok(precondition(
            "requires a transverse orientation (pass the double-cover graph)".into(),
        ));
    }
    if g.dimension < 3 {
        return Ok(precondition(format!(
            "stated for dimension >= 3, got {}",
            g.dimension
        )));
    }

    let c = counts(g);
    let (k, l) = (c.centers, c.saddles);
    let novikov = sorted_novikov_nodes(g);
    let open = sorted_open_families(g);

    if g.has_null_homotopic_transversal
        && all_singular_weakly_stable(g)
        && sorted_leaves_where(g, |h| h == HolonomyLabel::Unilateral).is_empty()
    {
        return Err(inconsistency(
            "a null-homotopic closed transversal over a weakly stable singular set forces \
             a leaf with one-sided (unilateral) holonomy, but no marked leaf carries it"
                .into(),
        ));
    }

    if k > l {
        if let Some(node) = novikov.first() {
            return Err(inconsistency(format!(
                "k={k} centers against l={l} saddles force every leaf to be compact, yet \
                 `{node}` marks a region of open leaves"
            )));
        }
        if let Some(edge) = open.first() {
            return Err(inconsistency(format!(
                "k={k} centers against l={l} saddles force every leaf to be compact, yet \
                 family `{edge}` has non-compact leaves"
            )));
        }
        let has_boundary = !g.closed
            || g.nodes
                .iter()
                .any(|n| matches!(n.kind, NodeKind::BoundaryTangent));
        if k >= l + 2 || has_boundary {
            let sphere = LeafTopology::sphere_label(g.dimension);
            if let Some(edge) = g.edges.iter().find(|e| e.topology != sphere) {
                return Err(inconsistency(format!(
                    "with k={k}, l={l}{} every leaf must be a sphere; family `{}` is \
                     labelled otherwise",
                    if has_boundary { " and boundary present" } else { "" },
                    edge.id
                )));
            }
        }
        return Ok(Verdict::AllCompact);
    }

    if k == l {
        if novikov.is_empty() && open.is_empty() {
            return Ok(Verdict::AllCompact);
        }
        return match accumulation_witness(g) {
            Some(witness) => Ok(Verdict::NovikovPresent { witness }),
            None => Err(inconsistency(
                "open leaves present but no leaf, region or family to accumulate on".into(),
            )),
        };
    }

    Ok(Verdict::Inconclusive {
        reason: format!("k={k} < l={l} is outside the closed-leaves statement"),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use folia_core::{LeafFamily, NodeKind};
    use folia_testkit::{assert_valid, fixtures};

    #[test]
    fn dichotomy_on_compact_graphs() {
        assert_eq!(
            novikov_dichotomy(&fixtures::s3_two_circles()).unwrap(),
            Verdict::AllCompact
        );
        assert_eq!(
            novikov_dichotomy(&fixtures::two_center(3)).unwrap(),
            Verdict::AllCompact
        );
    }

    #[test]
    fn dichotomy_detects_novikov_regions() {
        assert_eq!(
            novikov_dichotomy(&fixtures::s3_reeb_plus_circle()).unwrap(),
            Verdict::NovikovPresent {
                witness: "N".into()
            }
        );
        assert_eq!(
            novikov_dichotomy(&fixtures::s3_double_reeb()).unwrap(),
            Verdict::NovikovPresent {
                witness: "N1".into()
            }
        );
    }

    #[test]
    fn dichotomy_sees_open_bands_without_novikov_nodes() {
        assert_eq!(
            novikov_dichotomy(&fixtures::s3_two_circles_open()).unwrap(),
            Verdict::NovikovPresent {
                witness: "L1".into()
            }
        );
    }

    #[test]
    fn dichotomy_requires_dimension_three_and_stable_singularities() {
        assert!(matches!(
            novikov_dichotomy(&fixtures::middle_saddle(4, 2)).unwrap(),
            Verdict::PreconditionFailed { .. }
        ));
        let verdict = novikov_dichotomy(&fixtures::singular_reeb_s3()).unwrap();
        let Verdict::PreconditionFailed { reason } = verdict else {
            panic!("expected precondition failure, got {verdict:?}");
        };
        assert!(reason.contains('q'), "{reason}");
        assert!(matches!(
            novikov_dichotomy(&fixtures::two_center(2)).unwrap(),
            Verdict::PreconditionFailed { .. }
        ));
    }

    #[test]
    fn center_majority_certifies_compact_leaves() {
        for g in [
            fixtures::two_center(3),
            fixtures::double_separatrix_n3(),
            fixtures::middle_saddle(4, 2),
            fixtures::created_pair_n3(),
        ] {
            assert_eq!(haefliger_report(&g).unwrap(), Verdict::AllCompact);
        }
    }

    #[test]
    fn novikov_region_against_center_majority_is_inconsistent() {
        let err = haefliger_report(&fixtures::inconsistent_novikov()).unwrap_err();
        let TheoremError::ModelInconsistency { clause } = err else {
            panic!("expected model inconsistency, got {err:?}");
        };
        assert!(clause.contains("compact"), "{clause}");
    }

    #[test]
    fn open_family_against_center_majority_is_inconsistent() {
        let mut g = FoliationGraph::new(3);
        g.add_node("c", NodeKind::Center);
        g.add_node(
            "m1",
            NodeKind::MarkedLeaf {
                topology: LeafTopology::Sphere(2),
                holonomy: HolonomyLabel::Unilateral,
                unresolved_boundary: false,
            },
        );
        g.add_node(
            "m2",
            NodeKind::MarkedLeaf {
                topology: LeafTopology::Torus,
                holonomy: HolonomyLabel::Unilateral,
                unresolved_boundary: false,
            },
        );
        g.add_node("S", NodeKind::StableCircle);
        g.add_edge(LeafFamily::new("e0", "c", "m1", LeafTopology::Sphere(2)));
        g.add_edge(LeafFamily::new("e1", "m1", "m2", LeafTopology::OpenRxS(1)));
        g.add_edge(LeafFamily::new("e2", "m2", "S", LeafTopology::Torus));
        assert_valid(&g);

        let err = haefliger_report(&g).unwrap_err();
        let TheoremError::ModelInconsistency { clause } = err else {
            panic!("expected model inconsistency, got {err:?}");
        };
        assert!(clause.contains("e1"), "{clause}");
    }

    #[test]
    fn reeb_walls_witness_the_balanced_branch() {
        assert_eq!(
            haefliger_report(&fixtures::s3_double_reeb()).unwrap(),
            Verdict::NovikovPresent {
                witness: "L".into()
            }
        );
        assert_eq!(
            haefliger_report(&fixtures::singular_reeb_s3()).unwrap(),
            Verdict::NovikovPresent {
                witness: "L".into()
            }
        );
        assert_eq!(
            haefliger_report(&fixtures::s3_two_circles_open()).unwrap(),
            Verdict::NovikovPresent {
                witness: "L1".into()
            }
        );
    }

    #[test]
    fn claimed_null_homotopic_transversal_needs_a_one_sided_leaf() {
        let err = haefliger_report(&fixtures::missing_unilateral()).unwrap_err();
        let TheoremError::ModelInconsistency { clause } = err else {
            panic!("expected model inconsistency, got {err:?}");
        };
        assert!(clause.contains("unilateral"), "{clause}");
    }

    #[test]
    fn boundary_forces_sphere_families() {
        let mut g = FoliationGraph::new(3);
        g.closed = false;
        g.add_node("B", NodeKind::BoundaryTangent);
        g.add_node("c", NodeKind::Center);
        g.add_edge(LeafFamily::new("e0", "B", "c", LeafTopology::Sphere(2)));
        assert_valid(&g);
        assert_eq!(haefliger_report(&g).unwrap(), Verdict::AllCompact);

        let mut g = FoliationGraph::new(3);
        g.closed = false;
        g.add_node("B", NodeKind::BoundaryTangent);
        g.add_node(
            "m",
            NodeKind::MarkedLeaf {
                topology: LeafTopology::Torus,
                holonomy: HolonomyLabel::Infinite,
                unresolved_boundary: false,
            },
        );
        g.add_node("c", NodeKind::Center);
        g.add_edge(LeafFamily::new("e0", "B", "m", LeafTopology::Torus));
        g.add_edge(LeafFamily::new("e1", "m", "c", LeafTopology::Sphere(2)));
        assert_valid(&g);
        let err = haefliger_report(&g).unwrap_err();
        let TheoremError::ModelInconsistency { clause } = err else {
            panic!("expected model inconsistency, got {err:?}");
        };
        assert!(clause.contains("sphere"), "{clause}");
    }

    #[test]
    fn surfaces_are_out_of_regime() {
        assert!(matches!(
            haefliger_report(&fixtures::torus_height()).unwrap(),
            Verdict::PreconditionFailed { .. }
        ));
        assert!(matches!(
            haefliger_report(&fixtures::projective_plane()).unwrap(),
            Verdict::PreconditionFailed { .. }
        ));
    }
}

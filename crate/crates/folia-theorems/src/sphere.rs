//! Sphere recognition: from stable singularities alone, and by cancelling
//! trivial center-saddle couples until a terminal picture appears.

use folia_arrangements::{
    center_component, classify_boundary, find_trivial_couples, ArrangementCase,
};
use folia_core::{counts, validate, FoliationGraph, HolonomyLabel, NodeKind, ValidationReport};
use folia_surgery::{eliminate_trivial_couple, MoveTrace, SurgeryError};

use crate::{eells_kuiper_admissible, TheoremError, Verdict};

fn invalid_reason(report: &ValidationReport) -> String {
    let first = report
        .errors()
        .next()
        .map(|v| format!("{} ({})", v.rule, v.id))
        .unwrap_or_else(|| "unknown".into());
    format!("graph fails structural validation: {first}")
}

/// Recognize the sphere from its singular set alone: a closed, transversely
/// orientable foliation whose singular set is nonempty and consists only of
/// weakly stable components (centers and stable circles, no saddles) lives
/// on a sphere. No rewriting is needed, so the certificate trace is empty.
pub fn reeb_sphere_check(g: &FoliationGraph) -> Verdict {
    let report = validate(g);
    if !report.is_clean() {
        return Verdict::PreconditionFailed {
            reason: invalid_reason(&report),
        };
    }
    if !g.closed {
        return Verdict::PreconditionFailed {
            reason: "stated for closed manifolds".into(),
        };
    }
    if !g.transversely_orientable {
        return Verdict::PreconditionFailed {
            reason: "requires a transverse orientation (pass the double-cover graph)".into(),
        };
    }
    let c = counts(g);
    if c.centers + c.saddles + c.stable_circles == 0 {
        return Verdict::PreconditionFailed {
            reason: "needs a nonempty singular set".into(),
        };
    }
    if c.saddles > 0 {
        return Verdict::PreconditionFailed {
            reason: format!(
                "every singular component must be weakly stable; found {} saddle(s)",
                c.saddles
            ),
        };
    }
    Verdict::Sphere {
        trace: MoveTrace::default(),
    }
}

/// Why no trivial couple applies: the arrangement met by the first center
/// whose component classifies, in id order.
fn stuck_diagnosis(g: &FoliationGraph) -> String {
    let mut centers: Vec<&str> = g
        .nodes
        .iter()
        .filter(|n| matches!(n.kind, NodeKind::Center))
        .map(|n| n.id.as_str())
        .collect();
    centers.sort_unstable();
    for c in centers {
        let Ok(component) = center_component(g, c) else {
            continue;
        };
        let Ok(case) = classify_boundary(g, &component) else {
            continue;
        };
        return match case {
            ArrangementCase::CenterToCenter { .. } => continue,
            ArrangementCase::SingleSeparatrix { saddle, .. } => format!(
                "center `{c}` forms a couple with saddle `{saddle}` whose splice is blocked"
            ),
            ArrangementCase::DoubleSeparatrix { saddle, .. } => {
                format!("center `{c}` enters saddle `{saddle}` through its odd-sign port")
            }
            ArrangementCase::SelfConnectedSaddle { saddle, .. } => {
                format!("center `{c}` caps the self-connected saddle `{saddle}`")
            }
            ArrangementCase::MiddleIndex { saddle, index } => {
                format!("center `{c}` meets the middle-index saddle `{saddle}` (index {index})")
            }
            ArrangementCase::Obstructed { node } => {
                format!("center `{c}` is obstructed by `{node}`")
            }
        };
    }
    "no center component classifies".into()
}

/// Decide what a closed, transversely orientable foliation with more centers
/// than saddles can be. Trivial center-saddle couples are cancelled one at a
/// time (lowest center id first, recorded in the trace) until none is left;
/// the terminal picture is then read off:
///
/// - no saddles and two centers: the manifold is a sphere;
/// - two centers around a single two-port middle-index saddle: a manifold
///   with exactly three nondegenerate critical points, which forces the
///   saddle index to be n/2 in one of the admissible even dimensions;
/// - anything else is reported as inconclusive with a diagnosis, or as a
///   model inconsistency when the terminal picture contradicts what the
///   hypotheses guarantee.
pub fn center_saddle_decision(g: &FoliationGraph) -> Result<Verdict, TheoremError> {
    let report = validate(g);
    if !report.is_clean() {
        return Ok(Verdict::PreconditionFailed {
            reason: invalid_reason(&report),
        });
    }
    if !g.closed {
        return Ok(Verdict::PreconditionFailed {
            reason: "stated for closed manifolds".into(),
        });
    }
    if !g.transversely_orientable {
        return Ok(Verdict::PreconditionFailed {
            reason: "requires a transverse orientation (pass the double-cover graph)".into(),
        });
    }
    if g.dimension == 2 {
        let holonomy = g.nodes.iter().find(|n| {
            matches!(
                n.kind,
                NodeKind::MarkedLeaf { holonomy, .. } if holonomy != HolonomyLabel::Trivial
            )
        });
        if let Some(node) = holonomy {
            return Ok(Verdict::PreconditionFailed {
                reason: format!(
                    "on surfaces the decision needs a holonomy-free foliation; leaf `{}` \
                     carries nontrivial holonomy",
                    node.id
                ),
            });
        }
    }
    if let Some(circle) = g
        .nodes
        .iter()
        .find(|n| matches!(n.kind, NodeKind::StableCircle))
    {
        return Ok(Verdict::PreconditionFailed {
            reason: format!(
                "stable singular circle `{}` falls outside the center-saddle regime",
                circle.id
            ),
        });
    }
    let c0 = counts(g);
    if c0.centers <= c0.saddles {
        return Ok(Verdict::PreconditionFailed {
            reason: format!(
                "needs more centers than saddles (k >= l + 1), found k={}, l={}",
                c0.centers, c0.saddles
            ),
        });
    }

    let mut current = g.clone();
    let mut trace = MoveTrace::default();
    'reduce: loop {
        let couples = find_trivial_couples(&current)?;
        for couple in &couples {
            match eliminate_trivial_couple(&current, &couple.center) {
                Ok((next, record)) => {
                    current = next;
                    trace.records.push(record);
                    continue 'reduce;
                }
                Err(SurgeryError::Blocked(_)) => continue,
                Err(other) => return Err(other.into()),
            }
        }
        break;
    }

    let c = counts(&current);
    let (k, l) = (c.centers, c.saddles);
    if l == 0 {
        if k == 2 {
            return Ok(Verdict::Sphere { trace });
        }
        return Err(TheoremError::ModelInconsistency {
            clause: format!(
                "all saddles cancelled yet {k} center(s) remain; a saddle-free closed \
                 foliation has exactly two"
            ),
        });
    }
    if l == 1 && k == 2 {
        let (id, saddle) = current
            .nodes
            .iter()
            .find_map(|n| match &n.kind {
                NodeKind::Saddle(s) => Some((n.id.clone(), s.clone())),
                _ => None,
            })
            .expect("saddle count is one");
        if !saddle.selfconnected && saddle.ports.len() == 2 {
            let n = current.dimension;
            if n % 2 == 1 {
                return Err(TheoremError::ModelInconsistency {
                    clause: format!(
                        "two centers around one saddle force saddle index n/2, impossible \
                         in odd dimension n={n}"
                    ),
                });
            }
            if saddle.index != n / 2 {
                return Err(TheoremError::ModelInconsistency {
                    clause: format!(
                        "two centers around one saddle force saddle index {}, found {}",
                        n / 2,
                        saddle.index
                    ),
                });
            }
            if !eells_kuiper_admissible(n) {
                return Err(TheoremError::ModelInconsistency {
                    clause: format!(
                        "a closed manifold with exactly three nondegenerate critical points \
                         exists only in dimensions 2, 4, 8 and 16; n={n}"
                    ),
                });
            }
            return Ok(Verdict::EellsKuiper {
                saddle: id,
                index: saddle.index,
                trace,
            });
        }
        return Ok(Verdict::Inconclusive {
            reason: format!(
                "stuck at k=2, l=1, but saddle `{id}` is not a two-port middle-index saddle \
                 (selfconnected={}, {} ports)",
                saddle.selfconnected,
                saddle.ports.len()
            ),
        });
    }
    Ok(Verdict::Inconclusive {
        reason: format!(
            "no trivial couple applies at k={k}, l={l}: {}",
            stuck_diagnosis(&current)
        ),
    })
}

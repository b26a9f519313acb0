//! Test support for the folia workspace: hand-built reference graphs,
//! a seeded generator of random valid graphs, and slow brute-force oracles
//! that independent implementations are checked against.

pub mod fixtures;
pub mod gen;
pub mod oracle;

use folia_core::{validate, FoliationGraph};

/// Panic with the full report if the graph has any error-severity violation.
pub fn assert_valid(g: &FoliationGraph) {
    let report = validate(g);
    assert!(
        report.is_clean(),
        "expected a structurally valid graph, got:\n{report}"
    );
}

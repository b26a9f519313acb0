//! The fast canonical comparison must agree with the brute-force
//! isomorphism oracle on random graphs, and behave as an equivalence
//! relation invariant under renaming.

use folia_core::{canonical_form, graphs_equal, validate};
use folia_testkit::fixtures;
use folia_testkit::gen::{permute_ids, random_valid_graph};
use folia_testkit::oracle::iso_oracle;
use proptest::prelude::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    /// A renamed, reshuffled copy is always equal, and the oracle agrees.
    #[test]
    fn renamed_copies_compare_equal(
        n in 2u32..=5,
        steps in 0usize..=5,
        seed in any::<u64>(),
        perm_seed in any::<u64>(),
    ) {
        let g = random_valid_graph(n, steps, seed);
        let (h, _) = permute_ids(&g, perm_seed);
        prop_assert!(graphs_equal(&g, &h).unwrap());
        prop_assert!(iso_oracle(&g, &h));
    }

    /// Canonical comparison and the oracle give the same verdict on
    /// arbitrary pairs of generated graphs.
    #[test]
    fn agrees_with_oracle_on_random_pairs(
        n in 2u32..=4,
        steps_a in 0usize..=4,
        steps_b in 0usize..=4,
        seed_a in any::<u64>(),
        seed_b in any::<u64>(),
    ) {
        let a = random_valid_graph(n, steps_a, seed_a);
        let b = random_valid_graph(n, steps_b, seed_b);
        prop_assert_eq!(graphs_equal(&a, &b).unwrap(), iso_oracle(&a, &b));
    }

    /// Validation reports do not depend on anything mutable or ambient: the
    /// same graph always yields the identical report.
    #[test]
    fn validation_is_deterministic(n in 2u32..=5, steps in 0usize..=6, seed in any::<u64>()) {
        let g = random_valid_graph(n, steps, seed);
        let r1 = validate(&g);
        let r2 = validate(&g.clone());
        prop_assert_eq!(r1, r2);
    }
}

#[test]
fn fixtures_agree_with_oracle_pairwise() {
    let all = fixtures::all_named();
    for (i, (name_a, a)) in all.iter().enumerate() {
        for (name_b, b) in all.iter().skip(i) {
            let fast = graphs_equal(a, b).unwrap();
            let slow = iso_oracle(a, b);
            assert_eq!(fast, slow, "disagreement on {name_a} vs {name_b}");
            assert_eq!(fast, name_a == name_b, "{name_a} vs {name_b}");
        }
    }
}

#[test]
fn canonical_form_is_stable_under_permutation() {
    for seed in 0..20 {
        let g = random_valid_graph(3, 5, seed);
        let (h, _) = permute_ids(&g, seed * 31 + 1);
        assert_eq!(
            canonical_form(&g).unwrap(),
            canonical_form(&h).unwrap(),
            "seed {seed}"
        );
    }
}

#[test]
fn single_decoration_changes_break_equality() {
    let g = fixtures::created_pair_n3();

    let mut weaker = g.clone();
    weaker
        .edges
        .iter_mut()
        .find(|e| e.id == "m")
        .unwrap()
        .strong_connection = false;
    assert!(!graphs_equal(&g, &weaker).unwrap());
    assert!(!iso_oracle(&g, &weaker));

    let mut reindexed = g.clone();
    if let folia_core::NodeKind::Saddle(s) = &mut reindexed
        .nodes
        .iter_mut()
        .find(|n| n.id == "s1")
        .unwrap()
        .kind
    {
        s.semi_holonomy = Some(folia_core::SemiHolonomy {
            minus_trivial: false,
            plus_trivial: None,
        });
    }
    assert!(!graphs_equal(&g, &reindexed).unwrap());
    assert!(!iso_oracle(&g, &reindexed));
}

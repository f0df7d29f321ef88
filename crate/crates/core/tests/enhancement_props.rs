mod support;

use proptest::prelude::*;
use support::invariants::*;

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn mast_equals_unigram_nst_prop(g in games()) {
        mast_equals_unigram_nst(&g)?;
    }

    #[test]
    fn nst_credits_every_gram_once_prop((context, trace, outcome, max_len) in nst_input()) {
        nst_credits_every_gram_once(&context, &trace, &outcome, max_len)?;
    }

    #[test]
    fn grave_beta_boundaries_prop((amaf, visits, bias) in beta_input()) {
        grave_beta_boundaries(amaf, visits, bias)?;
    }

    #[test]
    fn pn_and_or_duality_prop((kids, untried, is_or) in pn_input()) {
        pn_and_or_duality(&kids, untried, is_or)?;
    }

    #[test]
    fn bounds_from_children_prop((kids, untried) in bounds_input()) {
        bounds_from_children_are_consistent(&kids, untried)?;
    }

    #[test]
    fn amaf_matches_hand_count_prop((seed, depth) in amaf_input()) {
        amaf_matches_hand_count(seed, depth)?;
    }
}

#[test]
fn mast_sampling_follows_gibbs_weights() {
    let p = mast_gibbs_p_value();
    assert!(p > 0.001, "p {p}");
}

#[test]
fn nst_without_exploration_is_greedy() {
    assert!(nst_greedy_avoids_losses());
}

#[test]
fn fixed_seed_run_covers_every_suite() {
    let suites = run_all(50).unwrap();
    assert_eq!(suites.len(), 6);
}

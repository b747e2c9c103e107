//! Property suites over seeded random corpora: structural invariants that
//! should hold for every valid linear system, cross-checks between the
//! greedy and exact solvers, and round-trip laws.

mod common;

use common::{nu2_oracle, tau_oracle};
use linsys::{
    check_eq1, girth, levi_graph, nu2_exact, nu2_greedy, random_linear_system, tau_exact,
    tau_greedy, AbelianGroup, CertificateKind, Girth, LinearSystem,
};
use proptest::prelude::*;

/// A deterministic battery of mid-sized random systems.
fn sample_systems() -> Vec<LinearSystem> {
    (0..40u64)
        .map(|seed| {
            let num_points = 7 + (seed % 8) as usize;
            let num_lines = 5 + (seed % 6) as usize;
            let max_line = 2 + (seed % 3) as usize;
            random_linear_system(seed, num_points, num_lines, 2, max_line).unwrap()
        })
        .collect()
}

#[test]
fn greedy_values_sandwich_exact_values() {
    for ls in sample_systems() {
        let tau = tau_exact(&ls, None);
        let nu2 = nu2_exact(&ls, None);
        assert!(tau.optimal && nu2.optimal);
        assert!(tau_greedy(&ls).value >= tau.value);
        assert!(nu2_greedy(&ls).value <= nu2.value);
    }
}

#[test]
fn certificates_reverify_through_core_predicates() {
    for ls in sample_systems() {
        for cert in [
            tau_exact(&ls, None),
            tau_greedy(&ls),
            nu2_exact(&ls, None),
            nu2_greedy(&ls),
        ] {
            assert_eq!(cert.value, cert.witness.len());
            match cert.kind {
                CertificateKind::Tau => {
                    assert!(ls.is_transversal_indices(&cert.witness).unwrap())
                }
                CertificateKind::Nu2 => assert!(ls.is_2packing(&cert.witness).unwrap()),
            }
        }
    }
}

#[test]
fn sandwich_bounds_hold_wherever_defined() {
    for ls in sample_systems() {
        let report = check_eq1(&ls, None).unwrap();
        assert!(report.eq1_holds, "nu2 {} tau {}", report.nu2, report.tau);
    }
}

#[test]
fn levi_girth_is_six_or_more_everywhere() {
    // two lines share at most one point, so 4-cycles cannot occur in the
    // incidence graph
    let mut instances = sample_systems();
    instances.push(linsys::example_c34());
    instances.push(linsys::projective_plane(5).unwrap());
    instances.push(linsys::chat());
    for ls in instances {
        match girth(&levi_graph(&ls)) {
            Girth::Finite(g) => assert!(g >= 6, "girth {g}"),
            Girth::Infinite => {}
        }
    }
}

#[test]
fn reduction_is_idempotent() {
    for ls in sample_systems() {
        let once = ls.reduce_low_degree();
        let twice = once.reduce_low_degree();
        assert_eq!(once.canonical_text(), twice.canonical_text());
        let reduced_stats = once.stats();
        assert!(reduced_stats.degree_of.iter().all(|&d| d >= 2));
    }
}

#[test]
fn point_deletion_always_revalidates() {
    for ls in sample_systems().into_iter().take(12) {
        for p in 0..ls.num_points() {
            let label = ls.label(p).to_string();
            let smaller = ls.delete_point(&label).unwrap();
            assert_eq!(smaller.num_points(), ls.num_points() - 1);
        }
    }
}

#[test]
fn exact_values_match_oracles_on_tiny_systems() {
    for seed in 200..230u64 {
        let ls = random_linear_system(seed, 6 + (seed % 4) as usize, 5, 2, 3).unwrap();
        assert_eq!(tau_exact(&ls, None).value, tau_oracle(&ls));
        assert_eq!(nu2_exact(&ls, None).value, nu2_oracle(&ls));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn group_descriptor_round_trips(factors in prop::collection::vec(1u64..30, 1..4)) {
        let group = AbelianGroup::product(&factors).unwrap();
        let parsed = AbelianGroup::parse_descriptor(&group.descriptor()).unwrap();
        prop_assert_eq!(parsed.descriptor(), group.descriptor());
        prop_assert_eq!(parsed.order(), factors.iter().product::<u64>());
    }

    #[test]
    fn random_systems_round_trip_through_labels(
        seed in 0u64..500,
        extra_points in 0usize..6,
        lines in 3usize..9,
    ) {
        let ls = random_linear_system(seed, 7 + extra_points, lines, 2, 3).unwrap();
        let rebuilt = LinearSystem::validate(
            ls.points().to_vec(),
            ls.lines_as_labels(),
        ).unwrap();
        prop_assert_eq!(rebuilt.canonical_text(), ls.canonical_text());
    }
}

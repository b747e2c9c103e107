//! Acceptance suite: the headline facts the library is expected to
//! reproduce, one test per criterion. Each test ends with a single summary
//! line; run with `--nocapture` to see them.

mod common;

use std::time::{Duration, Instant};

use common::{nu2_oracle, tau_oracle};
use linsys::{
    are_isomorphic, chat, cnn, delete_triangle, example_c34, find_triangle, girth, levi_graph,
    nu2_exact, planarity_bound, projective_plane, random_linear_system, standard_corpus, tau_exact,
    thm21_hypothesis, triangles, verify_cor42, verify_eq1, verify_lemma41, verify_lemmas_42_43,
    verify_thm21, AbelianGroup, CorpusInstance, Girth,
};
use num_rational::Ratio;

#[test]
fn criterion_01_two_apex_parameters() {
    // tau = nu2 = n + 1 on the two-apex system over Z_n, exactly, from the
    // search with optimality proved, within 60 seconds per instance
    for n in [3u64, 5, 7, 9] {
        let started = Instant::now();
        let system = cnn(&AbelianGroup::cyclic(n).unwrap()).unwrap();
        let tau = tau_exact(&system, None);
        let nu2 = nu2_exact(&system, None);
        assert!(tau.optimal && nu2.optimal);
        assert_eq!(tau.value, n as usize + 1, "tau at n = {n}");
        assert_eq!(nu2.value, n as usize + 1, "nu2 at n = {n}");
        let elapsed = started.elapsed();
        assert!(
            elapsed <= Duration::from_secs(60),
            "n = {n} took {elapsed:?}"
        );
    }
    println!("criterion 01: PASS (tau = nu2 = n + 1 for n in {{3, 5, 7, 9}})");
}

#[test]
fn criterion_02_generated_matches_transcribed() {
    let built = cnn(&AbelianGroup::cyclic(3).unwrap()).unwrap();
    let bijection = are_isomorphic(&built, &example_c34()).unwrap();
    assert!(bijection.is_some());
    println!("criterion 02: PASS (generated two-apex system is isomorphic to the transcription)");
}

#[test]
fn criterion_03_projective_plane_facts() {
    let pi = projective_plane(3).unwrap();
    let stats = pi.stats();
    assert_eq!(pi.num_points(), 13);
    assert_eq!(pi.num_lines(), 13);
    assert_eq!(stats.uniform_r, Some(4));
    assert!(stats.is_intersecting);
    assert!(stats.degree_of.iter().all(|&d| d == 4));
    let tau = tau_exact(&pi, None);
    let nu2 = nu2_exact(&pi, None);
    assert!(tau.optimal && nu2.optimal);
    assert_eq!(tau.value, 4);
    assert_eq!(nu2.value, 4);
    assert_eq!(tau_oracle(&pi), 4);
    assert_eq!(nu2_oracle(&pi), 4);
    println!("criterion 03: PASS (order-3 plane: 13/13, 4-uniform, degree 4, tau = nu2 = 4, oracle-confirmed)");
}

#[test]
fn criterion_04_triangle_deleted_counts() {
    let c = chat();
    assert_eq!(c.num_points(), 10);
    assert_eq!(c.num_lines(), 10);

    let pi = projective_plane(3).unwrap();
    let all = triangles(&pi);
    assert!(all.len() >= 2);
    let first = delete_triangle(&pi, &all[0]).unwrap();
    let last = delete_triangle(&pi, all.last().unwrap()).unwrap();
    assert_eq!(find_triangle(&pi).unwrap(), all[0]);
    assert!(are_isomorphic(&first, &last).unwrap().is_some());
    println!("criterion 04: PASS (triangle-deleted plane is 10/10 and triangle-independent up to isomorphism)");
}

#[test]
fn criterion_05_rank_four_characterization() {
    let started = Instant::now();
    let result = verify_cor42(None);
    assert!(result.report.passed, "{:?}", result.report.counterexample);
    assert!(!result.report.has_inconclusive());
    assert_eq!(result.set_a, result.set_b);
    assert!(!result.set_a.is_empty());
    let pi = projective_plane(3).unwrap();
    let pi_index = result
        .members
        .iter()
        .position(|m| m.canonical_text() == pi.canonical_text())
        .expect("the full plane is a lattice member");
    assert!(result.set_a.contains(&pi_index));
    let elapsed = started.elapsed();
    assert!(elapsed <= Duration::from_secs(120), "took {elapsed:?}");
    println!(
        "criterion 05: PASS (over {} lattice members, A = B with {} members, containing the plane)",
        result.members.len(),
        result.set_a.len()
    );
}

#[test]
fn criterion_06_sandwich_sweep() {
    let corpus = standard_corpus(60);
    for instance in &corpus {
        assert!(instance.system.num_points() <= 14);
        if instance.id.starts_with("random_") {
            assert!(instance.system.num_lines() <= 12);
        }
    }
    let report = verify_eq1(&corpus, None);
    assert!(report.passed, "{:?}", report.counterexample);
    assert!(!report.has_inconclusive());
    let random_checked = report
        .details
        .iter()
        .filter(|r| r.instance_id.starts_with("random_"))
        .count();
    assert!(
        random_checked >= 50,
        "only {random_checked} random instances checked"
    );
    println!(
        "criterion 06: PASS (sandwich bounds hold on {} instances, {} of them random)",
        report.instances_checked, random_checked
    );
}

#[test]
fn criterion_07_degree_sum_sweep() {
    let report = verify_thm21(&standard_corpus(60), None);
    assert!(report.passed, "{:?}", report.counterexample);
    assert!(!report.has_inconclusive());

    // the two-apex family sits exactly one line above the threshold, so the
    // criterion never applies to it
    for n in [3u64, 5, 7] {
        let system = cnn(&AbelianGroup::cyclic(n).unwrap()).unwrap();
        let hypothesis = thm21_hypothesis(&system).unwrap();
        assert!(!hypothesis.applies, "n = {n}");
        assert_eq!(
            hypothesis.line_count as i64,
            hypothesis.threshold + 1,
            "n = {n}"
        );
    }
    println!(
        "criterion 07: PASS (tau <= nu2 - 1 where the criterion applies, {} instances; two-apex family is one line past it)",
        report.instances_checked
    );
}

#[test]
fn criterion_08_levi_nonplanarity() {
    for n in [3u64, 5, 7] {
        let n_sq = n * n;
        let system = cnn(&AbelianGroup::cyclic(n).unwrap()).unwrap();
        let graph = levi_graph(&system);
        assert_eq!(girth(&graph), Girth::Finite(6), "n = {n}");
        assert_eq!(graph.edges.len() as u64, 3 * n_sq - n, "n = {n}");
        let report = planarity_bound(&graph);
        assert_eq!(
            report.bound_value,
            Ratio::new(3 * (n_sq + 2 * n - 1), 2),
            "n = {n}"
        );
        assert!(report.certified_nonplanar, "n = {n}");
        // the certifying inequality in integers: 2|E| > 3(n^2 + 2n - 1)
        assert!(2 * (3 * n_sq - n) > 3 * (n_sq + 2 * n - 1));
    }
    println!("criterion 08: PASS (incidence graphs have girth 6 and certify non-planarity for n in {{3, 5, 7}})");
}

#[test]
fn criterion_09_oracle_equivalence() {
    let started = Instant::now();
    let mut checked = 0;
    for seed in 0..220u64 {
        let num_points = 5 + (seed % 8) as usize;
        let num_lines = 4 + (seed % 7) as usize;
        let max_line = 2 + (seed % 3) as usize;
        let system = random_linear_system(seed, num_points, num_lines, 2, max_line).unwrap();
        assert!(system.num_points() <= 12);
        assert!(system.num_lines() <= 10);
        let tau = tau_exact(&system, None);
        let nu2 = nu2_exact(&system, None);
        assert!(tau.optimal && nu2.optimal);
        assert_eq!(tau.value, tau_oracle(&system), "tau at seed {seed}");
        assert_eq!(nu2.value, nu2_oracle(&system), "nu2 at seed {seed}");
        checked += 1;
    }
    let elapsed = started.elapsed();
    assert!(checked >= 200);
    assert!(elapsed <= Duration::from_secs(300), "took {elapsed:?}");
    println!(
        "criterion 09: PASS (search agrees with exhaustive oracles on {checked} random systems)"
    );
}

#[test]
fn criterion_10_rank_four_structure() {
    let result = verify_cor42(None);
    let candidates: Vec<CorpusInstance> = result
        .set_b
        .iter()
        .map(|&i| CorpusInstance::new(format!("member_{i:02}"), result.members[i].clone()))
        .collect();
    assert!(!candidates.is_empty());

    let lemma41 = verify_lemma41(&candidates, None);
    assert!(lemma41.passed, "{:?}", lemma41.counterexample);
    assert_eq!(lemma41.instances_checked, candidates.len());

    let lemmas4243 = verify_lemmas_42_43(&candidates, None);
    assert!(lemmas4243.passed, "{:?}", lemmas4243.counterexample);
    assert_eq!(lemmas4243.instances_checked, candidates.len());

    for instance in &candidates {
        let m = instance.system.num_lines();
        assert!((10..=13).contains(&m));
        assert_eq!(instance.system.stats().uniform_r, Some(4));
    }
    println!(
        "criterion 10: PASS ({} rank-4 members: uniform, reduced degrees >= 2, bounded line counts)",
        candidates.len()
    );
}

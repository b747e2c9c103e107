//! Exact and heuristic solvers for the transversal number τ (minimum point
//! set meeting every line) and the 2-packing number ν₂ (maximum line set in
//! which no point lies on three chosen lines), plus the bound predicates
//! relating the two.
//!
//! Both exact solvers are branch-and-bound searches seeded by their greedy
//! counterparts. All tie-breaking is lowest-index-first, so values and
//! witnesses are fully deterministic.

use std::time::{Duration, Instant};

use crate::bitset::BitSet;
use crate::error::{Error, Result};
use crate::system::LinearSystem;

/// Default branch-node allowance for the exact solvers.
pub const DEFAULT_NODE_BUDGET: u64 = 100_000_000;

/// Sentinel lower bound for subproblems with no feasible completion.
const INFEASIBLE: usize = usize::MAX / 4;

/// Distinguishes transversal certificates from 2-packing certificates.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum CertificateKind {
    Tau,
    Nu2,
}

/// A solver result whose witness replays against the core predicates:
/// a transversal for τ, a 2-packing for ν₂.
#[derive(Clone, Debug)]
pub struct Certificate {
    pub kind: CertificateKind,
    /// The witness size: a transversal order or a packing size.
    pub value: usize,
    /// Ascending point indices ([`CertificateKind::Tau`]) or line indices
    /// ([`CertificateKind::Nu2`]).
    pub witness: Vec<usize>,
    /// True only when the search proved the value optimal; a budget timeout
    /// or an unproven heuristic result reports false.
    pub optimal: bool,
    pub nodes_explored: u64,
    pub elapsed: Duration,
}

/// Exact τ and ν₂ together with the sandwich ⌈ν₂/2⌉ ≤ τ ≤ ν₂(ν₂−1)/2.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BoundsReport {
    pub nu2: usize,
    pub tau: usize,
    /// ⌈ν₂/2⌉.
    pub eq1_lower: usize,
    /// ν₂(ν₂−1)/2, which degenerates below the lower bound when ν₂ ≤ 1.
    pub eq1_upper: usize,
    /// The full sandwich for ν₂ ≥ 2; only the lower bound for ν₂ ≤ 1,
    /// where the quadratic upper bound is vacuous.
    pub eq1_holds: bool,
}

/// The arithmetic of the degree-sum criterion: with p a maximum-degree
/// point, q a maximum-degree point among the rest, the criterion applies
/// when |L| ≤ deg(p) + deg(q) + ν₂ − 3 (and then τ ≤ ν₂ − 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Thm21Hypothesis {
    pub applies: bool,
    pub max_deg_p: usize,
    pub second_deg_q: usize,
    pub line_count: usize,
    /// deg(p) + deg(q) + ν₂ − 3; negative on degenerate systems.
    pub threshold: i64,
}

/// Greedy transversal: repeatedly take the point covering the most
/// still-uncovered lines (lowest index on ties). The result is marked
/// optimal when it matches the disjoint-line packing lower bound.
pub fn tau_greedy(ls: &LinearSystem) -> Certificate {
    let start = Instant::now();
    let n = ls.num_points();
    let m = ls.num_lines();
    let mut covered = vec![false; m];
    let mut remaining = m;
    let mut witness = Vec::new();
    while remaining > 0 {
        let mut degree = vec![0usize; n];
        for (i, done) in covered.iter().enumerate() {
            if !done {
                for p in ls.line_set(i).iter() {
                    degree[p] += 1;
                }
            }
        }
        let mut best = 0;
        for p in 1..n {
            if degree[p] > degree[best] {
                best = p;
            }
        }
        witness.push(best);
        for (i, done) in covered.iter_mut().enumerate() {
            if !*done && ls.line_set(i).contains(best) {
                *done = true;
                remaining -= 1;
            }
        }
    }
    witness.sort_unstable();
    let value = witness.len();
    let optimal = value == disjoint_packing_count(ls);
    Certificate {
        kind: CertificateKind::Tau,
        value,
        witness,
        optimal,
        nodes_explored: 0,
        elapsed: start.elapsed(),
    }
}

/// Size of a greedy (index-order) packing of pairwise-disjoint lines; each
/// packed line needs its own transversal point, so this lower-bounds τ.
fn disjoint_packing_count(ls: &LinearSystem) -> usize {
    let mut used = BitSet::new(ls.num_points());
    let mut count = 0;
    for i in 0..ls.num_lines() {
        if ls.line_set(i).is_disjoint(&used) {
            used.union_with(ls.line_set(i));
            count += 1;
        }
    }
    count
}

/// Greedy 2-packing: scan lines in index order, taking a line iff no point
/// usage would exceed two. Marked optimal when every line was taken.
pub fn nu2_greedy(ls: &LinearSystem) -> Certificate {
    let start = Instant::now();
    let mut usage = vec![0u8; ls.num_points()];
    let mut witness = Vec::new();
    for i in 0..ls.num_lines() {
        let line = ls.line_set(i);
        if line.iter().all(|p| usage[p] <= 1) {
            for p in line.iter() {
                usage[p] += 1;
            }
            witness.push(i);
        }
    }
    let value = witness.len();
    let optimal = value == ls.num_lines();
    Certificate {
        kind: CertificateKind::Nu2,
        value,
        witness,
        optimal,
        nodes_explored: 0,
        elapsed: start.elapsed(),
    }
}

/// Exact transversal number by branch and bound.
///
/// Branching picks an uncovered line with the fewest remaining candidate
/// points and tries each candidate in index order, excluding it from later
/// siblings. A branch is pruned when the partial size plus an admissible
/// lower bound cannot beat the incumbent. If the node budget runs out the
/// best incumbent is returned with `optimal = false`.
pub fn tau_exact(ls: &LinearSystem, node_budget: Option<u64>) -> Certificate {
    let start = Instant::now();
    let seed = tau_greedy(ls);
    if seed.optimal {
        return Certificate {
            elapsed: start.elapsed(),
            ..seed
        };
    }
    let point_lines: Vec<Vec<usize>> = (0..ls.num_points())
        .map(|p| {
            (0..ls.num_lines())
                .filter(|&i| ls.line_set(i).contains(p))
                .collect()
        })
        .collect();
    let mut search = TauSearch {
        ls,
        point_lines,
        chosen: Vec::new(),
        cover_count: vec![0u32; ls.num_lines()],
        uncovered: ls.num_lines(),
        excluded: BitSet::new(ls.num_points()),
        best_value: seed.value,
        best_witness: seed.witness,
        nodes: 0,
        budget: node_budget.unwrap_or(DEFAULT_NODE_BUDGET),
        exhausted: false,
    };
    search.dfs();
    let mut witness = search.best_witness;
    witness.sort_unstable();
    Certificate {
        kind: CertificateKind::Tau,
        value: search.best_value,
        witness,
        optimal: !search.exhausted,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    }
}

struct TauSearch<'a> {
    ls: &'a LinearSystem,
    /// Incidence lists: the lines through each point.
    point_lines: Vec<Vec<usize>>,
    chosen: Vec<usize>,
    /// Per line, how many chosen points lie on it.
    cover_count: Vec<u32>,
    uncovered: usize,
    /// Points barred by sibling branching: every transversal using them has
    /// already been explored.
    excluded: BitSet,
    best_value: usize,
    best_witness: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl TauSearch<'_> {
    fn choose(&mut self, p: usize) {
        self.chosen.push(p);
        for &i in &self.point_lines[p] {
            if self.cover_count[i] == 0 {
                self.uncovered -= 1;
            }
            self.cover_count[i] += 1;
        }
    }

    fn unchoose(&mut self, p: usize) {
        self.chosen.pop();
        for &i in &self.point_lines[p] {
            self.cover_count[i] -= 1;
            if self.cover_count[i] == 0 {
                self.uncovered += 1;
            }
        }
    }

    fn dfs(&mut self) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if self.uncovered == 0 {
            // The pruning rule admits only strict improvements, so this
            // leaf beats the incumbent.
            debug_assert!(self.chosen.len() < self.best_value);
            self.best_value = self.chosen.len();
            self.best_witness = self.chosen.clone();
            return;
        }
        let mut target = usize::MAX;
        let mut target_count = usize::MAX;
        for i in 0..self.cover_count.len() {
            if self.cover_count[i] > 0 {
                continue;
            }
            let c = self.ls.line_set(i).and_not_len(&self.excluded);
            if c < target_count {
                target_count = c;
                target = i;
                if c == 0 {
                    break;
                }
            }
        }
        if target_count == 0 {
            return; // some line can no longer be hit
        }
        if self.chosen.len() + self.lower_bound() >= self.best_value {
            return;
        }
        let candidates: Vec<usize> = self
            .ls
            .line_set(target)
            .iter()
            .filter(|&p| !self.excluded.contains(p))
            .collect();
        let mut reinstate = Vec::new();
        for p in candidates {
            self.choose(p);
            self.dfs();
            self.unchoose(p);
            if self.exhausted {
                break;
            }
            self.excluded.insert(p);
            reinstate.push(p);
            // the incumbent may have improved inside the child subtree;
            // once even one further point cannot beat it, siblings are done
            if self.chosen.len() + 1 >= self.best_value {
                break;
            }
        }
        for p in reinstate {
            self.excluded.remove(p);
        }
    }

    /// Admissible lower bound on the points still needed. Combines a greedy
    /// packing of candidate-disjoint uncovered lines with a two-point case
    /// split: for the two points of highest candidate multiplicity, lines
    /// through an unpicked point pairwise meet only there, so they need as
    /// many distinct points as there are lines.
    fn lower_bound(&self) -> usize {
        let n = self.ls.num_points();
        let mut uncovered_lines = Vec::new();
        let mut packed = BitSet::new(n);
        let mut lb = 0;
        for i in 0..self.cover_count.len() {
            if self.cover_count[i] > 0 {
                continue;
            }
            let cand = self.ls.line_set(i).and_not(&self.excluded);
            if cand.is_empty() {
                return INFEASIBLE;
            }
            if cand.is_disjoint(&packed) {
                packed.union_with(&cand);
                lb += 1;
            }
            uncovered_lines.push(i);
        }
        if uncovered_lines.is_empty() {
            return 0;
        }

        let mut mult = vec![0usize; n];
        for &i in &uncovered_lines {
            for p in self.ls.line_set(i).iter() {
                if !self.excluded.contains(p) {
                    mult[p] += 1;
                }
            }
        }
        let mut x = 0;
        for p in 1..n {
            if mult[p] > mult[x] {
                x = p;
            }
        }
        if mult[x] < 2 {
            return lb;
        }
        let mut y = usize::MAX;
        let mut ym = 0;
        for (p, &m) in mult.iter().enumerate() {
            if p != x && m > ym {
                ym = m;
                y = p;
            }
        }
        let refined = if ym >= 2 {
            self.pair_bound(&uncovered_lines, x, mult[x], y, ym)
        } else {
            self.single_bound(&uncovered_lines, x, mult[x])
        };
        lb.max(refined)
    }

    /// Greedy candidate-disjoint packing over the uncovered lines, skipping
    /// lines through any `skip` point (covered in the case under analysis)
    /// and barring `forbidden` points as candidates. `None` marks an
    /// infeasible case: some line retains no usable candidate.
    fn pack(&self, uncovered: &[usize], skip: &[usize], forbidden: &[usize]) -> Option<usize> {
        let mut banned = self.excluded.clone();
        for &f in forbidden {
            banned.insert(f);
        }
        let mut packed = BitSet::new(self.ls.num_points());
        let mut count = 0;
        'lines: for &i in uncovered {
            let set = self.ls.line_set(i);
            for &s in skip {
                if set.contains(s) {
                    continue 'lines;
                }
            }
            let cand = set.and_not(&banned);
            if cand.is_empty() {
                return None;
            }
            if cand.is_disjoint(&packed) {
                packed.union_with(&cand);
                count += 1;
            }
        }
        Some(count)
    }

    fn single_bound(&self, uncovered: &[usize], x: usize, xm: usize) -> usize {
        let pick = self.pack(uncovered, &[x], &[]).map(|k| 1 + k);
        let leave = self.pack(uncovered, &[], &[x]).map(|k| k.max(xm));
        [pick, leave]
            .into_iter()
            .flatten()
            .min()
            .unwrap_or(INFEASIBLE)
    }

    fn pair_bound(&self, uncovered: &[usize], x: usize, xm: usize, y: usize, ym: usize) -> usize {
        // at most one line contains both x and y
        let overlap = uncovered
            .iter()
            .filter(|&&i| {
                let s = self.ls.line_set(i);
                s.contains(x) && s.contains(y)
            })
            .count();
        let both = self.pack(uncovered, &[x, y], &[]).map(|k| 2 + k);
        let only_x = self
            .pack(uncovered, &[x], &[y])
            .map(|k| 1 + k.max(ym - overlap));
        let only_y = self
            .pack(uncovered, &[y], &[x])
            .map(|k| 1 + k.max(xm - overlap));
        let neither = self
            .pack(uncovered, &[], &[x, y])
            .map(|k| k.max(xm).max(ym));
        [both, only_x, only_y, neither]
            .into_iter()
            .flatten()
            .min()
            .unwrap_or(INFEASIBLE)
    }
}

/// Exact 2-packing number by depth-first search over lines in index order
/// (include branch first) with per-point usage counters; prunes when even
/// taking every remaining line cannot beat the incumbent. If the node
/// budget runs out the best incumbent is returned with `optimal = false`.
pub fn nu2_exact(ls: &LinearSystem, node_budget: Option<u64>) -> Certificate {
    let start = Instant::now();
    let seed = nu2_greedy(ls);
    if seed.optimal {
        return Certificate {
            elapsed: start.elapsed(),
            ..seed
        };
    }
    let mut search = Nu2Search {
        ls,
        usage: vec![0u8; ls.num_points()],
        chosen: Vec::new(),
        best_value: seed.value,
        best_witness: seed.witness,
        nodes: 0,
        budget: node_budget.unwrap_or(DEFAULT_NODE_BUDGET),
        exhausted: false,
    };
    search.dfs(0);
    Certificate {
        kind: CertificateKind::Nu2,
        value: search.best_value,
        witness: search.best_witness,
        optimal: !search.exhausted,
        nodes_explored: search.nodes,
        elapsed: start.elapsed(),
    }
}

struct Nu2Search<'a> {
    ls: &'a LinearSystem,
    usage: Vec<u8>,
    chosen: Vec<usize>,
    best_value: usize,
    best_witness: Vec<usize>,
    nodes: u64,
    budget: u64,
    exhausted: bool,
}

impl Nu2Search<'_> {
    fn dfs(&mut self, next: usize) {
        self.nodes += 1;
        if self.nodes > self.budget {
            self.exhausted = true;
            return;
        }
        if self.chosen.len() > self.best_value {
            self.best_value = self.chosen.len();
            self.best_witness = self.chosen.clone();
        }
        let m = self.ls.num_lines();
        if next == m || self.chosen.len() + (m - next) <= self.best_value {
            return;
        }
        let line = self.ls.line_set(next);
        if line.iter().all(|p| self.usage[p] <= 1) {
            for p in line.iter() {
                self.usage[p] += 1;
            }
            self.chosen.push(next);
            self.dfs(next + 1);
            self.chosen.pop();
            for p in line.iter() {
                self.usage[p] -= 1;
            }
            if self.exhausted {
                return;
            }
        }
        self.dfs(next + 1);
    }
}

pub(crate) fn bounds_report(tau: usize, nu2: usize) -> BoundsReport {
    let eq1_lower = nu2.div_ceil(2);
    let eq1_upper = nu2 * nu2.saturating_sub(1) / 2;
    let eq1_holds = if nu2 <= 1 {
        eq1_lower <= tau
    } else {
        eq1_lower <= tau && tau <= eq1_upper
    };
    BoundsReport {
        nu2,
        tau,
        eq1_lower,
        eq1_upper,
        eq1_holds,
    }
}

/// Computes τ and ν₂ exactly and evaluates the sandwich
/// ⌈ν₂/2⌉ ≤ τ ≤ ν₂(ν₂−1)/2 (lower bound only when ν₂ ≤ 1).
pub fn check_eq1(ls: &LinearSystem, node_budget: Option<u64>) -> Result<BoundsReport> {
    let nu2 = nu2_exact(ls, node_budget);
    if !nu2.optimal {
        return Err(Error::BudgetExhausted {
            nodes: nu2.nodes_explored,
        });
    }
    let tau = tau_exact(ls, node_budget);
    if !tau.optimal {
        return Err(Error::BudgetExhausted {
            nodes: tau.nodes_explored,
        });
    }
    Ok(bounds_report(tau.value, nu2.value))
}

/// Evaluates the degree-sum criterion arithmetic. Requires at least two
/// points so both p and q exist.
pub fn thm21_hypothesis(ls: &LinearSystem) -> Result<Thm21Hypothesis> {
    if ls.num_points() < 2 {
        return Err(Error::FewerThanTwoPoints);
    }
    let nu2 = nu2_exact(ls, None);
    if !nu2.optimal {
        return Err(Error::BudgetExhausted {
            nodes: nu2.nodes_explored,
        });
    }
    Ok(thm21_arithmetic(ls, nu2.value))
}

/// The arithmetic part of the degree-sum criterion, for callers that have
/// already computed ν₂. Picks p of maximum degree and q of maximum degree
/// among the rest (lowest index on ties). Caller guarantees ≥ 2 points.
pub(crate) fn thm21_arithmetic(ls: &LinearSystem, nu2_value: usize) -> Thm21Hypothesis {
    let stats = ls.stats();
    let mut p = 0;
    for i in 1..stats.degree_of.len() {
        if stats.degree_of[i] > stats.degree_of[p] {
            p = i;
        }
    }
    let mut q = usize::from(p == 0);
    for i in 0..stats.degree_of.len() {
        if i != p && stats.degree_of[i] > stats.degree_of[q] {
            q = i;
        }
    }
    let threshold = stats.degree_of[p] as i64 + stats.degree_of[q] as i64 + nu2_value as i64 - 3;
    Thm21Hypothesis {
        applies: (ls.num_lines() as i64) <= threshold,
        max_deg_p: stats.degree_of[p],
        second_deg_q: stats.degree_of[q],
        line_count: ls.num_lines(),
        threshold,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{cnn, example_c34, projective_plane};
    use crate::groups::AbelianGroup;

    fn assert_sound(ls: &LinearSystem, cert: &Certificate) {
        assert_eq!(cert.value, cert.witness.len());
        match cert.kind {
            CertificateKind::Tau => {
                assert!(ls.is_transversal_indices(&cert.witness).unwrap())
            }
            CertificateKind::Nu2 => assert!(ls.is_2packing(&cert.witness).unwrap()),
        }
    }

    fn pencil(k: usize) -> LinearSystem {
        let mut points = vec!["x".to_string()];
        let mut lines = Vec::new();
        for i in 0..k {
            let a = format!("a{i}");
            let b = format!("b{i}");
            lines.push(vec!["x".to_string(), a.clone(), b.clone()]);
            points.push(a);
            points.push(b);
        }
        LinearSystem::validate(points, lines).unwrap()
    }

    #[test]
    fn exact_values_on_the_running_example() {
        let c = example_c34();
        let tau = tau_exact(&c, None);
        let nu2 = nu2_exact(&c, None);
        assert!(tau.optimal && nu2.optimal);
        assert_eq!(tau.value, 4);
        assert_eq!(nu2.value, 4);
        assert_sound(&c, &tau);
        assert_sound(&c, &nu2);
    }

    #[test]
    fn exact_values_on_the_order_three_plane() {
        let pi = projective_plane(3).unwrap();
        let tau = tau_exact(&pi, None);
        let nu2 = nu2_exact(&pi, None);
        assert_eq!(tau.value, 4);
        assert_eq!(nu2.value, 4);
        assert!(tau.optimal && nu2.optimal);
        assert_sound(&pi, &tau);
        assert_sound(&pi, &nu2);
    }

    #[test]
    fn exact_values_on_cnn_z5() {
        let g = AbelianGroup::parse_descriptor("z5").unwrap();
        let s = cnn(&g).unwrap();
        let tau = tau_exact(&s, None);
        let nu2 = nu2_exact(&s, None);
        assert_eq!(tau.value, 6);
        assert_eq!(nu2.value, 6);
        assert!(tau.optimal && nu2.optimal);
        assert_sound(&s, &tau);
        assert_sound(&s, &nu2);
    }

    #[test]
    fn trivial_instances() {
        let single = LinearSystem::validate(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec!["a".into(), "b".into(), "c".into()]],
        )
        .unwrap();
        let tau = tau_exact(&single, None);
        assert_eq!(tau.value, 1);
        assert!(tau.optimal);
        assert_sound(&single, &tau);

        let empty = LinearSystem::validate(vec![], vec![]).unwrap();
        assert_eq!(tau_exact(&empty, None).value, 0);
        assert_eq!(nu2_exact(&empty, None).value, 0);
        assert_eq!(tau_greedy(&empty).value, 0);
        assert_eq!(nu2_greedy(&empty).value, 0);
        assert!(tau_greedy(&empty).optimal);
    }

    #[test]
    fn pencil_values() {
        let p = pencil(5);
        let tau = tau_exact(&p, None);
        assert_eq!(tau.value, 1, "the shared point hits everything");
        let greedy = tau_greedy(&p);
        assert_eq!(greedy.value, 1);
        assert_eq!(greedy.witness, vec![0], "picks the shared point");
        let nu2 = nu2_exact(&p, None);
        assert_eq!(
            nu2.value, 2,
            "any three concurrent lines overload the center"
        );
        assert!(nu2.optimal);
        assert_sound(&p, &nu2);
    }

    #[test]
    fn greedy_sandwiches_exact() {
        let instances = [
            example_c34(),
            projective_plane(3).unwrap(),
            crate::generators::chat(),
            pencil(4),
            crate::generators::random_linear_system(7, 11, 9, 2, 4).unwrap(),
        ];
        for ls in &instances {
            let tg = tau_greedy(ls);
            let te = tau_exact(ls, None);
            let ng = nu2_greedy(ls);
            let ne = nu2_exact(ls, None);
            assert!(te.optimal && ne.optimal);
            assert!(te.value <= tg.value);
            assert!(ng.value <= ne.value);
            assert_sound(ls, &tg);
            assert_sound(ls, &te);
            assert_sound(ls, &ng);
            assert_sound(ls, &ne);
        }
    }

    #[test]
    fn two_disjoint_lines_greedy_packing() {
        let s = LinearSystem::validate(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![vec!["a".into(), "b".into()], vec!["c".into(), "d".into()]],
        )
        .unwrap();
        let g = nu2_greedy(&s);
        assert_eq!(g.value, 2);
        assert!(g.optimal, "took every line");
    }

    #[test]
    fn budget_exhaustion_returns_incumbent() {
        let c = example_c34();
        let tau = tau_exact(&c, Some(1));
        assert!(!tau.optimal);
        assert_sound(&c, &tau);
        assert!(tau.value >= 4, "incumbent is a real transversal");
        let nu2 = nu2_exact(&c, Some(1));
        assert!(!nu2.optimal);
        assert_sound(&c, &nu2);
        assert!(matches!(
            check_eq1(&c, Some(1)),
            Err(Error::BudgetExhausted { .. })
        ));
    }

    #[test]
    fn eq1_arithmetic() {
        let r = check_eq1(&example_c34(), None).unwrap();
        assert_eq!(
            r,
            BoundsReport {
                nu2: 4,
                tau: 4,
                eq1_lower: 2,
                eq1_upper: 6,
                eq1_holds: true
            }
        );

        let single = LinearSystem::validate(
            vec!["a".into(), "b".into(), "c".into()],
            vec![vec!["a".into(), "b".into(), "c".into()]],
        )
        .unwrap();
        let r = check_eq1(&single, None).unwrap();
        assert_eq!((r.tau, r.nu2, r.eq1_lower, r.eq1_upper), (1, 1, 1, 0));
        assert!(r.eq1_holds, "only the lower bound is binding when ν₂ ≤ 1");

        let disjoint = LinearSystem::validate(
            vec!["a".into(), "b".into(), "c".into(), "d".into()],
            vec![vec!["a".into(), "b".into()], vec!["c".into(), "d".into()]],
        )
        .unwrap();
        let r = check_eq1(&disjoint, None).unwrap();
        assert_eq!((r.tau, r.nu2, r.eq1_lower, r.eq1_upper), (2, 2, 1, 1));
        assert!(!r.eq1_holds, "the quadratic upper bound fails here");
    }

    #[test]
    fn degree_sum_criterion_arithmetic() {
        let h = thm21_hypothesis(&example_c34()).unwrap();
        assert_eq!(
            h,
            Thm21Hypothesis {
                applies: false,
                max_deg_p: 3,
                second_deg_q: 3,
                line_count: 8,
                threshold: 7
            }
        );

        // a pencil of three lines plus one disjoint line: deg(p)=3, deg(q)=1,
        // ν₂=3, so the threshold 3+1+3−3=4 matches |L|=4 and τ=2 ≤ ν₂−1
        let mut points: Vec<String> = vec!["x".into()];
        let mut lines = Vec::new();
        for i in 0..3 {
            let a = format!("a{i}");
            let b = format!("b{i}");
            lines.push(vec!["x".to_string(), a.clone(), b.clone()]);
            points.push(a);
            points.push(b);
        }
        points.push("g".into());
        points.push("h".into());
        lines.push(vec!["g".into(), "h".into()]);
        let s = LinearSystem::validate(points, lines).unwrap();
        let h = thm21_hypothesis(&s).unwrap();
        assert!(h.applies);
        assert_eq!(
            (h.max_deg_p, h.second_deg_q, h.line_count, h.threshold),
            (3, 1, 4, 4)
        );
        let tau = tau_exact(&s, None);
        let nu2 = nu2_exact(&s, None);
        assert!(tau.value < nu2.value, "the criterion's conclusion");

        let tiny = LinearSystem::validate(vec!["a".into()], vec![vec!["a".into()]]).unwrap();
        assert!(matches!(
            thm21_hypothesis(&tiny),
            Err(Error::FewerThanTwoPoints)
        ));
    }

    #[test]
    fn deleting_a_line_keeps_bounds_monotone() {
        let base = example_c34();
        let tau = tau_exact(&base, None).value;
        let nu2 = nu2_exact(&base, None).value;
        for i in 0..base.num_lines() {
            let smaller = base.delete_line(i).unwrap();
            let t = tau_exact(&smaller, None).value;
            let n = nu2_exact(&smaller, None).value;
            assert!(t <= tau, "τ never grows when a line is removed");
            assert!(n <= nu2 && n + 1 >= nu2, "ν₂ drops by at most one");
        }
    }
}

//! Instance constructions: the group-based family C_{n,n+1}, projective
//! planes of prime order, triangle deletion, sandwich enumeration between a
//! subsystem and a supersystem, and a seeded random corpus generator.

use std::collections::{BTreeMap, BTreeSet};

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::groups::{AbelianGroup, GroupElement};
use crate::system::LinearSystem;

/// Three pairwise-joined, non-collinear points together with their three
/// joining lines. `sides[0]` joins `vertices[0], vertices[1]`; `sides[1]`
/// joins `vertices[0], vertices[2]`; `sides[2]` joins `vertices[1],
/// vertices[2]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Triangle {
    pub vertices: [usize; 3],
    pub sides: [usize; 3],
}

/// Builds C_{n,n+1} from a neutral-sum, involution-free abelian group of odd
/// order n ≥ 3.
///
/// Points are the pairs (h, g) with h ∈ Γ and g ∈ Γ∖{e} in lexicographic
/// order, followed by the two apex points `p` and `q`. Lines come in three
/// families: for each g ≠ e the disjoint row L_g = {(h, g) : h ∈ Γ}; for
/// each a ∈ Γ the pencil line {(a, x) : x ≠ e} ∪ {p}; and for each b ∈ Γ the
/// translation graph {(h, h + b) : h + b ≠ e} ∪ {q}. The result is
/// n-uniform with n(n−1)+2 points and 3n−1 lines.
pub fn cnn(group: &AbelianGroup) -> Result<LinearSystem> {
    if !group.is_neutral_sum() {
        return Err(Error::GroupNotNeutralSum);
    }
    if !group.has_no_involution() {
        return Err(Error::GroupHasInvolution);
    }
    let n = group.order();
    if n < 3 {
        return Err(Error::EvenOrder { order: n });
    }

    let elements = group.elements();
    let neutral = group.neutral();
    let non_neutral: Vec<&GroupElement> = elements.iter().filter(|&g| *g != neutral).collect();
    let pair = |h: &GroupElement, g: &GroupElement| format!("({h},{g})");

    let mut points = Vec::new();
    for h in &elements {
        for g in &non_neutral {
            points.push(pair(h, g));
        }
    }
    points.push("p".to_string());
    points.push("q".to_string());

    let mut lines = Vec::new();
    for g in &non_neutral {
        lines.push(elements.iter().map(|h| pair(h, g)).collect::<Vec<_>>());
    }
    for a in &elements {
        let mut line: Vec<String> = non_neutral.iter().map(|x| pair(a, x)).collect();
        line.push("p".to_string());
        lines.push(line);
    }
    for b in &elements {
        let mut line = Vec::new();
        for h in &elements {
            let image = group.add(h, b);
            if image != neutral {
                line.push(pair(h, &image));
            }
        }
        line.push("q".to_string());
        lines.push(line);
    }
    LinearSystem::validate(points, lines)
}

/// The projective plane over the prime field of order `q`: points and lines
/// are the homogeneous triples normalized to first nonzero coordinate 1,
/// labeled `[a:b:c]`, with incidence given by a zero dot product mod q.
pub fn projective_plane(q: u64) -> Result<LinearSystem> {
    if !is_prime(q) {
        return Err(Error::NotPrime { q });
    }
    let reps = normalized_triples(q);
    let label = |t: &[u64; 3]| format!("[{}:{}:{}]", t[0], t[1], t[2]);
    let points: Vec<String> = reps.iter().map(label).collect();
    let lines: Vec<Vec<String>> = reps
        .iter()
        .map(|l| {
            reps.iter()
                .filter(|p| (l[0] * p[0] + l[1] * p[1] + l[2] * p[2]) % q == 0)
                .map(label)
                .collect()
        })
        .collect();
    LinearSystem::validate(points, lines)
}

fn is_prime(q: u64) -> bool {
    if q < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= q {
        if q.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Nonzero triples over F_q with first nonzero coordinate 1, in
/// lexicographic order; there are q² + q + 1 of them.
fn normalized_triples(q: u64) -> Vec<[u64; 3]> {
    let mut out = Vec::new();
    for a in 0..q {
        for b in 0..q {
            for c in 0..q {
                let first_nonzero = [a, b, c].into_iter().find(|&x| x != 0);
                if first_nonzero == Some(1) {
                    out.push([a, b, c]);
                }
            }
        }
    }
    out
}

fn triangle_at(ls: &LinearSystem, i: usize, j: usize, k: usize) -> Option<Triangle> {
    let s01 = ls.joining_line(i, j)?;
    let s02 = ls.joining_line(i, k)?;
    let s12 = ls.joining_line(j, k)?;
    // Non-collinear iff the three joining lines are pairwise distinct: a
    // repeated side would be a single line through all three points.
    (s01 != s02 && s01 != s12 && s02 != s12).then_some(Triangle {
        vertices: [i, j, k],
        sides: [s01, s02, s12],
    })
}

/// The lexicographically first triangle of the system (by vertex index
/// triple), if one exists.
pub fn find_triangle(ls: &LinearSystem) -> Result<Triangle> {
    triangles_iter(ls).next().ok_or(Error::NoTriangle)
}

/// All triangles, in lexicographic vertex-triple order.
pub fn triangles(ls: &LinearSystem) -> Vec<Triangle> {
    triangles_iter(ls).collect()
}

fn triangles_iter(ls: &LinearSystem) -> impl Iterator<Item = Triangle> + '_ {
    let n = ls.num_points();
    (0..n).flat_map(move |i| {
        (i + 1..n).flat_map(move |j| (j + 1..n).filter_map(move |k| triangle_at(ls, i, j, k)))
    })
}

/// Removes a triangle's three side lines and three vertex points. Remaining
/// lines through a vertex shrink by that point; lines emptied by the removal
/// are dropped and collapsing duplicates keep the earliest copy.
pub fn delete_triangle(ls: &LinearSystem, t: &Triangle) -> Result<LinearSystem> {
    let invalid = |reason: &str| Error::InvalidTriangle {
        reason: reason.to_string(),
    };
    let [v0, v1, v2] = t.vertices;
    if t.vertices.iter().any(|&v| v >= ls.num_points()) {
        return Err(invalid("vertex index out of range"));
    }
    if v0 == v1 || v0 == v2 || v1 == v2 {
        return Err(invalid("vertices are not pairwise distinct"));
    }
    let expected = [(v0, v1), (v0, v2), (v1, v2)];
    for (side, &(a, b)) in t.sides.iter().zip(&expected) {
        if ls.joining_line(a, b) != Some(*side) {
            return Err(invalid("a side is not the joining line of its vertex pair"));
        }
    }
    if t.sides[0] == t.sides[1] || t.sides[0] == t.sides[2] || t.sides[1] == t.sides[2] {
        return Err(invalid("vertices are collinear"));
    }

    let vertex_labels: Vec<String> = t
        .vertices
        .iter()
        .map(|&v| ls.label(v).to_string())
        .collect();
    let mut side_order = t.sides;
    side_order.sort_unstable();
    let mut current = ls.clone();
    for &side in side_order.iter().rev() {
        current = current.delete_line(side)?;
    }
    for label in &vertex_labels {
        current = current.delete_point(label)?;
    }
    Ok(current)
}

/// The canonical triangle-deleted plane Ĉ: the projective plane of order 3
/// minus its lexicographically first triangle — 10 points, 10 lines.
pub fn chat() -> LinearSystem {
    let plane = projective_plane(3).expect("3 is prime");
    let t = find_triangle(&plane).expect("a projective plane contains triangles");
    delete_triangle(&plane, &t).expect("the triangle was found in this plane")
}

/// The maximum extra point + extra line count [`enumerate_between`] accepts.
pub const ENUMERATION_CAP: usize = 20;

/// Every system S with `base` ⊆ S ⊆ `sup` (as linear subsystems), obtained
/// by restricting `sup` to a point superset of `base`'s points and a line
/// subset that keeps every `sup` line extending a `base` line. Results are
/// deduplicated and sorted by canonical encoding.
pub fn enumerate_between(base: &LinearSystem, sup: &LinearSystem) -> Result<Vec<LinearSystem>> {
    if !base.is_subsystem_of(sup) {
        return Err(Error::NotASubsystem);
    }
    let base_points: BTreeSet<&str> = base.points().iter().map(String::as_str).collect();
    let base_lines: BTreeSet<Vec<&str>> = (0..base.num_lines())
        .map(|i| {
            let mut l = base.line_labels(i);
            l.sort_unstable();
            l
        })
        .collect();

    let extra_points: Vec<&str> = sup
        .points()
        .iter()
        .map(String::as_str)
        .filter(|p| !base_points.contains(p))
        .collect();
    let mut mandatory = Vec::new();
    let mut optional = Vec::new();
    for li in 0..sup.num_lines() {
        let mut restricted: Vec<&str> = sup
            .line_labels(li)
            .into_iter()
            .filter(|p| base_points.contains(p))
            .collect();
        restricted.sort_unstable();
        if !restricted.is_empty() && base_lines.contains(&restricted) {
            mandatory.push(li);
        } else {
            optional.push(li);
        }
    }
    if extra_points.len() + optional.len() > ENUMERATION_CAP {
        return Err(Error::EnumerationCapExceeded {
            extra_points: extra_points.len(),
            extra_lines: optional.len(),
            cap: ENUMERATION_CAP,
        });
    }

    let mut members: BTreeMap<String, LinearSystem> = BTreeMap::new();
    for point_mask in 0u64..(1 << extra_points.len()) {
        let mut chosen_points: Vec<&str> = base_points.iter().copied().collect();
        for (bit, p) in extra_points.iter().enumerate() {
            if point_mask >> bit & 1 == 1 {
                chosen_points.push(p);
            }
        }
        for line_mask in 0u64..(1 << optional.len()) {
            let mut chosen_lines = mandatory.clone();
            for (bit, &li) in optional.iter().enumerate() {
                if line_mask >> bit & 1 == 1 {
                    chosen_lines.push(li);
                }
            }
            // Overlapping restrictions make the candidate invalid as a
            // family of distinct lines; such subsets are simply not members.
            let Ok(candidate) = sup.induced_subsystem(&chosen_points, &chosen_lines) else {
                continue;
            };
            if base.is_subsystem_of(&candidate) && candidate.is_subsystem_of(sup) {
                members
                    .entry(candidate.canonical_text())
                    .or_insert(candidate);
            }
        }
    }
    Ok(members.into_values().collect())
}

/// The 8-point, 8-line system C_{3,4} over Z₃, hard-coded from its explicit
/// point and line lists.
pub fn example_c34() -> LinearSystem {
    let points = [
        "(0,1)", "(1,1)", "(2,1)", "(0,2)", "(1,2)", "(2,2)", "p", "q",
    ];
    let lines: [&[&str]; 8] = [
        &["(0,1)", "(1,1)", "(2,1)"],
        &["(0,2)", "(1,2)", "(2,2)"],
        &["(0,1)", "(0,2)", "p"],
        &["(1,1)", "(1,2)", "p"],
        &["(2,1)", "(2,2)", "p"],
        &["(1,1)", "(2,2)", "q"],
        &["(0,1)", "(1,2)", "q"],
        &["(0,2)", "(2,1)", "q"],
    ];
    LinearSystem::validate(
        points.iter().map(|s| s.to_string()).collect(),
        lines
            .iter()
            .map(|l| l.iter().map(|s| s.to_string()).collect())
            .collect(),
    )
    .expect("the transcribed example is a valid linear system")
}

/// How many rejected candidates a single line slot tolerates before the
/// generator gives up on that slot.
const MAX_REJECTIONS_PER_SLOT: usize = 200;

/// Generates a random linear system, deterministically in `seed`.
///
/// Each line slot rejection-samples a point subset of size in
/// `min_line..=max_line` until one shares at most one point with every
/// accepted line; a slot that exhausts its rejection budget is skipped, so
/// the result may have fewer than `num_lines` lines.
pub fn random_linear_system(
    seed: u64,
    num_points: usize,
    num_lines: usize,
    min_line: usize,
    max_line: usize,
) -> Result<LinearSystem> {
    let infeasible = |reason: String| Error::InfeasibleParameters { reason };
    if min_line < 2 {
        return Err(infeasible(format!(
            "min_line must be at least 2 (got {min_line})"
        )));
    }
    if max_line < min_line {
        return Err(infeasible(format!(
            "max_line {max_line} is smaller than min_line {min_line}"
        )));
    }
    if num_points < max_line {
        return Err(infeasible(format!(
            "a line of size {max_line} does not fit in {num_points} points"
        )));
    }

    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut accepted: Vec<Vec<usize>> = Vec::new();
    for _slot in 0..num_lines {
        for _attempt in 0..MAX_REJECTIONS_PER_SLOT {
            let size = rng.gen_range(min_line..=max_line);
            let mut candidate = rand::seq::index::sample(&mut rng, num_points, size).into_vec();
            candidate.sort_unstable();
            let compatible = accepted
                .iter()
                .all(|line| count_common_sorted(line, &candidate) <= 1);
            if compatible {
                accepted.push(candidate);
                break;
            }
        }
    }

    let width = num_points.saturating_sub(1).to_string().len();
    let labels: Vec<String> = (0..num_points).map(|i| format!("x{i:0width$}")).collect();
    let lines = accepted
        .iter()
        .map(|l| l.iter().map(|&p| labels[p].clone()).collect())
        .collect();
    LinearSystem::validate(labels, lines)
}

fn count_common_sorted(a: &[usize], b: &[usize]) -> usize {
    let (mut i, mut j, mut common) = (0, 0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => {
                common += 1;
                i += 1;
                j += 1;
            }
        }
    }
    common
}

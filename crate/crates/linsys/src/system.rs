//! Incidence data model: validated linear systems, statistics, subsystem
//! operations, and the certificate predicates used by the solvers.
//!
//! A linear system is a pair (P, L): a finite point set P and a family L of
//! distinct point subsets (lines) such that two distinct lines share at most
//! one point. Points are opaque string labels ordered by first appearance;
//! lines are stored as bitsets over point indices.

use std::collections::{BTreeMap, BTreeSet};

use crate::bitset::BitSet;
use crate::error::{Error, Result};

#[derive(Clone, Debug)]
pub struct LinearSystem {
    points: Vec<String>,
    index: BTreeMap<String, usize>,
    lines: Vec<BitSet>,
}

/// Summary statistics of a system, computed by [`LinearSystem::stats`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SystemStats {
    pub num_points: usize,
    pub num_lines: usize,
    /// Degree (number of incident lines) per point, indexed like the points.
    pub degree_of: Vec<usize>,
    /// Δ: the maximum degree over all points (0 for a pointless system).
    pub max_degree: usize,
    /// Maximum line size (0 for a lineless system).
    pub rank: usize,
    /// Common line size when all lines have the same size; `None` for a
    /// lineless system or mixed sizes.
    pub uniform_r: Option<usize>,
    /// True iff every pair of distinct lines shares exactly one point
    /// (vacuously true with fewer than two lines).
    pub is_intersecting: bool,
}

impl LinearSystem {
    /// Validates raw labeled input and builds a system.
    ///
    /// Points keep their input order. A repeated label inside one line folds
    /// silently (lines are sets); everything else that breaks the type
    /// invariants is an error.
    pub fn validate(raw_points: Vec<String>, raw_lines: Vec<Vec<String>>) -> Result<Self> {
        let mut index = BTreeMap::new();
        for (i, label) in raw_points.iter().enumerate() {
            if index.insert(label.clone(), i).is_some() {
                return Err(Error::DuplicatePoint {
                    label: label.clone(),
                });
            }
        }
        let mut lines = Vec::with_capacity(raw_lines.len());
        for (li, raw) in raw_lines.iter().enumerate() {
            let mut set = BitSet::new(raw_points.len());
            for label in raw {
                match index.get(label) {
                    Some(&pi) => set.insert(pi),
                    None => {
                        return Err(Error::UnknownPointInLine {
                            line: li,
                            label: label.clone(),
                        })
                    }
                }
            }
            if set.is_empty() {
                return Err(Error::EmptyLine { line: li });
            }
            lines.push(set);
        }
        let sys = LinearSystem {
            points: raw_points,
            index,
            lines,
        };
        for a in 0..sys.lines.len() {
            for b in a + 1..sys.lines.len() {
                if sys.lines[a] == sys.lines[b] {
                    return Err(Error::DuplicateLine {
                        first: a,
                        second: b,
                    });
                }
                if sys.lines[a].intersection_count(&sys.lines[b]) >= 2 {
                    let shared = sys.lines[a]
                        .iter()
                        .filter(|&p| sys.lines[b].contains(p))
                        .map(|p| sys.points[p].clone())
                        .collect();
                    return Err(Error::PairwiseIntersectionViolation {
                        first: a,
                        second: b,
                        shared,
                    });
                }
            }
        }
        Ok(sys)
    }

    pub fn num_points(&self) -> usize {
        self.points.len()
    }

    pub fn num_lines(&self) -> usize {
        self.lines.len()
    }

    pub fn points(&self) -> &[String] {
        &self.points
    }

    pub fn label(&self, point: usize) -> &str {
        &self.points[point]
    }

    pub fn point_index(&self, label: &str) -> Option<usize> {
        self.index.get(label).copied()
    }

    /// Point indices of line `i`, ascending.
    pub fn line(&self, i: usize) -> Vec<usize> {
        self.lines[i].iter().collect()
    }

    pub fn line_size(&self, i: usize) -> usize {
        self.lines[i].len()
    }

    pub fn line_labels(&self, i: usize) -> Vec<&str> {
        self.lines[i]
            .iter()
            .map(|p| self.points[p].as_str())
            .collect()
    }

    /// All lines as label lists, in system order (labels in point order).
    pub fn lines_as_labels(&self) -> Vec<Vec<String>> {
        (0..self.lines.len())
            .map(|i| {
                self.lines[i]
                    .iter()
                    .map(|p| self.points[p].clone())
                    .collect()
            })
            .collect()
    }

    pub(crate) fn line_set(&self, i: usize) -> &BitSet {
        &self.lines[i]
    }

    pub fn degree(&self, point: usize) -> usize {
        self.lines.iter().filter(|l| l.contains(point)).count()
    }

    pub fn stats(&self) -> SystemStats {
        let mut degree_of = vec![0usize; self.points.len()];
        for l in &self.lines {
            for p in l.iter() {
                degree_of[p] += 1;
            }
        }
        let max_degree = degree_of.iter().copied().max().unwrap_or(0);
        let rank = self.lines.iter().map(|l| l.len()).max().unwrap_or(0);
        let uniform_r = match self.lines.first() {
            Some(first) => {
                let r = first.len();
                self.lines.iter().all(|l| l.len() == r).then_some(r)
            }
            None => None,
        };
        let mut is_intersecting = true;
        'pairs: for a in 0..self.lines.len() {
            for b in a + 1..self.lines.len() {
                if self.lines[a].intersection_count(&self.lines[b]) != 1 {
                    is_intersecting = false;
                    break 'pairs;
                }
            }
        }
        SystemStats {
            num_points: self.points.len(),
            num_lines: self.lines.len(),
            degree_of,
            max_degree,
            rank,
            uniform_r,
            is_intersecting,
        }
    }

    /// Removes a point from the point list and from every line. Lines that
    /// become empty are dropped; lines that collapse onto an identical
    /// surviving set keep only the earliest copy (L is a family of distinct
    /// sets).
    pub fn delete_point(&self, label: &str) -> Result<LinearSystem> {
        let pi = self.point_index(label).ok_or_else(|| Error::UnknownPoint {
            label: label.to_string(),
        })?;
        let points: Vec<String> = self
            .points
            .iter()
            .enumerate()
            .filter(|&(i, _)| i != pi)
            .map(|(_, s)| s.clone())
            .collect();
        let lines = dedup_keep_first(self.lines.iter().map(|l| {
            l.iter()
                .filter(|&p| p != pi)
                .map(|p| self.points[p].clone())
                .collect::<Vec<_>>()
        }));
        LinearSystem::validate(points, lines)
    }

    /// Removes one line; points are retained even if now isolated.
    pub fn delete_line(&self, line_index: usize) -> Result<LinearSystem> {
        if line_index >= self.lines.len() {
            return Err(Error::IndexOutOfRange {
                index: line_index,
                len: self.lines.len(),
            });
        }
        let lines = (0..self.lines.len())
            .filter(|&i| i != line_index)
            .map(|i| self.line_labels(i).into_iter().map(String::from).collect())
            .collect();
        LinearSystem::validate(self.points.clone(), lines)
    }

    /// Restricts the chosen lines to the chosen points.
    ///
    /// Point and line order follow the parent system; both subsets are
    /// deduplicated. Restrictions that come out empty are dropped; two chosen
    /// lines collapsing to the same nonempty set is an error (the caller
    /// picked overlapping restrictions).
    pub fn induced_subsystem<S: AsRef<str>>(
        &self,
        point_subset: &[S],
        line_subset: &[usize],
    ) -> Result<LinearSystem> {
        let mut chosen = BitSet::new(self.points.len());
        for label in point_subset {
            let pi = self
                .point_index(label.as_ref())
                .ok_or_else(|| Error::UnknownPoint {
                    label: label.as_ref().to_string(),
                })?;
            chosen.insert(pi);
        }
        let mut line_idxs: Vec<usize> = line_subset.to_vec();
        line_idxs.sort_unstable();
        line_idxs.dedup();
        if let Some(&bad) = line_idxs.iter().find(|&&i| i >= self.lines.len()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.lines.len(),
            });
        }

        let points: Vec<String> = chosen.iter().map(|p| self.points[p].clone()).collect();
        let mut lines: Vec<Vec<String>> = Vec::new();
        let mut seen: BTreeMap<Vec<String>, usize> = BTreeMap::new();
        for &li in &line_idxs {
            let restricted: Vec<String> = self.lines[li]
                .iter()
                .filter(|&p| chosen.contains(p))
                .map(|p| self.points[p].clone())
                .collect();
            if restricted.is_empty() {
                continue;
            }
            if let Some(&first) = seen.get(&restricted) {
                return Err(Error::DuplicateInducedLine { first, second: li });
            }
            seen.insert(restricted.clone(), li);
            lines.push(restricted);
        }
        LinearSystem::validate(points, lines)
    }

    /// Iteratively removes every point of degree ≤ 1 until nothing changes.
    /// Emptied lines are dropped and duplicate collapses keep the earliest
    /// copy. Idempotent.
    pub fn reduce_low_degree(&self) -> LinearSystem {
        let mut points: Vec<String> = self.points.clone();
        let mut lines: Vec<Vec<String>> = self.lines_as_labels();
        loop {
            let mut degree: BTreeMap<&str, usize> =
                points.iter().map(|p| (p.as_str(), 0)).collect();
            for l in &lines {
                for p in l {
                    *degree.get_mut(p.as_str()).unwrap() += 1;
                }
            }
            let keep: BTreeSet<&str> = degree
                .iter()
                .filter(|&(_, &d)| d >= 2)
                .map(|(&p, _)| p)
                .collect();
            if keep.len() == points.len() {
                break;
            }
            let next_points: Vec<String> = points
                .iter()
                .filter(|p| keep.contains(p.as_str()))
                .cloned()
                .collect();
            let next_lines = dedup_keep_first(lines.iter().map(|l| {
                l.iter()
                    .filter(|p| keep.contains(p.as_str()))
                    .cloned()
                    .collect::<Vec<_>>()
            }));
            points = next_points;
            lines = next_lines;
        }
        LinearSystem::validate(points, lines).expect("reduction of a valid system stays valid")
    }

    /// True iff every line contains at least one of the given points.
    pub fn is_transversal<S: AsRef<str>>(&self, point_set: &[S]) -> Result<bool> {
        let mut set = BitSet::new(self.points.len());
        for label in point_set {
            let pi = self
                .point_index(label.as_ref())
                .ok_or_else(|| Error::UnknownPoint {
                    label: label.as_ref().to_string(),
                })?;
            set.insert(pi);
        }
        Ok(self.lines.iter().all(|l| !l.is_disjoint(&set)))
    }

    /// Index-level variant of [`is_transversal`](Self::is_transversal).
    pub fn is_transversal_indices(&self, point_set: &[usize]) -> Result<bool> {
        let mut set = BitSet::new(self.points.len());
        for &p in point_set {
            if p >= self.points.len() {
                return Err(Error::IndexOutOfRange {
                    index: p,
                    len: self.points.len(),
                });
            }
            set.insert(p);
        }
        Ok(self.lines.iter().all(|l| !l.is_disjoint(&set)))
    }

    /// True iff no point lies on three or more of the chosen lines.
    pub fn is_2packing(&self, line_index_set: &[usize]) -> Result<bool> {
        let mut chosen: Vec<usize> = line_index_set.to_vec();
        chosen.sort_unstable();
        chosen.dedup();
        if let Some(&bad) = chosen.iter().find(|&&i| i >= self.lines.len()) {
            return Err(Error::IndexOutOfRange {
                index: bad,
                len: self.lines.len(),
            });
        }
        let mut usage = vec![0u32; self.points.len()];
        for &li in &chosen {
            for p in self.lines[li].iter() {
                usage[p] += 1;
                if usage[p] >= 3 {
                    return Ok(false);
                }
            }
        }
        Ok(true)
    }

    /// The unique line through two distinct points, if any. (Uniqueness is
    /// forced by the pairwise-intersection invariant.)
    pub fn joining_line(&self, a: usize, b: usize) -> Option<usize> {
        self.lines
            .iter()
            .position(|l| l.contains(a) && l.contains(b))
    }

    /// True iff every point of `self` appears in `sup` and every line of
    /// `self` equals some line of `sup` restricted to `self`'s points.
    pub fn is_subsystem_of(&self, sup: &LinearSystem) -> bool {
        if !self.points.iter().all(|p| sup.point_index(p).is_some()) {
            return false;
        }
        let own: BTreeSet<&str> = self.points.iter().map(String::as_str).collect();
        let sup_restrictions: BTreeSet<Vec<&str>> = (0..sup.num_lines())
            .map(|i| {
                let mut r: Vec<&str> = sup
                    .line_labels(i)
                    .into_iter()
                    .filter(|p| own.contains(p))
                    .collect();
                r.sort_unstable();
                r
            })
            .collect();
        (0..self.lines.len()).all(|i| {
            let mut l = self.line_labels(i);
            l.sort_unstable();
            sup_restrictions.contains(&l)
        })
    }

    /// A canonical text encoding: points and lines sorted, labels escaped.
    /// Equal encodings iff equal point sets and equal line families.
    pub fn canonical_text(&self) -> String {
        let mut pts: Vec<&str> = self.points.iter().map(String::as_str).collect();
        pts.sort_unstable();
        let mut lns: Vec<Vec<&str>> = (0..self.lines.len())
            .map(|i| {
                let mut l = self.line_labels(i);
                l.sort_unstable();
                l
            })
            .collect();
        lns.sort();
        format!("points {:?} lines {:?}", pts, lns)
    }
}

/// Keeps the first copy of each distinct nonempty line, preserving order.
fn dedup_keep_first<I: IntoIterator<Item = Vec<String>>>(lines: I) -> Vec<Vec<String>> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for l in lines {
        if l.is_empty() {
            continue;
        }
        if seen.insert(l.clone()) {
            out.push(l);
        }
    }
    out
}

//! Isomorphism testing for linear systems, up to low-degree reduction.
//!
//! Two systems are compared after [`LinearSystem::reduce_low_degree`] on
//! both sides — the hypergraph-isomorphism notion used for the instance
//! families here, where degree ≤ 1 points are structural noise. The search
//! is a backtracking point assignment with degree and line-size pruning,
//! feasible at desk scale only.

use std::cmp::Reverse;
use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::system::LinearSystem;

/// Default cap on reduced point counts for the backtracking search.
pub const DEFAULT_ISO_CAP: usize = 40;

/// A point bijection between the two *reduced* systems that maps lines to
/// lines: `mapping[i]` is the image in the reduced second system of point
/// `i` of the reduced first system.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointBijection {
    pub mapping: Vec<usize>,
}

/// [`are_isomorphic_capped`] with the default size cap.
pub fn are_isomorphic(a: &LinearSystem, b: &LinearSystem) -> Result<Option<PointBijection>> {
    are_isomorphic_capped(a, b, DEFAULT_ISO_CAP)
}

/// Reduces both systems, then searches for a line-preserving point
/// bijection. Returns `None` when no bijection exists; errors only when a
/// reduced side has more than `cap` points.
pub fn are_isomorphic_capped(
    a: &LinearSystem,
    b: &LinearSystem,
    cap: usize,
) -> Result<Option<PointBijection>> {
    let ra = a.reduce_low_degree();
    let rb = b.reduce_low_degree();
    for reduced in [&ra, &rb] {
        if reduced.num_points() > cap {
            return Err(Error::SizeLimitExceeded {
                points: reduced.num_points(),
                cap,
            });
        }
    }
    if ra.num_points() != rb.num_points() || ra.num_lines() != rb.num_lines() {
        return Ok(None);
    }
    let stats_a = ra.stats();
    let stats_b = rb.stats();
    let sorted = |v: &[usize]| {
        let mut v = v.to_vec();
        v.sort_unstable();
        v
    };
    if sorted(&stats_a.degree_of) != sorted(&stats_b.degree_of) {
        return Ok(None);
    }
    let line_sizes = |s: &LinearSystem| {
        sorted(
            &(0..s.num_lines())
                .map(|i| s.line_size(i))
                .collect::<Vec<_>>(),
        )
    };
    if line_sizes(&ra) != line_sizes(&rb) {
        return Ok(None);
    }

    let n = ra.num_points();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&p| (Reverse(stats_a.degree_of[p]), p));

    let mut search = IsoSearch {
        a: &ra,
        b: &rb,
        degree_a: &stats_a.degree_of,
        degree_b: &stats_b.degree_of,
        order,
        mapping: vec![usize::MAX; n],
        used: vec![false; n],
    };
    Ok(if search.extend(0) {
        Some(PointBijection {
            mapping: search.mapping,
        })
    } else {
        None
    })
}

struct IsoSearch<'a> {
    a: &'a LinearSystem,
    b: &'a LinearSystem,
    degree_a: &'a [usize],
    degree_b: &'a [usize],
    /// Assignment order: descending degree, then index.
    order: Vec<usize>,
    mapping: Vec<usize>,
    used: Vec<bool>,
}

impl IsoSearch<'_> {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return self.lines_map();
        }
        let ap = self.order[depth];
        for bp in 0..self.used.len() {
            if self.used[bp] || self.degree_b[bp] != self.degree_a[ap] {
                continue;
            }
            if !self.consistent(depth, ap, bp) {
                continue;
            }
            self.mapping[ap] = bp;
            self.used[bp] = true;
            if self.extend(depth + 1) {
                return true;
            }
            self.mapping[ap] = usize::MAX;
            self.used[bp] = false;
        }
        false
    }

    /// A candidate pair must agree with every earlier assignment on the
    /// joining relation: joined pairs map to joined pairs through lines of
    /// equal size, unjoined pairs stay unjoined.
    fn consistent(&self, depth: usize, ap: usize, bp: usize) -> bool {
        for &aq in &self.order[..depth] {
            let bq = self.mapping[aq];
            match (self.a.joining_line(ap, aq), self.b.joining_line(bp, bq)) {
                (None, None) => {}
                (Some(la), Some(lb)) => {
                    if self.a.line_size(la) != self.b.line_size(lb) {
                        return false;
                    }
                }
                _ => return false,
            }
        }
        true
    }

    /// Leaf check: the image of every line of the first system is a line of
    /// the second. With equal line counts and injective images, that makes
    /// the induced line map a bijection.
    fn lines_map(&self) -> bool {
        let b_lines: BTreeSet<Vec<usize>> =
            (0..self.b.num_lines()).map(|i| self.b.line(i)).collect();
        (0..self.a.num_lines()).all(|i| {
            let mut image: Vec<usize> = self.a.line(i).iter().map(|&p| self.mapping[p]).collect();
            image.sort_unstable();
            b_lines.contains(&image)
        })
    }
}

//! Brute-force oracles for the integration suites. Both go through the
//! core membership predicates only, so they are independent of the search
//! implementations they cross-check.

use itertools::Itertools;
use linsys::LinearSystem;

/// Minimum transversal size by exhaustive scan over point subsets in
/// increasing size. Exponential; keep instances small.
pub fn tau_oracle(ls: &LinearSystem) -> usize {
    let n = ls.num_points();
    for k in 0..=n {
        for combo in (0..n).combinations(k) {
            if ls
                .is_transversal_indices(&combo)
                .expect("oracle indices are in range")
            {
                return k;
            }
        }
    }
    unreachable!("the full point set of a valid system is a transversal")
}

/// Maximum 2-packing size by exhaustive scan over all line subsets.
pub fn nu2_oracle(ls: &LinearSystem) -> usize {
    let m = ls.num_lines();
    assert!(m < 24, "oracle scans 2^m line subsets");
    let mut best = 0;
    for mask in 0u32..(1u32 << m) {
        let chosen: Vec<usize> = (0..m).filter(|i| mask >> i & 1 == 1).collect();
        if chosen.len() > best
            && ls
                .is_2packing(&chosen)
                .expect("oracle indices are in range")
        {
            best = chosen.len();
        }
    }
    best
}

//! Finite abelian groups presented as products of cyclic groups.
//!
//! Elements are coordinate tuples, ordered and enumerated lexicographically.
//! The two structural predicates the constructions depend on are
//! *neutral-sum* (the sum of all elements is the identity) and freedom from
//! involutions (no element of order two); for cyclic groups both reduce to
//! parity of the order, but they differ on products such as Z2 x Z2, which
//! is neutral-sum yet full of involutions.

use std::fmt;

use crate::error::{Error, Result};

/// A direct product of cyclic groups `Z_{n1} x ... x Z_{nk}`, each factor of
/// positive order. The trivial group is the empty product.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AbelianGroup {
    cyclic_orders: Vec<u64>,
}

/// An element of an [`AbelianGroup`]: one residue per cyclic factor.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GroupElement {
    coords: Vec<u64>,
}

impl GroupElement {
    pub fn coords(&self) -> &[u64] {
        &self.coords
    }
}

impl fmt::Display for GroupElement {
    /// Coordinates joined by `.`: `1.2` in Z3 x Z3, `4` in Z5, `` in the
    /// trivial group.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for c in &self.coords {
            if !first {
                write!(f, ".")?;
            }
            write!(f, "{c}")?;
            first = false;
        }
        Ok(())
    }
}

impl AbelianGroup {
    /// The cyclic group of order `n`.
    pub fn cyclic(n: u64) -> Result<AbelianGroup> {
        if n == 0 {
            return Err(Error::NonPositiveOrder);
        }
        Ok(AbelianGroup {
            cyclic_orders: vec![n],
        })
    }

    /// The direct product of the given cyclic orders; empty means trivial.
    pub fn product(orders: &[u64]) -> Result<AbelianGroup> {
        if orders.contains(&0) {
            return Err(Error::NonPositiveOrder);
        }
        Ok(AbelianGroup {
            cyclic_orders: orders.to_vec(),
        })
    }

    /// Parses descriptors like `z5` or `z3xz3` (case-insensitive).
    pub fn parse_descriptor(text: &str) -> Result<AbelianGroup> {
        let bad = || Error::BadGroupDescriptor {
            text: text.to_string(),
        };
        let lowered = text.to_ascii_lowercase();
        let mut orders = Vec::new();
        for part in lowered.split('x') {
            let digits = part.strip_prefix('z').ok_or_else(bad)?;
            if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
                return Err(bad());
            }
            let n: u64 = digits.parse().map_err(|_| bad())?;
            if n == 0 {
                return Err(Error::NonPositiveOrder);
            }
            orders.push(n);
        }
        if orders.is_empty() {
            return Err(bad());
        }
        AbelianGroup::product(&orders)
    }

    /// The descriptor this group parses back from: `z3xz3`, `z7`, ...
    pub fn descriptor(&self) -> String {
        self.cyclic_orders
            .iter()
            .map(|n| format!("z{n}"))
            .collect::<Vec<_>>()
            .join("x")
    }

    pub fn cyclic_orders(&self) -> &[u64] {
        &self.cyclic_orders
    }

    /// |Γ|: the product of the factor orders (1 for the trivial group).
    pub fn order(&self) -> u64 {
        self.cyclic_orders.iter().product()
    }

    /// All elements in lexicographic coordinate order.
    pub fn elements(&self) -> Vec<GroupElement> {
        let mut out = Vec::with_capacity(self.order() as usize);
        let mut coords = vec![0u64; self.cyclic_orders.len()];
        loop {
            out.push(GroupElement {
                coords: coords.clone(),
            });
            // odometer increment, least-significant coordinate last
            let mut i = self.cyclic_orders.len();
            loop {
                if i == 0 {
                    return out;
                }
                i -= 1;
                coords[i] += 1;
                if coords[i] < self.cyclic_orders[i] {
                    break;
                }
                coords[i] = 0;
            }
        }
    }

    pub fn neutral(&self) -> GroupElement {
        GroupElement {
            coords: vec![0; self.cyclic_orders.len()],
        }
    }

    pub fn add(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        let coords = self
            .cyclic_orders
            .iter()
            .zip(a.coords.iter().zip(&b.coords))
            .map(|(&n, (&x, &y))| (x + y) % n)
            .collect();
        GroupElement { coords }
    }

    pub fn negate(&self, a: &GroupElement) -> GroupElement {
        let coords = self
            .cyclic_orders
            .iter()
            .zip(&a.coords)
            .map(|(&n, &x)| (n - x) % n)
            .collect();
        GroupElement { coords }
    }

    pub fn sub(&self, a: &GroupElement, b: &GroupElement) -> GroupElement {
        self.add(a, &self.negate(b))
    }

    /// True iff the sum of all group elements is the identity.
    ///
    /// Computed factor-wise: coordinate `i` of the total sum is the sum
    /// `0 + 1 + ... + (n_i - 1)` counted `|Γ|/n_i` times, reduced mod `n_i`.
    pub fn is_neutral_sum(&self) -> bool {
        let order = self.order();
        self.cyclic_orders.iter().all(|&n| {
            let per_residue = order / n;
            // sum of residues mod n, times multiplicity, mod n
            let residue_sum = (n * (n - 1) / 2) % n;
            (residue_sum * (per_residue % n)).is_multiple_of(n)
        })
    }

    /// True iff no element has order two, i.e. every cyclic factor is odd.
    pub fn has_no_involution(&self) -> bool {
        self.cyclic_orders.iter().all(|&n| n % 2 == 1)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cyclic_arithmetic() {
        let g = AbelianGroup::cyclic(5).unwrap();
        let els = g.elements();
        assert_eq!(els.len(), 5);
        assert_eq!(els[0], g.neutral());
        assert_eq!(g.add(&els[3], &els[4]), els[2]);
        assert_eq!(g.sub(&els[1], &els[3]), els[3]);
        assert_eq!(g.negate(&els[2]), els[3]);
        assert_eq!(els[4].to_string(), "4");
    }

    #[test]
    fn product_enumeration_is_lexicographic() {
        let g = AbelianGroup::product(&[2, 3]).unwrap();
        let seen: Vec<String> = g.elements().iter().map(|e| e.to_string()).collect();
        assert_eq!(seen, vec!["0.0", "0.1", "0.2", "1.0", "1.1", "1.2"]);
        let one_two = &g.elements()[5];
        assert_eq!(g.add(one_two, one_two).to_string(), "0.1");
    }

    #[test]
    fn trivial_group() {
        let g = AbelianGroup::product(&[]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.elements(), vec![g.neutral()]);
        assert_eq!(g.neutral().to_string(), "");
        assert!(g.is_neutral_sum());
        assert!(g.has_no_involution());
    }

    #[test]
    fn zero_order_is_rejected() {
        assert!(matches!(
            AbelianGroup::cyclic(0),
            Err(Error::NonPositiveOrder)
        ));
        assert!(matches!(
            AbelianGroup::product(&[3, 0]),
            Err(Error::NonPositiveOrder)
        ));
    }

    #[test]
    fn descriptor_round_trip() {
        for text in ["z3", "z7", "z3xz3", "z3xz5", "z2xz2", "z9"] {
            let g = AbelianGroup::parse_descriptor(text).unwrap();
            assert_eq!(g.descriptor(), text);
        }
        assert_eq!(
            AbelianGroup::parse_descriptor("Z3xZ5")
                .unwrap()
                .descriptor(),
            "z3xz5"
        );
        for text in ["", "z", "3", "z3x", "xz3", "z3yz3", "z-3", "q5"] {
            assert!(
                matches!(
                    AbelianGroup::parse_descriptor(text),
                    Err(Error::BadGroupDescriptor { .. })
                ),
                "descriptor {text:?} should be rejected"
            );
        }
        assert!(matches!(
            AbelianGroup::parse_descriptor("z0"),
            Err(Error::NonPositiveOrder)
        ));
    }

    #[test]
    fn neutral_sum_matches_brute_force_for_cyclic_groups() {
        for n in 1..=50 {
            let g = AbelianGroup::cyclic(n).unwrap();
            let mut total = g.neutral();
            for e in g.elements() {
                total = g.add(&total, &e);
            }
            let brute = total == g.neutral();
            assert_eq!(g.is_neutral_sum(), brute, "mismatch at n = {n}");
            // For cyclic groups, neutral-sum is exactly oddness.
            assert_eq!(brute, n % 2 == 1, "parity law at n = {n}");
        }
    }

    #[test]
    fn neutral_sum_matches_brute_force_for_products() {
        for orders in [
            &[2, 2][..],
            &[2, 3],
            &[2, 4],
            &[3, 3],
            &[3, 5],
            &[4, 4],
            &[2, 2, 2],
            &[3, 3, 3],
            &[2, 2, 3],
        ] {
            let g = AbelianGroup::product(orders).unwrap();
            let mut total = g.neutral();
            for e in g.elements() {
                total = g.add(&total, &e);
            }
            assert_eq!(
                g.is_neutral_sum(),
                total == g.neutral(),
                "mismatch for {orders:?}"
            );
        }
    }

    #[test]
    fn involution_detection() {
        // Z2 x Z2 is neutral-sum but has involutions; odd groups have none.
        let klein = AbelianGroup::product(&[2, 2]).unwrap();
        assert!(klein.is_neutral_sum());
        assert!(!klein.has_no_involution());

        let z9 = AbelianGroup::cyclic(9).unwrap();
        assert!(z9.has_no_involution());
        let z6 = AbelianGroup::cyclic(6).unwrap();
        assert!(!z6.has_no_involution());

        // brute force: an involution is a non-neutral element with e + e = 0
        for orders in [&[3][..], &[2, 2], &[5], &[6], &[3, 3], &[2, 3]] {
            let g = AbelianGroup::product(orders).unwrap();
            let brute = !g
                .elements()
                .iter()
                .any(|e| *e != g.neutral() && g.add(e, e) == g.neutral());
            assert_eq!(g.has_no_involution(), brute, "mismatch for {orders:?}");
        }
    }
}

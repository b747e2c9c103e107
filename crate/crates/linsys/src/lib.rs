//! Finite linear systems: incidence structures in which any two distinct
//! lines share at most one point.
//!
//! The crate provides:
//!
//! - a validated incidence data model with subsystem operations and
//!   certificate predicates ([`LinearSystem`]),
//! - finite abelian groups presented as products of cyclic groups
//!   ([`AbelianGroup`]), used to drive the `cnn` construction,
//! - instance generators: the two-apex systems `cnn`, prime-order projective
//!   planes, triangle deletion, a lattice enumerator, and a seeded random
//!   corpus generator,
//! - exact branch-and-bound solvers for the transversal number τ and the
//!   2-packing number ν₂, returning verifiable certificates,
//! - Levi (incidence) graph construction with girth and a girth-based
//!   edge-count bound that can certify non-planarity,
//! - a verification harness that re-checks the structural identities these
//!   families satisfy and emits machine-readable reports.
//!
//! All operations are deterministic: iteration orders are fixed, ties break
//! toward the lowest index, and randomness only enters through explicit
//! seeds.

mod bitset;
mod error;

pub mod generators;
pub mod groups;
pub mod iso;
pub mod levi;
pub mod solvers;
pub mod system;
pub mod verify;

pub use error::Error;
pub use generators::{
    chat, cnn, delete_triangle, enumerate_between, example_c34, find_triangle, projective_plane,
    random_linear_system, triangles, Triangle,
};
pub use groups::{AbelianGroup, GroupElement};
pub use iso::{are_isomorphic, are_isomorphic_capped, PointBijection, DEFAULT_ISO_CAP};
pub use levi::{
    export_dot, girth, levi_graph, planarity_bound, BipartiteIncidenceGraph, Girth,
    PlanarityBoundReport,
};
pub use solvers::{
    check_eq1, nu2_exact, nu2_greedy, tau_exact, tau_greedy, thm21_hypothesis, BoundsReport,
    Certificate, CertificateKind, Thm21Hypothesis, DEFAULT_NODE_BUDGET,
};
pub use system::{LinearSystem, SystemStats};
pub use verify::{
    standard_corpus, verify_cor42, verify_eq1, verify_lemma41, verify_lemmas_42_43,
    verify_props_31_32, verify_thm21, verify_thm32_minimality, CheckOutcome, Cor42Result,
    CorpusInstance, Counterexample, InstanceRecord, VerificationReport,
};

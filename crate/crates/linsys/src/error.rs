use thiserror::Error;

/// Every failure the library can report.
///
/// Variants are grouped by the module that raises them; all carry enough
/// context to point at the offending input.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    // ---- incidence model ----
    #[error("duplicate point label {label:?}")]
    DuplicatePoint { label: String },
    #[error("lines {first} and {second} are identical as point sets")]
    DuplicateLine { first: usize, second: usize },
    #[error("line {line} references unknown point {label:?}")]
    UnknownPointInLine { line: usize, label: String },
    #[error("line {line} is empty")]
    EmptyLine { line: usize },
    #[error("lines {first} and {second} share {} points {shared:?}; two lines may share at most one", shared.len())]
    PairwiseIntersectionViolation {
        first: usize,
        second: usize,
        shared: Vec<String>,
    },
    #[error("unknown point {label:?}")]
    UnknownPoint { label: String },
    #[error("index {index} out of range (length {len})")]
    IndexOutOfRange { index: usize, len: usize },
    #[error("lines {first} and {second} collapse to the same set under the chosen points")]
    DuplicateInducedLine { first: usize, second: usize },
    #[error("system too large for isomorphism search: {points} points exceeds the cap of {cap}")]
    SizeLimitExceeded { points: usize, cap: usize },

    // ---- groups ----
    #[error("cyclic order must be positive")]
    NonPositiveOrder,
    #[error("malformed group descriptor {text:?}; expected e.g. \"z3\" or \"z3xz5\"")]
    BadGroupDescriptor { text: String },

    // ---- generators ----
    #[error("group not neutral-sum")]
    GroupNotNeutralSum,
    #[error("group has an involution")]
    GroupHasInvolution,
    #[error("group order must be odd and at least 3 (got {order})")]
    EvenOrder { order: u64 },
    #[error("{q} is not prime; only prime-field projective planes are supported")]
    NotPrime { q: u64 },
    #[error("system contains no triangle (three pairwise-joined, non-collinear points)")]
    NoTriangle,
    #[error("not a triangle of this system: {reason}")]
    InvalidTriangle { reason: String },
    #[error("base system is not a subsystem of the given supersystem")]
    NotASubsystem,
    #[error("enumeration span too large: {extra_points} extra points + {extra_lines} extra lines exceeds the cap of {cap}")]
    EnumerationCapExceeded {
        extra_points: usize,
        extra_lines: usize,
        cap: usize,
    },
    #[error("infeasible random-system parameters: {reason}")]
    InfeasibleParameters { reason: String },

    // ---- solvers ----
    #[error("node budget exhausted after {nodes} nodes; result would not be exact")]
    BudgetExhausted { nodes: u64 },
    #[error("operation needs at least two points")]
    FewerThanTwoPoints,

    // ---- levi ----
    #[error("label count mismatch: {given} labels for {expected} vertices")]
    LabelCountMismatch { given: usize, expected: usize },
}

pub type Result<T> = std::result::Result<T, Error>;

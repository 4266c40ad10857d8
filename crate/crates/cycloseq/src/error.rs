//! Error types shared across the engine.

use thiserror::Error;

/// Errors from exact cyclotomic arithmetic.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum CycloError {
    #[error("operation undefined for the zero element")]
    ZeroElement,
    #[error("elements belong to different cyclotomic fields (m = {0} vs m = {1})")]
    FieldMismatch(u64, u64),
}

/// Errors from sequence specialization and term analysis.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum LrsError {
    #[error("invalid sequence: {0}")]
    InvalidSequence(String),
    #[error("element is not a root of unity")]
    NotRootOfUnity,
    #[error("specialization point is exceptional: {}", reasons.join("; "))]
    ExceptionalParameter { reasons: Vec<String> },
    #[error("no single dominant root (tie of size {tie_size})")]
    NoSingleDominantRoot { tie_size: usize },
    #[error("dominant root has absolute value <= 1; dominance exponents are undefined")]
    DominantModulusNotAboveOne,
    #[error("term {n} degenerates: the subdominant part vanishes exactly")]
    DegenerateTerm { n: u64 },
    #[error("structure violation at n = {n}: {reason}")]
    StructureViolation { n: u64, reason: String },
}

/// Errors from ideal arithmetic and factorization.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum IdealError {
    #[error("operation undefined for the zero element")]
    ZeroElement,
    #[error("element is not an algebraic integer (power-basis coordinates must be integers)")]
    NonIntegral,
    #[error("factorization is incomplete (budget exhausted); unfactored cofactor remains")]
    IncompleteFactorization,
    #[error("the set S of prime ideals must be non-empty")]
    EmptyS,
}

/// Errors from the exclusion machinery.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum ScanError {
    #[error(
        "candidate root of unity of order {order} lies outside the working cyclotomic field Q(zeta_{m})"
    )]
    UniverseTooSmall { order: u64, m: u64 },
}

/// Errors from the explicit bound pipelines.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum BoundError {
    #[error("bad input: {0}")]
    BadInput(String),
    #[error("no linear-form constant configured; supply an override")]
    MissingConstant,
    #[error("dominant root has absolute value <= 1; growth bounds are undefined")]
    DegenerateGap,
    #[error(transparent)]
    Lrs(#[from] LrsError),
    #[error(transparent)]
    Ideal(#[from] IdealError),
}

/// Errors from the S-unit sum solver.
#[derive(Debug, Clone, Error, PartialEq, Eq)]
pub enum SolveError {
    #[error("candidate window at n = {n} exceeds the configured height cap")]
    CapExceeded { n: u64 },
    #[error("invalid solver configuration: {0}")]
    InvalidConfig(String),
}

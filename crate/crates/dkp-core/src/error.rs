//! Error types, one small enum per subsystem.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinAlgError {
    #[error("shape mismatch in {op}: left is {lrows}x{lcols}, right is {rrows}x{rcols}")]
    ShapeMismatch {
        op: &'static str,
        lrows: usize,
        lcols: usize,
        rrows: usize,
        rcols: usize,
    },
    #[error("matrix is not square: {rows}x{cols}")]
    NotSquare { rows: usize, cols: usize },
    #[error("inconsistent dimensions across sylvester pairs: pair {index} has A {arows}x{acols}, B {brows}x{bcols}")]
    InconsistentPairs {
        index: usize,
        arows: usize,
        acols: usize,
        brows: usize,
        bcols: usize,
    },
    #[error("invalid rational literal {0:?}")]
    BadRational(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RepError {
    #[error("metric signature must start with +1 and have length >= 2, got {0:?}")]
    BadSignature(Vec<i8>),
    #[error("representation needs {expected} generators of size {dim}x{dim}, got generator {index} of size {rows}x{cols}")]
    BadGenerator {
        expected: usize,
        dim: usize,
        index: usize,
        rows: usize,
        cols: usize,
    },
    #[error("spacetime dimension must be at least 2, got {0}")]
    DimensionTooSmall(usize),
    #[error(
        "input gammas do not satisfy the Clifford relation (first violation at mu={mu}, nu={nu})"
    )]
    NotClifford { mu: usize, nu: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProjectorError {
    #[error("representation does not satisfy the trilinear algebra (first violation at {0:?})")]
    NotDkp((usize, usize, usize)),
    #[error(
        "scalar projector is not idempotent for this representation (D={d}); unsupported input"
    )]
    NotIdempotent { d: usize },
    #[error("operation requires D={expected}, representation has D={got}")]
    WrongDimension { expected: usize, got: usize },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum AnalysisError {
    #[error("representation does not satisfy the trilinear algebra (first violation at {0:?})")]
    NotDkp((usize, usize, usize)),
    #[error("subspace is not invariant: beta^{mu} maps basis vector {col} outside the span")]
    NotInvariant { mu: usize, col: usize },
    #[error("basis vectors are not linearly independent")]
    DependentBasis,
    #[error("representations have different metrics (D={da} vs D={db})")]
    MetricMismatch { da: usize, db: usize },
    #[error("intertwiner is not invertible")]
    NotInvertible,
    #[error("S†S is not a scalar matrix; unitarizability undecided by this method")]
    GramNotScalar,
    #[error("S†S scalar is not a positive rational (got {0})")]
    GramNotPositive(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PlaneWaveError {
    #[error("momentum has {got} components but the representation has D={expected}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("mass must be a positive rational, got {0}")]
    BadMass(String),
    #[error("momentum is off shell: p^2 = {p2} but m^2 = {m2}")]
    OffShell { p2: String, m2: String },
    #[error("no on-shell amplitude to map (empty solution space)")]
    EmptySolutionSpace,
}

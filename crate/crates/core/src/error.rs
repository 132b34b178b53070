//! Error types shared across the crate.
//!
//! All vertex indices carried by errors and witnesses are 1-based, matching
//! the labelling `X = {1, ..., m}` used in every external interface. Internal
//! APIs are 0-based; the conversion happens where the error is created.

use thiserror::Error;

/// Errors from matrix construction and validation.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum MatrixError {
    #[error("matrix must have order >= 2, got {m}")]
    OrderTooSmall { m: usize },
    #[error("matrix is not square: row {row} has {got} entries, expected {expected}")]
    NotSquare { row: usize, got: usize, expected: usize },
    #[error("diagonal entry ({i},{i}) must be zero, got {value}")]
    NonzeroDiagonal { i: usize, value: String },
    #[error("matrix is not symmetric at ({i},{j}): {a} vs {b}")]
    NotSymmetric { i: usize, j: usize, a: String, b: String },
    #[error("off-diagonal entry ({i},{j}) must be positive, got {value}")]
    NonpositiveEntry { i: usize, j: usize, value: String },
    /// The three values are canonical rational tokens.
    #[error("triangle inequality violated at ({i},{k},{j}): {d_ij} > {d_ik} + {d_kj}")]
    TriangleViolation {
        i: usize,
        k: usize,
        j: usize,
        d_ij: String,
        d_ik: String,
        d_kj: String,
    },
    #[error("skeleton graph is disconnected (vertex {unreached} unreachable from vertex 1)")]
    DisconnectedSkeleton { unreached: usize },
    #[error("skeleton is not a tree: contains cycle {cycle:?}")]
    NotATree { cycle: Vec<usize> },
}

/// Errors from graph construction and graph-level algorithms.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GraphError {
    #[error("hypercube dimension {n} out of range 1..={max}")]
    DimensionOutOfRange { n: u32, max: u32 },
    #[error("graph is disconnected: no path between {i} and {j}")]
    Disconnected { i: usize, j: usize },
    #[error("edge ({u},{v}) has no weight")]
    MissingWeight { u: usize, v: usize },
    #[error("edge ({u},{v}) has nonpositive weight {value}")]
    NonpositiveWeight { u: usize, v: usize, value: String },
}

/// Errors from the recognizers.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RecognizeError {
    #[error("{family} recognizer requires order {expected}, got {got}")]
    WrongOrder {
        family: &'static str,
        expected: &'static str,
        got: usize,
    },
    #[error("skeleton graph is disconnected (vertex {unreached}); input is not a valid distance matrix")]
    DisconnectedSkeleton { unreached: usize },
    #[error("certificate verification failed at ({i},{j}): expected {expected}, reconstructed {got}")]
    VerificationFailed {
        i: usize,
        j: usize,
        expected: String,
        got: String,
    },
    #[error("internal certificate construction failed: {0}")]
    CertificateConstruction(String),
}

/// Errors from the fixture generators.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum GenError {
    #[error("invalid generator spec: {0}")]
    Spec(String),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

/// Errors from the brute-force realizability oracle.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum OracleError {
    #[error("oracle size guard: order {m} exceeds maximum {max}")]
    SizeGuard { m: usize, max: usize },
    #[error("matrix order {matrix} does not match target order {target}")]
    OrderMismatch { matrix: usize, target: usize },
}

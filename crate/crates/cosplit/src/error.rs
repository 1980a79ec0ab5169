//! Structured errors for precondition violations.
//!
//! Verification *outcomes* (an axiom failing, a composite not being scalar)
//! are reported through return values, not through this type; errors mean the
//! input did not satisfy an operation's contract.

use thiserror::Error;

/// Any contract violation raised by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("dimension mismatch: {context} (expected {expected}, got {got})")]
    DimensionMismatch {
        context: &'static str,
        expected: usize,
        got: usize,
    },

    #[error("matrix size mismatch: left is {left}x{left}, right is {right}x{right}")]
    SizeMismatch { left: usize, right: usize },

    #[error("invalid size {m} for sl_m: require m >= 2")]
    InvalidSlSize { m: usize },

    #[error("basis is linearly dependent (or contains the zero matrix)")]
    DependentBasis,

    #[error("matrix is not in the span of the subalgebra basis")]
    NotInSubalgebra,

    #[error("basis is not closed under the bracket: [b_{a}, b_{b}] left the span")]
    NotClosed { a: usize, b: usize },

    #[error("Jacobi identity fails on basis triple ({a}, {b}, {c})")]
    JacobiFailure { a: usize, b: usize, c: usize },

    #[error("tensor does not belong to this algebra's basis-indexed space")]
    OwnerMismatch,

    #[error("cobracket fails Lie coalgebra axiom {axiom} at basis index {witness}")]
    NotLieCoalgebra { axiom: &'static str, witness: usize },

    #[error("operation requires a co-split or weakly co-split input, got a failing composite")]
    NotCoSplit,

    #[error("bilinear form is degenerate on {context}")]
    DegenerateForm { context: &'static str },

    #[error("proportionality is undefined: both forms are identically zero")]
    DegenerateInput,

    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: char,
        rank: usize,
        reason: &'static str,
    },

    #[error("unsupported realization: {reason}")]
    UnsupportedRealization { reason: String },

    #[error("unsupported subalgebra: {reason}")]
    UnsupportedSubalgebra { reason: String },

    #[error(
        "composite is not a scalar multiple of the identity (first offense at basis index {index})"
    )]
    CompositeNotScalar { index: usize },

    #[error("co-split scalar is not positive: {value}")]
    NonPositiveScalar { value: String },

    #[error(
        "operation requires the canonical sl presentation produced by AlgebraPresentation::sl"
    )]
    NotSlPresentation,

    #[error("parse error: {0}")]
    Parse(String),
}

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

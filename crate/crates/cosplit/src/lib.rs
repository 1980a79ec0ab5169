//! Exact construction and mechanical verification of co-split Lie algebra
//! structures on matrix Lie algebras.
//!
//! A co-split Lie algebra is a triple `(L, [,], delta)` where `delta: L -> L (x) L`
//! is a Lie coalgebra structure and the composite `[,] . delta` is the identity
//! on `L`. This crate builds the canonical cobracket on `sl_m`, transports the
//! structure to the dual space, and restricts it to the classical subalgebras
//! `so_m` and `sp_2l` in their split realizations, verifying every claimed
//! identity by exact rational arithmetic. There are no floating-point numbers
//! and no tolerances anywhere: every check is literal equality in `Q`.
//!
//! Module map:
//! - [`scalar`], [`linalg`]: the exact scalar type and fraction-free dense
//!   linear algebra everything else consumes.
//! - [`lie`]: matrix Lie algebras presented by an ordered basis, with eager
//!   closure and Jacobi verification.
//! - [`tensor`]: sparse tensors of rank 2 and 3 over an algebra's basis.
//! - [`coalgebra`]: the cobracket on `sl_m`, coalgebra axiom checkers, and the
//!   co-split classifier.
//! - [`duality`]: the dual Lie algebra, the trace/Killing proportionality, and
//!   the factorization of `ad` through the cobracket.
//! - [`restriction`]: split embeddings of types B, C, D, the restricted
//!   cobracket, root data, and the co-split scalar computed two independent
//!   ways.
//! - [`json`]: stable machine-readable encodings of the public artifacts.

#![forbid(unsafe_code)]

pub mod coalgebra;
pub mod duality;
pub mod error;
pub mod json;
pub mod lie;
pub mod linalg;
pub mod restriction;
pub mod scalar;
pub mod tensor;

pub use error::{Error, Result};
pub use scalar::{rat, Scalar};

/// The scalar used by every concrete computation in this crate: an exact,
/// arbitrary-precision rational, always reduced, with positive denominator.
pub type Rational = num_rational::BigRational;

/// Dense rational matrix.
pub type QMatrix = linalg::DenseMatrix<Rational>;
/// Square rational matrix living in the ambient `gl_m`.
pub type QSquare = lie::SquareMatrix<Rational>;
/// Matrix Lie algebra over the rationals presented by an ordered basis.
pub type QAlgebra = lie::AlgebraPresentation<Rational>;
/// Rank-2 tensor over a rational algebra's basis.
pub type QTensor2 = tensor::Tensor2<Rational>;
/// Rank-3 tensor over a rational algebra's basis.
pub type QTensor3 = tensor::Tensor3<Rational>;
/// Cobracket on a rational algebra.
pub type QCobracket = coalgebra::Cobracket<Rational>;
/// Split classical embedding over the rationals.
pub type QEmbedding = restriction::Embedding<Rational>;

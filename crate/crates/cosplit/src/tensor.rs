//! Sparse rank-2 and rank-3 tensors over a basis-indexed space.
//!
//! A tensor stores only its nonzero coefficients, keyed by basis index
//! tuples in a `BTreeMap` so iteration order is canonical. Every tensor
//! remembers which coordinate space it lives over; combining tensors from
//! different spaces is an owner error, not a silent reindexing.

use crate::error::{Error, Result};
use crate::lie::{AlgElem, SpaceId};
use crate::linalg::DenseMatrix;
use crate::scalar::Scalar;
use std::collections::BTreeMap;

/// Element of `L (x) L` in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2<S> {
    space: SpaceId,
    dim: usize,
    terms: BTreeMap<(usize, usize), S>,
}

impl<S: Scalar> Tensor2<S> {
    pub fn zero(space: SpaceId, dim: usize) -> Self {
        Tensor2 {
            space,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Accumulates `coeff` onto the `(a, b)` coefficient, dropping the entry
    /// when it cancels to zero.
    pub fn add_term(&mut self, a: usize, b: usize, coeff: S) {
        debug_assert!(a < self.dim && b < self.dim);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b)).or_insert_with(S::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(a, b));
        }
    }

    pub fn coeff(&self, a: usize, b: usize) -> S {
        self.terms.get(&(a, b)).cloned().unwrap_or_else(S::zero)
    }

    /// Nonzero terms in lexicographic index order.
    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize), &S)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        let mut out = self.clone();
        for ((a, b), v) in other.terms() {
            out.add_term(*a, *b, v.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_owner(other)?;
        let mut out = self.clone();
        for ((a, b), v) in other.terms() {
            out.add_term(*a, *b, -v.clone());
        }
        Ok(out)
    }

    pub fn scale(&self, f: &S) -> Self {
        let mut out = Tensor2::zero(self.space, self.dim);
        if f.is_zero() {
            return out;
        }
        for ((a, b), v) in self.terms() {
            out.terms.insert((*a, *b), v.clone() * f.clone());
        }
        out
    }

    /// The flip `tau(u (x) v) = v (x) u`.
    pub fn tau(&self) -> Self {
        let mut out = Tensor2::zero(self.space, self.dim);
        for ((a, b), v) in self.terms() {
            out.terms.insert((*b, *a), v.clone());
        }
        out
    }

    /// Applies a linear map to both factors: the image of `u (x) v` is
    /// `p(u) (x) p(v)`, where `p` maps this space into the `target` space and
    /// its columns are indexed by this space's basis.
    pub fn map_both(&self, p: &DenseMatrix<S>, target: SpaceId) -> Result<Self> {
        if p.cols() != self.dim {
            return Err(Error::DimensionMismatch {
                context: "map_both: map columns must match tensor dimension",
                expected: self.dim,
                got: p.cols(),
            });
        }
        // Column sparsity: the projections used here have at most a couple of
        // nonzeros per column, so expand columns once.
        let mut col_sparse: Vec<Vec<(usize, S)>> = vec![Vec::new(); p.cols()];
        for r in 0..p.rows() {
            for (c, col) in col_sparse.iter_mut().enumerate() {
                let v = p.get(r, c);
                if !v.is_zero() {
                    col.push((r, v.clone()));
                }
            }
        }
        let mut out = Tensor2::zero(target, p.rows());
        for ((a, b), coeff) in self.terms() {
            for (s, ps) in &col_sparse[*a] {
                for (t, pt) in &col_sparse[*b] {
                    out.add_term(*s, *t, coeff.clone() * ps.clone() * pt.clone());
                }
            }
        }
        Ok(out)
    }

    fn check_owner(&self, other: &Self) -> Result<()> {
        if self.space != other.space {
            return Err(Error::OwnerMismatch);
        }
        Ok(())
    }
}

/// Element of `L (x) L (x) L` in basis coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3<S> {
    space: SpaceId,
    dim: usize,
    terms: BTreeMap<(usize, usize, usize), S>,
}

impl<S: Scalar> Tensor3<S> {
    pub fn zero(space: SpaceId, dim: usize) -> Self {
        Tensor3 {
            space,
            dim,
            terms: BTreeMap::new(),
        }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn add_term(&mut self, a: usize, b: usize, c: usize, coeff: S) {
        debug_assert!(a < self.dim && b < self.dim && c < self.dim);
        if coeff.is_zero() {
            return;
        }
        let entry = self.terms.entry((a, b, c)).or_insert_with(S::zero);
        *entry += coeff;
        if entry.is_zero() {
            self.terms.remove(&(a, b, c));
        }
    }

    pub fn coeff(&self, a: usize, b: usize, c: usize) -> S {
        self.terms.get(&(a, b, c)).cloned().unwrap_or_else(S::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&(usize, usize, usize), &S)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        if self.space != other.space {
            return Err(Error::OwnerMismatch);
        }
        let mut out = self.clone();
        for ((a, b, c), v) in other.terms() {
            out.add_term(*a, *b, *c, v.clone());
        }
        Ok(out)
    }

    /// The cyclic rotation `xi(u (x) v (x) w) = v (x) w (x) u`: the
    /// coefficient of `(a, b, c)` moves to `(b, c, a)`.
    pub fn xi(&self) -> Self {
        let mut out = Tensor3::zero(self.space, self.dim);
        for ((a, b, c), v) in self.terms() {
            out.terms.insert((*b, *c, *a), v.clone());
        }
        out
    }
}

/// The pure tensor `x (x) y`.
pub fn product<S: Scalar>(x: &AlgElem<S>, y: &AlgElem<S>) -> Result<Tensor2<S>> {
    if x.space() != y.space() {
        return Err(Error::OwnerMismatch);
    }
    let mut out = Tensor2::zero(x.space(), x.coords().len());
    for (a, xa) in x.coords().iter().enumerate() {
        if xa.is_zero() {
            continue;
        }
        for (b, yb) in y.coords().iter().enumerate() {
            if !yb.is_zero() {
                out.add_term(a, b, xa.clone() * yb.clone());
            }
        }
    }
    Ok(out)
}

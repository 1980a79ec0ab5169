//! Dense exact linear algebra.
//!
//! Everything here reduces to one workhorse, [`row_reduce`]: fraction-free
//! (Bareiss) forward elimination followed by exact back-substitution to
//! reduced row echelon form. Rows are pre-scaled to clear denominators, so the
//! forward pass works on integers and intermediate entries stay bounded by
//! minors of the input; fractions reappear only in the final normalization.
//! Pivoting is first-nonzero in column order, which fixes the pivot ordering
//! every caller's determinism depends on.

use crate::error::{Error, Result};
use crate::scalar::Scalar;
use num_traits::Zero;

/// Row-major dense matrix over an exact scalar.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DenseMatrix<S> {
    rows: usize,
    cols: usize,
    data: Vec<S>,
}

impl<S: Scalar> DenseMatrix<S> {
    /// The zero matrix of the given shape.
    pub fn zeros(rows: usize, cols: usize) -> Self {
        DenseMatrix {
            rows,
            cols,
            data: vec![S::zero(); rows * cols],
        }
    }

    /// The identity matrix of size `n`.
    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, S::one());
        }
        m
    }

    /// Builds a matrix from row slices; all rows must share one length.
    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let n_rows = rows.len();
        let n_cols = rows.first().map_or(0, Vec::len);
        let mut data = Vec::with_capacity(n_rows * n_cols);
        for row in rows {
            if row.len() != n_cols {
                return Err(Error::DimensionMismatch {
                    context: "from_rows: ragged row",
                    expected: n_cols,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(DenseMatrix {
            rows: n_rows,
            cols: n_cols,
            data,
        })
    }

    /// Builds a matrix entrywise.
    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> S) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        DenseMatrix { rows, cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &S {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: S) {
        self.data[r * self.cols + c] = v;
    }

    /// Borrows row `r` as a slice.
    pub fn row(&self, r: usize) -> &[S] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn transpose(&self) -> Self {
        DenseMatrix::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    /// Matrix product `self * other`.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        if self.cols != other.rows {
            return Err(Error::DimensionMismatch {
                context: "matrix product inner dimension",
                expected: self.cols,
                got: other.rows,
            });
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let cur = out.get(i, j).clone();
                        out.set(i, j, cur + a.clone() * b.clone());
                    }
                }
            }
        }
        Ok(out)
    }

    /// Matrix-vector product.
    pub fn mul_vec(&self, v: &[S]) -> Result<Vec<S>> {
        if v.len() != self.cols {
            return Err(Error::DimensionMismatch {
                context: "matrix-vector product",
                expected: self.cols,
                got: v.len(),
            });
        }
        let mut out = vec![S::zero(); self.rows];
        for (i, slot) in out.iter_mut().enumerate() {
            let mut acc = S::zero();
            for (j, x) in v.iter().enumerate() {
                if !x.is_zero() {
                    acc += self.get(i, j).clone() * x.clone();
                }
            }
            *slot = acc;
        }
        Ok(out)
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn scale_row(&mut self, r: usize, f: &S) {
        for j in 0..self.cols {
            let idx = r * self.cols + j;
            let v = std::mem::replace(&mut self.data[idx], S::zero());
            self.data[idx] = v * f.clone();
        }
    }
}

/// Reduced row echelon form together with the pivot columns, in order.
pub struct Echelon<S> {
    pub rref: DenseMatrix<S>,
    pub pivots: Vec<usize>,
}

/// Fraction-free reduction to RREF. See the module docs for the strategy.
pub fn row_reduce<S: Scalar>(input: &DenseMatrix<S>) -> Echelon<S> {
    let mut m = input.clone();
    let (rows, cols) = (m.rows, m.cols);

    // Clear denominators row by row; scaling a row never changes the row
    // space, the kernel, or the solution set of an augmented system.
    for r in 0..rows {
        if let Some(f) = S::clearing_factor(m.row(r)) {
            m.scale_row(r, &f);
        }
    }

    let mut pivots = Vec::new();
    let mut prev = S::one();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !m.get(i, c).is_zero()) else {
            continue;
        };
        m.swap_rows(r, p);
        let pivot = m.get(r, c).clone();
        for i in r + 1..rows {
            let lead = m.get(i, c).clone();
            for j in c..cols {
                // Bareiss step: exact division by the previous pivot.
                let v = pivot.clone() * m.get(i, j).clone() - lead.clone() * m.get(r, j).clone();
                m.set(i, j, v / prev.clone());
            }
        }
        prev = pivot;
        pivots.push(c);
        r += 1;
    }

    // Back-substitute and normalize pivots to 1; exact field division.
    for k in (0..pivots.len()).rev() {
        let c = pivots[k];
        let inv = S::one() / m.get(k, c).clone();
        m.scale_row(k, &inv);
        for i in 0..k {
            let f = m.get(i, c).clone();
            if f.is_zero() {
                continue;
            }
            for j in c..cols {
                let v = m.get(i, j).clone() - f.clone() * m.get(k, j).clone();
                m.set(i, j, v);
            }
        }
    }

    Echelon { rref: m, pivots }
}

/// Rank over the scalar field.
pub fn rank<S: Scalar>(m: &DenseMatrix<S>) -> usize {
    row_reduce(m).pivots.len()
}

/// Solves `a * x = b` exactly. Returns `None` when the system is
/// inconsistent; free variables are set to zero under the elimination's pivot
/// ordering, so the returned solution is deterministic.
pub fn solve_linear<S: Scalar>(a: &DenseMatrix<S>, b: &[S]) -> Result<Option<Vec<S>>> {
    if b.len() != a.rows {
        return Err(Error::DimensionMismatch {
            context: "solve_linear right-hand side",
            expected: a.rows,
            got: b.len(),
        });
    }
    let mut aug = DenseMatrix::zeros(a.rows, a.cols + 1);
    for (i, rhs) in b.iter().enumerate() {
        for j in 0..a.cols {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, a.cols, rhs.clone());
    }
    let Echelon { rref, pivots } = row_reduce(&aug);
    if pivots.last() == Some(&a.cols) {
        return Ok(None);
    }
    let mut x = vec![S::zero(); a.cols];
    for (k, &c) in pivots.iter().enumerate() {
        x[c] = rref.get(k, a.cols).clone();
    }
    Ok(Some(x))
}

/// A basis of the kernel `{x : a * x = 0}`, one vector per free column in
/// ascending column order, each with a 1 in its free coordinate and the
/// negated RREF entries in the pivot coordinates.
pub fn kernel_basis<S: Scalar>(a: &DenseMatrix<S>) -> Vec<Vec<S>> {
    let Echelon { rref, pivots } = row_reduce(a);
    let pivot_set: std::collections::BTreeSet<usize> = pivots.iter().copied().collect();
    let mut basis = Vec::new();
    for free in 0..a.cols {
        if pivot_set.contains(&free) {
            continue;
        }
        let mut v = vec![S::zero(); a.cols];
        v[free] = S::one();
        for (k, &pc) in pivots.iter().enumerate() {
            v[pc] = -rref.get(k, free).clone();
        }
        basis.push(v);
    }
    basis
}

/// Exact inverse; `None` when singular.
pub fn invert<S: Scalar>(a: &DenseMatrix<S>) -> Result<Option<DenseMatrix<S>>> {
    if a.rows != a.cols {
        return Err(Error::DimensionMismatch {
            context: "invert requires a square matrix",
            expected: a.rows,
            got: a.cols,
        });
    }
    let n = a.rows;
    let mut aug = DenseMatrix::zeros(n, 2 * n);
    for i in 0..n {
        for j in 0..n {
            aug.set(i, j, a.get(i, j).clone());
        }
        aug.set(i, n + i, S::one());
    }
    let Echelon { rref, pivots } = row_reduce(&aug);
    if pivots.len() != n || pivots.iter().enumerate().any(|(k, &c)| k != c) {
        return Ok(None);
    }
    Ok(Some(DenseMatrix::from_fn(n, n, |i, j| {
        rref.get(i, n + j).clone()
    })))
}

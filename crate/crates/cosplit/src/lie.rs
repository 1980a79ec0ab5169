//! Matrix Lie algebras presented by an ordered basis.
//!
//! An [`AlgebraPresentation`] owns an independent list of `m x m` matrices
//! closed under the commutator. Construction is eager: linear independence,
//! closure, and the Jacobi identity are all verified up front, so everything
//! downstream may assume a genuine Lie algebra. Coordinates of arbitrary
//! ambient matrices are extracted through a precomputed left inverse of the
//! flattened basis, with exact membership verification.
//!
//! Computations are free to pass through diagonal `gl_m` matrices (for
//! example `E_ii - E_jj` before it is rewritten in the `h` basis); `coords`
//! is the single chokepoint that proves such a matrix lies in the span.

use crate::error::{Error, Result};
use crate::linalg::{self, DenseMatrix};
use crate::scalar::Scalar;
use crate::tensor::Tensor2;
use num_traits::Zero;
use std::sync::atomic::{AtomicU64, Ordering};

/// Identity token for a basis-indexed coordinate space. Two objects interact
/// only when they carry the same space id; this is what "owner" checks
/// compare.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct SpaceId(u64);

impl SpaceId {
    pub(crate) fn fresh() -> Self {
        static NEXT: AtomicU64 = AtomicU64::new(1);
        SpaceId(NEXT.fetch_add(1, Ordering::Relaxed))
    }
}

/// Square matrix in the ambient `gl_m`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquareMatrix<S> {
    size: usize,
    data: Vec<S>,
}

impl<S: Scalar> SquareMatrix<S> {
    pub fn zero(size: usize) -> Self {
        SquareMatrix {
            size,
            data: vec![S::zero(); size * size],
        }
    }

    /// The elementary matrix `E_{i,j}` (0-based indices).
    pub fn elementary(size: usize, i: usize, j: usize) -> Self {
        let mut m = Self::zero(size);
        m.set(i, j, S::one());
        m
    }

    pub fn from_rows(rows: Vec<Vec<S>>) -> Result<Self> {
        let size = rows.len();
        let mut data = Vec::with_capacity(size * size);
        for row in rows {
            if row.len() != size {
                return Err(Error::DimensionMismatch {
                    context: "square matrix from ragged rows",
                    expected: size,
                    got: row.len(),
                });
            }
            data.extend(row);
        }
        Ok(SquareMatrix { size, data })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn get(&self, i: usize, j: usize) -> &S {
        &self.data[i * self.size + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: S) {
        self.data[i * self.size + j] = v;
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        Ok(SquareMatrix {
            size: self.size,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() + b.clone())
                .collect(),
        })
    }

    pub fn sub(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        Ok(SquareMatrix {
            size: self.size,
            data: self
                .data
                .iter()
                .zip(&other.data)
                .map(|(a, b)| a.clone() - b.clone())
                .collect(),
        })
    }

    pub fn scale(&self, f: &S) -> Self {
        SquareMatrix {
            size: self.size,
            data: self.data.iter().map(|a| a.clone() * f.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_size(other)?;
        let n = self.size;
        let mut out = Self::zero(n);
        for i in 0..n {
            for k in 0..n {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..n {
                    let b = other.get(k, j);
                    if !b.is_zero() {
                        let v = out.get(i, j).clone() + a.clone() * b.clone();
                        out.set(i, j, v);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn transpose(&self) -> Self {
        let n = self.size;
        let mut out = Self::zero(n);
        for i in 0..n {
            for j in 0..n {
                out.set(j, i, self.get(i, j).clone());
            }
        }
        out
    }

    pub fn trace(&self) -> S {
        let mut t = S::zero();
        for i in 0..self.size {
            t += self.get(i, i).clone();
        }
        t
    }

    /// `trace(self * other)` without forming the product.
    pub fn trace_product(&self, other: &Self) -> Result<S> {
        self.check_size(other)?;
        let mut t = S::zero();
        for i in 0..self.size {
            for j in 0..self.size {
                let a = self.get(i, j);
                if !a.is_zero() {
                    t += a.clone() * other.get(j, i).clone();
                }
            }
        }
        Ok(t)
    }

    /// Nonzero entries as `(flat_index, value)`, flat index `i * size + j`.
    fn sparse_flat(&self) -> Vec<(usize, S)> {
        self.data
            .iter()
            .enumerate()
            .filter(|(_, v)| !v.is_zero())
            .map(|(k, v)| (k, v.clone()))
            .collect()
    }

    fn check_size(&self, other: &Self) -> Result<()> {
        if self.size != other.size {
            return Err(Error::SizeMismatch {
                left: self.size,
                right: other.size,
            });
        }
        Ok(())
    }
}

/// The commutator `[a, b] = ab - ba`.
pub fn commutator<S: Scalar>(a: &SquareMatrix<S>, b: &SquareMatrix<S>) -> Result<SquareMatrix<S>> {
    a.mul(b)?.sub(&b.mul(a)?)
}

/// Element of a presented algebra, given by coordinates over its basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgElem<S> {
    space: SpaceId,
    coords: Vec<S>,
}

impl<S: Scalar> AlgElem<S> {
    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn coords(&self) -> &[S] {
        &self.coords
    }

    pub fn into_coords(self) -> Vec<S> {
        self.coords
    }
}

/// Structure constants of a bracket, stored as the sparse coordinate vector
/// of `[b_a, b_b]` for every ordered basis pair `(a, b)`. This is exactly the
/// matrix of the bracket `L (x) L -> L` in the index-pair basis.
#[derive(Debug, Clone)]
pub struct BracketTable<S> {
    space: SpaceId,
    dim: usize,
    table: Vec<Vec<(usize, S)>>,
}

impl<S: Scalar> BracketTable<S> {
    pub(crate) fn from_parts(space: SpaceId, dim: usize, table: Vec<Vec<(usize, S)>>) -> Self {
        debug_assert_eq!(table.len(), dim * dim);
        BracketTable { space, dim, table }
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Sparse coordinates of `[b_a, b_b]`.
    pub fn bracket_basis(&self, a: usize, b: usize) -> &[(usize, S)] {
        &self.table[a * self.dim + b]
    }

    /// Coordinates of `[x, y]` for coordinate vectors `x`, `y`.
    pub fn bracket_coords(&self, x: &[S], y: &[S]) -> Vec<S> {
        let mut out = vec![S::zero(); self.dim];
        for (a, xa) in x.iter().enumerate() {
            if xa.is_zero() {
                continue;
            }
            for (b, yb) in y.iter().enumerate() {
                if yb.is_zero() {
                    continue;
                }
                let f = xa.clone() * yb.clone();
                for (c, v) in self.bracket_basis(a, b) {
                    out[*c] += f.clone() * v.clone();
                }
            }
        }
        out
    }

    /// Applies the bracket to a rank-2 tensor: the image of
    /// `sum t_{ab} b_a (x) b_b` is `sum t_{ab} [b_a, b_b]`.
    pub fn apply_tensor2(&self, t: &Tensor2<S>) -> Result<Vec<S>> {
        if t.space() != self.space {
            return Err(Error::OwnerMismatch);
        }
        let mut out = vec![S::zero(); self.dim];
        for ((a, b), coeff) in t.terms() {
            for (c, v) in self.bracket_basis(*a, *b) {
                out[*c] += coeff.clone() * v.clone();
            }
        }
        Ok(out)
    }

    /// Dense matrix of the bracket, `dim` rows by `dim^2` columns; column
    /// `a * dim + b` holds the coordinates of `[b_a, b_b]`.
    pub fn matrix(&self) -> DenseMatrix<S> {
        let mut m = DenseMatrix::zeros(self.dim, self.dim * self.dim);
        for (col, entries) in self.table.iter().enumerate() {
            for (c, v) in entries {
                m.set(*c, col, v.clone());
            }
        }
        m
    }

    /// First basis pair violating antisymmetry, if any.
    pub fn antisymmetry_witness(&self) -> Option<(usize, usize)> {
        for a in 0..self.dim {
            for b in a..self.dim {
                let ab = self.bracket_basis(a, b);
                let ba = self.bracket_basis(b, a);
                let mut sum = vec![S::zero(); self.dim];
                for (c, v) in ab.iter().chain(ba.iter()) {
                    sum[*c] += v.clone();
                }
                if sum.iter().any(|v| !v.is_zero()) {
                    return Some((a, b));
                }
            }
        }
        None
    }

    /// First basis triple violating the Jacobi identity, if any. Antisymmetry
    /// reduces the search to strictly increasing triples.
    pub fn jacobi_witness(&self) -> Option<(usize, usize, usize)> {
        let mut acc = vec![S::zero(); self.dim];
        let mut touched = Vec::new();
        for a in 0..self.dim {
            for b in a + 1..self.dim {
                for c in b + 1..self.dim {
                    for (x, y, z) in [(a, b, c), (b, c, a), (c, a, b)] {
                        for (d, v) in self.bracket_basis(y, z) {
                            for (e, w) in self.bracket_basis(x, *d) {
                                if acc[*e].is_zero() {
                                    touched.push(*e);
                                }
                                acc[*e] += v.clone() * w.clone();
                            }
                        }
                    }
                    let mut bad = false;
                    for &e in &touched {
                        if !acc[e].is_zero() {
                            bad = true;
                        }
                        acc[e] = S::zero();
                    }
                    touched.clear();
                    if bad {
                        return Some((a, b, c));
                    }
                }
            }
        }
        None
    }
}

/// A matrix Lie algebra given by an ordered basis inside `gl_m`.
#[derive(Debug)]
pub struct AlgebraPresentation<S> {
    space: SpaceId,
    ambient: usize,
    basis: Vec<SquareMatrix<S>>,
    /// Flattened basis matrices as sparse columns, used for membership checks.
    basis_flat: Vec<Vec<(usize, S)>>,
    /// Left inverse of the flattened basis: maps `vec(x)` to coordinates.
    coord_map: DenseMatrix<S>,
    bracket: BracketTable<S>,
    sl_size: Option<usize>,
}

impl<S: Scalar> AlgebraPresentation<S> {
    /// Presents the span of `basis` inside `gl_m`, verifying independence,
    /// closure under the commutator, and the Jacobi identity.
    pub fn new(ambient: usize, basis: Vec<SquareMatrix<S>>) -> Result<Self> {
        Self::build(ambient, basis, None)
    }

    /// The canonical presentation of `sl_m`: all `E_{i,j}` with `i != j` in
    /// lexicographic `(i, j)` order, then `h_t = E_{t,t} - E_{t+1,t+1}` for
    /// `t = 0 .. m-2`.
    pub fn sl(m: usize) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSlSize { m });
        }
        let mut basis = Vec::with_capacity(m * m - 1);
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    basis.push(SquareMatrix::elementary(m, i, j));
                }
            }
        }
        for t in 0..m - 1 {
            let mut h = SquareMatrix::zero(m);
            h.set(t, t, S::one());
            h.set(t + 1, t + 1, -S::one());
            basis.push(h);
        }
        Self::build(m, basis, Some(m))
    }

    fn build(ambient: usize, basis: Vec<SquareMatrix<S>>, sl_size: Option<usize>) -> Result<Self> {
        if basis.is_empty() {
            return Err(Error::DependentBasis);
        }
        for b in &basis {
            if b.size() != ambient {
                return Err(Error::SizeMismatch {
                    left: ambient,
                    right: b.size(),
                });
            }
        }
        let dim = basis.len();
        let basis_flat: Vec<Vec<(usize, S)>> =
            basis.iter().map(SquareMatrix::sparse_flat).collect();

        // Gram matrix of the flattened basis. Over the rationals its kernel
        // coincides with the kernel of the flattened basis itself, so
        // invertibility is exactly linear independence, and the left inverse
        // G^-1 B^T recovers coordinates.
        let mut gram = DenseMatrix::zeros(dim, dim);
        for a in 0..dim {
            for b in a..dim {
                let mut acc = S::zero();
                let (short, long) = (&basis_flat[a], &basis_flat[b]);
                let mut it = long.iter().peekable();
                for (k, v) in short {
                    while let Some((k2, _)) = it.peek() {
                        if k2 < k {
                            it.next();
                        } else {
                            break;
                        }
                    }
                    if let Some((k2, w)) = it.peek() {
                        if k2 == k {
                            acc += v.clone() * w.clone();
                        }
                    }
                }
                gram.set(a, b, acc.clone());
                gram.set(b, a, acc);
            }
        }
        let gram_inv = linalg::invert(&gram)?.ok_or(Error::DependentBasis)?;

        // coord_map = G^-1 B^T, a dim x m^2 matrix.
        let mut coord_map: DenseMatrix<S> = DenseMatrix::zeros(dim, ambient * ambient);
        for (a, flat) in basis_flat.iter().enumerate() {
            for (k, v) in flat {
                for r in 0..dim {
                    let cur = coord_map.get(r, *k).clone();
                    coord_map.set(r, *k, cur + gram_inv.get(r, a).clone() * v.clone());
                }
            }
        }

        let mut alg = AlgebraPresentation {
            space: SpaceId::fresh(),
            ambient,
            basis,
            basis_flat,
            coord_map,
            bracket: BracketTable::from_parts(SpaceId(0), 0, Vec::new()),
            sl_size,
        };

        // Structure constants; closure is verified by the coords membership
        // check. Antisymmetry holds by construction (mirror with negation).
        let mut table = vec![Vec::new(); dim * dim];
        for a in 0..dim {
            for b in a + 1..dim {
                let m = commutator(&alg.basis[a], &alg.basis[b])?;
                let coords = alg
                    .coords(&m)
                    .map_err(|_| Error::NotClosed { a, b })?
                    .into_coords();
                let sparse: Vec<(usize, S)> = coords
                    .into_iter()
                    .enumerate()
                    .filter(|(_, v)| !v.is_zero())
                    .collect();
                table[b * dim + a] = sparse.iter().map(|(c, v)| (*c, -v.clone())).collect();
                table[a * dim + b] = sparse;
            }
        }
        alg.bracket = BracketTable::from_parts(alg.space, dim, table);

        if let Some((a, b, c)) = alg.bracket.jacobi_witness() {
            return Err(Error::JacobiFailure { a, b, c });
        }
        Ok(alg)
    }

    pub fn space(&self) -> SpaceId {
        self.space
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[SquareMatrix<S>] {
        &self.basis
    }

    /// `Some(m)` when this presentation is the canonical `sl_m` one.
    pub fn sl_size(&self) -> Option<usize> {
        self.sl_size
    }

    /// Coordinates of `x` over the basis; errors when `x` is not in the span.
    pub fn coords(&self, x: &SquareMatrix<S>) -> Result<AlgElem<S>> {
        if x.size() != self.ambient {
            return Err(Error::SizeMismatch {
                left: self.ambient,
                right: x.size(),
            });
        }
        let sparse = x.sparse_flat();
        let dim = self.dim();
        let mut coords = vec![S::zero(); dim];
        for (k, v) in &sparse {
            for (r, slot) in coords.iter_mut().enumerate() {
                let c = self.coord_map.get(r, *k);
                if !c.is_zero() {
                    *slot += c.clone() * v.clone();
                }
            }
        }
        // Membership: the candidate coordinates must reproduce x exactly.
        let mut recon = vec![S::zero(); self.ambient * self.ambient];
        for (a, ca) in coords.iter().enumerate() {
            if ca.is_zero() {
                continue;
            }
            for (k, v) in &self.basis_flat[a] {
                recon[*k] += ca.clone() * v.clone();
            }
        }
        for (k, v) in recon.iter().enumerate() {
            if x.data[k] != *v {
                return Err(Error::NotInSubalgebra);
            }
        }
        Ok(AlgElem {
            space: self.space,
            coords,
        })
    }

    /// The matrix `sum c_a b_a`.
    pub fn matrix_from_coords(&self, coords: &[S]) -> Result<SquareMatrix<S>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "matrix_from_coords",
                expected: self.dim(),
                got: coords.len(),
            });
        }
        let mut m = SquareMatrix::zero(self.ambient);
        for (a, c) in coords.iter().enumerate() {
            if !c.is_zero() {
                m = m.add(&self.basis[a].scale(c))?;
            }
        }
        Ok(m)
    }

    /// Wraps raw coordinates as an element of this algebra.
    pub fn element(&self, coords: Vec<S>) -> Result<AlgElem<S>> {
        if coords.len() != self.dim() {
            return Err(Error::DimensionMismatch {
                context: "element coordinates",
                expected: self.dim(),
                got: coords.len(),
            });
        }
        Ok(AlgElem {
            space: self.space,
            coords,
        })
    }

    /// The bracket as a linear map from the index-pair space, i.e. the
    /// structure constant table.
    pub fn bracket_map(&self) -> &BracketTable<S> {
        &self.bracket
    }

    /// Whether `[L, L] = L`, by the rank of the span of all brackets.
    pub fn derived_algebra_is_full(&self) -> bool {
        let dim = self.dim();
        // Gram of the structure-constant vectors; its rank equals the rank of
        // the stacked vectors themselves over an ordered field.
        let mut gram: DenseMatrix<S> = DenseMatrix::zeros(dim, dim);
        for a in 0..dim {
            for b in 0..dim {
                let sc = self.bracket.bracket_basis(a, b);
                for (c1, v1) in sc {
                    for (c2, v2) in sc {
                        let cur = gram.get(*c1, *c2).clone();
                        gram.set(*c1, *c2, cur + v1.clone() * v2.clone());
                    }
                }
            }
        }
        linalg::rank(&gram) == dim
    }
}

/// Basis index of `E_{i,j}` (`i != j`, 0-based) in the canonical `sl_m`
/// ordering.
pub fn sl_offdiag_index(m: usize, i: usize, j: usize) -> usize {
    debug_assert!(i != j && i < m && j < m);
    i * (m - 1) + if j < i { j } else { j - 1 }
}

/// Basis index of `h_t = E_{t,t} - E_{t+1,t+1}` in the canonical `sl_m`
/// ordering.
pub fn sl_h_index(m: usize, t: usize) -> usize {
    debug_assert!(t + 1 < m);
    m * (m - 1) + t
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::rat;
    use crate::Rational;
    use num_traits::One;
    use proptest::prelude::*;

    fn e(m: usize, i: usize, j: usize) -> SquareMatrix<Rational> {
        SquareMatrix::elementary(m, i, j)
    }

    #[test]
    fn sl_dimension_and_order() {
        for m in 2..=5 {
            let alg = AlgebraPresentation::<Rational>::sl(m).unwrap();
            assert_eq!(alg.dim(), m * m - 1);
            assert_eq!(alg.sl_size(), Some(m));
        }
        let sl2 = AlgebraPresentation::<Rational>::sl(2).unwrap();
        assert_eq!(sl2.basis()[0], e(2, 0, 1));
        assert_eq!(sl2.basis()[1], e(2, 1, 0));
        let mut h = SquareMatrix::zero(2);
        h.set(0, 0, rat(1, 1));
        h.set(1, 1, rat(-1, 1));
        assert_eq!(sl2.basis()[2], h);
    }

    #[test]
    fn sl_rejects_size_below_two() {
        assert!(matches!(
            AlgebraPresentation::<Rational>::sl(1),
            Err(Error::InvalidSlSize { m: 1 })
        ));
    }

    #[test]
    fn index_helpers_agree_with_basis_order() {
        let m = 4;
        let alg = AlgebraPresentation::<Rational>::sl(m).unwrap();
        for i in 0..m {
            for j in 0..m {
                if i != j {
                    assert_eq!(alg.basis()[sl_offdiag_index(m, i, j)], e(m, i, j));
                }
            }
        }
        for t in 0..m - 1 {
            let idx = sl_h_index(m, t);
            assert!(alg.basis()[idx].get(t, t).is_one());
        }
    }

    #[test]
    fn commutator_of_elementaries() {
        let c = commutator(&e(2, 0, 1), &e(2, 1, 0)).unwrap();
        let mut h = SquareMatrix::zero(2);
        h.set(0, 0, rat(1, 1));
        h.set(1, 1, rat(-1, 1));
        assert_eq!(c, h);
    }

    #[test]
    fn commutator_size_mismatch_is_an_error() {
        assert!(matches!(
            commutator(&e(2, 0, 1), &e(3, 0, 1)),
            Err(Error::SizeMismatch { left: 2, right: 3 })
        ));
    }

    #[test]
    fn coords_of_diagonal_combination() {
        let alg = AlgebraPresentation::<Rational>::sl(3).unwrap();
        let x = e(3, 0, 0).sub(&e(3, 2, 2)).unwrap();
        let c = alg.coords(&x).unwrap();
        let mut expected = vec![rat(0, 1); 8];
        expected[sl_h_index(3, 0)] = rat(1, 1);
        expected[sl_h_index(3, 1)] = rat(1, 1);
        assert_eq!(c.coords(), &expected[..]);
    }

    #[test]
    fn coords_rejects_matrices_outside_the_span() {
        let alg = AlgebraPresentation::<Rational>::sl(3).unwrap();
        assert!(matches!(
            alg.coords(&e(3, 0, 0)),
            Err(Error::NotInSubalgebra)
        ));
    }

    #[test]
    fn construction_rejects_unclosed_spans() {
        let err = AlgebraPresentation::new(2, vec![e(2, 0, 1), e(2, 1, 0)]);
        assert!(matches!(err, Err(Error::NotClosed { .. })));
    }

    #[test]
    fn construction_rejects_dependent_bases() {
        let err = AlgebraPresentation::new(2, vec![e(2, 0, 1), e(2, 0, 1).scale(&rat(2, 1))]);
        assert!(matches!(err, Err(Error::DependentBasis)));
    }

    #[test]
    fn structure_constants_are_antisymmetric() {
        let alg = AlgebraPresentation::<Rational>::sl(3).unwrap();
        assert_eq!(alg.bracket_map().antisymmetry_witness(), None);
    }

    #[test]
    fn bracket_table_matches_matrix_commutators() {
        let alg = AlgebraPresentation::<Rational>::sl(3).unwrap();
        for a in 0..alg.dim() {
            for b in 0..alg.dim() {
                let direct = commutator(&alg.basis()[a], &alg.basis()[b]).unwrap();
                let mut from_table = SquareMatrix::zero(3);
                for (c, v) in alg.bracket_map().bracket_basis(a, b) {
                    from_table = from_table.add(&alg.basis()[*c].scale(v)).unwrap();
                }
                assert_eq!(direct, from_table);
            }
        }
    }

    #[test]
    fn derived_algebra_full_for_sl() {
        for m in 2..=4 {
            let alg = AlgebraPresentation::<Rational>::sl(m).unwrap();
            assert!(alg.derived_algebra_is_full());
        }
    }

    #[test]
    fn derived_algebra_not_full_for_borel_like_span() {
        // span{E_00, E_01} with [E_00, E_01] = E_01: derived algebra is a line.
        let alg = AlgebraPresentation::new(2, vec![e(2, 0, 0), e(2, 0, 1)]).unwrap();
        assert!(!alg.derived_algebra_is_full());
    }

    #[test]
    fn derived_algebra_not_full_for_abelian_line() {
        let alg = AlgebraPresentation::new(2, vec![e(2, 0, 1)]).unwrap();
        assert!(!alg.derived_algebra_is_full());
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(32))]

        #[test]
        fn coords_round_trip_on_sl3(cs in proptest::collection::vec((-5i64..=5, 1i64..=3), 8)) {
            let alg = AlgebraPresentation::<Rational>::sl(3).unwrap();
            let coords: Vec<Rational> = cs.into_iter().map(|(n, d)| rat(n, d)).collect();
            let m = alg.matrix_from_coords(&coords).unwrap();
            prop_assert_eq!(alg.coords(&m).unwrap().into_coords(), coords);
        }
    }
}

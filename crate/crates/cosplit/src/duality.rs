//! The dual Lie algebra structure and the bilinear-form bridges.
//!
//! A cobracket on `L` induces a bracket on `L*` by adjunction, and a bracket
//! on `L` induces a cobracket on `L*` the same way; [`dualize`] packages both
//! so the co-split classification can be rerun verbatim on the dual. On
//! `sl_m` the induced dual bracket carries a conventional factor of `-2m`
//! ([`dual_sl_bracket`]), which is exactly the normalization that makes the
//! inverse trace Gram matrix an isomorphism of Lie algebras `L* -> L`
//! ([`iso_b_witness`]) and makes the Killing form a fixed multiple of the
//! trace form ([`killing_form_from_table`] against [`trace_form`]).

use crate::coalgebra::{classify_cosplit, Cobracket, CosplitVerdict};
use crate::error::{Error, Result};
use crate::lie::{AlgebraPresentation, BracketTable, SpaceId};
use crate::linalg::{self, DenseMatrix};
use crate::scalar::Scalar;
use crate::tensor::Tensor2;

/// Gram matrix of the trace form `(x, y) = tr(xy)` over the basis.
pub fn trace_form<S: Scalar>(alg: &AlgebraPresentation<S>) -> DenseMatrix<S> {
    let dim = alg.dim();
    let mut t = DenseMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in a..dim {
            let v = alg.basis()[a]
                .trace_product(&alg.basis()[b])
                .expect("basis matrices share one ambient size");
            t.set(a, b, v.clone());
            t.set(b, a, v);
        }
    }
    t
}

/// Gram matrix of `(x, y) = tr(x^T y)`. This pairing is positive definite
/// rather than invariant, so it serves as a negative control for checks that
/// genuinely depend on invariance of the trace form.
pub fn transpose_trace_form<S: Scalar>(alg: &AlgebraPresentation<S>) -> DenseMatrix<S> {
    let dim = alg.dim();
    let mut t = DenseMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in a..dim {
            let v = alg.basis()[a]
                .transpose()
                .trace_product(&alg.basis()[b])
                .expect("basis matrices share one ambient size");
            t.set(a, b, v.clone());
            t.set(b, a, v);
        }
    }
    t
}

/// Gram matrix of the Killing form `(x, y) = tr(ad_x ad_y)`, computed from
/// structure constants alone.
pub fn killing_form_from_table<S: Scalar>(table: &BracketTable<S>) -> DenseMatrix<S> {
    let dim = table.dim();
    let mut k = DenseMatrix::zeros(dim, dim);
    for a in 0..dim {
        for b in a..dim {
            // tr(ad_a ad_b) = sum_c coeff of b_c in [b_a, [b_b, b_c]].
            let mut acc = S::zero();
            for c in 0..dim {
                for (d, v) in table.bracket_basis(b, c) {
                    for (e, w) in table.bracket_basis(a, *d) {
                        if *e == c {
                            acc += v.clone() * w.clone();
                        }
                    }
                }
            }
            k.set(a, b, acc.clone());
            k.set(b, a, acc);
        }
    }
    k
}

/// The constant `c` with `a = c * b`, if one exists. Errors when both
/// matrices are zero, since every constant works vacuously.
pub fn proportionality<S: Scalar>(a: &DenseMatrix<S>, b: &DenseMatrix<S>) -> Result<Option<S>> {
    if a.rows() != b.rows() || a.cols() != b.cols() {
        return Err(Error::DimensionMismatch {
            context: "proportionality operands",
            expected: a.rows() * a.cols(),
            got: b.rows() * b.cols(),
        });
    }
    let mut c: Option<S> = None;
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let (x, y) = (a.get(i, j), b.get(i, j));
            if x.is_zero() && y.is_zero() {
                continue;
            }
            if y.is_zero() {
                return Ok(None);
            }
            let ratio = x.clone() / y.clone();
            match &c {
                None => c = Some(ratio),
                Some(c0) if *c0 != ratio => return Ok(None),
                Some(_) => {}
            }
        }
    }
    c.map(Some).ok_or(Error::DegenerateInput)
}

fn dual_bracket_with<S: Scalar>(
    delta: &Cobracket<S>,
    scale: &S,
    space: SpaceId,
) -> BracketTable<S> {
    let dim = delta.dim();
    let mut table = vec![Vec::new(); dim * dim];
    // [f^a, f^b]* = scale * sum_c (coeff of b_a (x) b_b in delta(b_c)) f^c.
    // Iterating c in ascending order keeps each sparse row sorted.
    for c in 0..dim {
        for ((a, b), v) in delta.image(c).terms() {
            table[a * dim + b].push((c, scale.clone() * v.clone()));
        }
    }
    BracketTable::from_parts(space, dim, table)
}

fn dual_cobracket_with<S: Scalar>(
    bracket: &BracketTable<S>,
    scale: &S,
    space: SpaceId,
) -> Result<Cobracket<S>> {
    let dim = bracket.dim();
    let mut images = vec![Tensor2::zero(space, dim); dim];
    // delta*(f^c) = scale * sum_{a,b} (coeff of b_c in [b_a, b_b]) f^a (x) f^b.
    for a in 0..dim {
        for b in 0..dim {
            for (c, v) in bracket.bracket_basis(a, b) {
                images[*c].add_term(a, b, scale.clone() * v.clone());
            }
        }
    }
    Cobracket::new(space, images)
}

/// The bracket on the dual of `sl_m`, normalized by `-2m`.
pub fn dual_sl_bracket<S: Scalar>(delta: &Cobracket<S>, m: usize) -> BracketTable<S> {
    let scale = S::from_int(-(2 * m as i64));
    dual_bracket_with(delta, &scale, SpaceId::fresh())
}

/// The dual of a bracket/cobracket pair: the cobracket transposes into the
/// dual bracket and vice versa, with no extra normalization, so the dual
/// composite is the transpose of the primal one.
pub struct DualSystem<S> {
    space: SpaceId,
    pub bracket: BracketTable<S>,
    pub delta: Cobracket<S>,
}

impl<S> DualSystem<S> {
    pub fn space(&self) -> SpaceId {
        self.space
    }
}

pub fn dualize<S: Scalar>(
    bracket: &BracketTable<S>,
    delta: &Cobracket<S>,
) -> Result<DualSystem<S>> {
    if bracket.space() != delta.space() || bracket.dim() != delta.dim() {
        return Err(Error::OwnerMismatch);
    }
    let space = SpaceId::fresh();
    let one = S::one();
    Ok(DualSystem {
        space,
        bracket: dual_bracket_with(delta, &one, space),
        delta: dual_cobracket_with(bracket, &one, space)?,
    })
}

fn tensors_coeff_equal<S: Scalar>(a: &Tensor2<S>, b: &Tensor2<S>) -> bool {
    a.num_terms() == b.num_terms()
        && a.terms()
            .zip(b.terms())
            .all(|((ka, va), (kb, vb))| ka == kb && va == vb)
}

/// Whether dualizing twice reproduces the original structure constants and
/// cobracket coefficients exactly (under the canonical identification of a
/// space with its double dual).
pub fn double_dual_round_trip<S: Scalar>(
    bracket: &BracketTable<S>,
    delta: &Cobracket<S>,
) -> Result<bool> {
    let dual = dualize(bracket, delta)?;
    let dd = dualize(&dual.bracket, &dual.delta)?;
    let dim = bracket.dim();
    for a in 0..dim {
        for b in 0..dim {
            if dd.bracket.bracket_basis(a, b) != bracket.bracket_basis(a, b) {
                return Ok(false);
            }
        }
        if !tensors_coeff_equal(dd.delta.image(a), delta.image(a)) {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Values of the entry functional `x -> x_{ij}` on the basis, i.e. its
/// coordinate vector in the dual basis.
pub fn entry_functional<S: Scalar>(alg: &AlgebraPresentation<S>, i: usize, j: usize) -> Vec<S> {
    alg.basis().iter().map(|b| b.get(i, j).clone()).collect()
}

/// First dual basis pair where `form^-1` fails to intertwine the dual
/// bracket with the primal one, using the given Gram matrix as the map
/// `L -> L*`. `None` certifies an isomorphism of Lie algebras on the basis,
/// hence everywhere.
pub fn iso_witness_with_form<S: Scalar>(
    alg: &AlgebraPresentation<S>,
    delta: &Cobracket<S>,
    form: &DenseMatrix<S>,
) -> Result<Option<(usize, usize)>> {
    let Some(m) = alg.sl_size() else {
        return Err(Error::NotSlPresentation);
    };
    if delta.space() != alg.space() {
        return Err(Error::OwnerMismatch);
    }
    let dim = alg.dim();
    let b_map = linalg::invert(form)?.ok_or(Error::DegenerateForm {
        context: "dual isomorphism candidate",
    })?;
    let dual = dual_sl_bracket(delta, m);
    let col = |a: usize| -> Vec<S> { (0..dim).map(|r| b_map.get(r, a).clone()).collect() };
    for a in 0..dim {
        let ba = col(a);
        for b in 0..dim {
            let lhs = alg.bracket_map().bracket_coords(&ba, &col(b));
            let mut rhs = vec![S::zero(); dim];
            for (c, v) in dual.bracket_basis(a, b) {
                for (r, slot) in rhs.iter_mut().enumerate() {
                    let w = b_map.get(r, *c);
                    if !w.is_zero() {
                        *slot += v.clone() * w.clone();
                    }
                }
            }
            if lhs != rhs {
                return Ok(Some((a, b)));
            }
        }
    }
    Ok(None)
}

/// [`iso_witness_with_form`] with the trace form, the Gram matrix whose
/// inverse is asserted to be the isomorphism.
pub fn iso_b_witness<S: Scalar>(
    alg: &AlgebraPresentation<S>,
    delta: &Cobracket<S>,
) -> Result<Option<(usize, usize)>> {
    iso_witness_with_form(alg, delta, &trace_form(alg))
}

/// First basis index where `2m * C^(a) * T` differs from the matrix of
/// `ad_{b_a}`, where `C^(a)` is the coefficient matrix of `delta(b_a)` and
/// `T` the trace Gram matrix. `None` certifies that the adjoint action
/// factors through the cobracket against the trace form.
pub fn adjoint_factorization_witness<S: Scalar>(
    alg: &AlgebraPresentation<S>,
    delta: &Cobracket<S>,
) -> Result<Option<usize>> {
    let Some(m) = alg.sl_size() else {
        return Err(Error::NotSlPresentation);
    };
    if delta.space() != alg.space() {
        return Err(Error::OwnerMismatch);
    }
    let dim = alg.dim();
    let t = trace_form(alg);
    let two_m = S::from_int(2 * m as i64);
    for a in 0..dim {
        let mut lhs: DenseMatrix<S> = DenseMatrix::zeros(dim, dim);
        for ((c, d), v) in delta.image(a).terms() {
            let f = two_m.clone() * v.clone();
            for j in 0..dim {
                let tv = t.get(*d, j);
                if !tv.is_zero() {
                    let cur = lhs.get(*c, j).clone();
                    lhs.set(*c, j, cur + f.clone() * tv.clone());
                }
            }
        }
        let mut ad: DenseMatrix<S> = DenseMatrix::zeros(dim, dim);
        for b in 0..dim {
            for (e, w) in alg.bracket_map().bracket_basis(a, b) {
                ad.set(*e, b, w.clone());
            }
        }
        if lhs != ad {
            return Ok(Some(a));
        }
    }
    Ok(None)
}

/// Bundle of the dual-side verification results for one `sl_m` structure.
#[derive(Debug, Clone)]
pub struct DualityOutcome<S> {
    /// The `-2m`-normalized dual bracket is antisymmetric and Jacobi.
    pub dual_jacobi: bool,
    /// The inverse trace Gram matrix is a Lie algebra isomorphism onto `L`.
    pub iso_b: bool,
    /// The constant `c` with `trace form = c * Killing form`, if any.
    pub killing_ratio: Option<S>,
    /// The adjoint action factors as `2m * C^(a) * T` for every basis index.
    pub adjoint_factorization: bool,
    /// Dualizing classifies as co-split again and round-trips exactly.
    pub dual_cosplit: bool,
}

/// Runs every dual-side check against the canonical `sl_m` structure.
pub fn verify_duality<S: Scalar>(
    alg: &AlgebraPresentation<S>,
    delta: &Cobracket<S>,
) -> Result<DualityOutcome<S>> {
    let Some(m) = alg.sl_size() else {
        return Err(Error::NotSlPresentation);
    };
    let dual_table = dual_sl_bracket(delta, m);
    let dual_jacobi =
        dual_table.antisymmetry_witness().is_none() && dual_table.jacobi_witness().is_none();
    let iso_b = iso_b_witness(alg, delta)?.is_none();
    let killing = killing_form_from_table(alg.bracket_map());
    let killing_ratio = proportionality(&trace_form(alg), &killing)?;
    let adjoint_factorization = adjoint_factorization_witness(alg, delta)?.is_none();
    let dual = dualize(alg.bracket_map(), delta)?;
    let dual_cosplit = classify_cosplit(&dual.bracket, &dual.delta)? == CosplitVerdict::CoSplit
        && double_dual_round_trip(alg.bracket_map(), delta)?;
    Ok(DualityOutcome {
        dual_jacobi,
        iso_b,
        killing_ratio,
        adjoint_factorization,
        dual_cosplit,
    })
}

/// The expected trace-to-Killing ratio `1/(2m)` on `sl_m`.
pub fn expected_killing_ratio<S: Scalar>(m: usize) -> S {
    S::from_ratio(1, 2 * m as i64)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::sl_with_delta;
    use crate::lie::sl_offdiag_index;
    use crate::scalar::rat;
    use crate::Rational;

    #[test]
    fn trace_form_on_sl2() {
        let (alg, _) = sl_with_delta::<Rational>(2).unwrap();
        let t = trace_form(&alg);
        // Basis order e, f, h: tr(ef) = 1, tr(h^2) = 2, the rest vanish.
        let expected = DenseMatrix::from_rows(vec![
            vec![rat(0, 1), rat(1, 1), rat(0, 1)],
            vec![rat(1, 1), rat(0, 1), rat(0, 1)],
            vec![rat(0, 1), rat(0, 1), rat(2, 1)],
        ])
        .unwrap();
        assert_eq!(t, expected);
    }

    #[test]
    fn killing_form_matches_brute_force_on_sl2() {
        let (alg, _) = sl_with_delta::<Rational>(2).unwrap();
        let k = killing_form_from_table(alg.bracket_map());
        // kappa(e, f) = 4 and kappa(h, h) = 8 by direct adjoint matrices.
        assert_eq!(*k.get(0, 1), rat(4, 1));
        assert_eq!(*k.get(1, 0), rat(4, 1));
        assert_eq!(*k.get(2, 2), rat(8, 1));
        assert_eq!(*k.get(0, 0), rat(0, 1));
        assert_eq!(*k.get(0, 2), rat(0, 1));
    }

    #[test]
    fn killing_ratio_is_one_over_two_m() {
        for m in 2..=4 {
            let (alg, _) = sl_with_delta::<Rational>(m).unwrap();
            let k = killing_form_from_table(alg.bracket_map());
            let ratio = proportionality(&trace_form(&alg), &k).unwrap();
            assert_eq!(ratio, Some(expected_killing_ratio(m)), "m = {m}");
        }
    }

    #[test]
    fn proportionality_detects_mismatch_and_degeneracy() {
        let a = DenseMatrix::from_rows(vec![vec![rat(1, 1), rat(2, 1)]]).unwrap();
        let b = DenseMatrix::from_rows(vec![vec![rat(2, 1), rat(2, 1)]]).unwrap();
        assert_eq!(proportionality(&a, &b).unwrap(), None);
        let half = DenseMatrix::from_rows(vec![vec![rat(2, 1), rat(4, 1)]]).unwrap();
        assert_eq!(proportionality(&a, &half).unwrap(), Some(rat(1, 2)));
        let z: DenseMatrix<Rational> = DenseMatrix::zeros(1, 2);
        assert!(matches!(
            proportionality(&z, &z),
            Err(Error::DegenerateInput)
        ));
    }

    #[test]
    fn dual_bracket_on_sl3_matches_hand_computation() {
        // [f^{E_01}, f^{E_10}] = -2 f^{h_0} + f^{h_1}, which is the
        // restriction of the negated diagonal entry functional difference.
        let (_, delta) = sl_with_delta::<Rational>(3).unwrap();
        let dual = dual_sl_bracket(&delta, 3);
        let a = sl_offdiag_index(3, 0, 1);
        let b = sl_offdiag_index(3, 1, 0);
        assert_eq!(dual.bracket_basis(a, b), &[(6, rat(-2, 1)), (7, rat(1, 1))]);
    }

    #[test]
    fn dual_bracket_example_equals_negated_entry_functional() {
        let (alg, delta) = sl_with_delta::<Rational>(3).unwrap();
        let dual = dual_sl_bracket(&delta, 3);
        let a = sl_offdiag_index(3, 0, 1);
        let b = sl_offdiag_index(3, 1, 0);
        let mut dense = vec![rat(0, 1); alg.dim()];
        for (c, v) in dual.bracket_basis(a, b) {
            dense[*c] = v.clone();
        }
        let f00 = entry_functional(&alg, 0, 0);
        let f11 = entry_functional(&alg, 1, 1);
        let expected: Vec<Rational> = f00.into_iter().zip(f11).map(|(x, y)| -(x - y)).collect();
        assert_eq!(dense, expected);
    }

    #[test]
    fn dual_bracket_satisfies_jacobi_on_small_sl() {
        for m in 2..=4 {
            let (_, delta) = sl_with_delta::<Rational>(m).unwrap();
            let dual = dual_sl_bracket(&delta, m);
            assert_eq!(dual.antisymmetry_witness(), None, "m = {m}");
            assert_eq!(dual.jacobi_witness(), None, "m = {m}");
        }
    }

    #[test]
    fn inverse_trace_gram_is_an_isomorphism() {
        for m in 2..=3 {
            let (alg, delta) = sl_with_delta::<Rational>(m).unwrap();
            assert_eq!(iso_b_witness(&alg, &delta).unwrap(), None, "m = {m}");
        }
    }

    #[test]
    fn non_invariant_form_fails_the_isomorphism_check() {
        let (alg, delta) = sl_with_delta::<Rational>(2).unwrap();
        let control = transpose_trace_form(&alg);
        assert!(iso_witness_with_form(&alg, &delta, &control)
            .unwrap()
            .is_some());
    }

    #[test]
    fn adjoint_action_factors_through_the_cobracket() {
        for m in 2..=4 {
            let (alg, delta) = sl_with_delta::<Rational>(m).unwrap();
            assert_eq!(
                adjoint_factorization_witness(&alg, &delta).unwrap(),
                None,
                "m = {m}"
            );
        }
    }

    #[test]
    fn adjoint_factorization_fails_for_a_scaled_cobracket() {
        let (alg, delta) = sl_with_delta::<Rational>(2).unwrap();
        let scaled = delta.scale(&rat(3, 1));
        assert!(adjoint_factorization_witness(&alg, &scaled)
            .unwrap()
            .is_some());
    }

    #[test]
    fn dual_structure_is_co_split_and_round_trips() {
        for m in 2..=3 {
            let (alg, delta) = sl_with_delta::<Rational>(m).unwrap();
            let dual = dualize(alg.bracket_map(), &delta).unwrap();
            assert_eq!(
                classify_cosplit(&dual.bracket, &dual.delta).unwrap(),
                CosplitVerdict::CoSplit,
                "m = {m}"
            );
            assert!(double_dual_round_trip(alg.bracket_map(), &delta).unwrap());
        }
    }

    #[test]
    fn dual_of_scaled_structure_is_weak() {
        let (alg, delta) = sl_with_delta::<Rational>(2).unwrap();
        let scaled = delta.scale(&rat(2, 1));
        let dual = dualize(alg.bracket_map(), &scaled).unwrap();
        let verdict = classify_cosplit(&dual.bracket, &dual.delta).unwrap();
        assert_eq!(
            verdict,
            CosplitVerdict::WeakCoSplit {
                diagonal: vec![rat(2, 1); 3]
            }
        );
    }

    #[test]
    fn verify_duality_passes_on_sl3() {
        let (alg, delta) = sl_with_delta::<Rational>(3).unwrap();
        let out = verify_duality(&alg, &delta).unwrap();
        assert!(out.dual_jacobi);
        assert!(out.iso_b);
        assert_eq!(out.killing_ratio, Some(rat(1, 6)));
        assert!(out.adjoint_factorization);
        assert!(out.dual_cosplit);
    }
}

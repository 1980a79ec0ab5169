//! Classical subalgebras of `sl_m` and the restricted co-split structure.
//!
//! The orthogonal and symplectic algebras enter through split realizations
//! inside `sl_m`: `so` as the matrices antisymmetric about the antidiagonal,
//! `sp` as those satisfying the signed version of the same flip. Both come
//! with a diagonal Cartan subalgebra, which keeps every eigenvalue
//! computation inside the rationals.
//!
//! An [`Embedding`] carries the ambient `sl_m`, the subalgebra presentation,
//! the trace-orthogonal projection onto it, and a basis of the orthogonal
//! complement. [`delta_res`] pushes the ambient cobracket through the
//! projection and records whether the ambient images split cleanly into
//! subalgebra and complement blocks. The composite of the subalgebra bracket
//! with the restricted cobracket is a scalar multiple of the identity; the
//! scalar is computed two independent ways ([`cosplit_scalar_direct`] from
//! the composite itself, [`cosplit_scalar_formula`] from root data) and the
//! agreement of the two routes is the point of [`scalar_report`].

use crate::coalgebra::Cobracket;
use crate::error::{Error, Result};
use crate::lie::{AlgebraPresentation, SquareMatrix};
use crate::linalg::{self, DenseMatrix};
use crate::scalar::Scalar;
use crate::tensor::Tensor2;
use num_traits::Zero;

/// The three classical families handled by [`Embedding::embed_classical`],
/// realized as `so_{2l+1}`, `sp_{2l}`, and `so_{2l}` respectively.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    B,
    C,
    D,
}

impl Family {
    pub fn letter(self) -> char {
        match self {
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        }
    }

    /// Size of the defining representation for the given rank.
    pub fn ambient_size(self, rank: usize) -> usize {
        match self {
            Family::B => 2 * rank + 1,
            Family::C | Family::D => 2 * rank,
        }
    }

    /// Dimension of the algebra for the given rank.
    pub fn dimension(self, rank: usize) -> usize {
        match self {
            Family::B | Family::C => rank * (2 * rank + 1),
            Family::D => rank * (2 * rank - 1),
        }
    }
}

/// How a subalgebra entered the system.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EmbeddingKind {
    /// The whole of `sl_m` viewed as a subalgebra of itself.
    Identity,
    /// A built-in split realization of a classical family.
    Classical { family: Family, rank: usize },
    /// User-supplied matrices that passed the admission checks.
    Custom,
}

/// A subalgebra `M` of `sl_m` together with the trace-orthogonal projection
/// onto it and a basis of the complement `M^perp`.
#[derive(Debug)]
pub struct Embedding<S> {
    kind: EmbeddingKind,
    ambient_alg: AlgebraPresentation<S>,
    sub_alg: AlgebraPresentation<S>,
    /// Ambient coordinates of each subalgebra basis matrix.
    sub_amb: Vec<Vec<S>>,
    /// Inclusion in coordinates: ambient dim rows, subalgebra dim columns.
    incl: DenseMatrix<S>,
    /// Trace-orthogonal projection in coordinates: subalgebra dim rows.
    proj: DenseMatrix<S>,
    /// Ambient coordinates of a complement basis (trace-orthogonal to `M`).
    comp: Vec<Vec<S>>,
}

impl<S: Scalar> Embedding<S> {
    /// `sl_m` inside itself; the projection is the identity and the
    /// complement is empty.
    pub fn identity(m: usize) -> Result<Self> {
        Self::assemble(
            EmbeddingKind::Identity,
            AlgebraPresentation::sl(m)?,
            AlgebraPresentation::sl(m)?,
        )
    }

    /// The split realization of a classical family at the given rank.
    pub fn embed_classical(family: Family, rank: usize) -> Result<Self> {
        match (family, rank) {
            (_, 0) => {
                return Err(Error::InvalidRank {
                    family: family.letter(),
                    rank,
                    reason: "rank must be at least one",
                })
            }
            (Family::D, 1) => {
                return Err(Error::InvalidRank {
                    family: 'D',
                    rank,
                    reason: "so_2 is one-dimensional and abelian",
                })
            }
            (Family::D, 2) => {
                return Err(Error::InvalidRank {
                    family: 'D',
                    rank,
                    reason: "so_4 is a direct sum of two proper ideals",
                })
            }
            _ => {}
        }
        let m = family.ambient_size(rank);
        let basis = classical_basis::<S>(family, rank);
        let sub = AlgebraPresentation::new(m, basis)?;
        debug_assert_eq!(sub.dim(), family.dimension(rank));
        Self::assemble(
            EmbeddingKind::Classical { family, rank },
            AlgebraPresentation::sl(m)?,
            sub,
        )
    }

    /// Admits a user-supplied matrix subalgebra of `sl_m`. The span must be
    /// either all of `sl_m` or a split simple algebra outside the special
    /// linear family itself (rank three is admitted, since there the D-type
    /// and special linear root patterns coincide).
    pub fn from_matrices(m: usize, mats: Vec<SquareMatrix<S>>) -> Result<Self> {
        if m < 2 {
            return Err(Error::InvalidSlSize { m });
        }
        for x in &mats {
            if !x.trace().is_zero() {
                return Err(Error::UnsupportedSubalgebra {
                    reason: "a generator has nonzero trace".into(),
                });
            }
        }
        let sub = AlgebraPresentation::new(m, mats)?;
        if sub.dim() == m * m - 1 {
            return Self::assemble(EmbeddingKind::Identity, AlgebraPresentation::sl(m)?, sub);
        }
        let emb = Self::assemble(EmbeddingKind::Custom, AlgebraPresentation::sl(m)?, sub)?;
        let datum = root_datum(&emb.sub_alg)?;
        let rank = datum.cartan.len();
        let lengths = root_lengths(&emb.sub_alg, &datum)?;
        let mut distinct: Vec<S> = Vec::new();
        for v in lengths {
            if !distinct.contains(&v) {
                distinct.push(v);
            }
        }
        if distinct.len() == 1 && datum.roots.len() == rank * (rank + 1) && rank != 3 {
            return Err(Error::UnsupportedSubalgebra {
                reason: "the root system matches the special linear pattern; use the ambient \
                         algebra directly"
                    .into(),
            });
        }
        Ok(emb)
    }

    fn assemble(
        kind: EmbeddingKind,
        ambient_alg: AlgebraPresentation<S>,
        sub_alg: AlgebraPresentation<S>,
    ) -> Result<Self> {
        let amb_dim = ambient_alg.dim();
        let sub_dim = sub_alg.dim();
        let mut sub_amb = Vec::with_capacity(sub_dim);
        for x in sub_alg.basis() {
            let coords = ambient_alg
                .coords(x)
                .map_err(|_| Error::UnsupportedSubalgebra {
                    reason: "a generator lies outside the traceless ambient algebra".into(),
                })?;
            sub_amb.push(coords.into_coords());
        }
        // Pairing of the subalgebra basis against the ambient basis under
        // the trace form; its kernel is exactly the orthogonal complement.
        let pairing = DenseMatrix::from_fn(sub_dim, amb_dim, |t, c| {
            sub_alg.basis()[t]
                .trace_product(&ambient_alg.basis()[c])
                .expect("shared ambient size")
        });
        let gram = DenseMatrix::from_fn(sub_dim, sub_dim, |t, u| {
            sub_alg.basis()[t]
                .trace_product(&sub_alg.basis()[u])
                .expect("shared ambient size")
        });
        let gram_inv = linalg::invert(&gram)?.ok_or(Error::DegenerateForm {
            context: "trace form on the subalgebra",
        })?;
        let proj = gram_inv.mul(&pairing)?;
        let comp = linalg::kernel_basis(&pairing);
        let incl = DenseMatrix::from_fn(amb_dim, sub_dim, |r, c| sub_amb[c][r].clone());
        Ok(Embedding {
            kind,
            ambient_alg,
            sub_alg,
            sub_amb,
            incl,
            proj,
            comp,
        })
    }

    pub fn kind(&self) -> EmbeddingKind {
        self.kind
    }

    pub fn ambient_alg(&self) -> &AlgebraPresentation<S> {
        &self.ambient_alg
    }

    pub fn sub_alg(&self) -> &AlgebraPresentation<S> {
        &self.sub_alg
    }

    /// Ambient coordinates of the subalgebra basis.
    pub fn sub_ambient_coords(&self) -> &[Vec<S>] {
        &self.sub_amb
    }

    pub fn projection(&self) -> &DenseMatrix<S> {
        &self.proj
    }

    /// Ambient coordinates of the complement basis.
    pub fn complement(&self) -> &[Vec<S>] {
        &self.comp
    }

    pub fn complement_dim(&self) -> usize {
        self.comp.len()
    }
}

/// Basis matrices of the split realization, Cartan elements first, then the
/// off-diagonal representatives in lexicographic position order.
fn classical_basis<S: Scalar>(family: Family, rank: usize) -> Vec<SquareMatrix<S>> {
    let m = family.ambient_size(rank);
    let prime = |i: usize| m - 1 - i;
    let mut basis = Vec::with_capacity(family.dimension(rank));
    for i in 0..rank {
        let mut h = SquareMatrix::zero(m);
        h.set(i, i, S::one());
        h.set(prime(i), prime(i), -S::one());
        basis.push(h);
    }
    for i in 0..m {
        for j in 0..m {
            if i == j {
                continue;
            }
            let partner = (prime(j), prime(i));
            if (i, j) == partner {
                // Antidiagonal positions: zero in the orthogonal case, a
                // bare elementary matrix in the symplectic one.
                if family == Family::C {
                    basis.push(SquareMatrix::elementary(m, i, j));
                }
                continue;
            }
            if (i, j) < partner {
                let mut x = SquareMatrix::elementary(m, i, j);
                let sign = match family {
                    // -sigma_i sigma_j, with sigma positive on the first
                    // `rank` indices and negative on the rest.
                    Family::C if (i < rank) != (j < rank) => S::one(),
                    _ => -S::one(),
                };
                x.set(prime(j), prime(i), sign);
                basis.push(x);
            }
        }
    }
    basis
}

/// First basis index violating the defining flip equation of the
/// realization, if any.
fn flip_witness<S: Scalar>(
    family: Family,
    rank: usize,
    basis: &[SquareMatrix<S>],
) -> Option<usize> {
    let m = family.ambient_size(rank);
    let prime = |i: usize| m - 1 - i;
    basis.iter().position(|x| {
        for i in 0..m {
            for j in 0..m {
                let flipped = match family {
                    Family::B | Family::D => x.get(prime(j), prime(i)).clone(),
                    Family::C => {
                        let v = x.get(prime(j), prime(i)).clone();
                        if (i < rank) != (j < rank) {
                            -v
                        } else {
                            v
                        }
                    }
                };
                if flipped != -x.get(i, j).clone() {
                    return true;
                }
            }
        }
        false
    })
}

/// Outcome of the structural checks on an embedding.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct EmbeddingChecks {
    /// The subalgebra sits inside `sl_m` in the expected realization: every
    /// generator is traceless, and for a classical family the dimension and
    /// the defining flip equation both hold.
    pub step1_embedding: bool,
    /// The complement has complementary dimension, the projection restricts
    /// to the identity on the subalgebra, and the complement is stable under
    /// the adjoint action of the subalgebra.
    pub step2_complement: bool,
}

pub fn verify_embedding<S: Scalar>(emb: &Embedding<S>) -> Result<EmbeddingChecks> {
    let traceless = emb.sub_alg.basis().iter().all(|x| x.trace().is_zero());
    let realization = match emb.kind {
        EmbeddingKind::Classical { family, rank } => {
            emb.sub_alg.dim() == family.dimension(rank)
                && flip_witness(family, rank, emb.sub_alg.basis()).is_none()
        }
        EmbeddingKind::Identity => emb.sub_alg.dim() == emb.ambient_alg.dim(),
        EmbeddingKind::Custom => true,
    };
    let step1_embedding = traceless && realization;

    let dims_add_up = emb.comp.len() + emb.sub_alg.dim() == emb.ambient_alg.dim();
    let retraction = emb.proj.mul(&emb.incl)? == DenseMatrix::identity(emb.sub_alg.dim());
    let mut module_stable = true;
    'outer: for x in &emb.sub_amb {
        for z in &emb.comp {
            let bracket = emb.ambient_alg.bracket_map().bracket_coords(x, z);
            // [M, M^perp] stays trace-orthogonal to M, i.e. projects to zero.
            if emb.proj.mul_vec(&bracket)?.iter().any(|v| !v.is_zero()) {
                module_stable = false;
                break 'outer;
            }
        }
    }
    Ok(EmbeddingChecks {
        step1_embedding,
        step2_complement: dims_add_up && retraction && module_stable,
    })
}

/// The ambient cobracket squeezed through the projection, together with the
/// result of the containment check.
#[derive(Debug)]
pub struct RestrictedCobracket<S> {
    pub cobracket: Cobracket<S>,
    /// Whether every ambient image decomposes into a subalgebra block plus a
    /// complement block, with no mixed terms. When this holds, pushing
    /// through the projection loses only the complement block.
    pub containment_ok: bool,
}

/// Restricts the ambient cobracket to the subalgebra: on a subalgebra
/// element, apply the ambient cobracket and project both tensor factors.
pub fn delta_res<S: Scalar>(
    emb: &Embedding<S>,
    amb_delta: &Cobracket<S>,
) -> Result<RestrictedCobracket<S>> {
    if amb_delta.space() != emb.ambient_alg.space() {
        return Err(Error::OwnerMismatch);
    }
    let amb_dim = emb.ambient_alg.dim();
    let sub_space = emb.sub_alg.space();
    let mut images = Vec::with_capacity(emb.sub_alg.dim());
    let mut containment_ok = true;
    for x in &emb.sub_amb {
        let ambient_image = amb_delta.apply_coords(x)?;
        let restricted = ambient_image.map_both(&emb.proj, sub_space)?;
        // Containment: subtracting the lifted restriction must leave a
        // tensor with both factors in the complement, i.e. one killed by the
        // projection on either side.
        let lifted = restricted.map_both(&emb.incl, emb.ambient_alg.space())?;
        let diff = ambient_image.sub(&lifted)?;
        let mut diff_matrix: DenseMatrix<S> = DenseMatrix::zeros(amb_dim, amb_dim);
        for ((a, b), v) in diff.terms() {
            diff_matrix.set(*a, *b, v.clone());
        }
        if !emb.proj.mul(&diff_matrix)?.is_zero()
            || !diff_matrix.mul(&emb.proj.transpose())?.is_zero()
        {
            containment_ok = false;
        }
        images.push(restricted);
    }
    Ok(RestrictedCobracket {
        cobracket: Cobracket::new(sub_space, images)?,
        containment_ok,
    })
}

/// A root of the subalgebra: its values on the Cartan basis and a spanning
/// vector of its (one-dimensional) root space, in subalgebra coordinates.
#[derive(Debug, Clone)]
pub struct Root<S> {
    pub values: Vec<S>,
    pub vector: Vec<S>,
}

/// Cartan subalgebra, roots, a lexicographic positive system, and the
/// highest root.
#[derive(Debug)]
pub struct RootDatum<S> {
    /// Subalgebra coordinates of a basis of the diagonal Cartan subalgebra.
    pub cartan: Vec<Vec<S>>,
    pub roots: Vec<Root<S>>,
    /// For each root, the index of its negative.
    pub opposite: Vec<usize>,
    /// Indices of the lexicographically positive roots.
    pub positive: Vec<usize>,
    /// Index of the unique positive root annihilated by every positive root
    /// vector.
    pub highest: usize,
}

fn lex_positive<S: Scalar>(values: &[S]) -> bool {
    for v in values {
        if !v.is_zero() {
            return *v > S::zero();
        }
    }
    false
}

/// Computes the root datum of a subalgebra whose Cartan subalgebra is its
/// set of diagonal matrices. Refuses (rather than guessing) whenever the
/// realization does not decompose over the rationals the way a split simple
/// algebra must.
pub fn root_datum<S: Scalar>(sub: &AlgebraPresentation<S>) -> Result<RootDatum<S>> {
    let m = sub.ambient();
    let dim = sub.dim();

    // Cartan subalgebra: the kernel of "read off all off-diagonal entries".
    let mut off_rows = Vec::with_capacity(m * m - m);
    for i in 0..m {
        for j in 0..m {
            if i != j {
                off_rows.push((0..dim).map(|u| sub.basis()[u].get(i, j).clone()).collect());
            }
        }
    }
    let cartan = linalg::kernel_basis(&DenseMatrix::from_rows(off_rows)?);
    let rank = cartan.len();
    if rank == 0 {
        return Err(Error::UnsupportedSubalgebra {
            reason: "no nonzero diagonal elements to serve as a Cartan subalgebra".into(),
        });
    }

    // Adjoint matrices of the Cartan basis and their candidate eigenvalues
    // (differences of diagonal entries).
    let mut ad_mats = Vec::with_capacity(rank);
    let mut candidates: Vec<Vec<S>> = Vec::with_capacity(rank);
    for h in &cartan {
        let mut ad: DenseMatrix<S> = DenseMatrix::zeros(dim, dim);
        for (a, ha) in h.iter().enumerate() {
            if ha.is_zero() {
                continue;
            }
            for b in 0..dim {
                for (c, v) in sub.bracket_map().bracket_basis(a, b) {
                    let cur = ad.get(*c, b).clone();
                    ad.set(*c, b, cur + ha.clone() * v.clone());
                }
            }
        }
        ad_mats.push(ad);
        let hm = sub.matrix_from_coords(h)?;
        let mut cands = Vec::new();
        for i in 0..m {
            for j in 0..m {
                let d = hm.get(i, i).clone() - hm.get(j, j).clone();
                if !cands.contains(&d) {
                    cands.push(d);
                }
            }
        }
        candidates.push(cands);
    }

    // Simultaneous eigenspace refinement. Every stage must exhaust the
    // space it splits, otherwise some Cartan element fails to act
    // diagonalizably over the scalars and the realization is unsupported.
    let identity_basis: Vec<Vec<S>> = (0..dim)
        .map(|u| {
            let mut e = vec![S::zero(); dim];
            e[u] = S::one();
            e
        })
        .collect();
    let mut spaces: Vec<(Vec<S>, Vec<Vec<S>>)> = vec![(Vec::new(), identity_basis)];
    for (t, ad) in ad_mats.iter().enumerate() {
        let mut next = Vec::new();
        for (values, vectors) in &spaces {
            let mut found = 0;
            for lambda in &candidates[t] {
                // Kernel of (ad - lambda) restricted to the span.
                let shifted = DenseMatrix::from_fn(dim, vectors.len(), |r, c| {
                    let mut acc = -(lambda.clone() * vectors[c][r].clone());
                    for (k, w) in vectors[c].iter().enumerate() {
                        if !w.is_zero() {
                            acc += ad.get(r, k).clone() * w.clone();
                        }
                    }
                    acc
                });
                let kern = linalg::kernel_basis(&shifted);
                if kern.is_empty() {
                    continue;
                }
                found += kern.len();
                let lifted: Vec<Vec<S>> = kern
                    .iter()
                    .map(|coef| {
                        let mut v = vec![S::zero(); dim];
                        for (c, f) in coef.iter().enumerate() {
                            if !f.is_zero() {
                                for (r, w) in vectors[c].iter().enumerate() {
                                    v[r] += f.clone() * w.clone();
                                }
                            }
                        }
                        v
                    })
                    .collect();
                let mut vals = values.clone();
                vals.push(lambda.clone());
                next.push((vals, lifted));
            }
            if found != vectors.len() {
                return Err(Error::UnsupportedRealization {
                    reason: "the Cartan subalgebra does not act diagonalizably over the scalars"
                        .into(),
                });
            }
        }
        spaces = next;
    }

    // The zero-weight space must be the Cartan subalgebra itself.
    let cartan_matrix = DenseMatrix::from_fn(dim, rank, |r, c| cartan[c][r].clone());
    let mut roots = Vec::new();
    for (values, vectors) in spaces {
        if values.iter().all(Zero::is_zero) {
            if vectors.len() != rank {
                return Err(Error::UnsupportedSubalgebra {
                    reason: "the diagonal Cartan subalgebra is not self-centralizing".into(),
                });
            }
            for v in &vectors {
                if linalg::solve_linear(&cartan_matrix, v)?.is_none() {
                    return Err(Error::UnsupportedSubalgebra {
                        reason: "a zero-weight vector falls outside the Cartan subalgebra".into(),
                    });
                }
            }
            continue;
        }
        if vectors.len() != 1 {
            return Err(Error::UnsupportedSubalgebra {
                reason: "a root space has dimension above one".into(),
            });
        }
        roots.push(Root {
            values,
            vector: vectors.into_iter().next().expect("checked length"),
        });
    }

    let mut opposite = Vec::with_capacity(roots.len());
    for r in &roots {
        let neg: Vec<S> = r.values.iter().map(|v| -v.clone()).collect();
        let Some(idx) = roots.iter().position(|s| s.values == neg) else {
            return Err(Error::UnsupportedSubalgebra {
                reason: "roots fail to pair into opposites".into(),
            });
        };
        opposite.push(idx);
    }

    let positive: Vec<usize> = (0..roots.len())
        .filter(|&i| lex_positive(&roots[i].values))
        .collect();

    let mut highest_candidates = Vec::new();
    for &g in &positive {
        let annihilates_all = positive.iter().all(|&a| {
            sub.bracket_map()
                .bracket_coords(&roots[g].vector, &roots[a].vector)
                .iter()
                .all(Zero::is_zero)
        });
        if annihilates_all {
            highest_candidates.push(g);
        }
    }
    match highest_candidates.len() {
        1 => Ok(RootDatum {
            cartan,
            roots,
            opposite,
            positive,
            highest: highest_candidates[0],
        }),
        0 => Err(Error::UnsupportedSubalgebra {
            reason: "no highest root found".into(),
        }),
        _ => Err(Error::UnsupportedSubalgebra {
            reason: "multiple highest roots; the algebra is a sum of proper ideals".into(),
        }),
    }
}

/// Trace-form Gram matrix of the Cartan basis.
fn cartan_gram<S: Scalar>(
    sub: &AlgebraPresentation<S>,
    cartan: &[Vec<S>],
) -> Result<DenseMatrix<S>> {
    let mats: Vec<SquareMatrix<S>> = cartan
        .iter()
        .map(|h| sub.matrix_from_coords(h))
        .collect::<Result<_>>()?;
    Ok(DenseMatrix::from_fn(mats.len(), mats.len(), |t, u| {
        mats[t].trace_product(&mats[u]).expect("shared size")
    }))
}

/// Squared length of every root under the trace form, via the dual vectors
/// `t_alpha` with `alpha(h) = (t_alpha, h)`.
fn root_lengths<S: Scalar>(sub: &AlgebraPresentation<S>, datum: &RootDatum<S>) -> Result<Vec<S>> {
    let gram_inv =
        linalg::invert(&cartan_gram(sub, &datum.cartan)?)?.ok_or(Error::DegenerateForm {
            context: "trace form on the Cartan subalgebra",
        })?;
    datum
        .roots
        .iter()
        .map(|r| {
            let coords = gram_inv.mul_vec(&r.values)?;
            let mut acc = S::zero();
            for (x, v) in coords.iter().zip(&r.values) {
                acc += x.clone() * v.clone();
            }
            Ok(acc)
        })
        .collect()
}

/// The composite `bracket . delta_res` must be a scalar multiple of the
/// identity; returns that scalar.
pub fn cosplit_scalar_direct<S: Scalar>(
    emb: &Embedding<S>,
    res: &RestrictedCobracket<S>,
) -> Result<S> {
    let table = emb.sub_alg.bracket_map();
    let dim = emb.sub_alg.dim();
    let mut scalar: Option<S> = None;
    for a in 0..dim {
        let col = table.apply_tensor2(res.cobracket.image(a))?;
        for (c, v) in col.iter().enumerate() {
            if c != a && !v.is_zero() {
                return Err(Error::CompositeNotScalar { index: a });
            }
        }
        match &scalar {
            None => scalar = Some(col[a].clone()),
            Some(s) if *s != col[a] => return Err(Error::CompositeNotScalar { index: a }),
            Some(_) => {}
        }
    }
    scalar.ok_or(Error::DegenerateInput)
}

/// The same scalar from root data alone: with `gamma` the highest root,
/// `c = (1/2m) [ (t_gamma, t_gamma) + sum_{alpha > 0} gamma(h_alpha) ]`,
/// where `h_alpha = [X_alpha, X_{-alpha}] / (X_alpha, X_{-alpha})` and all
/// pairings use the ambient trace form.
pub fn cosplit_scalar_formula<S: Scalar>(emb: &Embedding<S>, datum: &RootDatum<S>) -> Result<S> {
    let sub = &emb.sub_alg;
    let gram_inv =
        linalg::invert(&cartan_gram(sub, &datum.cartan)?)?.ok_or(Error::DegenerateForm {
            context: "trace form on the Cartan subalgebra",
        })?;
    let gamma = &datum.roots[datum.highest];
    let t_gamma = gram_inv.mul_vec(&gamma.values)?;
    let mut total = S::zero();
    for (x, v) in t_gamma.iter().zip(&gamma.values) {
        total += x.clone() * v.clone();
    }
    for &a in &datum.positive {
        let x_pos = &datum.roots[a].vector;
        let x_neg = &datum.roots[datum.opposite[a]].vector;
        let pairing = sub
            .matrix_from_coords(x_pos)?
            .trace_product(&sub.matrix_from_coords(x_neg)?)?;
        if pairing.is_zero() {
            return Err(Error::DegenerateForm {
                context: "pairing of opposite root vectors",
            });
        }
        let h_alpha: Vec<S> = sub
            .bracket_map()
            .bracket_coords(x_pos, x_neg)
            .into_iter()
            .map(|v| v / pairing.clone())
            .collect();
        // gamma(h_alpha) read off as the eigenvalue on the highest root
        // vector: [h_alpha, X_gamma] = gamma(h_alpha) X_gamma.
        let image = sub.bracket_map().bracket_coords(&h_alpha, &gamma.vector);
        let pivot = gamma
            .vector
            .iter()
            .position(|v| !v.is_zero())
            .expect("root vectors are nonzero");
        let value = image[pivot].clone() / gamma.vector[pivot].clone();
        for (w, g) in image.iter().zip(&gamma.vector) {
            if *w != value.clone() * g.clone() {
                return Err(Error::UnsupportedSubalgebra {
                    reason: "the highest root vector is not a Cartan eigenvector".into(),
                });
            }
        }
        total += value;
    }
    let m = emb.ambient_alg.sl_size().ok_or(Error::NotSlPresentation)?;
    Ok(S::from_ratio(1, 2 * m as i64) * total)
}

/// The two independent scalar computations side by side.
#[derive(Debug, Clone)]
pub struct ScalarReport<S> {
    pub c_direct: S,
    pub c_formula: S,
    pub agree: bool,
}

pub fn scalar_report<S: Scalar>(
    emb: &Embedding<S>,
    res: &RestrictedCobracket<S>,
    datum: &RootDatum<S>,
) -> Result<ScalarReport<S>> {
    let c_direct = cosplit_scalar_direct(emb, res)?;
    let c_formula = cosplit_scalar_formula(emb, datum)?;
    let agree = c_direct == c_formula;
    Ok(ScalarReport {
        c_direct,
        c_formula,
        agree,
    })
}

/// First subalgebra basis index where `2m * C^(x) * T` fails to reproduce
/// the adjoint action, with `C^(x)` the ambient coefficient matrix of the
/// lifted restricted cobracket and `T` the ambient trace Gram matrix. The
/// factored map must send every subalgebra element `y` to `[x, y]` and kill
/// the complement.
pub fn adjoint_factorization_res_witness<S: Scalar>(
    emb: &Embedding<S>,
    res: &RestrictedCobracket<S>,
) -> Result<Option<usize>> {
    let m = emb.ambient_alg.sl_size().ok_or(Error::NotSlPresentation)?;
    let amb_dim = emb.ambient_alg.dim();
    let t = crate::duality::trace_form(&emb.ambient_alg);
    let two_m = S::from_int(2 * m as i64);
    for (idx, x) in emb.sub_amb.iter().enumerate() {
        let lifted: Tensor2<S> = res
            .cobracket
            .image(idx)
            .map_both(&emb.incl, emb.ambient_alg.space())?;
        let mut factored: DenseMatrix<S> = DenseMatrix::zeros(amb_dim, amb_dim);
        for ((a, b), v) in lifted.terms() {
            let f = two_m.clone() * v.clone();
            for j in 0..amb_dim {
                let tv = t.get(*b, j);
                if !tv.is_zero() {
                    let cur = factored.get(*a, j).clone();
                    factored.set(*a, j, cur + f.clone() * tv.clone());
                }
            }
        }
        for y in &emb.sub_amb {
            let expected = emb.ambient_alg.bracket_map().bracket_coords(x, y);
            if factored.mul_vec(y)? != expected {
                return Ok(Some(idx));
            }
        }
        for z in &emb.comp {
            if factored.mul_vec(z)?.iter().any(|v| !v.is_zero()) {
                return Ok(Some(idx));
            }
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coalgebra::{
        check_anticocommutativity, check_cojacobi, classify_cosplit, delta_sl, sl_with_delta,
        CosplitVerdict,
    };
    use crate::lie::commutator;
    use crate::scalar::rat;
    use crate::Rational;
    use num_traits::One;
    use proptest::prelude::*;

    fn embed(family: Family, rank: usize) -> Embedding<Rational> {
        Embedding::embed_classical(family, rank).unwrap()
    }

    #[test]
    fn classical_dimensions() {
        let b1 = embed(Family::B, 1);
        assert_eq!(b1.sub_alg().dim(), 3);
        assert_eq!(b1.complement_dim(), 5);
        let c2 = embed(Family::C, 2);
        assert_eq!(c2.sub_alg().dim(), 10);
        assert_eq!(c2.complement_dim(), 5);
        let b2 = embed(Family::B, 2);
        assert_eq!(b2.sub_alg().dim(), 10);
        assert_eq!(b2.complement_dim(), 14);
        let d3 = embed(Family::D, 3);
        assert_eq!(d3.sub_alg().dim(), 15);
        assert_eq!(d3.complement_dim(), 20);
    }

    #[test]
    fn low_d_ranks_are_rejected() {
        for rank in [1, 2] {
            assert!(matches!(
                Embedding::<Rational>::embed_classical(Family::D, rank),
                Err(Error::InvalidRank { family: 'D', .. })
            ));
        }
        assert!(matches!(
            Embedding::<Rational>::embed_classical(Family::B, 0),
            Err(Error::InvalidRank { family: 'B', .. })
        ));
    }

    #[test]
    fn embedding_checks_pass_for_builtin_families() {
        for emb in [
            embed(Family::B, 1),
            embed(Family::C, 2),
            embed(Family::D, 3),
        ] {
            let checks = verify_embedding(&emb).unwrap();
            assert!(checks.step1_embedding);
            assert!(checks.step2_complement);
        }
    }

    #[test]
    fn so3_basis_brackets_stay_inside() {
        let emb = embed(Family::B, 1);
        let basis = emb.sub_alg().basis();
        for a in basis {
            for b in basis {
                let c = commutator(a, b).unwrap();
                assert!(emb.sub_alg().coords(&c).is_ok());
            }
        }
    }

    #[test]
    fn identity_restriction_reproduces_the_ambient_cobracket() {
        let emb = Embedding::<Rational>::identity(3).unwrap();
        let delta = delta_sl(emb.ambient_alg()).unwrap();
        let res = delta_res(&emb, &delta).unwrap();
        assert!(res.containment_ok);
        assert_eq!(emb.complement_dim(), 0);
        for a in 0..emb.sub_alg().dim() {
            let expected: Vec<_> = delta
                .image(a)
                .terms()
                .map(|(k, v)| (*k, v.clone()))
                .collect();
            let got: Vec<_> = res
                .cobracket
                .image(a)
                .terms()
                .map(|(k, v)| (*k, v.clone()))
                .collect();
            assert_eq!(expected, got, "basis index {a}");
        }
    }

    #[test]
    fn restricted_cobracket_satisfies_the_coalgebra_axioms() {
        for emb in [embed(Family::B, 1), embed(Family::C, 2)] {
            let delta = delta_sl(emb.ambient_alg()).unwrap();
            let res = delta_res(&emb, &delta).unwrap();
            assert!(res.containment_ok);
            assert_eq!(check_anticocommutativity(&res.cobracket), None);
            assert_eq!(check_cojacobi(&res.cobracket), None);
        }
    }

    #[test]
    fn root_counts_for_small_families() {
        let b1 = embed(Family::B, 1);
        let datum = root_datum(b1.sub_alg()).unwrap();
        assert_eq!(datum.cartan.len(), 1);
        assert_eq!(datum.roots.len(), 2);
        assert_eq!(datum.positive.len(), 1);

        let c2 = embed(Family::C, 2);
        let datum = root_datum(c2.sub_alg()).unwrap();
        assert_eq!(datum.cartan.len(), 2);
        assert_eq!(datum.roots.len(), 8);

        let b2 = embed(Family::B, 2);
        let datum = root_datum(b2.sub_alg()).unwrap();
        assert_eq!(datum.cartan.len(), 2);
        assert_eq!(datum.roots.len(), 8);
    }

    #[test]
    fn identity_scalar_is_one() {
        let emb = Embedding::<Rational>::identity(3).unwrap();
        let delta = delta_sl(emb.ambient_alg()).unwrap();
        let res = delta_res(&emb, &delta).unwrap();
        let datum = root_datum(emb.sub_alg()).unwrap();
        let report = scalar_report(&emb, &res, &datum).unwrap();
        assert!(report.agree);
        assert!(report.c_direct.is_one());
    }

    #[test]
    fn so3_scalar_is_one_sixth() {
        let emb = embed(Family::B, 1);
        let delta = delta_sl(emb.ambient_alg()).unwrap();
        let res = delta_res(&emb, &delta).unwrap();
        let datum = root_datum(emb.sub_alg()).unwrap();
        let report = scalar_report(&emb, &res, &datum).unwrap();
        assert_eq!(report.c_direct, rat(1, 6));
        assert_eq!(report.c_formula, rat(1, 6));
        assert!(report.agree);
    }

    #[test]
    fn sp4_scalar_is_three_quarters() {
        let emb = embed(Family::C, 2);
        let delta = delta_sl(emb.ambient_alg()).unwrap();
        let res = delta_res(&emb, &delta).unwrap();
        let datum = root_datum(emb.sub_alg()).unwrap();
        let report = scalar_report(&emb, &res, &datum).unwrap();
        assert_eq!(report.c_direct, rat(3, 4));
        assert_eq!(report.c_formula, rat(3, 4));
    }

    #[test]
    fn rescaled_restriction_is_co_split() {
        let emb = embed(Family::B, 1);
        let delta = delta_sl(emb.ambient_alg()).unwrap();
        let res = delta_res(&emb, &delta).unwrap();
        let c = cosplit_scalar_direct(&emb, &res).unwrap();
        let rescaled = res.cobracket.scale(&(Rational::one() / c));
        assert_eq!(
            classify_cosplit(emb.sub_alg().bracket_map(), &rescaled).unwrap(),
            CosplitVerdict::CoSplit
        );
    }

    #[test]
    fn restricted_adjoint_action_factors() {
        let emb = embed(Family::B, 1);
        let delta = delta_sl(emb.ambient_alg()).unwrap();
        let res = delta_res(&emb, &delta).unwrap();
        assert_eq!(adjoint_factorization_res_witness(&emb, &res).unwrap(), None);
    }

    #[test]
    fn custom_entry_accepts_a_b2_basis() {
        let mats = embed(Family::B, 2).sub_alg().basis().to_vec();
        let emb = Embedding::from_matrices(5, mats).unwrap();
        assert_eq!(emb.kind(), EmbeddingKind::Custom);
        assert_eq!(emb.sub_alg().dim(), 10);
    }

    #[test]
    fn custom_entry_accepts_the_full_algebra() {
        let sl2 = AlgebraPresentation::<Rational>::sl(2).unwrap();
        let emb = Embedding::from_matrices(2, sl2.basis().to_vec()).unwrap();
        assert_eq!(emb.kind(), EmbeddingKind::Identity);
    }

    #[test]
    fn custom_entry_rejects_a_special_linear_block() {
        // sl_2 in the top-left corner of sl_3: rank one, two roots, one
        // length, which is the special linear pattern.
        let e = SquareMatrix::<Rational>::elementary(3, 0, 1);
        let f = SquareMatrix::<Rational>::elementary(3, 1, 0);
        let mut h = SquareMatrix::<Rational>::zero(3);
        h.set(0, 0, rat(1, 1));
        h.set(1, 1, rat(-1, 1));
        let err = Embedding::from_matrices(3, vec![e, f, h]);
        assert!(matches!(err, Err(Error::UnsupportedSubalgebra { .. })));
    }

    #[test]
    fn custom_entry_rejects_a_direct_sum() {
        // Two commuting copies of sl_2 on the diagonal blocks of sl_4.
        let mut mats = Vec::new();
        for offset in [0usize, 2] {
            mats.push(SquareMatrix::<Rational>::elementary(4, offset, offset + 1));
            mats.push(SquareMatrix::<Rational>::elementary(4, offset + 1, offset));
            let mut h = SquareMatrix::<Rational>::zero(4);
            h.set(offset, offset, rat(1, 1));
            h.set(offset + 1, offset + 1, rat(-1, 1));
            mats.push(h);
        }
        let err = Embedding::from_matrices(4, mats);
        assert!(matches!(
            err,
            Err(Error::UnsupportedSubalgebra { reason }) if reason.contains("sum")
        ));
    }

    #[test]
    fn custom_entry_rejects_nonzero_trace() {
        let err = Embedding::from_matrices(2, vec![SquareMatrix::<Rational>::elementary(2, 0, 0)]);
        assert!(matches!(err, Err(Error::UnsupportedSubalgebra { .. })));
    }

    #[test]
    fn projection_retracts_onto_the_subalgebra() {
        let emb = embed(Family::C, 2);
        let product = emb.projection().mul(&emb.incl).unwrap();
        assert_eq!(product, DenseMatrix::identity(emb.sub_alg().dim()));
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(4))]

        #[test]
        fn scalar_is_independent_of_the_basis_presentation(
            scale_num in 1i64..=3,
            shear in -2i64..=2,
        ) {
            // Rescale one generator and shear another; the span, and hence
            // the scalar, must not move.
            let mut mats = embed(Family::B, 2).sub_alg().basis().to_vec();
            mats[0] = mats[0].scale(&rat(scale_num, 2));
            mats[1] = mats[1].add(&mats[2].scale(&rat(shear, 1))).unwrap();
            let emb = Embedding::from_matrices(5, mats).unwrap();
            let delta = delta_sl(emb.ambient_alg()).unwrap();
            let res = delta_res(&emb, &delta).unwrap();
            let c = cosplit_scalar_direct(&emb, &res).unwrap();
            prop_assert_eq!(c, rat(3, 10));
        }
    }

    #[test]
    fn sl_with_delta_and_identity_embedding_share_coefficients() {
        // Guards against the identity embedding quietly reordering basis
        // elements relative to the canonical presentation.
        let emb = Embedding::<Rational>::identity(2).unwrap();
        let (_, delta) = sl_with_delta::<Rational>(2).unwrap();
        let own = delta_sl(emb.ambient_alg()).unwrap();
        for a in 0..3 {
            let lhs: Vec<_> = own.image(a).terms().map(|(k, v)| (*k, v.clone())).collect();
            let rhs: Vec<_> = delta
                .image(a)
                .terms()
                .map(|(k, v)| (*k, v.clone()))
                .collect();
            assert_eq!(lhs, rhs);
        }
    }
}

//! Serde-facing mirror types with exact rationals as strings.
//!
//! Every scalar crosses the wire as `"p/q"` (or plain `"p"` for integers),
//! so serialized reports stay exact and independent of any binary float
//! format. The mirror types are plain data; conversion functions bridge to
//! the library types and re-run validation on the way back in.

use crate::coalgebra::CosplitVerdict;
use crate::duality::DualityOutcome;
use crate::error::{Error, Result};
use crate::lie::{AlgebraPresentation, SquareMatrix};
use crate::restriction::{Embedding, EmbeddingKind, ScalarReport};
use crate::scalar::Scalar;
use crate::tensor::{Tensor2, Tensor3};
use serde::{Deserialize, Serialize};

/// A square matrix with entries in `"p/q"` form.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct MatrixDto {
    pub size: usize,
    pub entries: Vec<Vec<String>>,
}

/// A basis presentation of a matrix algebra.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct AlgebraDto {
    pub ambient: usize,
    pub basis: Vec<MatrixDto>,
}

/// One term of a tensor: basis indices and an exact coefficient.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorTermDto {
    pub idx: Vec<usize>,
    pub coeff: String,
}

/// A tensor of the given rank as a sorted sparse term list.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TensorDto {
    pub rank: usize,
    pub terms: Vec<TensorTermDto>,
}

/// Classification outcome of the bracket-cobracket composite.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind")]
pub enum VerdictDto {
    #[serde(rename = "cosplit")]
    CoSplit,
    #[serde(rename = "weak")]
    Weak { diagonal: Vec<String> },
    #[serde(rename = "no")]
    No { witness: String },
}

/// Dual-side verification results.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct DualityDto {
    pub dual_jacobi: bool,
    #[serde(rename = "iso_B")]
    pub iso_b: bool,
    pub killing_ratio: Option<String>,
    pub adjoint_factorization: bool,
    pub dual_cosplit: bool,
}

/// Shape summary of a subalgebra embedding.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct EmbeddingDto {
    /// `"B"`, `"C"`, `"D"`, `"identity"`, or `"custom"`.
    pub family: String,
    pub rank: Option<usize>,
    pub ambient: usize,
    pub dim: usize,
    pub complement_dim: usize,
}

/// The two co-split scalar computations side by side.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ScalarReportDto {
    pub c_direct: String,
    pub c_formula: String,
    pub agree: bool,
}

pub fn matrix_to_dto<S: Scalar>(x: &SquareMatrix<S>) -> MatrixDto {
    let n = x.size();
    MatrixDto {
        size: n,
        entries: (0..n)
            .map(|i| (0..n).map(|j| x.get(i, j).to_string()).collect())
            .collect(),
    }
}

pub fn matrix_from_dto<S: Scalar>(dto: &MatrixDto) -> Result<SquareMatrix<S>> {
    if dto.entries.len() != dto.size || dto.entries.iter().any(|r| r.len() != dto.size) {
        return Err(Error::DimensionMismatch {
            context: "matrix entries",
            expected: dto.size,
            got: dto.entries.len(),
        });
    }
    let mut x = SquareMatrix::zero(dto.size);
    for (i, row) in dto.entries.iter().enumerate() {
        for (j, s) in row.iter().enumerate() {
            x.set(i, j, S::parse_str(s).map_err(Error::Parse)?);
        }
    }
    Ok(x)
}

pub fn algebra_to_dto<S: Scalar>(alg: &AlgebraPresentation<S>) -> AlgebraDto {
    AlgebraDto {
        ambient: alg.ambient(),
        basis: alg.basis().iter().map(matrix_to_dto).collect(),
    }
}

/// Rebuilds the presentation, re-running the closure and Jacobi checks.
pub fn algebra_from_dto<S: Scalar>(dto: &AlgebraDto) -> Result<AlgebraPresentation<S>> {
    let basis = dto
        .basis
        .iter()
        .map(|m| {
            if m.size != dto.ambient {
                return Err(Error::SizeMismatch {
                    left: dto.ambient,
                    right: m.size,
                });
            }
            matrix_from_dto(m)
        })
        .collect::<Result<Vec<_>>>()?;
    AlgebraPresentation::new(dto.ambient, basis)
}

pub fn tensor2_to_dto<S: Scalar>(t: &Tensor2<S>) -> TensorDto {
    TensorDto {
        rank: 2,
        terms: t
            .terms()
            .map(|((a, b), v)| TensorTermDto {
                idx: vec![*a, *b],
                coeff: v.to_string(),
            })
            .collect(),
    }
}

pub fn tensor3_to_dto<S: Scalar>(t: &Tensor3<S>) -> TensorDto {
    TensorDto {
        rank: 3,
        terms: t
            .terms()
            .map(|((a, b, c), v)| TensorTermDto {
                idx: vec![*a, *b, *c],
                coeff: v.to_string(),
            })
            .collect(),
    }
}

pub fn verdict_to_dto<S: Scalar>(v: &CosplitVerdict<S>) -> VerdictDto {
    match v {
        CosplitVerdict::CoSplit => VerdictDto::CoSplit,
        CosplitVerdict::WeakCoSplit { diagonal } => VerdictDto::Weak {
            diagonal: diagonal.iter().map(S::to_string).collect(),
        },
        CosplitVerdict::NotCoSplit { witness } => VerdictDto::No {
            witness: witness.clone(),
        },
    }
}

pub fn duality_to_dto<S: Scalar>(outcome: &DualityOutcome<S>) -> DualityDto {
    DualityDto {
        dual_jacobi: outcome.dual_jacobi,
        iso_b: outcome.iso_b,
        killing_ratio: outcome.killing_ratio.as_ref().map(S::to_string),
        adjoint_factorization: outcome.adjoint_factorization,
        dual_cosplit: outcome.dual_cosplit,
    }
}

pub fn embedding_to_dto<S: Scalar>(emb: &Embedding<S>) -> EmbeddingDto {
    let (family, rank) = match emb.kind() {
        EmbeddingKind::Identity => ("identity".to_string(), None),
        EmbeddingKind::Classical { family, rank } => (family.letter().to_string(), Some(rank)),
        EmbeddingKind::Custom => ("custom".to_string(), None),
    };
    EmbeddingDto {
        family,
        rank,
        ambient: emb.ambient_alg().ambient(),
        dim: emb.sub_alg().dim(),
        complement_dim: emb.complement_dim(),
    }
}

pub fn scalar_report_to_dto<S: Scalar>(report: &ScalarReport<S>) -> ScalarReportDto {
    ScalarReportDto {
        c_direct: report.c_direct.to_string(),
        c_formula: report.c_formula.to_string(),
        agree: report.agree,
    }
}

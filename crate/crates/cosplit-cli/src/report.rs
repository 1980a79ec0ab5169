//! Target runners and report rendering.
//!
//! Each verification target produces a [`TargetReport`]: an ordered list of
//! named checks, the classification verdict, and the scalar values the
//! checks revolve around. Reports render either as indented text or as JSON
//! under the `cosplit-report/1` schema. Field orders are fixed and every
//! map is sorted, so output with timing suppressed is byte-stable.

use cosplit::coalgebra::{
    check_anticocommutativity, check_cojacobi, classify_cosplit, delta_sl, equivariance_witness,
    sl_with_delta, CosplitVerdict,
};
use cosplit::duality::{expected_killing_ratio, verify_duality};
use cosplit::json::{
    duality_to_dto, embedding_to_dto, scalar_report_to_dto, verdict_to_dto, DualityDto,
    EmbeddingDto, ScalarReportDto, VerdictDto,
};
use cosplit::restriction::{
    adjoint_factorization_res_witness, delta_res, root_datum, scalar_report, verify_embedding,
    Embedding, Family,
};
use cosplit::{rat, Rational, Result};
use serde::Serialize;
use std::collections::BTreeMap;
use std::fmt::Write as _;
use std::time::Instant;

pub const SCHEMA: &str = "cosplit-report/1";

/// One named check with its outcome.
#[derive(Debug, Clone, Serialize)]
pub struct CheckDto {
    pub name: &'static str,
    pub ok: bool,
}

/// Everything verified about a single target.
#[derive(Debug, Clone, Serialize)]
pub struct TargetReport {
    pub kind: &'static str,
    pub target: String,
    pub dim: usize,
    pub checks: Vec<CheckDto>,
    pub verdict: VerdictDto,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub duality: Option<DualityDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub embedding: Option<EmbeddingDto>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub scalar: Option<ScalarReportDto>,
    #[serde(skip_serializing_if = "BTreeMap::is_empty")]
    pub scalars: BTreeMap<&'static str, String>,
    pub passed: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

/// A run over every target admitted by the size cap.
#[derive(Debug, Clone, Serialize)]
pub struct SuiteReport {
    pub schema: &'static str,
    pub kind: &'static str,
    pub targets: Vec<TargetReport>,
    pub passed: bool,
}

/// Wraps a single target with the schema marker for top-level emission.
#[derive(Serialize)]
pub struct TopLevelTarget<'a> {
    pub schema: &'static str,
    #[serde(flatten)]
    pub report: &'a TargetReport,
}

/// Runs the ten checks on the canonical structure of `sl_m`.
pub fn run_sl(m: usize, timing: bool) -> Result<TargetReport> {
    let start = Instant::now();
    let (alg, delta) = sl_with_delta::<Rational>(m)?;
    let verdict = classify_cosplit(alg.bracket_map(), &delta)?;
    let outcome = verify_duality(&alg, &delta)?;
    let equivariant = equivariance_witness(alg.bracket_map(), &delta)?.is_none();
    let checks = vec![
        CheckDto {
            name: "thm4.1_anticocommutativity",
            ok: check_anticocommutativity(&delta).is_none(),
        },
        CheckDto {
            name: "thm4.1_cojacobi",
            ok: check_cojacobi(&delta).is_none(),
        },
        CheckDto {
            name: "thm4.2_cosplit",
            ok: verdict == CosplitVerdict::CoSplit,
        },
        CheckDto {
            name: "thm5.1_dual_jacobi",
            ok: outcome.dual_jacobi,
        },
        CheckDto {
            name: "thm5.1_iso_B",
            ok: outcome.iso_b,
        },
        CheckDto {
            name: "thm5.2_killing_ratio",
            ok: outcome.killing_ratio == Some(expected_killing_ratio(m)),
        },
        CheckDto {
            name: "thm5.3_adjoint_factorization",
            ok: outcome.adjoint_factorization,
        },
        CheckDto {
            name: "lem6.1_equivariance_injectivity",
            ok: equivariant && delta.is_injective(),
        },
        CheckDto {
            name: "rem3.2_derived_full",
            ok: alg.derived_algebra_is_full(),
        },
        CheckDto {
            name: "rem3.3_dualize",
            ok: outcome.dual_cosplit,
        },
    ];

    let mut scalars = BTreeMap::new();
    // The composite diagonal, when it is constant at all.
    let c_cosplit = match &verdict {
        CosplitVerdict::CoSplit => Some("1".to_string()),
        CosplitVerdict::WeakCoSplit { diagonal } => diagonal
            .first()
            .filter(|f| diagonal.iter().all(|d| d == *f))
            .map(ToString::to_string),
        CosplitVerdict::NotCoSplit { .. } => None,
    };
    if let Some(c) = c_cosplit {
        scalars.insert("c_cosplit", c);
    }
    if let Some(r) = &outcome.killing_ratio {
        scalars.insert("killing_ratio", r.to_string());
    }

    let passed = checks.iter().all(|c| c.ok);
    Ok(TargetReport {
        kind: "target",
        target: format!("sl_{m}"),
        dim: alg.dim(),
        checks,
        verdict: verdict_to_dto(&verdict),
        duality: Some(duality_to_dto(&outcome)),
        embedding: None,
        scalar: None,
        scalars,
        passed,
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// Runs the nine checks on a classical family target.
pub fn run_classical(family: Family, rank: usize, timing: bool) -> Result<TargetReport> {
    let start = Instant::now();
    let emb = Embedding::<Rational>::embed_classical(family, rank)?;
    let delta = delta_sl(emb.ambient_alg())?;
    let res = delta_res(&emb, &delta)?;
    let emb_checks = verify_embedding(&emb)?;
    let equivariant = equivariance_witness(emb.sub_alg().bracket_map(), &res.cobracket)?.is_none();
    let datum = root_datum(emb.sub_alg())?;
    let report = scalar_report(&emb, &res, &datum)?;
    let rescaled_ok = if report.c_direct == rat(0, 1) {
        false
    } else {
        let rescaled = res.cobracket.scale(&(rat(1, 1) / report.c_direct.clone()));
        classify_cosplit(emb.sub_alg().bracket_map(), &rescaled)? == CosplitVerdict::CoSplit
    };
    let checks = vec![
        CheckDto {
            name: "thm6.1_step1_embedding",
            ok: emb_checks.step1_embedding,
        },
        CheckDto {
            name: "thm6.1_step2_complement",
            ok: emb_checks.step2_complement,
        },
        CheckDto {
            name: "lem6.1_anticocommutativity",
            ok: check_anticocommutativity(&res.cobracket).is_none(),
        },
        CheckDto {
            name: "lem6.1_cojacobi",
            ok: check_cojacobi(&res.cobracket).is_none(),
        },
        CheckDto {
            name: "lem6.1_containment",
            ok: res.containment_ok,
        },
        CheckDto {
            name: "lem6.1_equivariance",
            ok: equivariant,
        },
        CheckDto {
            name: "lem6.2_scalar",
            ok: report.agree && report.c_direct > rat(0, 1),
        },
        CheckDto {
            name: "thm6.1_rescaled_cosplit",
            ok: rescaled_ok,
        },
        CheckDto {
            name: "thm6.3_adjoint_factorization_res",
            ok: adjoint_factorization_res_witness(&emb, &res)?.is_none(),
        },
    ];

    let verdict = classify_cosplit(emb.sub_alg().bracket_map(), &res.cobracket)?;
    let passed = checks.iter().all(|c| c.ok);
    Ok(TargetReport {
        kind: "target",
        target: format!("{}{}", family.letter(), rank),
        dim: emb.sub_alg().dim(),
        checks,
        verdict: verdict_to_dto(&verdict),
        duality: None,
        embedding: Some(embedding_to_dto(&emb)),
        scalar: Some(scalar_report_to_dto(&report)),
        scalars: BTreeMap::new(),
        passed,
        elapsed_ms: timing.then(|| start.elapsed().as_millis() as u64),
    })
}

/// One verification target of the built-in suite.
#[derive(Debug, Clone, Copy)]
pub enum SuiteTarget {
    Sl(usize),
    Classical(Family, usize),
}

/// The built-in targets admitted by the ambient size cap.
pub fn suite_targets(cap: usize) -> Vec<SuiteTarget> {
    let mut targets = Vec::new();
    for m in 2..=6 {
        if m <= cap {
            targets.push(SuiteTarget::Sl(m));
        }
    }
    for (family, rank) in [
        (Family::B, 1),
        (Family::B, 2),
        (Family::B, 3),
        (Family::C, 2),
        (Family::C, 3),
        (Family::D, 3),
        (Family::D, 4),
    ] {
        if family.ambient_size(rank) <= cap {
            targets.push(SuiteTarget::Classical(family, rank));
        }
    }
    targets
}

pub fn run_suite(cap: usize, timing: bool) -> Result<SuiteReport> {
    let mut targets = Vec::new();
    for t in suite_targets(cap) {
        targets.push(match t {
            SuiteTarget::Sl(m) => run_sl(m, timing)?,
            SuiteTarget::Classical(family, rank) => run_classical(family, rank, timing)?,
        });
    }
    let passed = targets.iter().all(|t| t.passed);
    Ok(SuiteReport {
        schema: SCHEMA,
        kind: "suite",
        targets,
        passed,
    })
}

fn verdict_line(v: &VerdictDto) -> String {
    match v {
        VerdictDto::CoSplit => "cosplit".to_string(),
        VerdictDto::Weak { diagonal } => match diagonal.first() {
            Some(first) if diagonal.iter().all(|d| d == first) => {
                format!("weak (diagonal constant {first})")
            }
            _ => "weak (diagonal varies)".to_string(),
        },
        VerdictDto::No { witness } => format!("no ({witness})"),
    }
}

pub fn render_target_text(r: &TargetReport) -> String {
    let mut out = String::new();
    writeln!(out, "target {} (dim {})", r.target, r.dim).unwrap();
    for c in &r.checks {
        let state = if c.ok { "ok" } else { "FAIL" };
        writeln!(out, "  check {:<36} {}", c.name, state).unwrap();
    }
    for (k, v) in &r.scalars {
        writeln!(out, "  scalar {k} = {v}").unwrap();
    }
    if let Some(s) = &r.scalar {
        writeln!(out, "  scalar c_direct = {}", s.c_direct).unwrap();
        writeln!(out, "  scalar c_formula = {}", s.c_formula).unwrap();
    }
    writeln!(out, "  verdict {}", verdict_line(&r.verdict)).unwrap();
    if let Some(ms) = r.elapsed_ms {
        writeln!(out, "  time {ms} ms").unwrap();
    }
    writeln!(out, "  result {}", if r.passed { "pass" } else { "FAIL" }).unwrap();
    out
}

pub fn render_suite_text(s: &SuiteReport) -> String {
    let mut out = String::new();
    for t in &s.targets {
        out.push_str(&render_target_text(t));
        out.push('\n');
    }
    let failed = s.targets.iter().filter(|t| !t.passed).count();
    if s.passed {
        writeln!(out, "suite result pass ({} targets)", s.targets.len()).unwrap();
    } else {
        writeln!(
            out,
            "suite result FAIL ({failed} of {} targets failed)",
            s.targets.len()
        )
        .unwrap();
    }
    out
}

//! Computable skeleton of the finiteness argument: empirical gcd-growth
//! probes, multiplicative-dependence detection, family parametrization, and
//! the odd-root audit of the associated curve.

mod curve;
mod dependence;
mod family;

pub use curve::{audit_odd_roots, build_curve_from_parts, build_leveque_curve, AuditVerdict};
pub use dependence::{
    detect_dependence, parametrize_pair_family, DependenceOutcome, DependenceRelation,
};
pub use family::{combine_dependences, normalize_mod3, FamilyFrame, FamilyParam};

use crate::par::{map_items, ExecMode};
use crate::polyarith::{IntPoly, PolyError};
use crate::sunit::{gcd_via_valuations, ln_big, SUnit};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum ProoflabError {
    #[error("at least two distinct pairs are required")]
    InsufficientData,
    #[error("not in family: {0}")]
    NotInFamily(String),
    #[error("inconsistent relations: {0}")]
    InconsistentRelations(String),
    #[error("reconstruction failure: {0}")]
    ReconstructionFailure(String),
    #[error("sign constraint violated: {0}")]
    SignConstraint(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error(transparent)]
    Poly(#[from] PolyError),
}

/// One probed pair: the exact gcd of f(v) and f(w) and its size relative to
/// the larger height. Ratios above the probe's ε mark candidate exceptional
/// pairs, the ones a dependence relation would have to absorb.
#[derive(Debug, Clone, PartialEq)]
pub struct GcdProbeSample {
    pub v: SUnit,
    pub w: SUnit,
    pub fv: BigUint,
    pub fw: BigUint,
    pub gcd: BigUint,
    pub ratio: f64,
    pub flagged: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct GcdProbeSummary {
    pub pairs: usize,
    pub flagged: usize,
    pub epsilon: f64,
    pub max_ratio: f64,
}

/// Probe the gcd growth of f over supplied S-unit pairs. Requires f(s) ≥ 1
/// on every supplied unit.
pub fn gcd_probe_mode(
    f: &IntPoly,
    pairs: &[(SUnit, SUnit)],
    epsilon: f64,
    mode: ExecMode,
) -> Result<(Vec<GcdProbeSample>, GcdProbeSummary), ProoflabError> {
    if !(epsilon > 0.0) {
        return Err(ProoflabError::InvalidInput("ε must be positive".into()));
    }
    let evaluated: Vec<(BigInt, BigInt)> = pairs
        .iter()
        .map(|(v, w)| {
            (
                f.eval_int(&BigInt::from(v.value().clone())),
                f.eval_int(&BigInt::from(w.value().clone())),
            )
        })
        .collect();
    for (fv, fw) in &evaluated {
        if !fv.is_positive() || !fw.is_positive() {
            return Err(ProoflabError::InvalidInput(
                "f must be positive at every probed S-unit".into(),
            ));
        }
    }
    let work: Vec<(usize, (SUnit, SUnit))> = pairs.iter().cloned().enumerate().collect();
    let samples = map_items(mode, &work, |(idx, (v, w))| {
        let fv = evaluated[*idx].0.magnitude().clone();
        let fw = evaluated[*idx].1.magnitude().clone();
        let gcd = gcd_via_valuations(&fv, &fw).expect("positive inputs");
        let height = v.weil_height().max(w.weil_height());
        let ratio = if gcd.is_one() {
            0.0
        } else if height == 0.0 {
            f64::INFINITY
        } else {
            ln_big(&gcd) / height
        };
        GcdProbeSample {
            v: v.clone(),
            w: w.clone(),
            fv,
            fw,
            gcd,
            ratio,
            flagged: ratio > epsilon,
        }
    });
    let summary = GcdProbeSummary {
        pairs: samples.len(),
        flagged: samples.iter().filter(|s| s.flagged).count(),
        epsilon,
        max_ratio: samples.iter().map(|s| s.ratio).fold(0.0, f64::max),
    };
    Ok((samples, summary))
}

/// [`gcd_probe_mode`] with the default execution mode and the canonical
/// ε = 1/4.
pub fn gcd_probe(
    f: &IntPoly,
    pairs: &[(SUnit, SUnit)],
    epsilon: f64,
) -> Result<(Vec<GcdProbeSample>, GcdProbeSummary), ProoflabError> {
    gcd_probe_mode(f, pairs, epsilon, ExecMode::default())
}

/// The default probe threshold.
pub const DEFAULT_PROBE_EPSILON: f64 = 0.25;

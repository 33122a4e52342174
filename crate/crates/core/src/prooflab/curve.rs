//! Construction of the curve polynomial F(X) = f(η₁X^{d₁})·f(η₂X^{d₂})·
//! f(η₃X^{d₃}) and the audit of its odd-multiplicity roots. Three or more
//! such roots exclude infinitely many quasi-integral points on Y² = F(X),
//! forcing finiteness of the generating family.

use super::{FamilyParam, ProoflabError};
use crate::polyarith::{
    compose_scaled_power, odd_multiplicity_root_count_rat, IntPoly, RatPoly,
};
use num_rational::BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AuditVerdict {
    /// At least three odd-multiplicity zeros: the family must be finite.
    FinitenessForced,
    /// Two or fewer odd-multiplicity zeros: the audit decides nothing.
    Inconclusive,
}

/// The curve polynomial from explicit η and d parts. Factors with d = 0
/// contribute the constant f(η).
pub fn build_curve_from_parts(
    f: &IntPoly,
    etas: &[BigRational; 3],
    degrees: &[u64; 3],
) -> Result<RatPoly, ProoflabError> {
    if f.is_constant() {
        return Err(ProoflabError::InvalidInput(
            "curve construction requires a non-constant polynomial".into(),
        ));
    }
    let mut acc = RatPoly::constant(BigRational::from_integer(1.into()));
    for (eta, d) in etas.iter().zip(degrees) {
        let factor = compose_scaled_power(f, eta, *d as usize)?;
        acc = acc.mul(&factor);
    }
    Ok(acc)
}

/// The curve polynomial for a normalized family.
pub fn build_leveque_curve(f: &IntPoly, fp: &FamilyParam) -> Result<RatPoly, ProoflabError> {
    let etas = [
        fp.eta[0].value().clone(),
        fp.eta[1].value().clone(),
        fp.eta[2].value().clone(),
    ];
    build_curve_from_parts(f, &etas, &fp.d)
}

/// Count the distinct odd-multiplicity zeros of F and render the verdict.
pub fn audit_odd_roots(curve: &RatPoly) -> Result<(usize, AuditVerdict), ProoflabError> {
    let t = odd_multiplicity_root_count_rat(curve)?;
    let verdict = if t >= 3 {
        AuditVerdict::FinitenessForced
    } else {
        AuditVerdict::Inconclusive
    };
    Ok((t, verdict))
}

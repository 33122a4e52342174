//! Multiplicative-dependence detection: recover the primitive relation
//! `v^k·w^l = g` shared by a family of S-unit pairs from the integer kernel
//! of the stacked exponent-difference matrix.

use super::ProoflabError;
use crate::sunit::{ExpVector, PrimeSet, SRational, SUnit};
use num_integer::Integer;

/// A one-dimensional multiplicative relation: every pair (v, w) of the
/// family satisfies `v^k · w^l = g` with `k > 0` and `gcd(k, |l|) = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DependenceRelation {
    pub k: i64,
    pub l: i64,
    pub g: SRational,
}

impl DependenceRelation {
    /// Exact exponent-level membership test for a pair.
    pub fn holds_for(&self, v: &SUnit, w: &SUnit) -> bool {
        let combined = v
            .exp_vector()
            .scale(self.k)
            .add(&w.exp_vector().scale(self.l));
        &combined == self.g.exponents()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DependenceOutcome {
    Relation(DependenceRelation),
    /// The difference rows span rank 2: no single relation fits all pairs.
    NoRelation,
    /// The kernel is not a clean one-dimensional relation with k > 0:
    /// either every pair coincides or the kernel vector has k = 0.
    DegenerateFamily,
}

/// Detect the relation generating a family of at least two distinct pairs.
pub fn detect_dependence(
    s: &PrimeSet,
    pairs: &[(SUnit, SUnit)],
) -> Result<DependenceOutcome, ProoflabError> {
    let mut distinct: Vec<&(SUnit, SUnit)> = Vec::new();
    for pair in pairs {
        if !distinct.iter().any(|p| *p == pair) {
            distinct.push(pair);
        }
    }
    if distinct.len() < 2 {
        return Err(ProoflabError::InsufficientData);
    }

    let (v0, w0) = distinct[0];
    let mut rows: Vec<(i64, i64)> = Vec::new();
    for (v, w) in distinct.iter().skip(1) {
        for i in 0..s.len() {
            let dv = v.exponents()[i] as i64 - v0.exponents()[i] as i64;
            let dw = w.exponents()[i] as i64 - w0.exponents()[i] as i64;
            if dv != 0 || dw != 0 {
                rows.push((dv, dw));
            }
        }
    }
    if rows.is_empty() {
        // distinct pairs always produce a non-zero row; defensive only
        return Ok(DependenceOutcome::DegenerateFamily);
    }

    // the kernel of a rank-1 row space is spanned by the primitive vector
    // orthogonal to the first row
    let (dv0, dw0) = rows[0];
    let scale = dv0.abs().gcd(&dw0.abs());
    let mut k = dw0 / scale;
    let mut l = -dv0 / scale;
    for &(dv, dw) in &rows[1..] {
        if k as i128 * dv as i128 + l as i128 * dw as i128 != 0 {
            return Ok(DependenceOutcome::NoRelation);
        }
    }
    if k < 0 {
        k = -k;
        l = -l;
    }
    if k == 0 {
        return Ok(DependenceOutcome::DegenerateFamily);
    }

    let gvec = v0.exp_vector().scale(k).add(&w0.exp_vector().scale(l));
    let relation = DependenceRelation {
        k,
        l,
        g: SRational::from_exponents(s, gvec),
    };
    for (v, w) in pairs {
        if !relation.holds_for(v, w) {
            return Ok(DependenceOutcome::NoRelation);
        }
    }
    Ok(DependenceOutcome::Relation(relation))
}

/// The ratio ρ carrying a sample pair to the base pair of a relation:
/// `w = w̄·ρ^k` and `v = v̄·ρ^{−l}`, with exponents `(w_i − w̄_i)/k`.
pub fn parametrize_pair_family(
    s: &PrimeSet,
    rel: &DependenceRelation,
    base: &(SUnit, SUnit),
    sample: &(SUnit, SUnit),
) -> Result<SRational, ProoflabError> {
    for (name, pair) in [("base", base), ("sample", sample)] {
        if !rel.holds_for(&pair.0, &pair.1) {
            return Err(ProoflabError::NotInFamily(format!(
                "{name} pair does not satisfy the relation"
            )));
        }
    }
    let mut mu = Vec::with_capacity(s.len());
    for i in 0..s.len() {
        let dw = sample.1.exponents()[i] as i64 - base.1.exponents()[i] as i64;
        if dw % rel.k != 0 {
            return Err(ProoflabError::NotInFamily(format!(
                "exponent difference {dw} not divisible by k = {}",
                rel.k
            )));
        }
        mu.push(dw / rel.k);
    }
    let mu = ExpVector::new(mu);
    // cross-check the v side: v_i = v̄_i − l·μ_i
    for i in 0..s.len() {
        let expected = base.0.exponents()[i] as i64 - rel.l * mu.entry(i);
        if sample.0.exponents()[i] as i64 != expected {
            return Err(ProoflabError::NotInFamily(
                "v-side exponents inconsistent with ρ".into(),
            ));
        }
    }
    Ok(SRational::from_exponents(s, mu))
}

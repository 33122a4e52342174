//! Family parametrization: combine the (v,w) and (u,w) relations sharing a
//! base triple into exponent directions (x, y, z) and ψ, then split ψ into
//! 3t + β to express the triple as (η₁X^{d₁}, η₂X^{d₂}, η₃X^{d₃}) with every
//! dⱼ a multiple of three.

use super::dependence::DependenceRelation;
use super::ProoflabError;
use crate::sunit::{ExpVector, PrimeSet, SRational, SUnit};
use num_integer::Integer;

/// Parametrization stage one: directions and ψ, before the mod-3 split.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyFrame {
    pub base: (SUnit, SUnit, SUnit),
    pub sample: (SUnit, SUnit, SUnit),
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub psi: ExpVector,
}

/// The fully normalized family data. For the anchored sample solution the
/// reconstruction `u = η₁·X^{d₁}`, `v = η₂·X^{d₂}`, `w = η₃·X^{d₃}` holds
/// exactly, with each dⱼ = 3·(x, y, z) and every ηⱼ positive.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FamilyParam {
    pub base: (SUnit, SUnit, SUnit),
    pub sample: (SUnit, SUnit, SUnit),
    pub x: u64,
    pub y: u64,
    pub z: u64,
    pub psi: ExpVector,
    pub beta: Vec<u8>,
    pub t: ExpVector,
    pub eta: [SRational; 3],
    pub d: [u64; 3],
    /// The common power base X = ∏ pᵢ^{tᵢ}. Euclidean residues keep β in
    /// {0,1,2} even for negative ψ, so t (and hence X) may carry negative
    /// exponents.
    pub power_base: SRational,
    /// Whether d₁ ≤ d₂ ≤ d₃; small samples may violate the expected
    /// ordering, which is reported rather than rejected.
    pub degrees_ordered: bool,
}

fn check_relation(
    name: &str,
    rel: &DependenceRelation,
    first: &SUnit,
    second: &SUnit,
) -> Result<(), ProoflabError> {
    if !rel.holds_for(first, second) {
        return Err(ProoflabError::InconsistentRelations(format!(
            "{name} does not satisfy its relation"
        )));
    }
    Ok(())
}

/// Merge the relation on (v, w) with the relation on (u, w) over a shared
/// base triple, producing the exponent directions and ψ for a sample.
pub fn combine_dependences(
    s: &PrimeSet,
    rel_vw: &DependenceRelation,
    rel_uw: &DependenceRelation,
    base: &(SUnit, SUnit, SUnit),
    sample: &(SUnit, SUnit, SUnit),
) -> Result<FamilyFrame, ProoflabError> {
    let (k, l) = (rel_vw.k, rel_vw.l);
    let (m, r) = (rel_uw.k, rel_uw.l);
    check_relation("base (v,w)", rel_vw, &base.1, &base.2)?;
    check_relation("sample (v,w)", rel_vw, &sample.1, &sample.2)?;
    check_relation("base (u,w)", rel_uw, &base.0, &base.2)?;
    check_relation("sample (u,w)", rel_uw, &sample.0, &sample.2)?;

    let (x, y, z) = if r == 0 {
        (0i128, -l as i128, k as i128)
    } else {
        let lcm = (k as i128).lcm(&(m as i128));
        let k_tilde = lcm / k as i128;
        let m_tilde = lcm / m as i128;
        (-(r as i128) * m_tilde, -(l as i128) * k_tilde, lcm)
    };
    if z <= 0 || y <= 0 || x < 0 {
        return Err(ProoflabError::SignConstraint(format!(
            "directions must satisfy z > 0, y > 0, x ≥ 0 (got x={x}, y={y}, z={z})"
        )));
    }

    let mut psi = Vec::with_capacity(s.len());
    for i in 0..s.len() {
        let dw = sample.2.exponents()[i] as i128 - base.2.exponents()[i] as i128;
        if dw % z != 0 {
            return Err(ProoflabError::NotInFamily(format!(
                "w-exponent difference {dw} is not a multiple of z = {z}"
            )));
        }
        psi.push((dw / z) as i64);
    }
    let psi = ExpVector::new(psi);

    // the u and v components must move along the same ψ direction
    for i in 0..s.len() {
        let u_expected = base.0.exponents()[i] as i128 + x * psi.entry(i) as i128;
        let v_expected = base.1.exponents()[i] as i128 + y * psi.entry(i) as i128;
        if sample.0.exponents()[i] as i128 != u_expected
            || sample.1.exponents()[i] as i128 != v_expected
        {
            return Err(ProoflabError::NotInFamily(
                "sample does not lie on the (x, y, z)·ψ line through the base".into(),
            ));
        }
    }

    Ok(FamilyFrame {
        base: base.clone(),
        sample: sample.clone(),
        x: x as u64,
        y: y as u64,
        z: z as u64,
        psi,
    })
}

/// Split ψ into Euclidean residues mod 3 and assemble the η / X / d data.
pub fn normalize_mod3(s: &PrimeSet, frame: &FamilyFrame) -> Result<FamilyParam, ProoflabError> {
    let h = s.len();
    let mut beta = Vec::with_capacity(h);
    let mut t = Vec::with_capacity(h);
    for i in 0..h {
        let psi_i = frame.psi.entry(i);
        beta.push(psi_i.rem_euclid(3) as u8);
        t.push(psi_i.div_euclid(3));
    }
    let t = ExpVector::new(t);

    let eta_exponents = |anchor: &SUnit, direction: u64| -> ExpVector {
        let entries = (0..h)
            .map(|i| anchor.exponents()[i] as i64 + beta[i] as i64 * direction as i64)
            .collect();
        ExpVector::new(entries)
    };
    let eta = [
        SRational::from_exponents(s, eta_exponents(&frame.base.0, frame.x)),
        SRational::from_exponents(s, eta_exponents(&frame.base.1, frame.y)),
        SRational::from_exponents(s, eta_exponents(&frame.base.2, frame.z)),
    ];
    let d = [frame.x * 3, frame.y * 3, frame.z * 3];
    let power_base = SRational::from_exponents(s, t.clone());

    // reconstruction audit against the anchored sample triple
    let samples = [&frame.sample.0, &frame.sample.1, &frame.sample.2];
    for (j, sample) in samples.iter().enumerate() {
        for i in 0..h {
            let rebuilt = eta[j].exponents().entry(i) + d[j] as i64 * t.entry(i);
            if sample.exponents()[i] as i64 != rebuilt {
                return Err(ProoflabError::ReconstructionFailure(format!(
                    "component {} of the sample is not η·X^d",
                    j + 1
                )));
            }
        }
    }

    Ok(FamilyParam {
        base: frame.base.clone(),
        sample: frame.sample.clone(),
        x: frame.x,
        y: frame.y,
        z: frame.z,
        psi: frame.psi.clone(),
        beta,
        t,
        eta,
        d,
        power_base,
        degrees_ordered: d[0] <= d[1] && d[1] <= d[2],
    })
}

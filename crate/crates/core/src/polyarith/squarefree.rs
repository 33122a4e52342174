//! Yun squarefree decomposition over ℤ and odd-multiplicity root counting.
//!
//! The number of distinct complex roots of odd multiplicity is read off the
//! decomposition degrees; no root is ever computed numerically.

use super::{IntPoly, PolyError, RatPoly};
use num_rational::BigRational;
use num_traits::Zero;

/// `f = content · ∏ partsᵢ^{multᵢ}` with squarefree, primitive, pairwise
/// coprime parts listed by strictly increasing multiplicity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SquarefreeDecomposition {
    pub content: BigRational,
    pub parts: Vec<(u32, IntPoly)>,
}

impl SquarefreeDecomposition {
    /// Reassemble the original polynomial (as a rational polynomial).
    pub fn reconstruct(&self) -> RatPoly {
        let mut acc = RatPoly::constant(self.content.clone());
        for (mult, g) in &self.parts {
            acc = acc.mul(&g.pow(*mult).to_rat());
        }
        acc
    }
}

/// Pseudo-remainder of `a` by `b` (deg b ≤ deg a, b non-zero): the remainder
/// after scaling `a` by powers of b's leading coefficient so the division
/// stays integral.
fn pseudo_rem(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let db = b.degree().expect("pseudo_rem by zero");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let lr = r.leading().unwrap().clone();
        r = r.scale(&lb).sub(&b.mul_monomial(&lr, dr - db));
    }
    r
}

/// Polynomial gcd over ℤ via the primitive pseudo-remainder sequence.
/// Returns the primitive gcd with positive leading coefficient.
pub(crate) fn int_gcd(a: &IntPoly, b: &IntPoly) -> IntPoly {
    let mut a = a.primitive_part();
    let mut b = b.primitive_part();
    if a.is_zero() {
        return b;
    }
    loop {
        if b.is_zero() {
            return a;
        }
        if b.is_constant() {
            return IntPoly::from_i64(&[1]);
        }
        if a.degree() < b.degree() {
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = pseudo_rem(&a, &b).primitive_part();
        a = b;
        b = r;
    }
}

/// Exact division `a / b` for a known-divisible pair; panics on inexactness.
fn exact_div(a: &IntPoly, b: &IntPoly) -> IntPoly {
    assert!(!b.is_zero(), "division by the zero polynomial");
    if a.is_zero() {
        return IntPoly::zero();
    }
    let (q, r) = rat_div_rem(&a.to_rat(), &b.to_rat());
    assert!(r.is_zero(), "inexact polynomial division");
    q.to_int().expect("quotient of integral division not integral")
}

/// Euclidean division over ℚ: returns (quotient, remainder).
pub(crate) fn rat_div_rem(a: &RatPoly, b: &RatPoly) -> (RatPoly, RatPoly) {
    let db = b.degree().expect("division by zero polynomial");
    let lb = b.leading().unwrap().clone();
    let mut r = a.clone();
    let mut q = vec![BigRational::zero(); a.coeffs().len()];
    while let Some(dr) = r.degree() {
        if dr < db {
            break;
        }
        let factor = r.leading().unwrap() / &lb;
        q[dr - db] = factor.clone();
        let mut sub_coeffs = vec![BigRational::zero(); dr - db];
        sub_coeffs.extend(b.coeffs().iter().map(|c| c * &factor));
        r = r.sub(&RatPoly::from_coeffs(sub_coeffs));
    }
    (RatPoly::from_coeffs(q), r)
}

/// Yun's squarefree decomposition in characteristic zero, run over ℤ with
/// primitive pseudo-remainder gcds so coefficients never leave the integers.
pub fn yun_squarefree(f: &IntPoly) -> Result<SquarefreeDecomposition, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let (content, prim) = f.content_and_primitive();
    let content = BigRational::from_integer(content);
    if prim.is_constant() {
        return Ok(SquarefreeDecomposition {
            content,
            parts: vec![],
        });
    }
    let deriv = prim.derivative();
    let g = int_gcd(&prim, &deriv);
    let mut parts = Vec::new();
    if g.is_constant() {
        parts.push((1, prim));
        return Ok(SquarefreeDecomposition { content, parts });
    }
    let mut w = exact_div(&prim, &g);
    let mut d = exact_div(&deriv, &g).sub(&w.derivative());
    let mut mult = 1u32;
    while !w.is_constant() {
        let a = int_gcd(&w, &d);
        if !a.is_constant() {
            parts.push((mult, a.clone()));
        }
        w = exact_div(&w, &a);
        d = exact_div(&d, &a).sub(&w.derivative());
        mult += 1;
    }
    Ok(SquarefreeDecomposition { content, parts })
}

/// Number of distinct complex roots of odd multiplicity: the sum of the
/// degrees of the odd-multiplicity squarefree parts.
pub fn odd_multiplicity_root_count(f: &IntPoly) -> Result<usize, PolyError> {
    let decomp = yun_squarefree(f)?;
    Ok(decomp
        .parts
        .iter()
        .filter(|(mult, _)| mult % 2 == 1)
        .map(|(_, g)| g.degree().unwrap_or(0))
        .sum())
}

/// Rational-coefficient variant; scaling by the denominator lcm does not
/// move any root.
pub fn odd_multiplicity_root_count_rat(f: &RatPoly) -> Result<usize, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let lcm = f.denominator_lcm();
    let scaled = f.scale(&BigRational::from_integer(lcm));
    let int = scaled.to_int().expect("lcm scaling must clear denominators");
    odd_multiplicity_root_count(&int)
}

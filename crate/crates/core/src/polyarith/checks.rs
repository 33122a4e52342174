//! Hypothesis checks and scaled-power composition for the finiteness
//! criterion: a usable polynomial must be non-constant, non-vanishing at the
//! origin, and carry at least one zero of odd multiplicity.

use super::{odd_multiplicity_root_count, IntPoly, PolyError, RatPoly};
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Outcome of checking a polynomial against the finiteness hypotheses.
/// `positive_leading` is advisory: a negative leading coefficient bounds the
/// polynomial above on ℕ but does not invalidate a search.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct HypothesisReport {
    pub nonconstant: bool,
    pub nonzero_at_origin: bool,
    pub odd_root_count: usize,
    pub positive_leading: bool,
    pub satisfies_theorem: bool,
}

pub fn check_theorem_hypotheses(f: &IntPoly) -> Result<HypothesisReport, PolyError> {
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let nonconstant = !f.is_constant();
    let nonzero_at_origin = !f.coeff(0).is_zero();
    let odd_root_count = odd_multiplicity_root_count(f)?;
    let positive_leading = f.leading().unwrap().is_positive();
    Ok(HypothesisReport {
        nonconstant,
        nonzero_at_origin,
        odd_root_count,
        positive_leading,
        satisfies_theorem: nonconstant && nonzero_at_origin && odd_root_count >= 1,
    })
}

/// Exact test of the identity `f(φX) = φⁿ·f(X)`. For φ ≠ 1 this holds iff
/// f is a monomial `f_n Xⁿ`.
pub fn satisfies_scaling_identity(f: &IntPoly, phi: &BigRational) -> Result<bool, PolyError> {
    if !phi.is_positive() {
        return Err(PolyError::InvalidInput("φ must be positive".into()));
    }
    if f.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    if phi.is_one() {
        return Ok(true);
    }
    let n = f.degree().unwrap();
    let phi_n = pow_rational(phi, n);
    let mut phi_i = BigRational::one();
    for i in 0..=n {
        let c = f.coeff(i);
        if !c.is_zero() && i < n {
            // f_i (φ^i - φ^n) must vanish
            if phi_i != phi_n {
                return Ok(false);
            }
        }
        phi_i *= phi;
    }
    Ok(true)
}

/// The composition `f(η·X^d)` with exact rational coefficients. With d = 0
/// the result is the constant `f(η)`.
pub fn compose_scaled_power(
    f: &IntPoly,
    eta: &BigRational,
    d: usize,
) -> Result<RatPoly, PolyError> {
    if !eta.is_positive() {
        return Err(PolyError::InvalidInput("η must be positive".into()));
    }
    if f.is_zero() {
        return Ok(RatPoly::zero());
    }
    if d == 0 {
        return Ok(RatPoly::constant(f.eval(eta)));
    }
    let n = f.degree().unwrap();
    let mut coeffs = vec![BigRational::zero(); n * d + 1];
    let mut eta_i = BigRational::one();
    for i in 0..=n {
        let c = f.coeff(i);
        if !c.is_zero() {
            coeffs[i * d] = BigRational::from_integer(c) * &eta_i;
        }
        eta_i *= eta;
    }
    Ok(RatPoly::from_coeffs(coeffs))
}

fn pow_rational(r: &BigRational, e: usize) -> BigRational {
    let mut acc = BigRational::one();
    for _ in 0..e {
        acc *= r;
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn poly(coeffs: &[i64]) -> IntPoly {
        IntPoly::from_i64(coeffs)
    }

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn hypotheses_x_minus_one() {
        let r = check_theorem_hypotheses(&poly(&[-1, 1])).unwrap();
        assert!(r.nonconstant && r.nonzero_at_origin && r.positive_leading);
        assert_eq!(r.odd_root_count, 1);
        assert!(r.satisfies_theorem);
    }

    #[test]
    fn hypotheses_origin_counterexample() {
        // f = X vanishes at the origin
        let r = check_theorem_hypotheses(&poly(&[0, 1])).unwrap();
        assert!(!r.nonzero_at_origin);
        assert!(!r.satisfies_theorem);
    }

    #[test]
    fn hypotheses_square_and_constant() {
        let r = check_theorem_hypotheses(&poly(&[-1, 1]).pow(2)).unwrap();
        assert_eq!(r.odd_root_count, 0);
        assert!(!r.satisfies_theorem);
        let r = check_theorem_hypotheses(&poly(&[5])).unwrap();
        assert!(!r.nonconstant);
        assert!(!r.satisfies_theorem);
        assert!(check_theorem_hypotheses(&IntPoly::zero()).is_err());
    }

    #[test]
    fn scaling_identity_cases() {
        // monomials satisfy the identity for any φ
        assert!(satisfies_scaling_identity(&poly(&[0, 0, 0, 1]), &rat(2)).unwrap());
        assert!(!satisfies_scaling_identity(&poly(&[-1, -1, 1]), &rat(2)).unwrap());
        // φ = 1 trivially satisfies it
        assert!(satisfies_scaling_identity(&poly(&[-1, -1, 1]), &rat(1)).unwrap());
        assert!(satisfies_scaling_identity(&poly(&[7]), &ratq(3, 2)).unwrap());
        assert!(satisfies_scaling_identity(&poly(&[0, 1]), &rat(-1)).is_err());
    }

    #[test]
    fn compose_examples() {
        // (X-1) at 2X^3 gives 2X^3 - 1
        let f = poly(&[-1, 1]);
        let c = compose_scaled_power(&f, &rat(2), 3).unwrap();
        assert_eq!(c, RatPoly::from_coeffs(vec![rat(-1), rat(0), rat(0), rat(2)]));
        // d = 0 collapses to the constant f(2) = 1
        let c0 = compose_scaled_power(&f, &rat(2), 0).unwrap();
        assert_eq!(c0, RatPoly::constant(rat(1)));
        // (X^2-X-1) at (1/2)X^3 gives (1/4)X^6 - (1/2)X^3 - 1
        let g = poly(&[-1, -1, 1]);
        let cg = compose_scaled_power(&g, &ratq(1, 2), 3).unwrap();
        let mut expect = vec![BigRational::zero(); 7];
        expect[0] = rat(-1);
        expect[3] = ratq(-1, 2);
        expect[6] = ratq(1, 4);
        assert_eq!(cg, RatPoly::from_coeffs(expect));
    }
}

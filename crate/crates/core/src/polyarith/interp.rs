//! Exact Lagrange interpolation and denominator clearing.

use super::{IntPoly, PolyError, RatPoly};
use num_bigint::BigUint;
use num_rational::BigRational;
use num_traits::{One, Signed};

/// The unique polynomial of degree < #points passing through all points,
/// with exact rational coefficients.
pub fn lagrange_interpolate(
    points: &[(BigRational, BigRational)],
) -> Result<RatPoly, PolyError> {
    if points.is_empty() {
        return Err(PolyError::InvalidInput(
            "interpolation requires at least one point".into(),
        ));
    }
    for (i, (xi, _)) in points.iter().enumerate() {
        for (xj, _) in points.iter().skip(i + 1) {
            if xi == xj {
                return Err(PolyError::NonDistinctNodes(xi.to_string()));
            }
        }
    }
    let mut acc = RatPoly::zero();
    for (i, (xi, yi)) in points.iter().enumerate() {
        let mut basis = RatPoly::constant(BigRational::one());
        let mut denom = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            basis = basis.mul(&RatPoly::from_coeffs(vec![-xj.clone(), BigRational::one()]));
            denom *= xi - xj;
        }
        acc = acc.add(&basis.scale(&(yi / denom)));
    }
    Ok(acc)
}

/// Clear denominators by the square of their least common multiple:
/// returns `(d, f)` with `f = d²·g` integral, so that scaling a tuple by `d`
/// preserves every pairwise product equation.
pub fn clear_denominators(g: &RatPoly) -> Result<(BigUint, IntPoly), PolyError> {
    if g.is_zero() {
        return Err(PolyError::ZeroPolynomial);
    }
    let d = g.denominator_lcm();
    let d2 = BigRational::from_integer(&d * &d);
    let f = g
        .scale(&d2)
        .to_int()
        .expect("scaling by the squared denominator lcm must be integral");
    Ok((d.abs().to_biguint().unwrap(), f))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigInt;

    fn rat(n: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(n))
    }

    fn ratq(n: i64, d: i64) -> BigRational {
        BigRational::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn three_point_example() {
        // nodes 2,3,4 with values 2,3,6 give X^2 - 4X + 6
        let pts = vec![(rat(2), rat(2)), (rat(3), rat(3)), (rat(4), rat(6))];
        let g = lagrange_interpolate(&pts).unwrap();
        assert_eq!(g, IntPoly::from_i64(&[6, -4, 1]).to_rat());
        for (x, y) in &pts {
            assert_eq!(g.eval(x), *y);
        }
    }

    #[test]
    fn degenerate_cases() {
        let g = lagrange_interpolate(&[(rat(1), rat(5))]).unwrap();
        assert_eq!(g, RatPoly::constant(rat(5)));
        let h = lagrange_interpolate(&[(rat(0), rat(1)), (rat(1), rat(0))]).unwrap();
        assert_eq!(h, IntPoly::from_i64(&[1, -1]).to_rat());
        assert!(matches!(
            lagrange_interpolate(&[(rat(2), rat(1)), (rat(2), rat(3))]),
            Err(PolyError::NonDistinctNodes(_))
        ));
        assert!(lagrange_interpolate(&[]).is_err());
    }

    #[test]
    fn clearing_examples() {
        let (d, f) = clear_denominators(&IntPoly::from_i64(&[6, -4, 1]).to_rat()).unwrap();
        assert_eq!(d, BigUint::from(1u32));
        assert_eq!(f, IntPoly::from_i64(&[6, -4, 1]));

        // (1/2)X + 1 -> d = 2, f = 2X + 4
        let g = RatPoly::from_coeffs(vec![rat(1), ratq(1, 2)]);
        let (d, f) = clear_denominators(&g).unwrap();
        assert_eq!(d, BigUint::from(2u32));
        assert_eq!(f, IntPoly::from_i64(&[4, 2]));

        // (1/2)X^2 + 1/3 -> d = 6, f = 18X^2 + 12
        let g = RatPoly::from_coeffs(vec![ratq(1, 3), rat(0), ratq(1, 2)]);
        let (d, f) = clear_denominators(&g).unwrap();
        assert_eq!(d, BigUint::from(6u32));
        assert_eq!(f, IntPoly::from_i64(&[12, 0, 18]));

        assert!(clear_denominators(&RatPoly::zero()).is_err());
    }

    #[test]
    fn clearing_preserves_scaled_products() {
        // f(x) = d^2 g(x) pointwise
        let g = RatPoly::from_coeffs(vec![ratq(2, 3), ratq(-1, 4), ratq(5, 6)]);
        let (d, f) = clear_denominators(&g).unwrap();
        let d2 = rat(d.to_string().parse::<i64>().unwrap()).pow(2);
        for x in [-3i64, 0, 1, 7] {
            assert_eq!(f.eval(&rat(x)), g.eval(&rat(x)) * &d2);
        }
    }
}

//! Exact dense polynomial arithmetic over the integers and rationals.
//!
//! Coefficients are stored ascending (constant term first) with trailing
//! zeros trimmed, so the zero polynomial is the empty coefficient list. The
//! text format used by every external surface mirrors the storage order:
//! `"-1,-1,1"` is X² − X − 1, and rational entries are written `p/q`.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use thiserror::Error;

mod checks;
mod interp;
mod squarefree;

pub use checks::{
    check_theorem_hypotheses, compose_scaled_power, satisfies_scaling_identity, HypothesisReport,
};
pub use interp::{clear_denominators, lagrange_interpolate};
pub use squarefree::{
    odd_multiplicity_root_count, odd_multiplicity_root_count_rat, yun_squarefree,
    SquarefreeDecomposition,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("operation is undefined for the zero polynomial")]
    ZeroPolynomial,
    #[error("interpolation nodes must be pairwise distinct (node {0} repeats)")]
    NonDistinctNodes(String),
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("could not parse polynomial coefficient {0:?}")]
    ParseCoefficient(String),
}

/// Dense polynomial with arbitrary-precision integer coefficients.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct IntPoly {
    coeffs: Vec<BigInt>,
}

impl IntPoly {
    pub fn zero() -> Self {
        IntPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigInt) -> Self {
        Self::from_coeffs(vec![c])
    }

    /// Build from ascending coefficients, trimming trailing zeros.
    pub fn from_coeffs(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        IntPoly { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// Parse the ascending comma-separated coefficient format.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let mut coeffs = Vec::new();
        for item in text.split(',') {
            let item = item.trim();
            let c: BigInt = item
                .parse()
                .map_err(|_| PolyError::ParseCoefficient(item.to_string()))?;
            coeffs.push(c);
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation at an integer point.
    pub fn eval_int(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    /// Exact Horner evaluation at a rational point.
    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from_integer(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> IntPoly {
        if self.coeffs.len() <= 1 {
            return IntPoly::zero();
        }
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c * BigInt::from(i))
            .collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn add(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &IntPoly) -> IntPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        IntPoly::from_coeffs(coeffs)
    }

    pub fn neg(&self) -> IntPoly {
        IntPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &IntPoly) -> IntPoly {
        if self.is_zero() || other.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        IntPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigInt) -> IntPoly {
        if c.is_zero() {
            return IntPoly::zero();
        }
        IntPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// `c * X^k * self`, used by the pseudo-division loop.
    pub(crate) fn mul_monomial(&self, c: &BigInt, k: usize) -> IntPoly {
        if self.is_zero() || c.is_zero() {
            return IntPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); k];
        coeffs.extend(self.coeffs.iter().map(|a| a * c));
        IntPoly::from_coeffs(coeffs)
    }

    pub fn pow(&self, e: u32) -> IntPoly {
        let mut acc = IntPoly::constant(BigInt::one());
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Split into `content * primitive`, where the primitive part has
    /// coprime coefficients and a positive leading coefficient; the content
    /// carries the sign. The zero polynomial yields `(0, 0)`.
    pub fn content_and_primitive(&self) -> (BigInt, IntPoly) {
        if self.is_zero() {
            return (BigInt::zero(), IntPoly::zero());
        }
        let mut content = BigInt::zero();
        for c in &self.coeffs {
            content = content.gcd(c);
        }
        if self.leading().unwrap().is_negative() {
            content = -content;
        }
        let prim = IntPoly {
            coeffs: self.coeffs.iter().map(|c| c / &content).collect(),
        };
        (content, prim)
    }

    pub fn primitive_part(&self) -> IntPoly {
        self.content_and_primitive().1
    }

    pub fn to_rat(&self) -> RatPoly {
        RatPoly {
            coeffs: self
                .coeffs
                .iter()
                .map(|c| BigRational::from_integer(c.clone()))
                .collect(),
        }
    }
}

impl fmt::Display for IntPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(|c| c.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Dense polynomial with exact rational coefficients in lowest terms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RatPoly {
    coeffs: Vec<BigRational>,
}

impl RatPoly {
    pub fn zero() -> Self {
        RatPoly { coeffs: vec![] }
    }

    pub fn constant(c: BigRational) -> Self {
        Self::from_coeffs(vec![c])
    }

    pub fn from_coeffs(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().map_or(false, |c| c.is_zero()) {
            coeffs.pop();
        }
        RatPoly { coeffs }
    }

    /// Parse ascending comma-separated coefficients, each an integer or a
    /// fraction `p/q`.
    pub fn parse(text: &str) -> Result<Self, PolyError> {
        let mut coeffs = Vec::new();
        for item in text.split(',') {
            let item = item.trim();
            coeffs.push(parse_rational(item)?);
        }
        Ok(Self::from_coeffs(coeffs))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_constant(&self) -> bool {
        self.coeffs.len() <= 1
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs
            .get(i)
            .cloned()
            .unwrap_or_else(BigRational::zero)
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn leading(&self) -> Option<&BigRational> {
        self.coeffs.last()
    }

    pub fn eval(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn add(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + other.coeff(i)).collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn sub(&self, other: &RatPoly) -> RatPoly {
        let n = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - other.coeff(i)).collect();
        RatPoly::from_coeffs(coeffs)
    }

    pub fn mul(&self, other: &RatPoly) -> RatPoly {
        if self.is_zero() || other.is_zero() {
            return RatPoly::zero();
        }
        let mut coeffs = vec![BigRational::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        RatPoly::from_coeffs(coeffs)
    }

    pub fn scale(&self, c: &BigRational) -> RatPoly {
        if c.is_zero() {
            return RatPoly::zero();
        }
        RatPoly {
            coeffs: self.coeffs.iter().map(|a| a * c).collect(),
        }
    }

    /// Least common multiple of the coefficient denominators (positive).
    pub fn denominator_lcm(&self) -> BigInt {
        let mut lcm = BigInt::one();
        for c in &self.coeffs {
            lcm = lcm.lcm(c.denom());
        }
        lcm.abs()
    }

    /// Convert to an integer polynomial when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntPoly> {
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for c in &self.coeffs {
            if !c.is_integer() {
                return None;
            }
            coeffs.push(c.numer().clone());
        }
        Some(IntPoly::from_coeffs(coeffs))
    }
}

impl fmt::Display for RatPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self.coeffs.iter().map(format_rational).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// Parse `"p/q"` or a plain integer into an exact rational.
pub fn parse_rational(item: &str) -> Result<BigRational, PolyError> {
    let bad = || PolyError::ParseCoefficient(item.to_string());
    if let Some((num, den)) = item.split_once('/') {
        let n: BigInt = num.trim().parse().map_err(|_| bad())?;
        let d: BigInt = den.trim().parse().map_err(|_| bad())?;
        if d.is_zero() {
            return Err(bad());
        }
        Ok(BigRational::new(n, d))
    } else {
        let n: BigInt = item.parse().map_err(|_| bad())?;
        Ok(BigRational::from_integer(n))
    }
}

/// Render a rational as `p` or `p/q` in lowest terms.
pub fn format_rational(r: &BigRational) -> String {
    if r.is_integer() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Convenience constructor for a positive big rational from unsigned parts.
pub fn big_ratio(n: &BigUint, d: &BigUint) -> BigRational {
    BigRational::new(
        BigInt::from_biguint(num_bigint::Sign::Plus, n.clone()),
        BigInt::from_biguint(num_bigint::Sign::Plus, d.clone()),
    )
}

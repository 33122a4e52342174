//! Exact arithmetic of S-smooth positive integers.
//!
//! A prime set `S = {p_1, …, p_h}` fixes a multiplicative universe: the
//! positive integers whose prime factors all lie in `S`. This module provides
//! the validated [`PrimeSet`], the exponent-vector representation [`SUnit`]
//! of such integers, ordered enumeration up to a bound, a valuation-based gcd
//! that reproduces the Euclidean gcd prime-by-prime, and logarithmic heights.
//!
//! Signed exponent vectors ([`ExpVector`]) and the rational values they
//! denote ([`SRational`]) appear as derived data in the dependence and family
//! machinery; they are never enumeration targets.

use crate::factorint;
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};
use std::cmp::Ordering;
use std::collections::BinaryHeap;
use std::fmt;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SunitError {
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("{n} is not smooth over the prime set")]
    NotSmooth { n: BigUint },
    #[error("prime set must not be empty")]
    EmptyPrimeSet,
    #[error("{0} is not prime")]
    NotPrime(u64),
    #[error("prime {0} is duplicated or out of order")]
    NotAscending(u64),
    #[error("could not parse prime entry {0:?} (primes above 2^64 are rejected)")]
    ParsePrime(String),
}

/// A validated, strictly ascending set of distinct primes.
///
/// Members are capped at 64 bits so that a proven-deterministic primality
/// test can validate them; that comfortably covers desk-scale prime sets.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimeSet {
    primes: Vec<u64>,
}

impl PrimeSet {
    pub fn new(primes: Vec<u64>) -> Result<Self, SunitError> {
        if primes.is_empty() {
            return Err(SunitError::EmptyPrimeSet);
        }
        let mut last = 0u64;
        for &p in &primes {
            if !factorint::is_prime_u64(p) {
                return Err(SunitError::NotPrime(p));
            }
            if p <= last {
                return Err(SunitError::NotAscending(p));
            }
            last = p;
        }
        Ok(PrimeSet { primes })
    }

    /// Parse a comma-separated list such as `"2,3,193"`.
    pub fn parse(csv: &str) -> Result<Self, SunitError> {
        let mut primes = Vec::new();
        for item in csv.split(',') {
            let item = item.trim();
            if item.is_empty() {
                continue;
            }
            let p: u64 = item
                .parse()
                .map_err(|_| SunitError::ParsePrime(item.to_string()))?;
            primes.push(p);
        }
        Self::new(primes)
    }

    /// Parse file-style input with one prime per line. Blank lines are
    /// skipped; duplicates and non-primes are hard errors.
    pub fn parse_lines(text: &str) -> Result<Self, SunitError> {
        let mut primes = Vec::new();
        for line in text.lines() {
            let line = line.trim();
            if line.is_empty() {
                continue;
            }
            let p: u64 = line
                .parse()
                .map_err(|_| SunitError::ParsePrime(line.to_string()))?;
            primes.push(p);
        }
        Self::new(primes)
    }

    /// Cardinality h = |S|.
    pub fn len(&self) -> usize {
        self.primes.len()
    }

    pub fn is_empty(&self) -> bool {
        false // the constructor rejects empty sets
    }

    pub fn primes(&self) -> &[u64] {
        &self.primes
    }

    pub fn prime(&self, i: usize) -> u64 {
        self.primes[i]
    }

    pub fn index_of(&self, p: u64) -> Option<usize> {
        self.primes.binary_search(&p).ok()
    }
}

impl fmt::Display for PrimeSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.primes.iter().map(|p| p.to_string()).collect();
        write!(f, "{}", parts.join(","))
    }
}

/// A positive S-smooth integer: a non-negative exponent per prime of the
/// governing set, with the exact product cached.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SUnit {
    exponents: Vec<u32>,
    value: BigUint,
}

impl SUnit {
    /// The S-unit 1 (all exponents zero) over a set of cardinality `h`.
    pub fn one(h: usize) -> Self {
        SUnit {
            exponents: vec![0; h],
            value: BigUint::one(),
        }
    }

    pub fn from_exponents(s: &PrimeSet, exponents: Vec<u32>) -> Self {
        assert_eq!(exponents.len(), s.len(), "exponent vector length mismatch");
        let mut value = BigUint::one();
        for (i, &e) in exponents.iter().enumerate() {
            value *= BigUint::from(s.prime(i)).pow(e);
        }
        SUnit { exponents, value }
    }

    pub fn value(&self) -> &BigUint {
        &self.value
    }

    pub fn exponents(&self) -> &[u32] {
        &self.exponents
    }

    pub fn is_one(&self) -> bool {
        self.value.is_one()
    }

    /// Product of two S-units over the same prime set.
    pub fn mul(&self, other: &SUnit) -> SUnit {
        assert_eq!(self.exponents.len(), other.exponents.len());
        let exps = self
            .exponents
            .iter()
            .zip(&other.exponents)
            .map(|(a, b)| a + b)
            .collect();
        SUnit {
            exponents: exps,
            value: &self.value * &other.value,
        }
    }

    /// Logarithmic Weil height, `log(value)`.
    pub fn weil_height(&self) -> f64 {
        ln_big(&self.value)
    }

    /// The signed view of this unit's exponent vector.
    pub fn exp_vector(&self) -> ExpVector {
        ExpVector::new(self.exponents.iter().map(|&e| e as i64).collect())
    }
}

impl fmt::Display for SUnit {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Natural logarithm of an arbitrary-precision positive integer.
///
/// Accurate to full double precision regardless of magnitude: the top 64
/// bits supply the mantissa, the bit length supplies the exponent.
pub fn ln_big(n: &BigUint) -> f64 {
    assert!(!n.is_zero(), "ln of zero");
    let bits = n.bits();
    if bits <= 64 {
        return (n.to_u64().unwrap() as f64).ln();
    }
    let shift = bits - 64;
    let top = (n >> shift).to_u64().unwrap();
    (top as f64).ln() + shift as f64 * std::f64::consts::LN_2
}

/// Logarithmic Weil height of a positive S-smooth integer.
pub fn weil_height(u: &SUnit) -> f64 {
    u.weil_height()
}

/// Factor `n` over `S` by trial division, returning its exponent vector.
///
/// Fails with [`SunitError::NotSmooth`] when a cofactor outside `S` remains
/// and [`SunitError::InvalidInput`] when `n` is zero.
pub fn factor_smooth(n: &BigUint, s: &PrimeSet) -> Result<SUnit, SunitError> {
    if n.is_zero() {
        return Err(SunitError::InvalidInput("n must be positive".into()));
    }
    let mut rest = n.clone();
    let mut exponents = vec![0u32; s.len()];
    for (i, &p) in s.primes().iter().enumerate() {
        let bp = BigUint::from(p);
        while (&rest % &bp).is_zero() {
            rest /= &bp;
            exponents[i] += 1;
        }
    }
    if !rest.is_one() {
        return Err(SunitError::NotSmooth { n: n.clone() });
    }
    Ok(SUnit {
        exponents,
        value: n.clone(),
    })
}

/// Heap entry for the merge-frontier enumeration; ordered ascending by value.
struct Frontier {
    value: BigUint,
    exponents: Vec<u32>,
    min_prime_idx: usize,
}

impl PartialEq for Frontier {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value
    }
}
impl Eq for Frontier {}
impl PartialOrd for Frontier {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Frontier {
    fn cmp(&self, other: &Self) -> Ordering {
        // reversed: BinaryHeap is a max-heap, we want the smallest value first
        other.value.cmp(&self.value)
    }
}

/// Ascending stream of S-smooth integers, optionally capped at a bound.
///
/// This is the h-way merge over frontier multiples: each popped value is
/// extended only by primes at or after the largest prime already used, so
/// every smooth number is generated exactly once. Memory stays proportional
/// to the frontier.
pub struct SmoothStream<'a> {
    primes: &'a PrimeSet,
    heap: BinaryHeap<Frontier>,
    bound: Option<BigUint>,
}

impl<'a> SmoothStream<'a> {
    pub fn new(primes: &'a PrimeSet, bound: Option<BigUint>) -> Self {
        let mut heap = BinaryHeap::new();
        let one = Frontier {
            value: BigUint::one(),
            exponents: vec![0; primes.len()],
            min_prime_idx: 0,
        };
        let in_bound = match &bound {
            Some(b) => !b.is_zero(),
            None => true,
        };
        if in_bound {
            heap.push(one);
        }
        SmoothStream {
            primes,
            heap,
            bound,
        }
    }
}

impl Iterator for SmoothStream<'_> {
    type Item = SUnit;

    fn next(&mut self) -> Option<SUnit> {
        let top = self.heap.pop()?;
        for i in top.min_prime_idx..self.primes.len() {
            let value = &top.value * BigUint::from(self.primes.prime(i));
            if let Some(b) = &self.bound {
                if &value > b {
                    continue;
                }
            }
            let mut exponents = top.exponents.clone();
            exponents[i] += 1;
            self.heap.push(Frontier {
                value,
                exponents,
                min_prime_idx: i,
            });
        }
        Some(SUnit {
            exponents: top.exponents,
            value: top.value,
        })
    }
}

/// Exactly the S-smooth integers in `[1, bound]`, strictly ascending.
pub fn enumerate_smooth(s: &PrimeSet, bound: &BigUint) -> Vec<SUnit> {
    SmoothStream::new(s, Some(bound.clone())).collect()
}

/// gcd computed from prime valuations: `∏ p^{min(v_p(A), v_p(B))}` over the
/// primes dividing the common part. Always equal to the Euclidean gcd; the
/// point of this routine is to realize the gcd through valuations rather
/// than through the remainder chain.
pub fn gcd_via_valuations(a: &BigUint, b: &BigUint) -> Result<BigUint, SunitError> {
    if a.is_zero() || b.is_zero() {
        return Err(SunitError::InvalidInput(
            "gcd_via_valuations requires positive inputs".into(),
        ));
    }
    // only primes dividing the common part can contribute a positive minimum,
    // so the factorization burden is the (typically small) Euclidean gcd
    let common = a.gcd(b);
    let mut out = BigUint::one();
    for (p, _) in factorint::factorize(&common) {
        let va = valuation(a, &p);
        let vb = valuation(b, &p);
        out *= p.pow(va.min(vb));
    }
    Ok(out)
}

/// p-adic valuation v_p(n) of a positive integer.
pub fn valuation(n: &BigUint, p: &BigUint) -> u32 {
    let mut rest = n.clone();
    let mut v = 0;
    while (&rest % p).is_zero() {
        rest /= p;
        v += 1;
    }
    v
}

/// A signed exponent vector over the governing prime set; the additive form
/// of quantities such as ρ, η, and g that may carry negative exponents.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpVector(Vec<i64>);

impl ExpVector {
    pub fn new(entries: Vec<i64>) -> Self {
        ExpVector(entries)
    }

    pub fn zeros(h: usize) -> Self {
        ExpVector(vec![0; h])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn entry(&self, i: usize) -> i64 {
        self.0[i]
    }

    pub fn add(&self, other: &ExpVector) -> ExpVector {
        assert_eq!(self.len(), other.len());
        ExpVector(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn sub(&self, other: &ExpVector) -> ExpVector {
        assert_eq!(self.len(), other.len());
        ExpVector(self.0.iter().zip(&other.0).map(|(a, b)| a - b).collect())
    }

    pub fn scale(&self, c: i64) -> ExpVector {
        ExpVector(self.0.iter().map(|a| a * c).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

/// An exact positive rational of the form `∏ p_i^{e_i}` with signed
/// exponents over the governing prime set.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SRational {
    exponents: ExpVector,
    value: BigRational,
}

impl SRational {
    pub fn from_exponents(s: &PrimeSet, exponents: ExpVector) -> Self {
        assert_eq!(exponents.len(), s.len(), "exponent vector length mismatch");
        let mut numer = BigUint::one();
        let mut denom = BigUint::one();
        for (i, &e) in exponents.entries().iter().enumerate() {
            let p = BigUint::from(s.prime(i));
            match e.cmp(&0) {
                Ordering::Greater => numer *= p.pow(e as u32),
                Ordering::Less => denom *= p.pow((-e) as u32),
                Ordering::Equal => {}
            }
        }
        let value = BigRational::new(
            BigInt::from_biguint(num_bigint::Sign::Plus, numer),
            BigInt::from_biguint(num_bigint::Sign::Plus, denom),
        );
        SRational { exponents, value }
    }

    /// Factor an arbitrary positive rational over `S`; fails when numerator
    /// or denominator has a prime factor outside the set.
    pub fn from_rational(s: &PrimeSet, r: &BigRational) -> Result<Self, SunitError> {
        if !r.is_positive() {
            return Err(SunitError::InvalidInput(
                "S-rational values must be positive".into(),
            ));
        }
        let numer = factor_smooth(&r.numer().to_biguint().unwrap(), s)?;
        let denom = factor_smooth(&r.denom().to_biguint().unwrap(), s)?;
        let exps = numer.exp_vector().sub(&denom.exp_vector());
        Ok(Self::from_exponents(s, exps))
    }

    pub fn one(h: usize) -> Self {
        SRational {
            exponents: ExpVector::zeros(h),
            value: BigRational::one(),
        }
    }

    pub fn value(&self) -> &BigRational {
        &self.value
    }

    pub fn exponents(&self) -> &ExpVector {
        &self.exponents
    }
}

impl fmt::Display for SRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.value.is_integer() {
            write!(f, "{}", self.value.numer())
        } else {
            write!(f, "{}/{}", self.value.numer(), self.value.denom())
        }
    }
}

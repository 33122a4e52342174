//! Search for and verify generalized S-Diophantine n-tuples: ascending
//! positive integers whose pairwise products are values of a fixed integer
//! polynomial at positive S-smooth arguments. The classical notion (all
//! pairwise products plus one smooth) is the special case f(X) = X − 1.

mod pairs;
mod tuples;

pub use pairs::{pairs_from_values_mode, PairHit};
pub use tuples::search_tuples_mode;

use crate::par::ExecMode;
use crate::polyarith::IntPoly;
use crate::sunit::{PrimeSet, SUnit};
use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, Zero};
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum SearchError {
    #[error("constant polynomials admit no meaningful search")]
    ConstantPolynomial,
    #[error("invalid input: {0}")]
    InvalidInput(String),
    #[error("precondition violated: {0}")]
    PreconditionViolated(String),
}

/// Why a candidate tuple failed verification.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum FailureReason {
    /// No positive S-smooth s with f(s) equal to the pair product exists.
    NoSUnitPreimage,
}

/// The first failing pair of a rejected tuple; indices are zero-based
/// positions into the input values.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VerifyFailure {
    pub i: usize,
    pub j: usize,
    pub a: BigUint,
    pub b: BigUint,
    pub reason: FailureReason,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum VerifyError {
    #[error("pair ({i}, {j}) with product {a}·{b} has no S-unit preimage", i = .0.i + 1, j = .0.j + 1, a = .0.a, b = .0.b)]
    Failure(VerifyFailure),
    #[error("invalid input: {0}")]
    InvalidInput(String),
}

/// A witness entry: the pair product `values[i]·values[j]` equals
/// `f(s.value())` exactly.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub i: usize,
    pub j: usize,
    pub s: SUnit,
}

/// A verified tuple with its full upper-triangular witness matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TupleRecord {
    pub values: Vec<BigUint>,
    pub witnesses: Vec<Witness>,
    pub prime_set: PrimeSet,
    pub poly: IntPoly,
}

impl TupleRecord {
    pub fn witness(&self, i: usize, j: usize) -> Option<&SUnit> {
        self.witnesses
            .iter()
            .find(|w| (w.i, w.j) == (i, j) || (w.i, w.j) == (j, i))
            .map(|w| &w.s)
    }
}

/// Search configuration: `bound` caps the largest tuple entry, `strict`
/// requires strictly increasing values, `exclude_trivial` drops tuples with
/// two or more entries equal to 1.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub bound: BigUint,
    pub n: usize,
    pub strict: bool,
    pub exclude_trivial: bool,
}

/// [`search_tuples_mode`] with the default execution mode.
pub fn search_tuples(
    s: &PrimeSet,
    f: &IntPoly,
    cfg: &SearchConfig,
) -> Result<Vec<TupleRecord>, SearchError> {
    search_tuples_mode(s, f, cfg, ExecMode::default())
}

/// [`pairs_from_values_mode`] with the default execution mode.
pub fn pairs_from_values(
    s: &PrimeSet,
    f: &IntPoly,
    bound: &BigUint,
) -> Result<Vec<PairHit>, SearchError> {
    pairs_from_values_mode(s, f, bound, ExecMode::default())
}

/// Verify a candidate tuple: for every pair, find the smallest positive
/// S-smooth s with `f(s)` equal to the pair product, or report the first
/// failing pair. Values must be positive and non-decreasing.
pub fn verify_tuple_mode(
    values: &[BigUint],
    s: &PrimeSet,
    f: &IntPoly,
    mode: ExecMode,
) -> Result<TupleRecord, VerifyError> {
    if values.is_empty() {
        return Err(VerifyError::InvalidInput("tuple must be non-empty".into()));
    }
    if values.iter().any(|v| v.is_zero()) {
        return Err(VerifyError::InvalidInput("values must be positive".into()));
    }
    if values.windows(2).any(|w| w[0] > w[1]) {
        return Err(VerifyError::InvalidInput(
            "values must be non-decreasing".into(),
        ));
    }
    if f.is_zero() {
        return Err(VerifyError::InvalidInput("polynomial must be non-zero".into()));
    }

    let mut index_pairs = Vec::new();
    for i in 0..values.len() {
        for j in (i + 1)..values.len() {
            index_pairs.push((i, j));
        }
    }

    let witnesses: Vec<Option<SUnit>> = if f.is_constant() {
        // f(s) is the same for every s; the only possible witness is s = 1
        let c = f.coeff(0);
        index_pairs
            .iter()
            .map(|&(i, j)| {
                let product = BigInt::from(&values[i] * &values[j]);
                (product == c).then(|| SUnit::one(s.len()))
            })
            .collect()
    } else {
        let low = pairs::LowRegion::build(s, f);
        crate::par::map_items(mode, &index_pairs, |&(i, j)| {
            let product = BigInt::from(&values[i] * &values[j]);
            pairs::find_witness(s, f, &low, &product)
        })
    };

    let mut found = Vec::with_capacity(index_pairs.len());
    for (&(i, j), witness) in index_pairs.iter().zip(witnesses) {
        match witness {
            Some(unit) => found.push(Witness { i, j, s: unit }),
            None => {
                return Err(VerifyError::Failure(VerifyFailure {
                    i,
                    j,
                    a: values[i].clone(),
                    b: values[j].clone(),
                    reason: FailureReason::NoSUnitPreimage,
                }))
            }
        }
    }
    Ok(TupleRecord {
        values: values.to_vec(),
        witnesses: found,
        prime_set: s.clone(),
        poly: f.clone(),
    })
}

/// [`verify_tuple_mode`] with the default execution mode.
pub fn verify_tuple(
    values: &[BigUint],
    s: &PrimeSet,
    f: &IntPoly,
) -> Result<TupleRecord, VerifyError> {
    verify_tuple_mode(values, s, f, ExecMode::default())
}

/// Consistency probe for the single-prime argument: given a tuple with
/// `ab+1 = q^k`, `ac+1 = q^m`, `bc+1 = q^n` and `k ≤ m ≤ n`, the identity
/// `b − a = b·q^m − a·q^n` and the divisibility `(ab+1) | (b − a)` must both
/// hold; together they force a = b.
pub fn single_prime_identity_check(
    a: &BigUint,
    b: &BigUint,
    c: &BigUint,
    q: &BigUint,
    k: u32,
    m: u32,
    n: u32,
) -> Result<bool, SearchError> {
    if a.is_zero() || b.is_zero() || c.is_zero() {
        return Err(SearchError::InvalidInput("values must be positive".into()));
    }
    if q < &BigUint::from(2u32) {
        return Err(SearchError::InvalidInput("q must be at least 2".into()));
    }
    if k == 0 || m == 0 || n == 0 || !(k <= m && m <= n) {
        return Err(SearchError::PreconditionViolated(
            "exponents must satisfy 1 ≤ k ≤ m ≤ n".into(),
        ));
    }
    let one = BigUint::one();
    if a * b + &one != q.pow(k) || a * c + &one != q.pow(m) || b * c + &one != q.pow(n) {
        return Err(SearchError::PreconditionViolated(
            "power equations ab+1 = q^k, ac+1 = q^m, bc+1 = q^n do not hold".into(),
        ));
    }
    let (a, b) = (BigInt::from(a.clone()), BigInt::from(b.clone()));
    let q = BigInt::from(q.clone());
    let lhs = &b - &a;
    let rhs = &b * q.pow(m) - &a * q.pow(n);
    let identity = lhs == rhs;
    let modulus = &a * &b + BigInt::one();
    let divisible = lhs.is_multiple_of(&modulus);
    Ok(identity && divisible)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    fn bigs(values: &[u64]) -> Vec<BigUint> {
        values.iter().map(|&v| big(v)).collect()
    }

    fn set(primes: &[u64]) -> PrimeSet {
        PrimeSet::new(primes.to_vec()).unwrap()
    }

    #[test]
    fn verify_quadratic_example() {
        let s = set(&[2, 3]);
        let f = IntPoly::from_i64(&[-1, -1, 1]);
        let record = verify_tuple(&bigs(&[1, 5, 11]), &s, &f).unwrap();
        let witness_values: Vec<u64> = record
            .witnesses
            .iter()
            .map(|w| {
                use num_traits::ToPrimitive;
                w.s.value().to_u64().unwrap()
            })
            .collect();
        assert_eq!(witness_values, vec![3, 4, 8]);
    }

    #[test]
    fn verify_reports_first_failing_pair() {
        let s = set(&[2, 3]);
        let f = IntPoly::from_i64(&[-1, 1]);
        let err = verify_tuple(&bigs(&[1, 2, 4]), &s, &f).unwrap_err();
        match err {
            VerifyError::Failure(failure) => {
                assert_eq!((failure.i, failure.j), (0, 2));
                assert_eq!((failure.a, failure.b), (big(1), big(4)));
                assert_eq!(failure.reason, FailureReason::NoSUnitPreimage);
            }
            other => panic!("expected failure, got {other:?}"),
        }
    }

    #[test]
    fn verify_input_validation() {
        let s = set(&[2, 3]);
        let f = IntPoly::from_i64(&[-1, 1]);
        assert!(matches!(
            verify_tuple(&[], &s, &f),
            Err(VerifyError::InvalidInput(_))
        ));
        assert!(matches!(
            verify_tuple(&bigs(&[2, 1]), &s, &f),
            Err(VerifyError::InvalidInput(_))
        ));
        assert!(matches!(
            verify_tuple(&[BigUint::zero()], &s, &f),
            Err(VerifyError::InvalidInput(_))
        ));
    }

    #[test]
    fn verify_constant_polynomial() {
        let s = set(&[2, 3]);
        let f = IntPoly::from_i64(&[6]);
        // 2*3 = 6 = f(anything); witness is canonically 1
        let record = verify_tuple(&bigs(&[2, 3]), &s, &f).unwrap();
        assert!(record.witnesses[0].s.is_one());
        assert!(verify_tuple(&bigs(&[2, 4]), &s, &f).is_err());
    }

    #[test]
    fn verify_six_tuple() {
        let s = set(&[
            2, 3, 5, 13, 19, 83, 103, 151, 163, 193, 199, 229, 283, 439, 463, 1019, 1453, 8629,
        ]);
        let f = IntPoly::from_i64(&[-2_985_984, 1]);
        let record = verify_tuple(
            &bigs(&[99, 315, 9920, 32768, 44460, 19_534_284]),
            &s,
            &f,
        )
        .unwrap();
        assert_eq!(record.witnesses.len(), 15);
        for w in &record.witnesses {
            let product = &record.values[w.i] * &record.values[w.j];
            assert_eq!(
                BigInt::from(product),
                f.eval_int(&BigInt::from(w.s.value().clone()))
            );
        }
    }

    #[test]
    fn single_prime_probe_trivial_cases() {
        assert!(single_prime_identity_check(
            &big(1),
            &big(1),
            &big(3),
            &big(2),
            1,
            2,
            2
        )
        .unwrap());
        assert!(single_prime_identity_check(
            &big(1),
            &big(1),
            &big(7),
            &big(2),
            1,
            3,
            3
        )
        .unwrap());
    }

    #[test]
    fn single_prime_probe_rejects_bad_preconditions() {
        assert!(matches!(
            single_prime_identity_check(&big(1), &big(2), &big(3), &big(2), 1, 2, 3),
            Err(SearchError::PreconditionViolated(_))
        ));
        assert!(matches!(
            single_prime_identity_check(&big(1), &big(1), &big(3), &big(2), 2, 1, 2),
            Err(SearchError::PreconditionViolated(_))
        ));
        assert!(matches!(
            single_prime_identity_check(&big(1), &big(1), &big(3), &big(1), 1, 2, 2),
            Err(SearchError::InvalidInput(_))
        ));
    }

    #[test]
    fn single_prime_probe_vacuity_scan() {
        // exhaustive scan for strict a < b inputs satisfying the power
        // preconditions; desk-scale cap: q^k - 1 is factored only while
        // q^k stays below 10^10
        let cap = BigUint::from(10_000_000_000u64);
        for q in 2u64..=100 {
            let bq = big(q);
            for k in 1u32..=20 {
                let qk = bq.pow(k);
                if qk > cap {
                    break;
                }
                let ab = &qk - BigUint::one();
                for a in crate::factorint::divisors(&ab) {
                    let b = &ab / &a;
                    if a >= b {
                        continue; // strict a < b only
                    }
                    for m in k..=20 {
                        let qm = bq.pow(m);
                        let ac = &qm - BigUint::one();
                        if !(&ac % &a).is_zero() {
                            continue;
                        }
                        let c = &ac / &a;
                        if c < b {
                            continue;
                        }
                        for n in m..=20 {
                            if &b * &c + BigUint::one() == bq.pow(n) {
                                panic!(
                                    "found strict single-prime triple ({a},{b},{c}) with q={q}"
                                );
                            }
                        }
                    }
                }
            }
        }
    }
}

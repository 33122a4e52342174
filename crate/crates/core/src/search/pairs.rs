//! Witness-space scanning: find the S-unit preimages of pair products under
//! f, and stream all products f(s) up to a bound together with their divisor
//! pairs.
//!
//! The scan never touches floating point. A Cauchy bound on the derivative's
//! roots yields an integer threshold beyond which f is strictly monotone;
//! below the threshold S-units are scanned directly, beyond it the unique
//! integer solution of f(s) = P is located by binary search and then tested
//! for smoothness.

use super::SearchError;
use crate::factorint;
use crate::par::{map_reduce, ExecMode};
use crate::polyarith::IntPoly;
use crate::sunit::{factor_smooth, PrimeSet, SUnit, SmoothStream};
use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use std::collections::BTreeMap;

/// A pair `a ≤ b` whose product is `f(witness)` for an S-smooth witness.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PairHit {
    pub a: BigUint,
    pub b: BigUint,
    pub witness: SUnit,
}

/// Smallest integer `M ≥ 1` such that the derivative of `f` has no real
/// root in `[M, ∞)`, hence f is strictly monotone there. Uses the Cauchy
/// root bound on f′; exact integer arithmetic throughout.
///
/// `f` must be non-constant.
pub(crate) fn monotone_threshold(f: &IntPoly) -> BigUint {
    let deriv = f.derivative();
    let m = deriv
        .degree()
        .expect("monotone_threshold requires a non-constant polynomial");
    if m == 0 {
        return BigUint::one();
    }
    let lead = deriv.leading().unwrap().magnitude().clone();
    let mut max_low = BigUint::zero();
    for i in 0..m {
        let c = deriv.coeff(i).magnitude().clone();
        if c > max_low {
            max_low = c;
        }
    }
    // every root of f' satisfies |x| < 1 + max_low / lead
    let ceil = (&max_low + &lead - BigUint::one()) / &lead;
    BigUint::from(2u32) + ceil
}

fn is_increasing_tail(f: &IntPoly) -> bool {
    f.leading().map_or(false, |c| c.is_positive())
}

/// The S-units below the monotone threshold together with their f-values;
/// shared across pair lookups so the low region is enumerated once.
pub(crate) struct LowRegion {
    entries: Vec<(SUnit, BigInt)>,
    threshold: BigUint,
    increasing: bool,
}

impl LowRegion {
    pub(crate) fn build(s: &PrimeSet, f: &IntPoly) -> LowRegion {
        let threshold = monotone_threshold(f);
        let below = &threshold - BigUint::one();
        let entries = SmoothStream::new(s, Some(below))
            .map(|u| {
                let fs = f.eval_int(&BigInt::from(u.value().clone()));
                (u, fs)
            })
            .collect();
        LowRegion {
            entries,
            threshold,
            increasing: is_increasing_tail(f),
        }
    }
}

/// Smallest positive S-smooth `s` with `f(s) = target`, if any.
pub(crate) fn find_witness(
    s: &PrimeSet,
    f: &IntPoly,
    low: &LowRegion,
    target: &BigInt,
) -> Option<SUnit> {
    // ascending low-region scan: the first hit is the smallest witness
    for (u, fs) in &low.entries {
        if fs == target {
            return Some(u.clone());
        }
    }
    // monotone tail: at most one integer solution
    let root = solve_monotone(f, &low.threshold, low.increasing, target)?;
    factor_smooth(&root, s).ok()
}

/// Unique integer `s ≥ threshold` with `f(s) = target` on the monotone tail,
/// found by doubling plus binary search.
fn solve_monotone(
    f: &IntPoly,
    threshold: &BigUint,
    increasing: bool,
    target: &BigInt,
) -> Option<BigUint> {
    let eval = |s: &BigUint| f.eval_int(&BigInt::from(s.clone()));
    let at_threshold = eval(threshold);
    if increasing {
        if at_threshold > *target {
            return None;
        }
    } else if at_threshold < *target {
        return None;
    }
    let mut hi = threshold.clone();
    loop {
        let v = eval(&hi);
        let past = if increasing { v >= *target } else { v <= *target };
        if past {
            break;
        }
        hi *= 2u32;
    }
    let mut lo = threshold.clone();
    // first s where f(s) crosses the target
    while lo < hi {
        let mid = (&lo + &hi) >> 1;
        let v = eval(&mid);
        let crossed = if increasing { v >= *target } else { v <= *target };
        if crossed {
            hi = mid;
        } else {
            lo = &mid + BigUint::one();
        }
    }
    if eval(&lo) == *target {
        Some(lo)
    } else {
        None
    }
}

/// All pairs `a ≤ b ≤ bound` with `a·b = f(s)` for some positive S-smooth
/// `s`, keyed by the smallest such witness. The scan walks the witness
/// stream until f provably exceeds `bound²` (or drops below 1 for a
/// negative leading coefficient); factoring the surviving products is the
/// data-parallel part.
pub fn pairs_from_values_mode(
    s: &PrimeSet,
    f: &IntPoly,
    bound: &BigUint,
    mode: ExecMode,
) -> Result<Vec<PairHit>, SearchError> {
    if f.is_constant() {
        return Err(SearchError::ConstantPolynomial);
    }
    if bound.is_zero() {
        return Err(SearchError::InvalidInput("bound must be positive".into()));
    }
    let bound_sq = BigInt::from(bound * bound);
    let threshold = monotone_threshold(f);
    let increasing = is_increasing_tail(f);

    let mut candidates: Vec<(SUnit, BigInt)> = Vec::new();
    for u in SmoothStream::new(s, None) {
        let fs = f.eval_int(&BigInt::from(u.value().clone()));
        if u.value() >= &threshold {
            if increasing && fs > bound_sq {
                break;
            }
            if !increasing && fs < BigInt::one() {
                break;
            }
        }
        candidates.push((u, fs));
    }

    type PairMap = BTreeMap<(BigUint, BigUint), SUnit>;
    let merge = |mut acc: PairMap, other: PairMap| {
        for (key, witness) in other {
            acc.entry(key)
                .and_modify(|w| {
                    if witness.value() < w.value() {
                        *w = witness.clone();
                    }
                })
                .or_insert(witness);
        }
        acc
    };
    let per_candidate = |entry: &(SUnit, BigInt)| {
        let (u, fs) = entry;
        let mut hits = PairMap::new();
        if fs < &BigInt::one() || fs > &bound_sq {
            return hits; // low-region dips are skipped, not fatal
        }
        let product = fs.magnitude().clone();
        for d in factorint::divisors(&product) {
            if &d * &d > product {
                break;
            }
            let other = &product / &d;
            if &other <= bound {
                hits.insert((d, other), u.clone());
            }
        }
        hits
    };
    let map = map_reduce(mode, &candidates, per_candidate, PairMap::new, merge);
    Ok(map
        .into_iter()
        .map(|((a, b), witness)| PairHit { a, b, witness })
        .collect())
}

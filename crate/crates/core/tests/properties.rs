//! Property suites for the arithmetic core: enumeration vs. the division
//! oracle, the valuation gcd against Euclid, exact interpolation and
//! denominator clearing, Yun reconstruction, root-count invariances, and
//! dependence-detector completeness on synthetic families.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_rational::BigRational;
use proptest::prelude::*;
use sdioph::polyarith::{
    clear_denominators, compose_scaled_power, lagrange_interpolate,
    odd_multiplicity_root_count, satisfies_scaling_identity, yun_squarefree, IntPoly, RatPoly,
};
use sdioph::prooflab::{
    combine_dependences, detect_dependence, normalize_mod3, DependenceOutcome,
    DependenceRelation,
};
use sdioph::sunit::{
    enumerate_smooth, factor_smooth, gcd_via_valuations, ExpVector, PrimeSet, SRational, SUnit,
};

fn big(n: u64) -> BigUint {
    BigUint::from(n)
}

fn rat(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

/// Independent smoothness oracle: repeated division, no exponent vectors.
fn division_smooth(mut n: u64, primes: &[u64]) -> bool {
    for &p in primes {
        while n % p == 0 {
            n /= p;
        }
    }
    n == 1
}

fn small_prime_set() -> impl Strategy<Value = Vec<u64>> {
    proptest::sample::subsequence(vec![2u64, 3, 5, 7, 11, 13], 1..=3)
        .prop_filter("non-empty", |v| !v.is_empty())
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn factor_smooth_matches_division_oracle(n in 1u64..100_000, primes in small_prime_set()) {
        let s = PrimeSet::new(primes.clone()).unwrap();
        let by_division = division_smooth(n, &primes);
        let by_factor = factor_smooth(&big(n), &s).is_ok();
        prop_assert_eq!(by_factor, by_division);
    }

    #[test]
    fn enumeration_equals_filtered_range(bound in 1u64..3_000, primes in small_prime_set()) {
        let s = PrimeSet::new(primes.clone()).unwrap();
        let listed: Vec<u64> = enumerate_smooth(&s, &big(bound))
            .iter()
            .map(|u| u.value().try_into().unwrap())
            .collect();
        let expected: Vec<u64> = (1..=bound).filter(|&n| division_smooth(n, &primes)).collect();
        prop_assert_eq!(listed, expected);
    }

    #[test]
    fn valuation_gcd_equals_euclid(a in 1u64..1_000_000_000_000, b in 1u64..1_000_000_000_000) {
        let (a, b) = (big(a), big(b));
        prop_assert_eq!(gcd_via_valuations(&a, &b).unwrap(), a.gcd(&b));
    }

    #[test]
    fn weil_height_is_additive(e1 in proptest::collection::vec(0u32..8, 2), e2 in proptest::collection::vec(0u32..8, 2)) {
        let s = PrimeSet::new(vec![2, 3]).unwrap();
        let u = SUnit::from_exponents(&s, e1);
        let v = SUnit::from_exponents(&s, e2);
        let product = u.mul(&v);
        let lhs = product.weil_height();
        let rhs = u.weil_height() + v.weil_height();
        prop_assert!((lhs - rhs).abs() <= 1e-12 * rhs.abs().max(1.0));
        prop_assert!(u.value() <= product.value() || v.is_one());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn interpolation_roundtrip(
        nodes in proptest::collection::btree_set(-50i64..50, 1..6),
        seed_values in proptest::collection::vec(-100i64..100, 6),
    ) {
        let points: Vec<(BigRational, BigRational)> = nodes
            .iter()
            .zip(&seed_values)
            .map(|(&x, &y)| (rat(x), rat(y)))
            .collect();
        let g = lagrange_interpolate(&points).unwrap();
        prop_assert!(g.degree().map_or(true, |d| d < points.len()));
        for (x, y) in &points {
            prop_assert_eq!(g.eval(x), y.clone());
        }
    }

    #[test]
    fn denominator_clearing_contract(
        numers in proptest::collection::vec(-30i64..30, 1..5),
        denoms in proptest::collection::vec(1i64..12, 5),
        x in -20i64..20,
    ) {
        let coeffs: Vec<BigRational> = numers
            .iter()
            .zip(&denoms)
            .map(|(&n, &d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        let g = RatPoly::from_coeffs(coeffs);
        prop_assume!(!g.is_zero());
        let (d, f) = clear_denominators(&g).unwrap();
        let d2 = BigRational::from_integer(BigInt::from(d.clone())).pow(2);
        prop_assert_eq!(f.eval(&rat(x)), g.eval(&rat(x)) * d2);
        // d is the least common multiple of the denominators
        let mut lcm = BigInt::from(1);
        for c in g.coeffs() {
            lcm = lcm.lcm(c.denom());
        }
        prop_assert_eq!(BigInt::from(d), lcm);
    }
}

fn factor_pool() -> Vec<IntPoly> {
    vec![
        IntPoly::from_i64(&[1, 1]),
        IntPoly::from_i64(&[-1, 1]),
        IntPoly::from_i64(&[2, 1]),
        IntPoly::from_i64(&[-3, 1]),
        IntPoly::from_i64(&[1, 0, 1]),
        IntPoly::from_i64(&[-1, -1, 1]),
        IntPoly::from_i64(&[1, 1, 1]),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn yun_reconstructs_and_separates(
        picks in proptest::collection::vec((0usize..7, 1u32..4), 1..4),
        content in (-9i64..10).prop_filter("non-zero", |c| *c != 0),
    ) {
        let pool = factor_pool();
        let mut f = IntPoly::from_i64(&[content]);
        for &(idx, mult) in &picks {
            f = f.mul(&pool[idx].pow(mult));
        }
        let decomp = yun_squarefree(&f).unwrap();
        // exact reconstruction including the scalar content
        prop_assert_eq!(decomp.reconstruct(), f.to_rat());
        // multiplicities strictly increase
        for pair in decomp.parts.windows(2) {
            prop_assert!(pair[0].0 < pair[1].0);
        }
        // parts are squarefree and pairwise coprime: gcd(g, g') and
        // gcd(g_i, g_j) are constants
        for (i, (_, g)) in decomp.parts.iter().enumerate() {
            let sq = yun_squarefree(g).unwrap();
            prop_assert!(sq.parts.len() == 1 && sq.parts[0].0 == 1);
            for (_, h) in decomp.parts.iter().skip(i + 1) {
                let common = yun_squarefree(&g.mul(h)).unwrap();
                // a shared root would appear with multiplicity 2
                prop_assert!(common.parts.iter().all(|(m, _)| *m == 1));
            }
        }
    }

    #[test]
    fn odd_count_blind_to_squares(
        f_picks in proptest::collection::vec((0usize..7, 1u32..3), 1..3),
        h_picks in proptest::collection::vec((0usize..7, 1u32..3), 1..3),
    ) {
        let pool = factor_pool();
        let mut f = IntPoly::from_i64(&[1]);
        for &(idx, mult) in &f_picks {
            f = f.mul(&pool[idx].pow(mult));
        }
        let mut h = IntPoly::from_i64(&[1]);
        for &(idx, mult) in &h_picks {
            h = h.mul(&pool[idx].pow(mult));
        }
        let t_f = odd_multiplicity_root_count(&f).unwrap();
        let t_fh2 = odd_multiplicity_root_count(&f.mul(&h.pow(2))).unwrap();
        prop_assert_eq!(t_f, t_fh2);
    }

    #[test]
    fn odd_count_scales_under_composition(
        f_picks in proptest::collection::vec((0usize..7, 1u32..3), 1..3),
        eta_num in 1i64..6,
        eta_den in 1i64..6,
        d in 1usize..5,
    ) {
        let pool = factor_pool();
        let mut f = IntPoly::from_i64(&[1]);
        for &(idx, mult) in &f_picks {
            f = f.mul(&pool[idx].pow(mult));
        }
        prop_assume!(!f.coeff(0).eq(&BigInt::from(0)));
        let eta = BigRational::new(BigInt::from(eta_num), BigInt::from(eta_den));
        let composed = compose_scaled_power(&f, &eta, d).unwrap();
        let lcm = composed.denominator_lcm();
        let int = composed.scale(&BigRational::from_integer(lcm)).to_int().unwrap();
        let t_f = odd_multiplicity_root_count(&f).unwrap();
        let t_c = odd_multiplicity_root_count(&int).unwrap();
        prop_assert_eq!(t_c, d * t_f);
    }

    #[test]
    fn scaling_identity_iff_monomial(
        coeffs in proptest::collection::vec(-5i64..6, 1..6),
        phi_num in 2i64..9,
        phi_den in 1i64..9,
    ) {
        let f = IntPoly::from_coeffs(coeffs.iter().map(|&c| BigInt::from(c)).collect());
        prop_assume!(!f.is_zero());
        let phi = BigRational::new(BigInt::from(phi_num), BigInt::from(phi_den));
        prop_assume!(!phi.is_integer() || phi != rat(1));
        let holds = satisfies_scaling_identity(&f, &phi).unwrap();
        let zero = BigInt::from(0);
        let nonzero_coeffs = f.coeffs().iter().filter(|c| **c != zero).count();
        prop_assert_eq!(holds, nonzero_coeffs == 1);
    }
}

/// Construct the synthetic family pairs for a relation (k, l) over `s`,
/// anchored at offset exponents large enough to keep everything positive.
fn synthetic_pairs(
    s: &PrimeSet,
    k: i64,
    l: i64,
    mus: &[Vec<i64>],
) -> (Vec<(SUnit, SUnit)>, SRational) {
    let h = s.len();
    let offset = 40i64;
    let base_v: Vec<i64> = vec![offset; h];
    let base_w: Vec<i64> = vec![offset; h];
    let mut pairs = Vec::new();
    for mu in std::iter::once(&vec![0i64; h]).chain(mus.iter()) {
        let v_exps: Vec<u32> = (0..h)
            .map(|i| (base_v[i] - l * mu[i]) as u32)
            .collect();
        let w_exps: Vec<u32> = (0..h)
            .map(|i| (base_w[i] + k * mu[i]) as u32)
            .collect();
        pairs.push((
            SUnit::from_exponents(s, v_exps),
            SUnit::from_exponents(s, w_exps),
        ));
    }
    let g_exps = ExpVector::new((0..h).map(|i| k * base_v[i] + l * base_w[i]).collect());
    (pairs, SRational::from_exponents(s, g_exps))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn dependence_detector_recovers_generator(
        k in 1i64..=9,
        l_raw in -9i64..=9,
        primes in small_prime_set(),
        mu_seeds in proptest::collection::vec(proptest::collection::vec(-3i64..=3, 3), 1..4),
    ) {
        let l = l_raw;
        prop_assume!(k.gcd(&l.abs()) == 1);
        let s = PrimeSet::new(primes).unwrap();
        let h = s.len();
        let mus: Vec<Vec<i64>> = mu_seeds
            .iter()
            .map(|seed| seed.iter().take(h).cloned().chain(std::iter::repeat(0)).take(h).collect())
            .collect();
        prop_assume!(mus.iter().any(|mu| mu.iter().any(|&m| m != 0)));
        let (pairs, g) = synthetic_pairs(&s, k, l, &mus);
        match detect_dependence(&s, &pairs).unwrap() {
            DependenceOutcome::Relation(rel) => {
                prop_assert_eq!(rel.k, k);
                prop_assert_eq!(rel.l, l);
                prop_assert_eq!(rel.g.value(), g.value());
                for (v, w) in &pairs {
                    prop_assert!(rel.holds_for(v, w));
                }
            }
            other => prop_assert!(false, "expected relation, got {:?}", other),
        }
    }

    #[test]
    fn family_parametrization_roundtrip(
        k in 1i64..=4,
        l in -4i64..=-1,
        m in 1i64..=4,
        r in -4i64..=0,
        psi_seed in proptest::collection::vec(-2i64..=2, 2),
    ) {
        prop_assume!(k.gcd(&l.abs()) == 1 && m.gcd(&r.abs()) == 1);
        let s = PrimeSet::new(vec![2, 3]).unwrap();
        let h = s.len();
        let (x, y, z) = if r == 0 {
            (0i64, -l, k)
        } else {
            let lcm = k.lcm(&m);
            (-r * (lcm / m), -l * (lcm / k), lcm)
        };
        let offset = 60i64;
        let base: Vec<Vec<i64>> = vec![vec![offset; h]; 3];
        let sample_exps = |anchor: &Vec<i64>, dir: i64| -> Vec<u32> {
            (0..h).map(|i| (anchor[i] + dir * psi_seed[i]) as u32).collect()
        };
        let to_unit = |exps: Vec<u32>| SUnit::from_exponents(&s, exps);
        let base_triple = (
            to_unit(base[0].iter().map(|&e| e as u32).collect()),
            to_unit(base[1].iter().map(|&e| e as u32).collect()),
            to_unit(base[2].iter().map(|&e| e as u32).collect()),
        );
        let sample_triple = (
            to_unit(sample_exps(&base[0], x)),
            to_unit(sample_exps(&base[1], y)),
            to_unit(sample_exps(&base[2], z)),
        );
        let rel_vw = DependenceRelation {
            k,
            l,
            g: SRational::from_exponents(
                &s,
                base_triple.1.exp_vector().scale(k).add(&base_triple.2.exp_vector().scale(l)),
            ),
        };
        let rel_uw = DependenceRelation {
            k: m,
            l: r,
            g: SRational::from_exponents(
                &s,
                base_triple.0.exp_vector().scale(m).add(&base_triple.2.exp_vector().scale(r)),
            ),
        };
        let frame = combine_dependences(&s, &rel_vw, &rel_uw, &base_triple, &sample_triple).unwrap();
        prop_assert_eq!(frame.x as i64, x);
        prop_assert_eq!(frame.y as i64, y);
        prop_assert_eq!(frame.z as i64, z);
        let fp = normalize_mod3(&s, &frame).unwrap();
        // the reconstruction u = η·X^d holds exactly at the value level
        let samples = [&fp.sample.0, &fp.sample.1, &fp.sample.2];
        for j in 0..3 {
            let rebuilt = fp.eta[j].value()
                * fp.power_base.value().pow(fp.d[j] as i32);
            prop_assert_eq!(
                rebuilt,
                BigRational::from_integer(BigInt::from(samples[j].value().clone()))
            );
        }
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn cube_orbit_invariant(
        f_coeffs in proptest::collection::vec(-4i64..=4, 1..4),
        c0 in (-4i64..5).prop_filter("non-zero", |c| *c != 0),
        lead in (-4i64..5).prop_filter("non-zero", |c| *c != 0),
        etas in proptest::collection::vec((1i64..6, 1i64..6), 3),
        ds in proptest::collection::vec(1u64..=3, 3),
    ) {
        // f has f(0) ≠ 0 and degree ≥ 1; every d_j is a positive multiple of 3
        let mut coeffs = vec![BigInt::from(c0)];
        coeffs.extend(f_coeffs.iter().map(|&c| BigInt::from(c)));
        coeffs.push(BigInt::from(lead));
        let f = IntPoly::from_coeffs(coeffs);
        let eta_rats: Vec<BigRational> = etas
            .iter()
            .map(|&(n, d)| BigRational::new(BigInt::from(n), BigInt::from(d)))
            .collect();
        let degrees = [ds[0] * 3, ds[1] * 3, ds[2] * 3];
        let curve = sdioph::prooflab::build_curve_from_parts(
            &f,
            &[eta_rats[0].clone(), eta_rats[1].clone(), eta_rats[2].clone()],
            &degrees,
        )
        .unwrap();
        let (t, _) = sdioph::prooflab::audit_odd_roots(&curve).unwrap();
        prop_assert_eq!(t % 3, 0);
    }
}

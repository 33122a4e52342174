//! Criterion benches comparing the sequential and rayon-backed execution
//! modes of the data-parallel inner loops.
//!
//! Run with `cargo bench -p sdioph`. Building with
//! `--no-default-features` removes rayon entirely, in which case the
//! "parallel" mode measures the sequential fallback.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use num_bigint::BigUint;
use sdioph::polyarith::IntPoly;
use sdioph::prooflab::gcd_probe_mode;
use sdioph::search::{pairs_from_values_mode, search_tuples_mode, SearchConfig};
use sdioph::sunit::{enumerate_smooth, PrimeSet, SUnit};
use sdioph::ExecMode;

fn modes() -> [(&'static str, ExecMode); 2] {
    [
        ("sequential", ExecMode::Sequential),
        ("parallel", ExecMode::Parallel),
    ]
}

fn bench_pair_scan(c: &mut Criterion) {
    let s = PrimeSet::parse("2,3,5").unwrap();
    let f = IntPoly::from_i64(&[-1, -1, 1]);
    let bound = BigUint::from(4_000u32);
    let mut group = c.benchmark_group("pairs_from_values");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| pairs_from_values_mode(&s, &f, &bound, mode).unwrap());
        });
    }
    group.finish();
}

fn bench_search(c: &mut Criterion) {
    let s = PrimeSet::parse("2,3").unwrap();
    let f = IntPoly::from_i64(&[-1, 1]);
    let cfg = SearchConfig {
        bound: BigUint::from(1_500u32),
        n: 3,
        strict: true,
        exclude_trivial: false,
    };
    let mut group = c.benchmark_group("search_tuples");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| search_tuples_mode(&s, &f, &cfg, mode).unwrap());
        });
    }
    group.finish();
}

fn bench_gcd_probe(c: &mut Criterion) {
    let s = PrimeSet::parse("2,3,5").unwrap();
    let f = IntPoly::from_i64(&[-1, 1]);
    let units: Vec<SUnit> = enumerate_smooth(&s, &BigUint::from(100_000u32))
        .into_iter()
        .filter(|u| !u.is_one())
        .collect();
    let pairs: Vec<(SUnit, SUnit)> = units
        .windows(2)
        .map(|w| (w[0].clone(), w[1].clone()))
        .collect();
    let mut group = c.benchmark_group("gcd_probe");
    group.sample_size(10);
    for (name, mode) in modes() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &mode, |b, &mode| {
            b.iter(|| gcd_probe_mode(&f, &pairs, 0.25, mode).unwrap());
        });
    }
    group.finish();
}

criterion_group!(benches, bench_pair_scan, bench_search, bench_gcd_probe);
criterion_main!(benches);

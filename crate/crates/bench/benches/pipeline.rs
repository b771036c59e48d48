//! Benchmarks for the main computational stages: continued fractions,
//! ring presentations, quiver construction, deformation, Groebner
//! bases, and fixture verification.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use rca_bench::{PAIRS, QUIVER_PAIRS};
use rca_core::deformation::deformed_quiver_data;
use rca_core::fixtures::{load_fixture, verify_fixture};
use rca_core::groebner::buchberger;
use rca_core::invariant_ring::ring_presentation;
use rca_core::numtheory::hj_expand;
use rca_core::polyring::MonomialOrder;
use rca_core::quiver::{quiver_data, QuiverOptions};
use rca_core::report::verify_pair;

fn bench_fractions(c: &mut Criterion) {
    let mut group = c.benchmark_group("hj_expand");
    for &(r, a) in PAIRS {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{r}_{a}")), &(r, a), |b, &(r, a)| {
            b.iter(|| hj_expand(black_box(r), black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn bench_presentation(c: &mut Criterion) {
    let mut group = c.benchmark_group("ring_presentation");
    group.sample_size(20);
    for &(r, a) in PAIRS {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{r}_{a}")), &(r, a), |b, &(r, a)| {
            b.iter(|| ring_presentation(black_box(r), black_box(a)).unwrap())
        });
    }
    group.finish();
}

fn bench_quiver(c: &mut Criterion) {
    let mut group = c.benchmark_group("quiver_data");
    group.sample_size(10);
    let options = QuiverOptions::default();
    for &(r, a) in QUIVER_PAIRS {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{r}_{a}")), &(r, a), |b, &(r, a)| {
            b.iter(|| quiver_data(black_box(r), black_box(a), &options).unwrap())
        });
    }
    group.finish();
}

fn bench_deformed_quiver(c: &mut Criterion) {
    let mut group = c.benchmark_group("deformed_quiver_data");
    group.sample_size(10);
    let options = QuiverOptions::default();
    group.bench_function("12_7", |b| {
        b.iter(|| deformed_quiver_data(black_box(12), black_box(7), &options).unwrap())
    });
    group.finish();
}

fn bench_groebner(c: &mut Criterion) {
    let mut group = c.benchmark_group("buchberger");
    group.sample_size(10);
    let fixture = load_fixture("D5_2").unwrap();
    group.bench_function("d5_2_relations", |b| {
        b.iter(|| {
            buchberger(
                &fixture.undeformed.ring,
                black_box(&fixture.undeformed.relations),
                MonomialOrder::DegRevLex,
            )
            .unwrap()
        })
    });
    group.finish();
}

fn bench_verification(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify");
    group.sample_size(10);
    group.bench_function("pair_12_7", |b| b.iter(|| verify_pair(12, 7).unwrap()));
    let fixture = load_fixture("D5_2").unwrap();
    group.bench_function("fixture_d5_2", |b| b.iter(|| verify_fixture(black_box(&fixture))));
    group.finish();
}

criterion_group!(
    benches,
    bench_fractions,
    bench_presentation,
    bench_quiver,
    bench_deformed_quiver,
    bench_groebner,
    bench_verification
);
criterion_main!(benches);

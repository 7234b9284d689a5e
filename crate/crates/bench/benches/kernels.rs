//! Criterion benchmarks for the numeric kernels. These exist to catch
//! regressions in the Jacobi sweeps and the certification path, not to chase
//! absolute numbers.

use std::hint::black_box;

use cpbound_bench::{fixture, hermitian_fixture};
use cpbound_core::{
    alpha_sweep, hermitian_eigen, matrix_abs, polar_decompose, ratio_p, schatten_norm,
    theorem_certify,
};
use criterion::{criterion_group, criterion_main, Criterion};

fn bench_eigen(c: &mut Criterion) {
    let h = hermitian_fixture(16, 0xBE_0001);
    c.bench_function("hermitian_eigen 16x16", |b| {
        b.iter(|| hermitian_eigen(black_box(&h)).unwrap())
    });
}

fn bench_polar(c: &mut Criterion) {
    let a = fixture(16, 0xBE_0002);
    c.bench_function("polar_decompose 16x16", |b| {
        b.iter(|| polar_decompose(black_box(&a)).unwrap())
    });
}

fn bench_abs(c: &mut Criterion) {
    let a = fixture(16, 0xBE_0003);
    c.bench_function("matrix_abs 16x16", |b| {
        b.iter(|| matrix_abs(black_box(&a)).unwrap())
    });
}

fn bench_schatten(c: &mut Criterion) {
    let a = fixture(16, 0xBE_0004);
    c.bench_function("schatten_norm p=3 16x16", |b| {
        b.iter(|| schatten_norm(black_box(&a), 3.0).unwrap())
    });
}

fn bench_ratio(c: &mut Criterion) {
    // The search objective's hot path: a 2x2 ratio evaluation.
    let a = fixture(2, 0xBE_0005);
    let b2 = fixture(2, 0xBE_0006);
    c.bench_function("ratio_p p=2 2x2", |b| {
        b.iter(|| ratio_p(black_box(&a), black_box(&b2), 2.0).unwrap())
    });
}

fn bench_theorem(c: &mut Criterion) {
    let a = fixture(4, 0xBE_0007);
    let b4 = fixture(4, 0xBE_0008);
    c.bench_function("theorem_certify 4x4", |b| {
        b.iter(|| theorem_certify(black_box(&a), black_box(&b4)).unwrap())
    });
}

fn bench_sweep(c: &mut Criterion) {
    c.bench_function("alpha_sweep 1001 points", |b| {
        b.iter(|| alpha_sweep(black_box(1001)).unwrap())
    });
}

criterion_group!(
    kernels,
    bench_eigen,
    bench_polar,
    bench_abs,
    bench_schatten,
    bench_ratio,
    bench_theorem,
    bench_sweep
);
criterion_main!(kernels);

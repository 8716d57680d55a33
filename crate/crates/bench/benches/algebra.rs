use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use maxplus::{linalg, solvers, Tolerance};
use maxplus_bench::{contracting_matrix, dense_matrix, dense_vector};

const SIZES: [usize; 2] = [50, 100];

fn mat_mul(c: &mut Criterion) {
    let mut group = c.benchmark_group("mat_mul");
    for n in SIZES {
        let a = dense_matrix(n, 1);
        let b = dense_matrix(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| black_box(&a).mul(black_box(&b)).unwrap())
        });
    }
    group.finish();
}

fn star(c: &mut Criterion) {
    let mut group = c.benchmark_group("star");
    group.sample_size(20);
    for n in SIZES {
        let a = contracting_matrix(n, 3);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| linalg::star(black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn eigenvalue(c: &mut Criterion) {
    let mut group = c.benchmark_group("eigenvalue");
    group.sample_size(10);
    for n in SIZES {
        let a = dense_matrix(n, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| solvers::eigenvalue(black_box(&a)).unwrap())
        });
    }
    group.finish();
}

fn solve_first_kind(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve_first_kind");
    for n in SIZES {
        let a = dense_matrix(n, 5);
        let d = dense_vector(n, 6);
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |bench, _| {
            bench.iter(|| {
                solvers::solve_first_kind(black_box(&a), black_box(&d), Tolerance::DEFAULT).unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, mat_mul, star, eigenvalue, solve_first_kind);
criterion_main!(benches);

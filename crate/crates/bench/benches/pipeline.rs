use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use ybknot_bench::{alternating, torus};
use ybknot_core::algebra::catalog;
use ybknot_core::invariant::{alexander, modified_markov_trace, Enhancement};
use ybknot_core::oracle::{alexander_burau, alexander_skein};
use ybknot_core::{Scalar, YbOperator};

fn enhancement() -> Enhancement {
    let dual = catalog::dual_numbers();
    let r = YbOperator::r_xy(&dual.algebra, Scalar::x(), Scalar::y()).unwrap();
    Enhancement::solve(&r, &dual.mu).unwrap().unwrap()
}

fn bench_pipeline(c: &mut Criterion) {
    let e = enhancement();
    let mut group = c.benchmark_group("modified_trace");
    for (n, len) in [(2, 8), (3, 8), (4, 8), (5, 6)] {
        let b = alternating(n, len);
        group.bench_with_input(BenchmarkId::from_parameter(format!("n{n}_len{len}")), &b, |bench, b| {
            bench.iter(|| modified_markov_trace(&e, black_box(b)).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("alexander");
    for (name, b) in [("trefoil", torus(2, 3)), ("t(3,4)", torus(3, 4)), ("alt4x8", alternating(4, 8))] {
        group.bench_function(BenchmarkId::new("pipeline", name), |bench| bench.iter(|| alexander(&e, black_box(&b)).unwrap()));
        group.bench_function(BenchmarkId::new("skein", name), |bench| bench.iter(|| alexander_skein(black_box(&b)).unwrap()));
        group.bench_function(BenchmarkId::new("burau", name), |bench| bench.iter(|| alexander_burau(black_box(&b)).unwrap()));
    }
    group.finish();
}

fn bench_setup(c: &mut Criterion) {
    c.bench_function("solve_enhancement_dual", |bench| bench.iter(enhancement));
    let dual = catalog::dual_numbers();
    c.bench_function("build_r_xy_dual", |bench| {
        bench.iter(|| YbOperator::r_xy(black_box(&dual.algebra), Scalar::x(), Scalar::y()).unwrap())
    });
}

criterion_group!(benches, bench_pipeline, bench_setup);
criterion_main!(benches);

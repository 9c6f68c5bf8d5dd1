//! Sequential versus parallel strategies on the data-parallel kernels. The
//! results are exact either way; the interest is the speedup of the fold
//! over laminar supports, the census oracle, the labelled-partition series
//! and the closure frontier.

use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use braidmodels::closure::{building_closure_with, maximal_seed, UnionRule};
use braidmodels::cohomology::{poincare_with, Model};
use braidmodels::exec::Strategy;
use braidmodels::genfun::{bigpsi_direct, xi_direct};

const STRATEGIES: [(&str, Strategy); 2] =
    [("seq", Strategy::Sequential), ("par", Strategy::Parallel)];

fn bench_minimal_poincare(c: &mut Criterion) {
    let mut group = c.benchmark_group("minimal_poincare_enumeration");
    group.sample_size(10);
    for n in [6u32, 7] {
        for (label, strategy) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
                b.iter(|| poincare_with(Model::Minimal, black_box(n), strategy).unwrap())
            });
        }
    }
    group.finish();
}

fn bench_supermax_poincare(c: &mut Criterion) {
    let mut group = c.benchmark_group("supermax_poincare");
    group.sample_size(10);
    let n = 6u32;
    for (label, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
            b.iter(|| poincare_with(Model::Supermaximal, black_box(n), strategy).unwrap())
        });
    }
    group.finish();
}

fn bench_xi_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("xi_census_oracle");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(8));
    let n_max = 6u32;
    for (label, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(label, n_max), &n_max, |b, &n| {
            b.iter(|| xi_direct(black_box(n), strategy).unwrap())
        });
    }
    group.finish();
}

fn bench_bigpsi_oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("bigpsi_grouped_enumeration");
    group.sample_size(10);
    let order = 8usize;
    for (label, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(label, order), &order, |b, &t| {
            b.iter(|| bigpsi_direct(black_box(t), strategy).unwrap())
        });
    }
    group.finish();
}

fn bench_closure(c: &mut Criterion) {
    let mut group = c.benchmark_group("building_closure");
    group.sample_size(10);
    group.measurement_time(Duration::from_secs(10));
    let n = 5u32;
    let seed = maximal_seed(n).unwrap();
    for (label, strategy) in STRATEGIES {
        group.bench_with_input(BenchmarkId::new(label, n), &n, |b, &n| {
            b.iter(|| {
                building_closure_with(black_box(&seed), n, UnionRule::default(), strategy)
                    .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_minimal_poincare,
    bench_supermax_poincare,
    bench_xi_oracle,
    bench_bigpsi_oracle,
    bench_closure
);
criterion_main!(benches);

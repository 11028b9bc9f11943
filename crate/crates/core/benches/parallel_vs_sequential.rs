use std::hint::black_box;
use std::time::Duration;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use lamplighter_rf::detection::{rf_growth_table, QuotientSearch};
use lamplighter_rf::extremal::{almost_periodic_by_filter, conjecture_table};
use lamplighter_rf::lamplighter::DEFAULT_BALL_CAP;
use lamplighter_rf::polyring::PrimeModulus;
use lamplighter_rf::Exec;

const MODES: [(&str, Exec); 2] = [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)];

fn two() -> PrimeModulus {
    PrimeModulus::new(2).unwrap()
}

fn rf_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("rf_growth_table");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "p2_r8"), |b| {
            b.iter(|| rf_growth_table(two(), black_box(8), DEFAULT_BALL_CAP, 1_000_000, exec).unwrap())
        });
    }
    group.finish();
}

fn quotient_search(c: &mut Criterion) {
    let mut group = c.benchmark_group("quotient_search");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "p3_bound4096"), |b| {
            b.iter(|| QuotientSearch::new(PrimeModulus::new(3).unwrap(), black_box(4096), exec).unwrap())
        });
    }
    group.finish();
}

fn almost_periodic(c: &mut Criterion) {
    let mut group = c.benchmark_group("almost_periodic");
    for (name, exec) in MODES {
        group.bench_function(BenchmarkId::new(name, "filter_p2_k10"), |b| {
            b.iter(|| almost_periodic_by_filter(two(), black_box(10), exec).unwrap())
        });
        group.bench_function(BenchmarkId::new(name, "table_p2_k12"), |b| {
            b.iter(|| conjecture_table(two(), black_box(12), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10).measurement_time(Duration::from_secs(3));
    targets = rf_table, quotient_search, almost_periodic
}
criterion_main!(benches);

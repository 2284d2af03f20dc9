use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use se3_dexp::checks::{block_suite, CheckConfig};
use se3_dexp::par;
use se3_dexp::rod::ReferenceRod;
use se3_dexp::study::{approximation_error, default_targets, TestVectors};

fn sweep_row(v: &TestVectors, s: f64) -> Vec<f64> {
    default_targets()
        .iter()
        .map(|t| approximation_error(v, t, s).unwrap())
        .collect()
}

fn error_sweep(c: &mut Criterion) {
    let v = TestVectors::default();
    let n = 64;
    let s = |i: usize| 1e-3 * 100f64.powf(i as f64 / (n - 1) as f64);
    let mut g = c.benchmark_group("error_sweep");
    g.bench_function(BenchmarkId::new("sequential", n), |b| {
        b.iter(|| par::map_sequential(n, |i| sweep_row(&v, s(i))))
    });
    #[cfg(feature = "parallel")]
    g.bench_function(BenchmarkId::new("parallel", n), |b| {
        b.iter(|| par::map_parallel(n, |i| sweep_row(&v, s(i))))
    });
    g.finish();
}

fn rod_reference(c: &mut Criterion) {
    let rod = ReferenceRod::default();
    let n = 16;
    let tau = |i: usize| 0.05 + 0.9 * i as f64 / (n - 1) as f64;
    let mut g = c.benchmark_group("rod_reference");
    g.sample_size(10);
    g.bench_function(BenchmarkId::new("sequential", n), |b| {
        b.iter(|| par::map_sequential(n, |i| rod.sample(tau(i)).unwrap()))
    });
    #[cfg(feature = "parallel")]
    g.bench_function(BenchmarkId::new("parallel", n), |b| {
        b.iter(|| par::map_parallel(n, |i| rod.sample(tau(i)).unwrap()))
    });
    g.finish();
}

/// The block suite goes through `par::map`, so this measures whichever
/// backend the build selected.
fn oracle_triangle(c: &mut Criterion) {
    let cfg = CheckConfig {
        samples: 200,
        ..CheckConfig::default()
    };
    c.bench_function("block_suite_200", |b| b.iter(|| block_suite(&cfg).unwrap()));
}

criterion_group!(benches, error_sweep, rod_reference, oracle_triangle);
criterion_main!(benches);

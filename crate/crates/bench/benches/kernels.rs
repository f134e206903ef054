use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};
use zetabound::rs_bounds::{c1, c_sigma};
use zetabound::zeta_eval::eval_zeta_grid;
use zetabound::{
    eval_zeta_certified, optimal_bound_params, oracle_zeta, scan_interval, ScanConfig,
};
use zetabound_bench::{block_terms, EVAL_HEIGHTS, SCAN_R};

fn bench_eval(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval_zeta_certified");
    for t in EVAL_HEIGHTS {
        let n = block_terms(t);
        group.throughput(Throughput::Elements(n));
        group.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| {
            b.iter(|| eval_zeta_certified(black_box(t), n).unwrap())
        });
    }
    group.finish();
}

fn bench_grid(c: &mut Criterion) {
    let mut group = c.benchmark_group("eval_zeta_grid");
    for count in [256usize, 4096] {
        let n = block_terms(1000.0);
        group.throughput(Throughput::Elements(n * count as u64));
        group.bench_with_input(BenchmarkId::from_parameter(count), &count, |b, &count| {
            b.iter(|| eval_zeta_grid(black_box(950.0), 0.01, count, n).unwrap())
        });
    }
    group.finish();
}

fn bench_scan(c: &mut Criterion) {
    let config = ScanConfig::new(std::f64::consts::E, 200.0, 0.01, SCAN_R).unwrap();
    c.bench_function("scan_interval e..200", |b| {
        b.iter(|| scan_interval(black_box(&config)).unwrap())
    });
}

fn bench_oracle(c: &mut Criterion) {
    c.bench_function("oracle_zeta t=100", |b| {
        b.iter(|| oracle_zeta(black_box(100.0), 1e-10).unwrap())
    });
}

fn bench_bounds(c: &mut Criterion) {
    c.bench_function("optimal_bound_params 1e300", |b| {
        b.iter(|| optimal_bound_params(black_box(1e300)).unwrap())
    });
    c.bench_function("c1 p=0.7", |b| b.iter(|| c1(black_box(0.7), 1.0).unwrap()));
    let mut slow = c.benchmark_group("quadrature");
    slow.sample_size(10);
    slow.bench_function("c_sigma(1)", |b| {
        b.iter(|| c_sigma(black_box(1.0)).unwrap())
    });
    slow.finish();
}

criterion_group!(
    benches,
    bench_eval,
    bench_grid,
    bench_scan,
    bench_oracle,
    bench_bounds
);
criterion_main!(benches);

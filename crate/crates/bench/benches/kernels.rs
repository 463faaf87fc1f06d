use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use polarix::analysis::run_sweep;
use polarix::{full_scattering, ideal_scattering_matrix, solve_controls, EmitterConfig};
use polarix_bench::{fig3a, lossy_point, solver_pairs};

fn kernels(c: &mut Criterion) {
    let (geom, em, drive) = lossy_point();
    let ideal_em = EmitterConfig::new(em.theta, 0.0);
    c.bench_function("ideal_matrix", |b| {
        b.iter(|| ideal_scattering_matrix(black_box(&ideal_em), black_box(drive.alpha)))
    });
    c.bench_function("full_scattering", |b| {
        b.iter(|| full_scattering(black_box(&geom), black_box(&em), black_box(&drive)).unwrap())
    });
    let pairs = solver_pairs();
    c.bench_function("solve_controls_49_pairs", |b| {
        b.iter(|| {
            for (i, t) in &pairs {
                black_box(solve_controls(black_box(i), black_box(t)).unwrap());
            }
        })
    });
}

fn sweeps(c: &mut Criterion) {
    let spec = fig3a();
    let mut g = c.benchmark_group("sweep");
    g.sample_size(10);
    g.bench_function("fig3a_101x101", |b| b.iter(|| run_sweep(black_box(&spec)).unwrap()));
    g.finish();
}

criterion_group!(benches, kernels, sweeps);
criterion_main!(benches);

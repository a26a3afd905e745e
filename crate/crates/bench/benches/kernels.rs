//! Benchmarks for the exact kernels: row reduction, polarization search,
//! module construction and classification.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use twind_bench::{kac_with_u_star, seeded_matrix};
use twind_core::analysis::{classify, envelope, find_intertwiner};
use twind_core::induced::{induce, Twist};
use twind_core::polarizations::find_polarization;
use twind_core::{kernel, rref};

fn bench_rref(c: &mut Criterion) {
    let mut group = c.benchmark_group("linalg");
    for n in [8usize, 16, 32] {
        let m = seeded_matrix(n, n as u64);
        group.bench_function(format!("rref_{n}x{n}"), |b| {
            b.iter_batched(|| m.clone(), |m| rref(&m), BatchSize::SmallInput)
        });
        group.bench_function(format!("kernel_{n}x{n}"), |b| {
            b.iter_batched(|| m.clone(), |m| kernel(&m), BatchSize::SmallInput)
        });
    }
    group.finish();
}

fn bench_pipeline(c: &mut Criterion) {
    let (g, lam) = kac_with_u_star();
    let mut group = c.benchmark_group("pipeline");
    group.bench_function("find_polarization_kac", |b| {
        b.iter(|| find_polarization(&g, &lam).unwrap())
    });
    let pol = find_polarization(&g, &lam).unwrap();
    group.bench_function("induce_kac_twisted", |b| {
        b.iter(|| induce(&g, &lam, &pol.odd_part, Twist::Plus).unwrap())
    });
    let w = induce(&g, &lam, &pol.odd_part, Twist::Plus).unwrap();
    group.bench_function("envelope_kac", |b| b.iter(|| envelope(&w)));
    group.bench_function("classify_kac", |b| b.iter(|| classify(&g, &w).unwrap()));
    group.bench_function("intertwiner_self_kac", |b| {
        b.iter(|| find_intertwiner(&w, &w))
    });
    group.finish();
}

criterion_group!(benches, bench_rref, bench_pipeline);
criterion_main!(benches);

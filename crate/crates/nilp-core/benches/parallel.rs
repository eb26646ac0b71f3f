//! Parallel-vs-sequential comparison on the three data-parallel hot paths:
//! cocycle-matrix assembly + elimination, whole-catalog verification, and
//! the exterior-algebra homology ranks. The runtime toggle flips the rayon
//! paths off so both variants run in one binary; building with
//! `--no-default-features` removes rayon entirely and both collapse to the
//! sequential path.

use criterion::{criterion_group, criterion_main, Criterion};
use nilp_core::{catalog, cohomology, lie, parallel};
use std::hint::black_box;

fn with_mode<R>(enabled: bool, f: impl FnOnce() -> R) -> R {
    parallel::set_enabled(enabled);
    let out = f();
    parallel::set_enabled(true);
    out
}

fn bench_cohomology_dims(c: &mut Criterion) {
    let g = lie::k_odd(4); // dimension 9: 324 cochain coordinates
    let mut group = c.benchmark_group("cohomology_dims_hc/k9");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| with_mode(true, || black_box(cohomology::cohomology_dims_hc(&g).unwrap())))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| with_mode(false, || black_box(cohomology::cohomology_dims_hc(&g).unwrap())))
    });
    group.finish();
}

fn bench_catalog_verify(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog_verify_all");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| with_mode(true, || black_box(catalog::verify_all(8, 0))))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| with_mode(false, || black_box(catalog::verify_all(8, 0))))
    });
    group.finish();
}

fn bench_homology(c: &mut Criterion) {
    let g = lie::free_two_step(4); // dimension 10: the largest boundary is 252 columns
    let mut group = c.benchmark_group("ce_homology_dims/free_two_step_4");
    group.sample_size(10);
    group.bench_function("parallel", |b| {
        b.iter(|| with_mode(true, || black_box(cohomology::ce_homology_dims(&g).unwrap())))
    });
    group.bench_function("sequential", |b| {
        b.iter(|| with_mode(false, || black_box(cohomology::ce_homology_dims(&g).unwrap())))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_cohomology_dims,
    bench_catalog_verify,
    bench_homology
);
criterion_main!(benches);

//! Compares the data-parallel inner loops against single-threaded runs.
//!
//! With the default `parallel` feature, `threads_1` pins a one-worker rayon
//! pool and `threads_all` uses every core; outputs are identical, only wall
//! time differs. Built with `--no-default-features` the same benches run the
//! compiled sequential fallback (the thread counts are then ignored).

use criterion::{black_box, criterion_group, criterion_main, Criterion};
use pantsdecomp::construct::build_gamma;
use pantsdecomp::metrics::min_nontrivial_connected_cutset;
use pantsdecomp::run_with_threads;
use pantsdecomp::search::{compute_dmax, Enumerator};

#[cfg(feature = "parallel")]
const MODE: &str = "rayon";
#[cfg(not(feature = "parallel"))]
const MODE: &str = "sequential-fallback";

fn bench_dmax(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("dmax_2_5/{MODE}"));
    group.sample_size(10);
    group.bench_function("threads_1", |b| {
        b.iter(|| {
            run_with_threads(Some(1), || {
                let mut en = Enumerator::new();
                black_box(compute_dmax(&mut en, 2, 5).unwrap().dmax)
            })
        })
    });
    group.bench_function("threads_all", |b| {
        b.iter(|| {
            run_with_threads(None, || {
                let mut en = Enumerator::new();
                black_box(compute_dmax(&mut en, 2, 5).unwrap().dmax)
            })
        })
    });
    group.finish();
}

fn bench_enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group(format!("enumerate_6_0/{MODE}"));
    group.sample_size(10);
    group.bench_function("threads_1", |b| {
        b.iter(|| {
            run_with_threads(Some(1), || {
                let mut en = Enumerator::new();
                black_box(en.class_keys(6, 0).unwrap().len())
            })
        })
    });
    group.bench_function("threads_all", |b| {
        b.iter(|| {
            run_with_threads(None, || {
                let mut en = Enumerator::new();
                black_box(en.class_keys(6, 0).unwrap().len())
            })
        })
    });
    group.finish();
}

fn bench_cutset_scan(c: &mut Criterion) {
    let gamma = build_gamma(180).expect("gamma builds");
    let mut group = c.benchmark_group(format!("cutset_gamma180_cap2/{MODE}"));
    group.sample_size(10);
    group.bench_function("threads_1", |b| {
        b.iter(|| {
            run_with_threads(Some(1), || {
                black_box(min_nontrivial_connected_cutset(&gamma, 2).unwrap().size)
            })
        })
    });
    group.bench_function("threads_all", |b| {
        b.iter(|| {
            run_with_threads(None, || {
                black_box(min_nontrivial_connected_cutset(&gamma, 2).unwrap().size)
            })
        })
    });
    group.finish();
}

criterion_group!(benches, bench_dmax, bench_enumeration, bench_cutset_scan);
criterion_main!(benches);

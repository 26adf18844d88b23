use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use pseudofree::exact::rational;
use pseudofree::models::kawasaki_chern;
use pseudofree::numeric::{mc_ball_volume, wedge_power_top};
use pseudofree::{euler_mod_z, quotient_by_cyclic, ConstantTwoForm, McConfig};
use pseudofree_bench::corpus;

fn bench_euler(c: &mut Criterion) {
    let data = corpus(1, 100, 3, 1_000);
    c.bench_function("euler_mod_z, 100 datasets, arity 3, orders to 1e3", |b| {
        b.iter(|| {
            for d in &data {
                black_box(euler_mod_z(black_box(d)));
            }
        })
    });
}

fn bench_quotient(c: &mut Criterion) {
    let data = corpus(2, 100, 3, 1_000);
    // 1009 is prime and above max_p, so it is coprime to every order.
    c.bench_function("quotient_by_cyclic r=1009, 100 datasets", |b| {
        b.iter(|| {
            for d in &data {
                black_box(quotient_by_cyclic(black_box(d), 1009).unwrap());
            }
        })
    });
}

fn bench_kawasaki(c: &mut Criterion) {
    let weights = [2i64, 3, 5, 7, 11, 13, 17];
    c.bench_function("kawasaki_chern, 7 weights", |b| {
        b.iter(|| black_box(kawasaki_chern(black_box(&weights)).unwrap()))
    });
}

fn bench_wedge(c: &mut Criterion) {
    let form = ConstantTwoForm::new((1..=7).map(|p| rational(1, p)).collect()).unwrap();
    c.bench_function("wedge_power_top, n=7", |b| {
        b.iter(|| black_box(wedge_power_top(black_box(&form))))
    });
}

fn bench_mc(c: &mut Criterion) {
    let cfg = McConfig::new(1_000_000, 0, 32).unwrap();
    let mut group = c.benchmark_group("mc_ball_volume");
    group.sample_size(10);
    group.bench_function("dim 6, 1e6 samples", |b| {
        b.iter(|| black_box(mc_ball_volume(6, black_box(&cfg)).unwrap()))
    });
    group.finish();
}

criterion_group!(
    benches,
    bench_euler,
    bench_quotient,
    bench_kawasaki,
    bench_wedge,
    bench_mc
);
criterion_main!(benches);

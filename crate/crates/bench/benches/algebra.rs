use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use multispin::suite::{momentum_suite, oracle_checks};
use multispin::{oracle, run_all, ProjectorSet};
use multispin_bench::Workload;

fn structural(c: &mut Criterion) {
    let w = Workload::new(1);
    c.bench_function("run_all", |b| b.iter(|| run_all(black_box(&w.rep))));
    let gamma = ProjectorSet::compute(&w.rep, &w.momenta[0], &w.kappa)
        .unwrap()
        .gamma;
    c.bench_function("matmul_11", |b| {
        b.iter(|| black_box(&gamma) * black_box(&gamma))
    });
}

fn momentum(c: &mut Criterion) {
    let w = Workload::new(3);
    let mut g = c.benchmark_group("momentum");
    g.sample_size(20);
    g.bench_function("projector_set", |b| {
        b.iter(|| ProjectorSet::compute(&w.rep, black_box(&w.momenta[2]), &w.kappa).unwrap())
    });
    let set = ProjectorSet::compute(&w.rep, &w.momenta[2], &w.kappa).unwrap();
    g.bench_function("oracle_checks", |b| {
        b.iter(|| oracle_checks(black_box(&set)))
    });
    g.bench_function("null_space_D", |b| {
        b.iter(|| oracle::null_space(black_box(&set.d)))
    });
    g.bench_function("full_suite", |b| {
        b.iter(|| {
            for k in &w.momenta {
                black_box(momentum_suite(&w.rep, k, &w.kappa).unwrap());
            }
        })
    });
    g.finish();
}

criterion_group!(benches, structural, momentum);
criterion_main!(benches);

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use homorder::algebra::{path, transitive_tournament};
use homorder::duality::verify_duality_bounded;
use homorder::enumerate::{all_structures, Oracle};
use homorder::{Config, Signature};

fn modes() -> [(&'static str, Config); 2] {
    [("sequential", Config::sequential()), ("parallel", Config::default())]
}

fn catalog_build(c: &mut Criterion) {
    let mut group = c.benchmark_group("catalog_digraphs_n4");
    group.sample_size(10);
    for (name, cfg) in modes() {
        group.bench_function(name, |b| {
            b.iter(|| all_structures(black_box(&Signature::digraph()), 4, &cfg).unwrap())
        });
    }
    group.finish();
}

fn duality_check(c: &mut Criterion) {
    let mut group = c.benchmark_group("verify_duality_p3_n4");
    group.sample_size(10);
    for (name, cfg) in modes() {
        let oracle = Oracle::new(Signature::digraph(), cfg);
        oracle.structures(4).unwrap();
        let forests = [path(3)];
        let duals = [transitive_tournament(3)];
        group.bench_function(name, |b| {
            b.iter(|| verify_duality_bounded(&oracle, black_box(&forests), black_box(&duals), 4).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, catalog_build, duality_check);
criterion_main!(benches);

use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

use cayaut::autgrp::stabilizer_search;
use cayaut::cayley::{rank, unrank};
use cayaut::cycles::census;
use cayaut::{CayleyGraph, GenSet, GraphOptions, Parallelism};

fn lehmer(c: &mut Criterion) {
    let p = unrank(123_456_789, 12).unwrap();
    c.bench_function("rank n=12", |b| b.iter(|| rank(black_box(&p)).unwrap()));
    c.bench_function("unrank n=12", |b| b.iter(|| unrank(black_box(123_456_789), 12).unwrap()));
}

fn build(c: &mut Criterion) {
    let par = Parallelism::available();
    let set = GenSet::standard(8).unwrap();
    c.bench_function("build graph n=8", |b| {
        b.iter(|| CayleyGraph::build(&set, &GraphOptions::default(), &par).unwrap())
    });
}

fn cycles(c: &mut Criterion) {
    let par = Parallelism::available();
    let mut group = c.benchmark_group("census length 12");
    for n in [13, 20] {
        let set = GenSet::standard(n).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &set, |b, set| {
            b.iter(|| census(set, 12, &par).unwrap())
        });
    }
    group.finish();
}

fn stabilizer(c: &mut Criterion) {
    let par = Parallelism::available();
    let mut group = c.benchmark_group("stabilizer");
    group.sample_size(10);
    for n in [6, 7] {
        let g = CayleyGraph::build(&GenSet::standard(n).unwrap(), &GraphOptions::default(), &par).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| stabilizer_search(g, &par).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, lehmer, build, cycles, stabilizer);
criterion_main!(benches);

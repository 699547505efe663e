use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use eposet::constructors::*;
use eposet::enumerate::enumerate_rank3;
use eposet::profile::IntervalCensus;
use eposet::{classify::classify, is_isomorphic};
use eposet_bench::{shuffled_pair, sized_inputs};

fn census(c: &mut Criterion) {
    let mut g = c.benchmark_group("interval_census");
    for (name, p) in sized_inputs() {
        g.bench_with_input(BenchmarkId::from_parameter(name), &p, |b, p| b.iter(|| IntervalCensus::of(black_box(p))));
    }
    g.finish();
}

fn eulerian(c: &mut Criterion) {
    let mut g = c.benchmark_group("is_eulerian");
    for (name, p) in sized_inputs() {
        g.bench_with_input(BenchmarkId::new("parity", name), &p, |b, p| b.iter(|| black_box(p).is_eulerian()));
        g.bench_with_input(BenchmarkId::new("mobius", name), &p, |b, p| {
            b.iter(|| black_box(p).is_eulerian_by_mobius())
        });
    }
    g.finish();
}

fn isomorphism(c: &mut Criterion) {
    let mut g = c.benchmark_group("isomorphism");
    for (name, p) in [
        ("cubical(4)", cubical(4).unwrap()),
        ("ksum(2, butterfly(5))", k_summation(&butterfly(5).unwrap(), 2).unwrap()),
        ("boolean(5)", boolean(5).unwrap()),
    ] {
        let pair = shuffled_pair(p);
        g.bench_with_input(BenchmarkId::from_parameter(name), &pair, |b, (p, q)| {
            b.iter(|| is_isomorphic(black_box(p), black_box(q)).expect("isomorphic"))
        });
    }
    g.finish();
}

fn classification(c: &mut Criterion) {
    let p = dual_suspension(&k_summation(&butterfly(5).unwrap(), 2).unwrap()).unwrap();
    c.bench_function("classify sigma_star(ksum(2, butterfly(5)))", |b| b.iter(|| classify(black_box(&p)).unwrap()));
}

fn rank3(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate_rank3");
    g.sample_size(10);
    for t in [8, 12, 16] {
        g.bench_with_input(BenchmarkId::from_parameter(t), &t, |b, &t| b.iter(|| enumerate_rank3(t).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, census, eulerian, isomorphism, classification, rank3);
criterion_main!(benches);

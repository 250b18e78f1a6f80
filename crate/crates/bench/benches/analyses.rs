use std::hint::black_box;

use compdeps::{deps, optimize, slice, validate, ChannelSet, ComponentId};
use compdeps_bench::{layered, level, pipeline, random};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

fn sources(c: &mut Criterion) {
    let mut g = c.benchmark_group("sources");
    for n in [100usize, 1_000, 5_000] {
        let a = pipeline(n, false);
        let last: ComponentId = format!("c{}", n - 1).into();
        g.bench_with_input(BenchmarkId::new("pipeline_tail", n), &a, |b, a| {
            b.iter(|| deps::sources(a, &level(), black_box(&last)).unwrap())
        });
    }
    let a = layered(50, 40, 3, 7);
    let c0: ComponentId = "c39_0".into();
    g.bench_function("layered_50x40", |b| {
        b.iter(|| deps::sources(&a, &level(), black_box(&c0)).unwrap())
    });
    g.finish();
}

fn condensation(c: &mut Criterion) {
    let mut g = c.benchmark_group("condense_level");
    for n in [1_000usize, 10_000] {
        let a = pipeline(n, true);
        g.bench_with_input(BenchmarkId::new("ring", n), &a, |b, a| {
            b.iter(|| optimize::condense_level(black_box(a), &level()).unwrap())
        });
    }
    let a = layered(50, 40, 3, 7);
    g.bench_function("layered_50x40", |b| {
        b.iter(|| optimize::condense_level(black_box(&a), &level()).unwrap())
    });
    g.finish();
}

fn grouping(c: &mut Criterion) {
    let a = layered(50, 40, 3, 7);
    c.bench_function("highload_grouping/layered_50x40", |b| {
        b.iter(|| optimize::highload_grouping(black_box(&a), &level()).unwrap())
    });
}

fn slicing(c: &mut Criterion) {
    let a = layered(50, 40, 3, 7);
    let chset: ChannelSet = (0..50)
        .step_by(5)
        .map(|k| format!("x39_{k}").into())
        .collect();
    c.bench_function("slice_report/layered_50x40", |b| {
        b.iter(|| slice::slice_report(black_box(&a), &level(), &chset).unwrap())
    });
}

fn validation(c: &mut Criterion) {
    let a = random(300, 600, 11);
    c.bench_function("validate_all/random_300", |b| {
        b.iter(|| validate::validate_all(black_box(&a)))
    });
}

fn round_trip(c: &mut Criterion) {
    let a = random(300, 600, 11);
    let text = compdeps::serialize(&a);
    c.bench_function("parse/random_300", |b| {
        b.iter(|| compdeps::parse(black_box(&text)).unwrap())
    });
    c.bench_function("serialize/random_300", |b| {
        b.iter(|| compdeps::serialize(black_box(&a)))
    });
}

criterion_group!(
    benches,
    sources,
    condensation,
    grouping,
    slicing,
    validation,
    round_trip
);
criterion_main!(benches);

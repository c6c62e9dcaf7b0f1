use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use leapx::{derive, double_corona, index_report, sd_vertex_edge_join, sweep, DerivedKind, Family, Graph, SweepConfig};
use leapx_bench::base_graphs;

fn indices(c: &mut Criterion) {
    let mut group = c.benchmark_group("index_report");
    for (name, g) in base_graphs() {
        group.bench_with_input(BenchmarkId::from_parameter(name), &g, |b, g| b.iter(|| index_report(black_box(g))));
    }
    group.finish();
}

fn constructions(c: &mut Criterion) {
    let mut group = c.benchmark_group("derive");
    let g = Graph::named("C7").unwrap();
    for kind in [DerivedKind::Line, DerivedKind::S, DerivedKind::Q, DerivedKind::R, DerivedKind::T] {
        group.bench_with_input(BenchmarkId::from_parameter(kind), &kind, |b, &kind| b.iter(|| derive(kind, black_box(&g))));
    }
    group.finish();

    let (h1, h2) = (Graph::named("C4").unwrap(), Graph::named("P3").unwrap());
    c.bench_function("vertex_edge_join/C7", |b| b.iter(|| sd_vertex_edge_join(black_box(&g), &h1, &h2)));
    c.bench_function("double_corona/T/C7", |b| b.iter(|| double_corona(DerivedKind::T, black_box(&g), &h1, &h2)));
}

fn sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let cfg = SweepConfig::new(Family::AllConnected, 5).claims(["lem-2.2", "lem-2.4", "thm-2.5"]);
    group.bench_function("all-connected/5", |b| b.iter(|| sweep(black_box(&cfg))));
    group.finish();
}

criterion_group!(benches, indices, constructions, sweeps);
criterion_main!(benches);

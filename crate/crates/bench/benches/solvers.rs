use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use graphkit::apspaf::apspaf_floyd;
use graphkit::boolmat::{bool_multiply, transitive_closure};
use graphkit::graph::adjacency_boolean;
use graphkit::{graph_bottleneck, graph_center, CenterMode, Predicate};
use graphkit_bench::{unit_graph, weighted_graph};

fn boolean_kernel(c: &mut Criterion) {
    let mut group = c.benchmark_group("boolmat");
    for n in [64, 256, 1024] {
        let b = adjacency_boolean(&unit_graph(n, 1), None, true);
        group.bench_with_input(BenchmarkId::new("multiply", n), &b, |bench, b| {
            bench.iter(|| bool_multiply(b, b).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("closure", n), &b, |bench, b| {
            bench.iter(|| transitive_closure(b))
        });
    }
    group.finish();
}

fn center(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph_center");
    for n in [64, 256, 1024] {
        let g = unit_graph(n, 2);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |bench, g| {
            bench.iter(|| graph_center(g, CenterMode::Out).unwrap())
        });
    }
    group.finish();
}

fn bottleneck(c: &mut Criterion) {
    let mut group = c.benchmark_group("graph_bottleneck");
    for n in [64, 256, 1024] {
        let g = unit_graph(n, 3);
        group.bench_with_input(BenchmarkId::new("scc", n), &g, |bench, g| {
            bench.iter(|| graph_bottleneck(g, Predicate::Scc).unwrap())
        });
        if n <= 256 {
            group.bench_with_input(BenchmarkId::new("closure", n), &g, |bench, g| {
                bench.iter(|| graph_bottleneck(g, Predicate::Closure).unwrap())
            });
        }
    }
    group.finish();
}

fn all_flows(c: &mut Criterion) {
    let mut group = c.benchmark_group("apspaf_floyd");
    group.sample_size(10);
    for n in [16, 32, 64] {
        let g = weighted_graph(n, 8, 4);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |bench, g| {
            bench.iter(|| apspaf_floyd(g).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, boolean_kernel, center, bottleneck, all_flows);
criterion_main!(benches);

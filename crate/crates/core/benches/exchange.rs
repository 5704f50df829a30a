use std::sync::Arc;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tautilt::dynkin::reduced_algebra;
use tautilt::exchange::{exchange_quiver, exchange_quiver_with, expand_frontier_sequential, ExchangeOptions, DEFAULT_BUDGET};
use tautilt::pair::SttPair;
use tautilt::DEFAULT_PRIME;

fn frontier(spec: &str) -> Vec<SttPair> {
    let a = Arc::new(reduced_algebra(spec.parse().unwrap(), DEFAULT_PRIME).unwrap());
    exchange_quiver(&a, DEFAULT_BUDGET).unwrap().nodes.into_values().collect()
}

fn frontier_expansion(c: &mut Criterion) {
    let mut group = c.benchmark_group("frontier_expansion");
    group.sample_size(10);
    for spec in ["E6", "E8"] {
        let nodes = frontier(spec);
        group.bench_with_input(BenchmarkId::new("sequential", spec), &nodes, |b, n| {
            b.iter(|| expand_frontier_sequential(n).unwrap())
        });
        #[cfg(feature = "parallel")]
        group.bench_with_input(BenchmarkId::new("parallel", spec), &nodes, |b, n| {
            b.iter(|| tautilt::exchange::expand_frontier_parallel(n).unwrap())
        });
    }
    group.finish();
}

fn full_bfs(c: &mut Criterion) {
    let mut group = c.benchmark_group("exchange_quiver");
    group.sample_size(10);
    let a = Arc::new(reduced_algebra("E8".parse().unwrap(), DEFAULT_PRIME).unwrap());
    let max = std::thread::available_parallelism().map_or(4, |n| n.get()).max(2);
    for threads in [1, max] {
        let opts = ExchangeOptions { budget: DEFAULT_BUDGET, threads: Some(threads) };
        group.bench_with_input(BenchmarkId::new("E8", threads), &opts, |b, o| {
            b.iter(|| exchange_quiver_with(&a, o).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, frontier_expansion, full_bfs);
criterion_main!(benches);

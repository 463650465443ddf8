use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use sigcover::construct::construct_six_cover;
use sigcover::instances::{coverable_corpus, CorpusBounds, GenParams};
use sigcover::oracle::{min_k_with_cover, Caps};
use sigcover::{par, SignedGraph};

fn corpus(n: usize) -> Vec<SignedGraph> {
    coverable_corpus(n, GenParams::default(), CorpusBounds::default(), 42)
        .expect("corpus")
        .graphs
}

fn cover_all(c: &mut Criterion) {
    let graphs = corpus(100);
    let build = |g: &SignedGraph| construct_six_cover(g).expect("cover").0.len();
    let mut group = c.benchmark_group("six_cover_corpus");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("sequential", graphs.len()), |b| {
        b.iter(|| par::map_sequential(&graphs, build))
    });
    group.bench_function(BenchmarkId::new("parallel", graphs.len()), |b| {
        b.iter(|| par::map(&graphs, build))
    });
    group.finish();
}

fn min_k_all(c: &mut Criterion) {
    let graphs: Vec<SignedGraph> = corpus(200).into_iter().filter(|g| g.edge_count() <= 12).take(40).collect();
    let solve = |g: &SignedGraph| min_k_with_cover(g, 6, Caps::default()).expect("oracle");
    let mut group = c.benchmark_group("oracle_min_k");
    group.sample_size(10);
    group.bench_function(BenchmarkId::new("sequential", graphs.len()), |b| {
        b.iter(|| par::map_sequential(&graphs, solve))
    });
    group.bench_function(BenchmarkId::new("parallel", graphs.len()), |b| {
        b.iter(|| par::map(&graphs, solve))
    });
    group.finish();
}

criterion_group!(benches, cover_all, min_k_all);
criterion_main!(benches);

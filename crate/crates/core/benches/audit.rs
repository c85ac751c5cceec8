use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use linegraph_core::exec::Execution;
use linegraph_core::graph::connected_graphs_by_order;
use linegraph_core::harness::{audit_items, load_corpus, CorpusSpec, TheoremId};

fn modes() -> [(&'static str, Execution); 2] {
    [("serial", Execution::Serial), ("parallel", Execution::Parallel { jobs: 0 })]
}

fn audits(c: &mut Criterion) {
    let spec = CorpusSpec::generated(7);
    let (items, _) = load_corpus(&spec, false, Execution::Serial).unwrap();
    let mut group = c.benchmark_group("audit_n7");
    group.sample_size(10);
    for theorem in [TheoremId::FirstOrderEquivalence, TheoremId::SecondOrderRepaired] {
        for (name, exec) in modes() {
            group.bench_with_input(BenchmarkId::new(theorem.as_str(), name), &exec, |b, &exec| {
                b.iter(|| audit_items(theorem, &spec, &items, exec))
            });
        }
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("enumerate_n8");
    group.sample_size(10);
    for (name, exec) in modes() {
        group.bench_function(name, |b| b.iter(|| connected_graphs_by_order(8, None, exec).unwrap()));
    }
    group.finish();
}

criterion_group!(benches, audits, enumeration);
criterion_main!(benches);

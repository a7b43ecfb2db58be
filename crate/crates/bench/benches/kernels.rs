use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use smoothgraph_core::decomposition::blob_partition;
use smoothgraph_core::expansion::edge_isoperimetric_exact;
use smoothgraph_core::graph_core::{diameter, generate_base, perturb};
use smoothgraph_core::subset_enum::enumerate_connected_sets;
use smoothgraph_core::walks::mixing_time_exact;
use smoothgraph_core::{BaseKind, Graph, PerturbationParams};

fn perturbed(kind: BaseKind, n: usize, eps: f64) -> Graph {
    let base = generate_base(kind, n, kind.needs_seed().then_some(1)).unwrap();
    perturb(&base, &PerturbationParams::new(eps, 7)).unwrap().merged
}

// Gray-code subset scan behind the exact isoperimetric numbers.
fn exhaustive_scan(c: &mut Criterion) {
    let mut group = c.benchmark_group("edge_isoperimetric_exact");
    group.sample_size(10);
    for n in [16, 20] {
        let g = perturbed(BaseKind::Path, n, 0.5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| {
            b.iter(|| edge_isoperimetric_exact(g, 0.5).unwrap())
        });
    }
    group.finish();
}

fn mixing(c: &mut Criterion) {
    let mut group = c.benchmark_group("mixing_time_exact");
    group.sample_size(10);
    for n in [128, 512] {
        let g = perturbed(BaseKind::Path, n, 0.5);
        group.bench_with_input(BenchmarkId::from_parameter(n), &g, |b, g| b.iter(|| mixing_time_exact(g).unwrap()));
    }
    group.finish();
}

fn blobs(c: &mut Criterion) {
    let mut group = c.benchmark_group("blob_partition");
    for kind in [BaseKind::Path, BaseKind::RandomTree] {
        let g = generate_base(kind, 100_000, kind.needs_seed().then_some(1)).unwrap();
        group.bench_with_input(BenchmarkId::new(kind.name(), 16), &g, |b, g| b.iter(|| blob_partition(g, 16).unwrap()));
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let g = generate_base(BaseKind::Grid, 16, None).unwrap();
    c.bench_function("enumerate_connected_sets/grid16", |b| {
        b.iter(|| (1..=8).map(|a| enumerate_connected_sets(&g, 0, a, 16 - a).len()).sum::<usize>())
    });
}

fn diameters(c: &mut Criterion) {
    let g = perturbed(BaseKind::Path, 1 << 14, 0.5);
    c.bench_function("diameter/path16384", |b| b.iter(|| diameter(&g).unwrap()));
}

criterion_group!(benches, exhaustive_scan, mixing, blobs, enumeration, diameters);
criterion_main!(benches);

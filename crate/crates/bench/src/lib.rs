//! Benchmarks for the exact solvers and searches, registered by
//! `benches/solvers.rs`.

use criterion::{black_box, BenchmarkId, Criterion};

use pwbound::clustering::abyss_free_coloring;
use pwbound::generators::{binary_tree, grid, random_graph, wall};
use pwbound::patterns::{detect_pattern_with, DetectLimits, Relation};
use pwbound::separability::check_separable;
use pwbound::widths::{exact_pathwidth, exact_pathwidth_with_limit, exact_treewidth};
use pwbound::VertexSet;

pub fn widths(c: &mut Criterion) {
    let mut group = c.benchmark_group("widths");
    for n in [8, 12, 14] {
        let g = random_graph(n, 1, 3, 7).unwrap();
        group.bench_with_input(BenchmarkId::new("pathwidth", n), &g, |b, g| b.iter(|| exact_pathwidth(black_box(g))));
        group.bench_with_input(BenchmarkId::new("treewidth", n), &g, |b, g| b.iter(|| exact_treewidth(black_box(g))));
    }
    let tree = binary_tree(4).unwrap();
    group.bench_function("pathwidth/binary-tree-4", |b| {
        b.iter(|| exact_pathwidth_with_limit(black_box(&tree), 128))
    });
    group.finish();
}

pub fn patterns(c: &mut Criterion) {
    let limits = DetectLimits {
        max_host: 128,
        max_pattern: 9,
        ..DetectLimits::default()
    };
    let (host, pattern) = (wall(3).unwrap(), grid(2).unwrap());
    c.bench_function("induced-minor/grid-2-in-wall-3", |b| {
        b.iter(|| detect_pattern_with(black_box(&host), &pattern, Relation::InducedMinor, &limits))
    });
}

pub fn searches(c: &mut Criterion) {
    let g = random_graph(10, 1, 3, 11).unwrap();
    c.bench_function("separable/2-3/n10", |b| b.iter(|| check_separable(black_box(&g), 2, 3)));
    let all = VertexSet::new((0..g.n()).collect());
    c.bench_function("abyss-free-colouring/n10", |b| {
        b.iter(|| abyss_free_coloring(black_box(&g), &all, 2, 4))
    });
}

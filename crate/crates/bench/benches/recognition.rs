use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use h21_core::gadgets::{a_n, complete_graph, cycle_graph, hardness_gadget, GADGET_CENTER};
use h21_core::{chromatic_number, classify, reduce_degree, Graph, TreePath, VptRepresentation};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

fn random_graph(n: usize, p: f64, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut edges = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if rng.gen_bool(p) {
                edges.push((i.to_string(), j.to_string()));
            }
        }
    }
    Graph::from_edges(edges, (0..n).map(|i| i.to_string())).unwrap()
}

/// `A_n` with `extra` pendant leaves hanging off the hub, each carrying a
/// path into it, so the reduction has work to do.
fn crowded(n: usize, extra: usize) -> VptRepresentation {
    let mut rep = a_n(n).unwrap();
    for i in 0..extra {
        let leaf = format!("z{i}");
        rep.tree.add_edge(GADGET_CENTER.to_owned(), leaf.clone()).unwrap();
        rep.paths.insert(format!("Z{i}"), TreePath::new([GADGET_CENTER.to_owned(), leaf.clone()]));
        rep.paths.insert(format!("W{i}"), TreePath::new([leaf]));
    }
    rep
}

fn coloring(c: &mut Criterion) {
    let mut group = c.benchmark_group("chromatic_number");
    for n in [10, 14, 18] {
        let g = random_graph(n, 0.5, n as u64);
        group.bench_with_input(BenchmarkId::new("gnp_0.5", n), &g, |b, g| b.iter(|| chromatic_number(black_box(g))));
    }
    let c9 = cycle_graph(9).unwrap();
    group.bench_function("c9", |b| b.iter(|| chromatic_number(black_box(&c9))));
    group.finish();
}

fn classification(c: &mut Criterion) {
    let mut group = c.benchmark_group("classify");
    for n in [4, 6, 8] {
        let rep = a_n(n).unwrap();
        group.bench_with_input(BenchmarkId::new("a_n", n), &rep, |b, rep| b.iter(|| classify(black_box(rep)).unwrap()));
    }
    let rep = hardness_gadget(&random_graph(9, 0.6, 3))
        .unwrap_or_else(|_| hardness_gadget(&complete_graph(9).unwrap()).unwrap());
    group.bench_function("gadget_gnp9", |b| b.iter(|| classify(black_box(&rep)).unwrap()));
    group.finish();
}

fn reduction(c: &mut Criterion) {
    let mut group = c.benchmark_group("reduce_degree");
    for (n, extra) in [(4, 4), (5, 8), (6, 12)] {
        let rep = crowded(n, extra);
        group.bench_with_input(BenchmarkId::new("crowded_a_n", format!("{n}+{extra}")), &rep, |b, rep| {
            b.iter(|| reduce_degree(black_box(rep), n).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, coloring, classification, reduction);
criterion_main!(benches);

//! Generators and brute-force oracles shared by the integration suites.
//! Nothing here calls into the code paths it is used to check.
#![allow(dead_code)]

use std::collections::BTreeSet;

use h21_core::{Graph, Tree, TreePath, VertexSet, VptRepresentation};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Random labeled tree on `n` nodes `t0..`, biased toward a few hubs so that
/// high-degree nodes are common.
pub fn random_tree(rng: &mut ChaCha8Rng, n: usize) -> Tree {
    let mut tree = Tree::single("t0");
    for i in 1..n {
        let parent = if rng.gen_bool(0.45) {
            0
        } else if i > 2 && rng.gen_bool(0.3) {
            1
        } else {
            rng.gen_range(0..i)
        };
        tree.add_edge(format!("t{parent}"), format!("t{i}")).unwrap();
    }
    tree
}

/// Tree path between `a` and `b` by walking parent pointers of a DFS.
fn tree_path(tree: &Tree, a: &str, b: &str) -> Vec<String> {
    fn dfs(tree: &Tree, cur: &str, goal: &str, prev: Option<&str>, acc: &mut Vec<String>) -> bool {
        acc.push(cur.to_owned());
        if cur == goal {
            return true;
        }
        for n in tree.neighbors(cur).unwrap() {
            if Some(n.as_str()) != prev && dfs(tree, n, goal, Some(cur), acc) {
                return true;
            }
        }
        acc.pop();
        false
    }
    let mut acc = Vec::new();
    assert!(dfs(tree, a, b, None, &mut acc));
    acc
}

/// Random representation with up to `max_nodes` tree nodes and up to
/// `max_paths` paths (at least one of each).
pub fn random_rep(rng: &mut ChaCha8Rng, max_nodes: usize, max_paths: usize) -> VptRepresentation {
    let n = rng.gen_range(1..=max_nodes);
    let tree = random_tree(rng, n);
    let nodes: Vec<String> = tree.nodes().cloned().collect();
    let k = rng.gen_range(1..=max_paths);
    let paths = (0..k)
        .map(|i| {
            let a = nodes.choose(rng).unwrap();
            let b = if rng.gen_bool(0.25) { a } else { nodes.choose(rng).unwrap() };
            (format!("v{i}"), TreePath::new(tree_path(&tree, a, b)))
        })
        .collect();
    VptRepresentation::new(tree, paths)
}

/// Intersection graph by comparing every pair of paths' node sets.
pub fn pairwise_intersection_graph(rep: &VptRepresentation) -> Graph {
    let items: Vec<(&String, BTreeSet<&String>)> =
        rep.paths.iter().map(|(v, p)| (v, p.nodes().iter().collect())).collect();
    let mut edges = Vec::new();
    for (i, (u, pu)) in items.iter().enumerate() {
        for (w, pw) in &items[i + 1..] {
            if !pu.is_disjoint(pw) {
                edges.push(((*u).clone(), (*w).clone()));
            }
        }
    }
    Graph::from_edges(edges, rep.paths.keys().cloned()).unwrap()
}

pub fn graph_from_bits(n: usize, bits: u64) -> Graph {
    let mut edges = Vec::new();
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if bits >> k & 1 == 1 {
                edges.push((format!("{i}"), format!("{j}")));
            }
            k += 1;
        }
    }
    Graph::from_edges(edges, (0..n).map(|i| format!("{i}"))).unwrap()
}

pub fn random_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    let m = n * (n - 1) / 2;
    let bits = (0..m).fold(0u64, |acc, k| if rng.gen_bool(p) { acc | 1 << k } else { acc });
    graph_from_bits(n, bits)
}

pub fn random_connected_graph(rng: &mut ChaCha8Rng, n: usize, p: f64) -> Graph {
    loop {
        let g = random_graph(rng, n, p);
        if is_connected(&g) {
            return g;
        }
    }
}

pub fn is_connected(g: &Graph) -> bool {
    let verts: Vec<&String> = g.vertices().collect();
    let Some(first) = verts.first() else { return true };
    let mut seen = BTreeSet::from([(*first).clone()]);
    let mut stack = vec![(*first).clone()];
    while let Some(v) = stack.pop() {
        for w in g.neighbors(&v).unwrap() {
            if seen.insert(w.clone()) {
                stack.push(w.clone());
            }
        }
    }
    seen.len() == verts.len()
}

/// Every connected labeled graph on `1..=max_n` vertices.
pub fn all_connected_graphs(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 1..=max_n {
        let m = n * (n - 1) / 2;
        for bits in 0..1u64 << m {
            let g = graph_from_bits(n, bits);
            if is_connected(&g) {
                out.push(g);
            }
        }
    }
    out
}

/// Chromatic number by trying every assignment of `k` colors, `k = 0, 1, ...`.
pub fn brute_chromatic(g: &Graph) -> usize {
    let verts: Vec<&String> = g.vertices().collect();
    let n = verts.len();
    if n == 0 {
        return 0;
    }
    let idx = |v: &String| verts.iter().position(|x| *x == v).unwrap();
    let edges: Vec<(usize, usize)> = g.edges().map(|(u, v)| (idx(u), idx(v))).collect();
    for k in 1..=n {
        let total = k.pow(n as u32);
        let mut colors = vec![0usize; n];
        for code in 0..total {
            let mut c = code;
            for slot in colors.iter_mut() {
                *slot = c % k;
                c /= k;
            }
            if edges.iter().all(|&(a, b)| colors[a] != colors[b]) {
                return k;
            }
        }
    }
    n
}

/// Whether some assignment of `k` colors is proper.
pub fn brute_colorable(g: &Graph, k: usize) -> bool {
    let n = g.vertex_count();
    n == 0 || (k > 0 && brute_chromatic(g) <= k)
}

/// Maximal cliques by checking every vertex subset.
pub fn brute_maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let verts: Vec<&String> = g.vertices().collect();
    let n = verts.len();
    let complete: Vec<u32> = (0u32..1 << n)
        .filter(|&mask| {
            (0..n)
                .all(|i| (i + 1..n).all(|j| mask >> i & 1 == 0 || mask >> j & 1 == 0 || g.has_edge(verts[i], verts[j])))
        })
        .collect();
    let as_set = |mask: u32| -> VertexSet { (0..n).filter(|i| mask >> i & 1 == 1).map(|i| verts[i].clone()).collect() };
    let mut out: Vec<VertexSet> = complete
        .iter()
        .filter(|&&m| {
            let extends = |j: usize| (0..n).all(|i| m >> i & 1 == 0 || g.has_edge(verts[i], verts[j]));
            m != 0 && (0..n).all(|j| m >> j & 1 == 1 || !extends(j))
        })
        .map(|&m| as_set(m))
        .collect();
    out.sort();
    out
}

/// Random split graph: stable `s*`, clique `k*`, each clique vertex sees at
/// most two stable vertices. Up to `max_vertices` vertices in total.
pub fn random_split_two_stable(rng: &mut ChaCha8Rng, max_vertices: usize) -> (Graph, VertexSet, VertexSet) {
    let ns = rng.gen_range(5..=max_vertices / 2);
    let nk = rng.gen_range(4..=max_vertices - ns);
    let stable: Vec<String> = (0..ns).map(|i| format!("s{i}")).collect();
    let clique: Vec<String> = (0..nk).map(|i| format!("k{i}")).collect();
    // Half the time the first clique vertices wire a cycle of 4 or 5 stable
    // vertices, so that branch graphs with holes are common.
    let ring: Vec<&String> = if rng.gen_bool(0.5) {
        let len = rng.gen_range(4..=5).min(nk);
        stable.choose_multiple(rng, len).collect()
    } else {
        Vec::new()
    };
    let mut edges = Vec::new();
    for (i, a) in clique.iter().enumerate() {
        for b in &clique[i + 1..] {
            edges.push((a.clone(), b.clone()));
        }
        if i < ring.len() && ring.len() >= 4 {
            edges.push((a.clone(), ring[i].clone()));
            edges.push((a.clone(), ring[(i + 1) % ring.len()].clone()));
            continue;
        }
        // Otherwise mostly two stable neighbors.
        let take = if rng.gen_bool(0.8) { 2 } else { rng.gen_range(0..=1) };
        for s in stable.choose_multiple(rng, take) {
            edges.push((a.clone(), s.clone()));
        }
    }
    let g = Graph::from_edges(edges, stable.iter().chain(&clique).cloned()).unwrap();
    (g, stable.into_iter().collect(), clique.into_iter().collect())
}

/// Whether `set` induces a cycle in `g` (every vertex has exactly two
/// neighbors inside and the induced graph is connected).
pub fn induces_cycle(g: &Graph, set: &[String]) -> bool {
    let inside: BTreeSet<&String> = set.iter().collect();
    set.len() >= 3
        && set.iter().all(|v| g.neighbors(v).unwrap().iter().filter(|w| inside.contains(w)).count() == 2)
        && is_connected(&g.induced_subgraph(set).unwrap())
}

/// Every `len`-subset of `g` inducing a cycle, in cyclic order.
pub fn brute_induced_cycles(g: &Graph, len: usize) -> Vec<Vec<String>> {
    let verts: Vec<String> = g.vertices().cloned().collect();
    let n = verts.len();
    let mut out = Vec::new();
    if n < len || n > 20 {
        return out;
    }
    for mask in 0u32..1 << n {
        if mask.count_ones() as usize != len {
            continue;
        }
        let set: Vec<String> = (0..n).filter(|i| mask >> i & 1 == 1).map(|i| verts[i].clone()).collect();
        if induces_cycle(g, &set) {
            // Walk the cycle.
            let mut order = vec![set[0].clone()];
            while order.len() < len {
                let last = order.last().unwrap();
                let next =
                    g.neighbors(last).unwrap().iter().find(|w| set.contains(w) && !order.contains(w)).unwrap().clone();
                order.push(next);
            }
            out.push(order);
        }
    }
    out
}

pub fn complement(g: &Graph) -> Graph {
    let verts: Vec<&String> = g.vertices().collect();
    let mut edges = Vec::new();
    for (i, a) in verts.iter().enumerate() {
        for b in &verts[i + 1..] {
            if !g.has_edge(a, b) {
                edges.push(((*a).clone(), (*b).clone()));
            }
        }
    }
    Graph::from_edges(edges, verts.iter().map(|v| (*v).clone())).unwrap()
}

pub fn petersen() -> Graph {
    let mut e = Vec::new();
    for i in 0..5 {
        e.push((format!("o{i}"), format!("o{}", (i + 1) % 5)));
        e.push((format!("i{i}"), format!("i{}", (i + 2) % 5)));
        e.push((format!("o{i}"), format!("i{i}")));
    }
    Graph::from_edges(e, Vec::<String>::new()).unwrap()
}

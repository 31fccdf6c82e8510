//! Exact vertex coloring by backtracking.
//!
//! Vertices are visited in largest-degree-first order (ties by label). The
//! first vertex gets color 0 and a vertex may only open the next unused color,
//! so each partition into color classes is explored once.

use std::collections::BTreeMap;

use crate::graph::{Graph, Label, VertexSet};

/// Proper coloring using colors `0..k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Coloring {
    pub assignment: BTreeMap<Label, usize>,
    pub k: usize,
}

impl Coloring {
    pub fn color(&self, v: &str) -> Option<usize> {
        self.assignment.get(v).copied()
    }

    /// Color classes in color order.
    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::new(); self.k];
        for (v, &c) in &self.assignment {
            out[c].insert(v.clone());
        }
        out
    }
}

fn search_order(g: &Graph) -> Vec<&Label> {
    let mut order: Vec<&Label> = g.vertices().collect();
    order.sort_by(|a, b| g.degree(b).cmp(&g.degree(a)).then_with(|| a.cmp(b)));
    order
}

/// A proper coloring with at most `k` colors, if one exists.
pub fn k_colorable(g: &Graph, k: usize) -> Option<Coloring> {
    if g.is_empty() {
        return Some(Coloring { assignment: BTreeMap::new(), k: 0 });
    }
    if k == 0 {
        return None;
    }
    let order = search_order(g);
    let index: BTreeMap<&str, usize> = order.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
    let earlier: Vec<Vec<usize>> = order
        .iter()
        .enumerate()
        .map(|(i, v)| g.neighbors(v).expect("vertex").iter().map(|w| index[w.as_str()]).filter(|&j| j < i).collect())
        .collect();

    let mut colors = vec![usize::MAX; order.len()];
    if !extend(0, 0, k, &earlier, &mut colors) {
        return None;
    }
    let used = colors.iter().max().map_or(0, |m| m + 1);
    Some(Coloring { assignment: order.iter().zip(&colors).map(|(v, &c)| ((*v).clone(), c)).collect(), k: used })
}

fn extend(i: usize, used: usize, k: usize, earlier: &[Vec<usize>], colors: &mut [usize]) -> bool {
    if i == colors.len() {
        return true;
    }
    let limit = (used + 1).min(k);
    for c in 0..limit {
        if earlier[i].iter().any(|&j| colors[j] == c) {
            continue;
        }
        colors[i] = c;
        if extend(i + 1, used.max(c + 1), k, earlier, colors) {
            return true;
        }
    }
    colors[i] = usize::MAX;
    false
}

/// Greedy coloring in search order; an upper bound for `chi`.
pub fn greedy_coloring(g: &Graph) -> Coloring {
    let mut assignment: BTreeMap<Label, usize> = BTreeMap::new();
    for v in search_order(g) {
        let taken: Vec<usize> =
            g.neighbors(v).expect("vertex").iter().filter_map(|w| assignment.get(w).copied()).collect();
        let c = (0..).find(|c| !taken.contains(c)).expect("unbounded");
        assignment.insert(v.clone(), c);
    }
    let k = assignment.values().max().map_or(0, |m| m + 1);
    Coloring { assignment, k }
}

/// Size of a largest complete set (Bron-Kerbosch with pivoting).
pub fn clique_number(g: &Graph) -> usize {
    fn expand(g: &Graph, r: usize, p: VertexSet, mut x: VertexSet, best: &mut usize) {
        if p.is_empty() {
            if x.is_empty() {
                *best = (*best).max(r);
            }
            return;
        }
        if r + p.len() <= *best {
            return;
        }
        let pivot = p
            .iter()
            .chain(&x)
            .max_by_key(|u| g.neighbors(u).expect("vertex").intersection(&p).count())
            .expect("nonempty")
            .clone();
        let pivot_nbrs = g.neighbors(&pivot).expect("vertex");
        let mut p = p;
        for v in p.clone().iter().filter(|v| !pivot_nbrs.contains(*v)) {
            let nv = g.neighbors(v).expect("vertex");
            expand(g, r + 1, p.intersection(nv).cloned().collect(), x.intersection(nv).cloned().collect(), best);
            p.remove(v);
            x.insert(v.clone());
        }
    }
    let mut best = 0;
    expand(g, 0, g.vertex_set(), VertexSet::new(), &mut best);
    best
}

/// Exact chromatic number. `chi` of the empty graph is 0.
pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).k
}

/// A coloring with exactly `chi(g)` colors.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    let greedy = greedy_coloring(g);
    let lower = clique_number(g);
    (lower..greedy.k).find_map(|k| k_colorable(g, k)).unwrap_or(greedy)
}

pub fn validate_coloring(g: &Graph, c: &Coloring) -> bool {
    g.vertices().all(|v| c.assignment.contains_key(v)) && g.edges().all(|(u, v)| c.assignment[u] != c.assignment[v])
}

#[cfg(test)]
mod tests {
    use super::*;

    fn complete(n: usize) -> Graph {
        let mut e = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                e.push((format!("{i}"), format!("{j}")));
            }
        }
        Graph::from_edges(e, (0..n).map(|i| format!("{i}"))).unwrap()
    }

    fn cycle(n: usize) -> Graph {
        Graph::from_edges((0..n).map(|i| (format!("{i}"), format!("{}", (i + 1) % n))), Vec::<String>::new()).unwrap()
    }

    fn petersen() -> Graph {
        let mut e = Vec::new();
        for i in 0..5 {
            e.push((format!("o{i}"), format!("o{}", (i + 1) % 5)));
            e.push((format!("i{i}"), format!("i{}", (i + 2) % 5)));
            e.push((format!("o{i}"), format!("i{i}")));
        }
        Graph::from_edges(e, Vec::<String>::new()).unwrap()
    }

    #[test]
    fn complete_graphs() {
        assert!(k_colorable(&complete(4), 3).is_none());
        let c = k_colorable(&complete(4), 4).unwrap();
        assert!(validate_coloring(&complete(4), &c));
        assert_eq!(c.k, 4);
        for n in 1..=6 {
            assert_eq!(chromatic_number(&complete(n)), n);
        }
    }

    #[test]
    fn odd_cycle() {
        assert!(k_colorable(&cycle(5), 2).is_none());
        assert!(k_colorable(&cycle(5), 3).is_some());
        assert_eq!(chromatic_number(&cycle(5)), 3);
        assert_eq!(chromatic_number(&cycle(6)), 2);
    }

    #[test]
    fn petersen_is_three_chromatic() {
        let p = petersen();
        assert!(k_colorable(&p, 2).is_none());
        assert_eq!(chromatic_number(&p), 3);
        assert_eq!(clique_number(&p), 2);
    }

    #[test]
    fn corner_cases() {
        assert_eq!(chromatic_number(&Graph::new()), 0);
        let edgeless = Graph::from_edges(Vec::<(String, String)>::new(), ["a", "b"]).unwrap();
        assert_eq!(chromatic_number(&edgeless), 1);
        assert!(k_colorable(&edgeless, 0).is_none());
        assert!(k_colorable(&Graph::new(), 0).is_some());
    }

    #[test]
    fn coloring_validation() {
        let k2 = complete(2);
        let ok = Coloring { assignment: [("0".into(), 0), ("1".into(), 1)].into(), k: 2 };
        let clash = Coloring { assignment: [("0".into(), 0), ("1".into(), 0)].into(), k: 1 };
        let partial = Coloring { assignment: [("0".into(), 0)].into(), k: 1 };
        assert!(validate_coloring(&k2, &ok));
        assert!(!validate_coloring(&k2, &clash));
        assert!(!validate_coloring(&k2, &partial));
    }

    #[test]
    fn deterministic() {
        let p = petersen();
        assert_eq!(k_colorable(&p, 3), k_colorable(&p, 3));
    }

    #[test]
    fn colors_are_contiguous() {
        let c = k_colorable(&cycle(7), 5).unwrap();
        assert_eq!(c.k, 3);
        assert_eq!(c.classes().len(), 3);
        assert!(c.classes().iter().all(|cls| !cls.is_empty()));
    }
}

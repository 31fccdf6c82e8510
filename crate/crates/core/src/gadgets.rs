//! Graph families and the coloring-to-recognition gadget.
//!
//! [`hardness_gadget`] turns a connected graph `G` on `v_1..v_n` into a split
//! VPT graph on a star host tree (center `q`, leaves `y_<v>`):
//!
//! * `P_<v>` is the single leaf `y_<v>`;
//! * `P_<u>_<w>` runs `y_<u> q y_<w>` for each edge `uw` (`u < w`);
//! * `P_<v>_q` runs `q y_<v>` for each vertex `v` of degree at most one (degree
//!   zero only happens for the one-vertex graph).
//!
//! The branch graph of the central clique `C_q` is `G` itself (under
//! `P_<v> -> v`), and every leaf clique has an edgeless branch graph, so the
//! gadget's class is decided by `chi(G)`.

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, Label};
use crate::rep::VptRepresentation;
use crate::tree::{Tree, TreePath};

pub const GADGET_CENTER: &str = "q";

pub fn leaf_label(v: &str) -> Label {
    format!("y_{v}")
}

/// Gadget vertex standing for the graph vertex `v`.
pub fn stable_label(v: &str) -> Label {
    format!("P_{v}")
}

pub fn edge_label(u: &str, w: &str) -> Label {
    let (a, b) = if u < w { (u, w) } else { (w, u) };
    format!("P_{a}_{b}")
}

pub fn pendant_label(v: &str) -> Label {
    format!("P_{v}_q")
}

pub fn hardness_gadget(g: &Graph) -> Result<VptRepresentation> {
    if g.is_empty() {
        return Err(Error::EmptyGraph);
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let tree = Tree::from_edges(g.vertices().map(|v| (GADGET_CENTER.to_owned(), leaf_label(v))))?;

    let mut paths: BTreeMap<Label, TreePath> = BTreeMap::new();
    let mut put = |label: Label, nodes: Vec<Label>| -> Result<()> {
        if paths.insert(label.clone(), TreePath(nodes)).is_some() {
            return Err(Error::LabelCollision(label));
        }
        Ok(())
    };
    for v in g.vertices() {
        put(stable_label(v), vec![leaf_label(v)])?;
        if g.degree(v) <= Some(1) {
            put(pendant_label(v), vec![GADGET_CENTER.to_owned(), leaf_label(v)])?;
        }
    }
    for (u, w) in g.edges() {
        put(edge_label(u, w), vec![leaf_label(u), GADGET_CENTER.to_owned(), leaf_label(w)])?;
    }
    let rep = VptRepresentation::new(tree, paths);
    debug_assert!(rep.validate().is_valid());
    Ok(rep)
}

/// Stable vertices of the gadget, `P_<v>` for `v` in `g`.
pub fn gadget_stable_set(g: &Graph) -> BTreeSet<Label> {
    g.vertices().map(|v| stable_label(v)).collect()
}

/// `S_n` on stable `s1..sn` and clique `v1..vn`, with `s_i ~ v_i, v_{i+1}`
/// cyclically.
pub fn sun(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(Error::BadParameter(format!("sun needs n >= 4, got {n}")));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((format!("v{i}"), format!("v{j}")));
        }
        edges.push((format!("s{i}"), format!("v{i}")));
        edges.push((format!("s{i}"), format!("v{}", i % n + 1)));
    }
    Graph::from_edges(edges, Vec::<Label>::new())
}

/// `A_n` represented as the gadget of `K_n` (vertices `1..n`): stable
/// vertices `P_i`, clique vertices `P_i_j` with `N(P_i_j) = {P_i, P_j}`.
/// `n = 3` is accepted although the family proper starts at 4; see
/// [`a_n_is_degenerate`].
pub fn a_n(n: usize) -> Result<VptRepresentation> {
    if n < 3 {
        return Err(Error::BadParameter(format!("A_n needs n >= 3, got {n}")));
    }
    let rep = hardness_gadget(&complete_graph(n)?)?;
    debug_assert_eq!(rep.intersection_graph().ok(), Some(a_n_direct(n)));
    Ok(rep)
}

pub fn a_n_is_degenerate(n: usize) -> bool {
    n == 3
}

/// `A_n` straight from its definition, for cross-checking [`a_n`].
pub fn a_n_direct(n: usize) -> Graph {
    let names: Vec<Label> = (1..=n).map(|i| i.to_string()).collect();
    let mut pairs = Vec::new();
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            pairs.push(edge_label(a, b));
        }
    }
    let mut edges = Vec::new();
    for (i, a) in pairs.iter().enumerate() {
        for b in &pairs[i + 1..] {
            edges.push((a.clone(), b.clone()));
        }
    }
    for (i, a) in names.iter().enumerate() {
        for b in &names[i + 1..] {
            edges.push((edge_label(a, b), stable_label(a)));
            edges.push((edge_label(a, b), stable_label(b)));
        }
    }
    Graph::from_edges(edges, names.iter().map(|v| stable_label(v))).expect("no loops")
}

/// The spider with three legs of length two (`c`, `a1 a2`, `b1 b2`,
/// `d1 d2`), represented on a host tree of the same shape.
pub fn t32() -> VptRepresentation {
    let tree = Tree::from_edges([("c", "a1"), ("a1", "a2"), ("c", "b1"), ("b1", "b2"), ("c", "d1"), ("d1", "d2")])
        .expect("no loops");
    let paths = [
        ("c", &["a1", "c", "b1"][..]),
        ("a1", &["a1", "a2"]),
        ("a2", &["a2"]),
        ("b1", &["b1", "b2"]),
        ("b2", &["b2"]),
        ("d1", &["c", "d1"]),
        ("d2", &["d1", "d2"]),
    ]
    .into_iter()
    .map(|(v, p)| (v.to_owned(), TreePath::new(p.iter().copied())))
    .collect();
    VptRepresentation::new(tree, paths)
}

/// `K_n` on labels `1..n`.
pub fn complete_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("K_n needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        for j in i + 1..=n {
            edges.push((i.to_string(), j.to_string()));
        }
    }
    Graph::from_edges(edges, (1..=n).map(|i| i.to_string()))
}

/// `C_n` on labels `1..n`.
pub fn cycle_graph(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(Error::BadParameter(format!("C_n needs n >= 3, got {n}")));
    }
    Graph::from_edges((1..=n).map(|i| (i.to_string(), (i % n + 1).to_string())), Vec::<Label>::new())
}

/// `P_n` (n vertices) on labels `1..n`.
pub fn path_graph(n: usize) -> Result<Graph> {
    if n == 0 {
        return Err(Error::BadParameter("P_n needs n >= 1".into()));
    }
    Graph::from_edges((1..n).map(|i| (i.to_string(), (i + 1).to_string())), (1..=n).map(|i| i.to_string()))
}

//! Membership in `[h,2,1]` and host-tree degree reduction.
//!
//! A VPT graph has a representation on a tree of maximum degree `h >= 3` iff
//! the branch graph of every maximal clique is `h`-colorable. The smallest
//! such `h` is therefore `max(3, max chi(B(G/C)))`. For `h >= 4`,
//! [`reduce_degree`] turns any representation into one on a tree of degree
//! at most `h` using three surgeries:
//!
//! * [`lemma3_split`] hangs two neighbors of `q` that share no path below a
//!   fresh node, lowering `d(q)` by one;
//! * [`VptRepresentation::contract_edge`] folds a neighbor into `q` when every
//!   path through it also passes through `q`;
//! * a regrouping step colors `B(G/C_q)`, gathers the neighbors of `q` into one
//!   class per color, and hangs each class under a new node by a balanced
//!   binary tree.

use std::collections::{BTreeMap, BTreeSet};

use crate::branch::branch_graph;
use crate::coloring::{chromatic_number, k_colorable, optimal_coloring};
use crate::error::{Error, Result};
use crate::graph::{Graph, Label, VertexSet};
use crate::rep::VptRepresentation;
use crate::tree::Tree;

/// Per-clique branch-graph chromatic numbers and the resulting class bound.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassReport {
    /// Least `h >= 3` with the graph in `[h,2,1]`.
    pub h_star: usize,
    pub per_clique: Vec<(VertexSet, usize)>,
}

impl ClassReport {
    pub fn max_chi(&self) -> usize {
        self.per_clique.iter().map(|(_, chi)| *chi).max().unwrap_or(0)
    }
}

pub(crate) fn join(set: &VertexSet) -> String {
    set.iter().map(String::as_str).collect::<Vec<_>>().join(",")
}

/// Branch graph of `C_q` for a tree node `q`.
pub fn branch_graph_at(rep: &VptRepresentation, q: &str) -> Result<Graph> {
    let g = rep.intersection_graph()?;
    branch_graph(&g, &rep.clique_at(q)?)
}

fn branch_graphs(rep: &VptRepresentation) -> Result<Vec<(VertexSet, Graph)>> {
    let g = rep.intersection_graph()?;
    rep.cliques()?
        .into_iter()
        .map(|c| {
            let b = branch_graph(&g, &c)?;
            Ok((c, b))
        })
        .collect()
}

/// Whether the represented graph lies in `[h,2,1]`, for `h >= 3`.
pub fn is_member(rep: &VptRepresentation, h: usize) -> Result<bool> {
    let branches = branch_graphs(rep)?;
    if h <= 2 {
        let note = match branches.iter().find(|(_, b)| k_colorable(b, h).is_none()) {
            Some((c, _)) => format!(
                "the coloring test only decides h >= 3; the branch graph of clique {{{}}} is not {h}-colorable, which still rules out [{h},2,1]",
                join(c)
            ),
            None => format!(
                "the coloring test only decides h >= 3; every branch graph is {h}-colorable, which does not settle [{h},2,1]"
            ),
        };
        return Err(Error::UnsupportedH { h, note });
    }
    Ok(branches.iter().all(|(_, b)| k_colorable(b, h).is_some()))
}

pub fn classify(rep: &VptRepresentation) -> Result<ClassReport> {
    let per_clique: Vec<(VertexSet, usize)> =
        branch_graphs(rep)?.into_iter().map(|(c, b)| (c, chromatic_number(&b))).collect();
    let h_star = per_clique.iter().map(|(_, chi)| *chi).max().unwrap_or(0).max(3);
    Ok(ClassReport { h_star, per_clique })
}

/// Inserts a new node `a` between `q` and the neighbors `y1`, `y2`, which no
/// path may both contain. Paths through `y1 q` or `y2 q` gain `a`; `a` ends
/// with degree 3 and `q` loses one.
pub fn lemma3_split(rep: &VptRepresentation, q: &str, y1: &str, y2: &str) -> Result<VptRepresentation> {
    rep.ensure_valid()?;
    let degree = rep.tree.degree(q).ok_or_else(|| Error::UnknownTreeNode(q.to_owned()))?;
    if degree < 4 {
        return Err(Error::PreconditionViolated(format!("`{q}` has degree {degree} < 4")));
    }
    if y1 == y2 {
        return Err(Error::PreconditionViolated(format!("`{y1}` given twice")));
    }
    for y in [y1, y2] {
        if !rep.tree.has_edge(q, y) {
            return Err(Error::PreconditionViolated(format!("`{y}` is not a neighbor of `{q}`")));
        }
    }
    if let Some((v, _)) = rep.paths.iter().find(|(_, p)| p.contains(y1) && p.contains(y2)) {
        return Err(Error::PreconditionViolated(format!("path `{v}` contains both `{y1}` and `{y2}`")));
    }
    let mut tree = rep.tree.clone();
    let a = tree.fresh_label("a");
    tree.remove_edge(q, y1)?;
    tree.remove_edge(q, y2)?;
    for n in [y1, y2, q] {
        tree.add_edge(a.clone(), n.to_owned())?;
    }
    rep.rethread(tree)
}

/// Rewrites `rep` onto a host tree of maximum degree at most `h >= 4`,
/// keeping the labeled intersection graph.
pub fn reduce_degree(rep: &VptRepresentation, h: usize) -> Result<VptRepresentation> {
    if h < 4 {
        return Err(Error::UnsupportedH { h, note: "the degree-reduction construction needs h >= 4".to_owned() });
    }
    let graph = rep.intersection_graph()?;
    for c in rep.cliques()? {
        if k_colorable(&branch_graph(&graph, &c)?, h).is_none() {
            return Err(Error::NotHColorable { h, clique: join(&c) });
        }
    }

    let mut cur = rep.clone();
    let mut over = over_degree(&cur.tree, h);
    while let Some(q) = over.iter().next().cloned() {
        cur = reduce_at(&cur, &q, h, &graph)?;
        let now = over_degree(&cur.tree, h);
        if now.len() >= over.len() || now.contains(&q) {
            return Err(Error::NonProgress(format!(
                "processing `{q}` left {} nodes above degree {h} (was {})",
                now.len(),
                over.len()
            )));
        }
        over = now;
    }
    debug_assert!(cur.tree.max_degree() <= h);
    Ok(cur)
}

fn over_degree(tree: &Tree, h: usize) -> BTreeSet<Label> {
    tree.nodes().filter(|n| tree.degree(n).unwrap_or(0) > h).cloned().collect()
}

fn same_graph(graph: &Graph, rep: &VptRepresentation, step: &str) -> Result<()> {
    if rep.intersection_graph()? != *graph {
        return Err(Error::NonProgress(format!("{step} changed the intersection graph")));
    }
    Ok(())
}

fn reduce_at(rep: &VptRepresentation, q: &str, h: usize, graph: &Graph) -> Result<VptRepresentation> {
    let mut cur = rep.clone();
    // Every pass either finishes or removes at least one tree node.
    for _ in 0..=rep.tree.node_count() {
        if cur.tree.degree(q).unwrap_or(0) <= h {
            return Ok(cur);
        }
        if let Some(done) = merge_non_sharing(&cur, q, h, graph)? {
            return Ok(done);
        }
        let bare: Vec<Label> =
            cur.tree.neighbors(q).expect("node").iter().filter(|y| !cur.has_branch_witness(q, y)).cloned().collect();
        if bare.is_empty() {
            return regroup(&cur, q, h, graph);
        }
        for y in bare {
            if cur.tree.has_edge(q, &y) && !cur.has_branch_witness(q, &y) {
                cur = cur.contract_edge(q, &y)?;
                same_graph(graph, &cur, "contraction")?;
            }
        }
    }
    Err(Error::NonProgress(format!("node `{q}` kept growing under contraction")))
}

/// Repeated [`lemma3_split`] at `q` on the first non-sharing neighbor pair.
/// Returns the result only if it brings `d(q)` down to `h`; otherwise the
/// caller continues from the unsplit representation, since the inserted
/// nodes carry no path of their own and would just be contracted again.
fn merge_non_sharing(rep: &VptRepresentation, q: &str, h: usize, graph: &Graph) -> Result<Option<VptRepresentation>> {
    let mut cur = rep.clone();
    while cur.tree.degree(q).unwrap_or(0) > h {
        let Some((y1, y2)) = first_non_sharing_pair(&cur, q) else {
            return Ok(None);
        };
        cur = lemma3_split(&cur, q, &y1, &y2)?;
        same_graph(graph, &cur, "split")?;
    }
    Ok(Some(cur))
}

fn first_non_sharing_pair(rep: &VptRepresentation, q: &str) -> Option<(Label, Label)> {
    let nbrs: Vec<&Label> = rep.tree.neighbors(q)?.iter().collect();
    for (i, a) in nbrs.iter().enumerate() {
        for b in &nbrs[i + 1..] {
            if !rep.paths.values().any(|p| p.contains(a) && p.contains(b)) {
                return Some(((*a).clone(), (*b).clone()));
            }
        }
    }
    None
}

/// Regroups the neighbors of `q` by a coloring of `B(G/C_q)`.
///
/// Each neighbor `y` has a witness path inside its branch through `y`; `y`
/// takes the witness's color. A neighbor whose paths through `q` all continue
/// into one other neighbor `y'` conflicts only with `y'` and is colored
/// greedily instead. Two neighbors may share a class only if no path runs
/// through both.
fn regroup(rep: &VptRepresentation, q: &str, h: usize, graph: &Graph) -> Result<VptRepresentation> {
    let cq = rep.clique_at(q)?;
    if let Some(v) = graph.vertices().find(|v| !cq.contains(*v) && cq.is_subset(graph.neighbors(v).expect("vertex"))) {
        return Err(Error::NonProgress(format!("C_{q} is not maximal (`{v}` extends it)")));
    }
    let b = branch_graph(graph, &cq)?;
    // An optimal coloring keeps d(q) as small as the argument allows.
    let b_coloring = optimal_coloring(&b);
    if b_coloring.k > h {
        return Err(Error::NotHColorable { h, clique: join(&cq) });
    }

    let ys: Vec<Label> = rep.tree.neighbors(q).expect("node").iter().cloned().collect();
    let through: BTreeMap<&Label, VertexSet> = ys
        .iter()
        .map(|y| {
            let n = cq.iter().filter(|v| rep.paths[*v].contains(y)).cloned().collect();
            (y, n)
        })
        .collect();
    let conflict = |a: &Label, b: &Label| a != b && !through[a].is_disjoint(&through[b]);
    let dependent =
        |y: &Label| !through[y].is_empty() && ys.iter().any(|z| z != y && through[y].is_subset(&through[z]));

    let mut color: BTreeMap<&Label, usize> = BTreeMap::new();
    for y in &ys {
        if through[y].is_empty() {
            color.insert(y, 0);
        } else if !dependent(y) {
            let witness = rep
                .paths
                .iter()
                .find(|(_, p)| p.contains(y) && !p.contains(q))
                .map(|(v, _)| v)
                .ok_or_else(|| Error::NonProgress(format!("neighbor `{y}` of `{q}` has no witness path")))?;
            let c = b_coloring
                .color(witness)
                .ok_or_else(|| Error::NonProgress(format!("witness `{witness}` is not in B(G/C_{q})")))?;
            color.insert(y, c);
        }
    }
    for y in ys.iter().filter(|y| dependent(y)) {
        let taken: BTreeSet<usize> =
            ys.iter().filter(|z| conflict(y, z)).filter_map(|z| color.get(z).copied()).collect();
        let c = (0..).find(|c| !taken.contains(c)).expect("unbounded");
        color.insert(y, c);
    }
    for (i, a) in ys.iter().enumerate() {
        for b in &ys[i + 1..] {
            if conflict(a, b) && color[a] == color[b] {
                return Err(Error::NonProgress(format!("neighbors `{a}` and `{b}` share a path and a color")));
            }
        }
    }

    let mut classes: BTreeMap<usize, Vec<Label>> = BTreeMap::new();
    for (y, c) in &color {
        classes.entry(*c).or_default().push((*y).clone());
    }
    if classes.len() > h {
        return Err(Error::NonProgress(format!("{} classes exceed h = {h}", classes.len())));
    }

    let mut tree = rep.tree.clone();
    for y in &ys {
        tree.remove_edge(q, y)?;
    }
    for leaves in classes.values() {
        let mu = tree.fresh_label("mu");
        tree.add_edge(q.to_owned(), mu.clone())?;
        hang_balanced(&mut tree, &mu, leaves)?;
    }
    let out = rep.rethread(tree)?;
    same_graph(graph, &out, "regrouping")?;
    Ok(out)
}

/// Attaches `leaves` (already sorted) below `root` as a balanced binary tree;
/// every new internal node has degree 3.
fn hang_balanced(tree: &mut Tree, root: &str, leaves: &[Label]) -> Result<()> {
    if leaves.len() <= 2 {
        for y in leaves {
            tree.add_edge(root.to_owned(), y.clone())?;
        }
        return Ok(());
    }
    let (left, right) = leaves.split_at(leaves.len().div_ceil(2));
    for half in [left, right] {
        if let [only] = half {
            tree.add_edge(root.to_owned(), only.clone())?;
        } else {
            let inner = tree.fresh_label("b");
            tree.add_edge(root.to_owned(), inner.clone())?;
            hang_balanced(tree, &inner, half)?;
        }
    }
    Ok(())
}

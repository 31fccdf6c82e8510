//! Host trees and the paths drawn in them.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::Label;

/// Undirected host tree. Construction does not enforce acyclicity or
/// connectivity; [`Tree::check`] reports those problems so that malformed
/// input can still be loaded and diagnosed.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Tree {
    adj: BTreeMap<Label, BTreeSet<Label>>,
}

impl Tree {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn single(node: impl Into<Label>) -> Self {
        let mut t = Self::new();
        t.add_node(node.into());
        t
    }

    pub fn from_edges<I, A, B>(edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        A: Into<Label>,
        B: Into<Label>,
    {
        let mut t = Self::new();
        for (a, b) in edges {
            t.add_edge(a.into(), b.into())?;
        }
        Ok(t)
    }

    pub fn add_node(&mut self, node: Label) {
        self.adj.entry(node).or_default();
    }

    pub fn add_edge(&mut self, a: Label, b: Label) -> Result<()> {
        if a == b {
            return Err(Error::SelfLoop(a));
        }
        self.adj.entry(a.clone()).or_default().insert(b.clone());
        self.adj.entry(b).or_default().insert(a);
        Ok(())
    }

    pub(crate) fn remove_edge(&mut self, a: &str, b: &str) -> Result<()> {
        let present = self.adj.get_mut(a).is_some_and(|n| n.remove(b));
        if !present {
            return Err(Error::UnknownEdge(a.to_owned(), b.to_owned()));
        }
        self.adj.get_mut(b).map(|n| n.remove(a));
        Ok(())
    }

    pub(crate) fn remove_node(&mut self, node: &str) {
        if let Some(nbrs) = self.adj.remove(node) {
            for n in nbrs {
                self.adj.get_mut(&n).map(|s| s.remove(node));
            }
        }
    }

    pub fn node_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn contains(&self, node: &str) -> bool {
        self.adj.contains_key(node)
    }

    pub fn nodes(&self) -> impl Iterator<Item = &Label> + '_ {
        self.adj.keys()
    }

    pub fn neighbors(&self, node: &str) -> Option<&BTreeSet<Label>> {
        self.adj.get(node)
    }

    pub fn degree(&self, node: &str) -> Option<usize> {
        self.adj.get(node).map(BTreeSet::len)
    }

    pub fn has_edge(&self, a: &str, b: &str) -> bool {
        self.adj.get(a).is_some_and(|n| n.contains(b))
    }

    /// Edges as `(a, b)` with `a < b`, lexicographic.
    pub fn edges(&self) -> Vec<(&Label, &Label)> {
        self.adj.iter().flat_map(|(a, n)| n.iter().filter(move |b| a < *b).map(move |b| (a, b))).collect()
    }

    pub fn max_degree(&self) -> usize {
        self.adj.values().map(BTreeSet::len).max().unwrap_or(0)
    }

    /// Structural problems, empty when this is a (nonempty) tree.
    pub fn check(&self) -> Vec<String> {
        let mut problems = Vec::new();
        if self.adj.is_empty() {
            problems.push("tree has no nodes".to_owned());
            return problems;
        }
        if self.edge_count() + 1 != self.node_count() {
            problems.push(format!("tree has {} nodes but {} edges", self.node_count(), self.edge_count()));
        }
        let start = self.adj.keys().next().expect("nonempty");
        if self.reachable_from(start, None).len() != self.node_count() {
            problems.push("tree is disconnected".to_owned());
        }
        problems
    }

    pub fn is_tree(&self) -> bool {
        self.check().is_empty()
    }

    fn reachable_from(&self, start: &str, blocked: Option<&str>) -> BTreeSet<Label> {
        let mut seen = BTreeSet::from([start.to_owned()]);
        let mut queue = VecDeque::from([start.to_owned()]);
        while let Some(v) = queue.pop_front() {
            for w in &self.adj[&v] {
                if Some(w.as_str()) != blocked && seen.insert(w.clone()) {
                    queue.push_back(w.clone());
                }
            }
        }
        seen
    }

    /// Connected components of `T - q`, one per neighbor of `q`, ordered by
    /// that neighbor's label. Each branch is returned with its root neighbor.
    pub fn branches_at(&self, q: &str) -> Result<Vec<(Label, BTreeSet<Label>)>> {
        let nbrs = self.adj.get(q).ok_or_else(|| Error::UnknownTreeNode(q.to_owned()))?;
        Ok(nbrs.iter().map(|y| (y.clone(), self.reachable_from(y, Some(q)))).collect())
    }

    /// Unique path between `a` and `b` (the tree is assumed valid).
    pub fn path_between(&self, a: &str, b: &str) -> Option<TreePath> {
        if !self.contains(a) || !self.contains(b) {
            return None;
        }
        let mut parent: BTreeMap<&str, &str> = BTreeMap::new();
        let mut queue = VecDeque::from([a]);
        parent.insert(a, a);
        while let Some(v) = queue.pop_front() {
            if v == b {
                break;
            }
            for w in &self.adj[v] {
                if !parent.contains_key(w.as_str()) {
                    parent.insert(w, v);
                    queue.push_back(w);
                }
            }
        }
        parent.get(b)?;
        let mut nodes = vec![b.to_owned()];
        let mut cur = b;
        while cur != a {
            cur = parent[cur];
            nodes.push(cur.to_owned());
        }
        nodes.reverse();
        Some(TreePath(nodes))
    }

    /// Fresh node label `@<kind><n>` not yet used in the tree.
    pub(crate) fn fresh_label(&self, kind: &str) -> Label {
        (0..).map(|n| format!("@{kind}{n}")).find(|l| !self.contains(l)).expect("unbounded counter")
    }
}

/// A path of a host tree as an ordered node sequence. A path and its reverse
/// describe the same subtree and compare equal.
#[derive(Debug, Clone, Eq)]
pub struct TreePath(pub Vec<Label>);

impl TreePath {
    pub fn new<I, S>(nodes: I) -> Self
    where
        I: IntoIterator<Item = S>,
        S: Into<Label>,
    {
        TreePath(nodes.into_iter().map(Into::into).collect())
    }

    pub fn nodes(&self) -> &[Label] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn contains(&self, node: &str) -> bool {
        self.0.iter().any(|n| n == node)
    }

    pub fn node_set(&self) -> BTreeSet<&str> {
        self.0.iter().map(String::as_str).collect()
    }

    pub fn intersects(&self, other: &TreePath) -> bool {
        let mine = self.node_set();
        other.0.iter().any(|n| mine.contains(n.as_str()))
    }

    /// Problems that stop this from being a path of `tree`.
    pub fn check_in(&self, tree: &Tree) -> Vec<String> {
        let mut problems = Vec::new();
        if self.0.is_empty() {
            problems.push("path is empty".to_owned());
        }
        let mut seen = BTreeSet::new();
        for n in &self.0 {
            if !tree.contains(n) {
                problems.push(format!("node `{n}` is not in the tree"));
            }
            if !seen.insert(n) {
                problems.push(format!("node `{n}` repeats"));
            }
        }
        for w in self.0.windows(2) {
            if tree.contains(&w[0]) && tree.contains(&w[1]) && !tree.has_edge(&w[0], &w[1]) {
                problems.push(format!("`{}`-`{}` is not a tree edge", w[0], w[1]));
            }
        }
        problems
    }
}

impl PartialEq for TreePath {
    fn eq(&self, other: &Self) -> bool {
        self.0 == other.0 || self.0.iter().eq(other.0.iter().rev())
    }
}

impl fmt::Display for TreePath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0.join(" "))
    }
}

//! Labeled simple undirected graphs.
//!
//! Vertices are opaque string labels and all identity across the crate is by
//! label, so two graphs compare equal only when they have the same labeled
//! vertex and edge sets (no isomorphism testing).

use std::collections::{BTreeMap, BTreeSet, VecDeque};

use crate::error::{Error, Result};

pub type Label = String;
pub type VertexSet = BTreeSet<Label>;

/// Simple undirected graph keyed by vertex label.
///
/// Adjacency is kept symmetric and loop-free; every constructor checks this in
/// debug builds.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Graph {
    adj: BTreeMap<Label, VertexSet>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from an edge list plus extra isolated vertices.
    /// Duplicate edges (in either orientation) collapse to one.
    pub fn from_edges<I, J, A, B, C>(edges: I, isolated: J) -> Result<Self>
    where
        I: IntoIterator<Item = (A, B)>,
        J: IntoIterator<Item = C>,
        A: Into<Label>,
        B: Into<Label>,
        C: Into<Label>,
    {
        let mut g = Self::new();
        for (u, v) in edges {
            g.insert_edge(u.into(), v.into())?;
        }
        for v in isolated {
            g.insert_vertex(v.into());
        }
        g.debug_check();
        Ok(g)
    }

    pub(crate) fn insert_vertex(&mut self, v: Label) {
        self.adj.entry(v).or_default();
    }

    pub(crate) fn insert_edge(&mut self, u: Label, v: Label) -> Result<()> {
        if u == v {
            return Err(Error::SelfLoop(u));
        }
        self.adj.entry(u.clone()).or_default().insert(v.clone());
        self.adj.entry(v).or_default().insert(u);
        Ok(())
    }

    pub(crate) fn debug_check(&self) {
        if cfg!(debug_assertions) {
            for (v, nbrs) in &self.adj {
                assert!(!nbrs.contains(v), "self-loop at {v}");
                for w in nbrs {
                    assert!(self.adj.get(w).is_some_and(|back| back.contains(v)), "asymmetric adjacency {v}-{w}");
                }
            }
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.values().map(BTreeSet::len).sum::<usize>() / 2
    }

    pub fn is_empty(&self) -> bool {
        self.adj.is_empty()
    }

    pub fn contains(&self, v: &str) -> bool {
        self.adj.contains_key(v)
    }

    /// Vertices in lexicographic order.
    pub fn vertices(&self) -> impl Iterator<Item = &Label> + '_ {
        self.adj.keys()
    }

    pub fn vertex_set(&self) -> VertexSet {
        self.adj.keys().cloned().collect()
    }

    /// Open neighborhood `N(v)`.
    pub fn neighbors(&self, v: &str) -> Option<&VertexSet> {
        self.adj.get(v)
    }

    /// Closed neighborhood `N[v]`.
    pub fn closed_neighborhood(&self, v: &str) -> Option<VertexSet> {
        self.adj.get(v).map(|n| {
            let mut out = n.clone();
            out.insert(v.to_owned());
            out
        })
    }

    pub fn degree(&self, v: &str) -> Option<usize> {
        self.adj.get(v).map(BTreeSet::len)
    }

    pub fn has_edge(&self, u: &str, v: &str) -> bool {
        self.adj.get(u).is_some_and(|n| n.contains(v))
    }

    /// Edges as `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (&Label, &Label)> + '_ {
        self.adj.iter().flat_map(|(u, nbrs)| {
            nbrs.range::<Label, _>((std::ops::Bound::Excluded(u), std::ops::Bound::Unbounded)).map(move |v| (u, v))
        })
    }

    /// `G[S]`.
    pub fn induced_subgraph<'a, I>(&self, s: I) -> Result<Graph>
    where
        I: IntoIterator<Item = &'a Label>,
    {
        let keep: VertexSet = s.into_iter().cloned().collect();
        if let Some(bad) = keep.iter().find(|v| !self.contains(v)) {
            return Err(Error::UnknownVertex(bad.clone()));
        }
        let adj = keep
            .iter()
            .map(|v| {
                let nbrs = self.adj[v].intersection(&keep).cloned().collect();
                (v.clone(), nbrs)
            })
            .collect();
        let g = Graph { adj };
        g.debug_check();
        Ok(g)
    }

    /// Checks that `set` is complete. On failure returns the first
    /// non-adjacent pair found (lexicographic scan).
    pub fn check_complete(&self, set: &VertexSet) -> Result<()> {
        if let Some(bad) = set.iter().find(|v| !self.contains(v)) {
            return Err(Error::UnknownVertex(bad.clone()));
        }
        for (i, u) in set.iter().enumerate() {
            for v in set.iter().skip(i + 1) {
                if !self.has_edge(u, v) {
                    return Err(Error::NotComplete(u.clone(), v.clone()));
                }
            }
        }
        Ok(())
    }

    pub fn is_complete_set(&self, set: &VertexSet) -> bool {
        self.check_complete(set).is_ok()
    }

    pub fn is_stable_set(&self, set: &VertexSet) -> bool {
        set.iter().all(|v| self.adj.get(v).is_some_and(|n| n.is_disjoint(set)))
    }

    pub fn is_connected(&self) -> bool {
        let Some(start) = self.adj.keys().next() else {
            return true;
        };
        let mut seen = BTreeSet::from([start.as_str()]);
        let mut queue = VecDeque::from([start.as_str()]);
        while let Some(v) = queue.pop_front() {
            for w in &self.adj[v] {
                if seen.insert(w.as_str()) {
                    queue.push_back(w);
                }
            }
        }
        seen.len() == self.adj.len()
    }

    /// Renames every vertex through `f`. Fails if two labels map to the same
    /// new label.
    pub fn relabel<F>(&self, mut f: F) -> Result<Graph>
    where
        F: FnMut(&str) -> Label,
    {
        let names: BTreeMap<&Label, Label> = self.adj.keys().map(|v| (v, f(v))).collect();
        let mut seen = BTreeSet::new();
        for new in names.values() {
            if !seen.insert(new) {
                return Err(Error::LabelCollision(new.clone()));
            }
        }
        let adj = self
            .adj
            .iter()
            .map(|(v, nbrs)| (names[v].clone(), nbrs.iter().map(|w| names[w].clone()).collect()))
            .collect();
        Ok(Graph { adj })
    }

    /// Returns a split partition if one exists.
    ///
    /// Uses the degree-sequence test: with degrees sorted descending and `m`
    /// the largest index with `d_m >= m - 1`, the graph is split iff
    /// `sum_{i<=m} d_i = m(m-1) + sum_{i>m} d_i`, and then the top `m`
    /// vertices form the central clique. Ties are broken by label.
    pub fn is_split(&self) -> Option<SplitPartition> {
        let mut order: Vec<(&Label, usize)> = self.adj.iter().map(|(v, n)| (v, n.len())).collect();
        order.sort_by(|a, b| b.1.cmp(&a.1).then_with(|| a.0.cmp(b.0)));
        let m = order.iter().enumerate().filter(|(i, (_, d))| *d >= *i).map(|(i, _)| i + 1).max().unwrap_or(0);
        let head: usize = order[..m].iter().map(|(_, d)| d).sum();
        let tail: usize = order[m..].iter().map(|(_, d)| d).sum();
        if head != m * m.saturating_sub(1) + tail {
            return None;
        }
        let part = SplitPartition {
            clique: order[..m].iter().map(|(v, _)| (*v).clone()).collect(),
            stable: order[m..].iter().map(|(v, _)| (*v).clone()).collect(),
        };
        debug_assert!(part.is_valid_for(self));
        Some(part)
    }
}

/// `(S, K)`: stable set and central clique of a split graph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SplitPartition {
    pub stable: VertexSet,
    pub clique: VertexSet,
}

impl SplitPartition {
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        self.stable.is_disjoint(&self.clique)
            && self.stable.len() + self.clique.len() == g.vertex_count()
            && self.stable.iter().chain(&self.clique).all(|v| g.contains(v))
            && g.is_complete_set(&self.clique)
            && g.is_stable_set(&self.stable)
    }
}

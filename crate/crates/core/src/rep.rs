//! VPT representations: one host-tree path per graph vertex, adjacency being
//! "the two paths share a tree node".

use std::collections::{BTreeMap, BTreeSet};

use crate::error::{Error, Result};
use crate::graph::{Graph, Label, VertexSet};
use crate::tree::{Tree, TreePath};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VptRepresentation {
    pub tree: Tree,
    pub paths: BTreeMap<Label, TreePath>,
}

/// Outcome of [`VptRepresentation::validate`].
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct Validation {
    pub diagnostics: Vec<String>,
}

impl Validation {
    pub fn is_valid(&self) -> bool {
        self.diagnostics.is_empty()
    }
}

impl VptRepresentation {
    pub fn new(tree: Tree, paths: BTreeMap<Label, TreePath>) -> Self {
        Self { tree, paths }
    }

    pub fn validate(&self) -> Validation {
        let mut diagnostics = self.tree.check();
        for (v, p) in &self.paths {
            diagnostics.extend(p.check_in(&self.tree).into_iter().map(|d| format!("path `{v}`: {d}")));
        }
        Validation { diagnostics }
    }

    pub fn ensure_valid(&self) -> Result<()> {
        let v = self.validate();
        if v.is_valid() {
            Ok(())
        } else {
            Err(Error::InvalidRepresentation(v.diagnostics.join("; ")))
        }
    }

    pub fn vertices(&self) -> impl Iterator<Item = &Label> + '_ {
        self.paths.keys()
    }

    pub fn path(&self, v: &str) -> Option<&TreePath> {
        self.paths.get(v)
    }

    pub fn intersection_graph(&self) -> Result<Graph> {
        self.ensure_valid()?;
        Ok(self.intersection_graph_unchecked())
    }

    pub(crate) fn intersection_graph_unchecked(&self) -> Graph {
        let mut g = Graph::new();
        // Group by tree node: every pair of paths through the same node is an edge.
        let mut through: BTreeMap<&str, Vec<&Label>> = BTreeMap::new();
        for (v, p) in &self.paths {
            g.insert_vertex(v.clone());
            for n in p.nodes() {
                through.entry(n).or_default().push(v);
            }
        }
        for members in through.values() {
            for (i, u) in members.iter().enumerate() {
                for w in &members[i + 1..] {
                    g.insert_edge((*u).clone(), (*w).clone()).expect("distinct path labels");
                }
            }
        }
        g.debug_check();
        g
    }

    /// `C_q`: vertices whose path contains tree node `q`.
    pub fn clique_at(&self, q: &str) -> Result<VertexSet> {
        if !self.tree.contains(q) {
            return Err(Error::UnknownTreeNode(q.to_owned()));
        }
        Ok(self.paths.iter().filter(|(_, p)| p.contains(q)).map(|(v, _)| v.clone()).collect())
    }

    /// Maximal cliques of the intersection graph, taken as the
    /// inclusion-maximal distinct sets among the `C_q`. Sorted.
    pub fn cliques(&self) -> Result<Vec<VertexSet>> {
        self.ensure_valid()?;
        let mut candidates: Vec<VertexSet> = self
            .tree
            .nodes()
            .map(|q| self.clique_at(q).expect("node of tree"))
            .filter(|c| !c.is_empty())
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        // Larger sets first so each candidate is only compared with supersets.
        candidates.sort_by_key(|c| std::cmp::Reverse(c.len()));
        let mut maximal: Vec<VertexSet> = Vec::new();
        for c in candidates {
            if !maximal.iter().any(|m| c.is_subset(m)) {
                maximal.push(c);
            }
        }
        maximal.sort();
        Ok(maximal)
    }

    pub fn max_tree_degree(&self) -> Result<usize> {
        self.ensure_valid()?;
        Ok(self.tree.max_degree())
    }

    /// Subpaths have max degree 2 and adjacency is one shared node by
    /// construction, so only the host-tree degree needs checking.
    pub fn is_h21_representation(&self, h: usize) -> Result<bool> {
        Ok(self.max_tree_degree()? <= h)
    }

    /// Tree nodes `q`'s neighbors `y` such that some path contains `y` without
    /// `q`, i.e. witnesses inside the branch rooted at `y`.
    pub(crate) fn has_branch_witness(&self, q: &str, y: &str) -> bool {
        self.paths.values().any(|p| p.contains(y) && !p.contains(q))
    }

    /// Contracts tree edge `qy` into `q`: `y` disappears, its other neighbors
    /// are attached to `q`, and `y` is dropped from every path. Requires that
    /// every path through `y` also passes through `q`.
    pub fn contract_edge(&self, q: &str, y: &str) -> Result<VptRepresentation> {
        self.ensure_valid()?;
        if !self.tree.has_edge(q, y) {
            return Err(Error::UnknownEdge(q.to_owned(), y.to_owned()));
        }
        if let Some((v, _)) = self.paths.iter().find(|(_, p)| p.contains(y) && !p.contains(q)) {
            return Err(Error::EdgeNotContractible { q: q.to_owned(), y: y.to_owned(), path: v.clone() });
        }
        let mut tree = self.tree.clone();
        let moved: Vec<Label> = tree.neighbors(y).expect("edge endpoint").iter().filter(|n| *n != q).cloned().collect();
        tree.remove_node(y);
        for n in moved {
            tree.add_edge(q.to_owned(), n)?;
        }
        let paths = self
            .paths
            .iter()
            .map(|(v, p)| (v.clone(), TreePath(p.nodes().iter().filter(|n| *n != y).cloned().collect())))
            .collect();
        let out = VptRepresentation { tree, paths };
        debug_assert!(out.validate().is_valid(), "{:?}", out.validate());
        Ok(out)
    }

    /// Re-threads every path through `tree` after a surgery: consecutive nodes
    /// that are no longer adjacent are joined by the tree path between them.
    pub(crate) fn rethread(&self, tree: Tree) -> Result<VptRepresentation> {
        let mut paths = BTreeMap::new();
        for (v, p) in &self.paths {
            let mut nodes: Vec<Label> = Vec::with_capacity(p.len());
            for (i, n) in p.nodes().iter().enumerate() {
                if i == 0 {
                    nodes.push(n.clone());
                    continue;
                }
                let prev = nodes.last().expect("nonempty").clone();
                if tree.has_edge(&prev, n) {
                    nodes.push(n.clone());
                } else {
                    let bridge = tree
                        .path_between(&prev, n)
                        .ok_or_else(|| Error::NonProgress(format!("path `{v}` lost `{prev}`-`{n}`")))?;
                    nodes.extend(bridge.0.into_iter().skip(1));
                }
            }
            paths.insert(v.clone(), TreePath(nodes));
        }
        let out = VptRepresentation { tree, paths };
        out.ensure_valid()
            .map_err(|e| Error::NonProgress(format!("surgery produced a malformed representation: {e}")))?;
        Ok(out)
    }
}

//! Plain-text graph and representation files.
//!
//! Graph files hold one edge `u v` or one isolated vertex `u` per line.
//! Representation files start with a `tree` header followed by edges `a b`
//! (or `node a` for a one-node tree), then for each graph vertex a
//! `path <label>` header and one line listing the path's tree nodes in order.
//! In both formats `#` starts a comment and blank lines are ignored.
//! Serialization is deterministic: everything is written in label order.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rep::VptRepresentation;
use crate::tree::{Tree, TreePath};

fn content_lines(text: &str) -> impl Iterator<Item = (usize, Vec<&str>)> {
    text.lines().enumerate().filter_map(|(i, line)| {
        let body = line.split('#').next().unwrap_or("");
        let tokens: Vec<&str> = body.split_whitespace().collect();
        (!tokens.is_empty()).then_some((i + 1, tokens))
    })
}

fn parse_err(line: usize, reason: impl Into<String>) -> Error {
    Error::Parse { line, reason: reason.into() }
}

pub fn parse_graph(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (line, tokens) in content_lines(text) {
        match tokens.as_slice() {
            [v] => g.insert_vertex((*v).to_owned()),
            [u, v] => g
                .insert_edge((*u).to_owned(), (*v).to_owned())
                .map_err(|_| parse_err(line, format!("self-loop on `{u}`")))?,
            _ => return Err(parse_err(line, format!("expected `u v` or `u`, found {} tokens", tokens.len()))),
        }
    }
    g.debug_check();
    Ok(g)
}

pub fn serialize_graph(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        let _ = writeln!(out, "{u} {v}");
    }
    for v in g.vertices().filter(|v| g.degree(v) == Some(0)) {
        let _ = writeln!(out, "{v}");
    }
    out
}

/// Parses a representation file without checking that the tree is a tree or
/// that the paths are paths.
pub fn parse_rep_unchecked(text: &str) -> Result<VptRepresentation> {
    enum State {
        Start,
        Tree,
        PathHeader(String, usize),
        AfterPath,
    }
    let mut state = State::Start;
    let mut tree = Tree::new();
    let mut paths: BTreeMap<String, TreePath> = BTreeMap::new();
    for (line, tokens) in content_lines(text) {
        state = match (state, tokens.as_slice()) {
            (State::Start, ["tree"]) => State::Tree,
            (State::Start, _) => return Err(parse_err(line, "expected `tree` header")),
            (State::Tree | State::AfterPath, ["path", v]) => {
                if paths.contains_key(*v) {
                    return Err(parse_err(line, format!("duplicate path for `{v}`")));
                }
                State::PathHeader((*v).to_owned(), line)
            }
            (State::Tree, ["node", n]) => {
                tree.add_node((*n).to_owned());
                State::Tree
            }
            (State::Tree, [a, b]) => {
                tree.add_edge((*a).to_owned(), (*b).to_owned())
                    .map_err(|_| parse_err(line, format!("tree self-loop on `{a}`")))?;
                State::Tree
            }
            (State::Tree, _) => return Err(parse_err(line, "expected a tree edge `a b`, `node a`, or `path <label>`")),
            (State::PathHeader(v, _), nodes) => {
                if nodes.first() == Some(&"path") && nodes.len() == 2 {
                    return Err(parse_err(line, format!("path `{v}` has no node line")));
                }
                paths.insert(v, TreePath::new(nodes.iter().copied()));
                State::AfterPath
            }
            (State::AfterPath, _) => return Err(parse_err(line, "expected `path <label>`")),
        };
    }
    match state {
        State::Start => Err(parse_err(0, "missing `tree` header")),
        State::PathHeader(v, line) => Err(parse_err(line, format!("path `{v}` has no node line"))),
        _ => Ok(VptRepresentation::new(tree, paths)),
    }
}

pub fn parse_rep(text: &str) -> Result<VptRepresentation> {
    let rep = parse_rep_unchecked(text)?;
    rep.ensure_valid()?;
    Ok(rep)
}

pub fn serialize_rep(rep: &VptRepresentation) -> String {
    let mut out = String::from("tree\n");
    let edges = rep.tree.edges();
    for (a, b) in &edges {
        let _ = writeln!(out, "{a} {b}");
    }
    for n in rep.tree.nodes().filter(|n| rep.tree.degree(n) == Some(0)) {
        let _ = writeln!(out, "node {n}");
    }
    for (v, p) in &rep.paths {
        let _ = writeln!(out, "path {v}\n{p}");
    }
    out
}

/// True when the text looks like a representation file (first content line is
/// the `tree` header).
pub fn looks_like_rep(text: &str) -> bool {
    content_lines(text).next().is_some_and(|(_, t)| t == ["tree"])
}

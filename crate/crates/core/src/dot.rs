//! Graphviz export.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::graph::Graph;
use crate::rep::VptRepresentation;

const PALETTE: [&str; 8] = ["red", "blue", "darkgreen", "orange", "purple", "brown", "deeppink", "teal"];

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn html(s: &str) -> String {
    s.replace('&', "&amp;").replace('<', "&lt;").replace('>', "&gt;")
}

pub fn graph_to_dot(g: &Graph) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices().filter(|v| g.degree(v) == Some(0)) {
        let _ = writeln!(out, "  {};", quote(v));
    }
    for (u, v) in g.edges() {
        let _ = writeln!(out, "  {} -- {};", quote(u), quote(v));
    }
    out.push_str("}\n");
    out
}

/// Host tree with solid edges; each node's label lists the paths through it,
/// one color per path.
pub fn rep_to_dot(rep: &VptRepresentation) -> String {
    let color: BTreeMap<&String, &str> =
        rep.paths.keys().enumerate().map(|(i, v)| (v, PALETTE[i % PALETTE.len()])).collect();
    let mut out = String::from("graph T {\n  node [shape=box];\n");
    for n in rep.tree.nodes() {
        let mut label = format!("<b>{}</b>", html(n));
        for (v, p) in &rep.paths {
            if p.contains(n) {
                let _ = write!(label, "<br/><font color=\"{}\">{}</font>", color[v], html(v));
            }
        }
        let _ = writeln!(out, "  {} [label=<{}>];", quote(n), label);
    }
    for (a, b) in rep.tree.edges() {
        let _ = writeln!(out, "  {} -- {} [style=solid];", quote(a), quote(b));
    }
    out.push_str("}\n");
    out
}

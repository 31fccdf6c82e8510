//! The SVS subclass of split VPT graphs.
//!
//! A split graph with partition `(S, K)` is in SVS when it is VPT, every
//! `v` in `K` sees at most two stable vertices, and every induced `S_4` or
//! odd sun `S_{2n+1}` has some `v` in `K` adjacent to two non-consecutive
//! stable vertices of the sun. On SVS the class bound depends only on the
//! central clique's branch graph.

use std::collections::{BTreeMap, BTreeSet};

use crate::branch::branch_graph;
use crate::coloring::chromatic_number;
use crate::error::{Error, Result};
use crate::graph::{Graph, Label, SplitPartition, VertexSet};
use crate::rep::VptRepresentation;

pub const DEFAULT_SUN_CAP: usize = 9;

/// An induced sun: `clique[i]` is adjacent to `stable[i]` and
/// `stable[(i + 1) % k]` and to no other listed stable vertex.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct InducedSun {
    pub stable: Vec<Label>,
    pub clique: Vec<Label>,
}

impl InducedSun {
    pub fn size(&self) -> usize {
        self.stable.len()
    }

    pub fn vertices(&self) -> VertexSet {
        self.stable.iter().chain(&self.clique).cloned().collect()
    }

    /// Whether `g` induces exactly this sun on its vertices.
    pub fn is_induced_in(&self, g: &Graph) -> bool {
        let k = self.stable.len();
        if k < 3 || self.clique.len() != k || self.vertices().len() != 2 * k {
            return false;
        }
        let stable: VertexSet = self.stable.iter().cloned().collect();
        let clique: VertexSet = self.clique.iter().cloned().collect();
        if !g.is_stable_set(&stable) || !g.is_complete_set(&clique) {
            return false;
        }
        self.clique.iter().enumerate().all(|(i, c)| {
            let want: VertexSet = [self.stable[i].clone(), self.stable[(i + 1) % k].clone()].into();
            let seen: VertexSet = g.neighbors(c).expect("vertex").intersection(&stable).cloned().collect();
            seen == want
        })
    }

    /// Positions `i < j` of stable vertices that are not cyclically adjacent.
    fn non_consecutive(&self, i: usize, j: usize) -> bool {
        let k = self.stable.len();
        let d = i.abs_diff(j);
        d != 1 && d != k - 1
    }
}

fn stable_neighbors<'a>(g: &'a Graph, part: &SplitPartition) -> BTreeMap<&'a Label, VertexSet> {
    g.vertices()
        .filter(|v| part.clique.contains(*v))
        .map(|v| (v, g.neighbors(v).expect("vertex").intersection(&part.stable).cloned().collect()))
        .collect()
}

/// All induced suns `S_k` with `4 <= k <= k_max` whose stable vertices come
/// from `part.stable`, one per vertex set.
pub fn find_induced_suns(g: &Graph, part: &SplitPartition, k_max: usize) -> Vec<InducedSun> {
    let ns = stable_neighbors(g, part);
    let mut out = Vec::new();
    let stable: Vec<&Label> = part.stable.iter().collect();
    for k in 4..=k_max.min(stable.len()) {
        for (si, start) in stable.iter().enumerate() {
            let mut seq = vec![(*start).clone()];
            grow(&ns, &stable[si + 1..], k, &mut seq, &mut out);
        }
    }
    out
}

/// Connectors for the pair `(a, b)`: clique vertices seeing both and no other
/// member of `chosen`.
fn connectors<'a>(ns: &BTreeMap<&'a Label, VertexSet>, a: &str, b: &str, chosen: &[Label]) -> Vec<&'a Label> {
    ns.iter()
        .filter(|(_, s)| s.contains(a) && s.contains(b) && chosen.iter().all(|x| x == a || x == b || !s.contains(x)))
        .map(|(c, _)| *c)
        .collect()
}

fn grow(ns: &BTreeMap<&Label, VertexSet>, later: &[&Label], k: usize, seq: &mut Vec<Label>, out: &mut Vec<InducedSun>) {
    if seq.len() == k {
        // Canonical direction: second element below the last.
        if seq[1] > seq[k - 1] {
            return;
        }
        let pairs: Vec<Vec<&Label>> = (0..k).map(|i| connectors(ns, &seq[i], &seq[(i + 1) % k], seq)).collect();
        if pairs.iter().any(Vec::is_empty) {
            return;
        }
        let mut pick = vec![0usize; k];
        loop {
            out.push(InducedSun {
                stable: seq.clone(),
                clique: pick.iter().zip(&pairs).map(|(&i, p)| p[i].clone()).collect(),
            });
            let mut pos = 0;
            while pos < k {
                pick[pos] += 1;
                if pick[pos] < pairs[pos].len() {
                    break;
                }
                pick[pos] = 0;
                pos += 1;
            }
            if pos == k {
                break;
            }
        }
        return;
    }
    let last = seq.last().expect("nonempty").clone();
    for next in later {
        if seq.contains(next) {
            continue;
        }
        seq.push((*next).clone());
        if !connectors(ns, &last, next, seq).is_empty() {
            grow(ns, later, k, seq, out);
        }
        seq.pop();
    }
}

/// The sun built from an induced cycle `s_1..s_n` of `B(G/K)` by pairing
/// each cycle edge with a clique vertex adjacent to both ends. `None` if some
/// edge has no such vertex.
pub fn sun_from_cycle(g: &Graph, part: &SplitPartition, cycle: &[Label]) -> Option<InducedSun> {
    let n = cycle.len();
    let clique = (0..n)
        .map(|i| part.clique.iter().find(|v| g.has_edge(v, &cycle[i]) && g.has_edge(v, &cycle[(i + 1) % n])).cloned())
        .collect::<Option<Vec<_>>>()?;
    Some(InducedSun { stable: cycle.to_vec(), clique })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SvsStatus {
    Yes,
    No,
    UnknownBeyondCap,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SvsWitness {
    NotSplit,
    /// A central-clique vertex with more than two stable neighbors.
    CliqueVertex {
        vertex: Label,
        stable_neighbors: VertexSet,
    },
    /// An induced sun with no chord-witness in the central clique.
    Sun(InducedSun),
}

/// Where the VPT condition came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum VptEvidence {
    Representation,
    Assumed,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SvsVerdict {
    pub status: SvsStatus,
    pub witness: Option<SvsWitness>,
    pub cap_used: usize,
    pub vpt: VptEvidence,
    pub partition: Option<SplitPartition>,
}

/// Sun sizes the SVS condition constrains: 4 and odd sizes from 5.
pub fn constrained_sizes(upto: usize) -> impl Iterator<Item = usize> {
    (4..=upto).filter(|k| *k == 4 || k % 2 == 1)
}

pub fn is_svs(g: &Graph, k_max: usize, rep: Option<&VptRepresentation>) -> Result<SvsVerdict> {
    if k_max < 5 {
        return Err(Error::BadParameter(format!("sun cap must be at least 5, got {k_max}")));
    }
    let vpt = match rep {
        Some(r) => {
            if r.intersection_graph()? != *g {
                return Err(Error::InvalidRepresentation("representation does not match the graph".into()));
            }
            VptEvidence::Representation
        }
        None => VptEvidence::Assumed,
    };
    let verdict = |status, witness, partition| SvsVerdict { status, witness, cap_used: k_max, vpt, partition };

    let Some(part) = g.is_split() else {
        return Ok(verdict(SvsStatus::No, Some(SvsWitness::NotSplit), None));
    };
    let ns = stable_neighbors(g, &part);
    if let Some((v, s)) = ns.iter().find(|(_, s)| s.len() > 2) {
        let w = SvsWitness::CliqueVertex { vertex: (*v).clone(), stable_neighbors: s.clone() };
        return Ok(verdict(SvsStatus::No, Some(w), Some(part)));
    }
    for sun in find_induced_suns(g, &part, k_max) {
        if !constrained_sizes(k_max).any(|k| k == sun.size()) {
            continue;
        }
        let pos: BTreeMap<&Label, usize> = sun.stable.iter().enumerate().map(|(i, s)| (s, i)).collect();
        let chorded = ns.values().any(|s| {
            let idx: Vec<usize> = s.iter().filter_map(|x| pos.get(x).copied()).collect();
            idx.iter().enumerate().any(|(a, &i)| idx[a + 1..].iter().any(|&j| sun.non_consecutive(i, j)))
        });
        if !chorded {
            return Ok(verdict(SvsStatus::No, Some(SvsWitness::Sun(sun)), Some(part)));
        }
    }
    let exhaustive = constrained_sizes(part.stable.len()).all(|k| k <= k_max);
    let status = if exhaustive { SvsStatus::Yes } else { SvsStatus::UnknownBeyondCap };
    Ok(verdict(status, None, Some(part)))
}

/// Class bound of an SVS graph from its central clique alone:
/// `max(3, chi(B(G/K)))`.
pub fn classify_svs(g: &Graph, part: &SplitPartition) -> Result<usize> {
    g.check_complete(&part.clique)?;
    if !part.is_valid_for(g) {
        return Err(Error::BadParameter("not a split partition of the graph".into()));
    }
    Ok(chromatic_number(&branch_graph(g, &part.clique)?).max(3))
}

/// Induced cycles of length `len` in `g`, each once as a vertex list
/// starting from its least label. Brute force; for small graphs.
pub fn induced_cycles(g: &Graph, len: usize) -> Vec<Vec<Label>> {
    let verts: Vec<&Label> = g.vertices().collect();
    let mut out = BTreeSet::new();
    let mut chosen = Vec::new();
    subsets(&verts, len, 0, &mut chosen, &mut |set: &[&Label]| {
        let sub: VertexSet = set.iter().map(|v| (*v).clone()).collect();
        if let Some(cycle) = as_cycle(g, &sub) {
            out.insert(cycle);
        }
    });
    out.into_iter().collect()
}

fn subsets<'a>(
    items: &[&'a Label],
    k: usize,
    from: usize,
    chosen: &mut Vec<&'a Label>,
    f: &mut impl FnMut(&[&'a Label]),
) {
    if chosen.len() == k {
        f(chosen);
        return;
    }
    for i in from..items.len() {
        if items.len() - i < k - chosen.len() {
            break;
        }
        chosen.push(items[i]);
        subsets(items, k, i + 1, chosen, f);
        chosen.pop();
    }
}

/// The cyclic order of `set` if it induces a cycle.
fn as_cycle(g: &Graph, set: &VertexSet) -> Option<Vec<Label>> {
    if set.len() < 3 {
        return None;
    }
    let nbrs = |v: &Label| -> VertexSet { g.neighbors(v).expect("vertex").intersection(set).cloned().collect() };
    if set.iter().any(|v| nbrs(v).len() != 2) {
        return None;
    }
    let start = set.iter().next().expect("nonempty").clone();
    let mut order = vec![start.clone()];
    let mut prev = start.clone();
    let mut cur = nbrs(&start).into_iter().next().expect("two neighbors");
    while cur != start {
        order.push(cur.clone());
        let next = nbrs(&cur).into_iter().find(|w| *w != prev).expect("two neighbors");
        prev = cur;
        cur = next;
    }
    (order.len() == set.len()).then_some(order)
}

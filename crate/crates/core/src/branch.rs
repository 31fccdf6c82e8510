use crate::error::Result;
use crate::graph::{Graph, VertexSet};

/// Branch graph `B(G/C)` of a complete set `c`.
///
/// Vertices are the vertices outside `c` with a neighbor in `c`. Two of them,
/// `v` and `w`, are adjacent when they are non-adjacent in `g`, share a
/// neighbor in `c`, and each has a neighbor in `c` the other lacks.
pub fn branch_graph(g: &Graph, c: &VertexSet) -> Result<Graph> {
    g.check_complete(c)?;
    let attach: Vec<(&String, VertexSet)> = g
        .vertices()
        .filter(|v| !c.contains(*v))
        .filter_map(|v| {
            let into_c: VertexSet = g.neighbors(v).expect("vertex").intersection(c).cloned().collect();
            (!into_c.is_empty()).then_some((v, into_c))
        })
        .collect();

    let mut b = Graph::new();
    for (v, _) in &attach {
        b.insert_vertex((*v).clone());
    }
    for (i, (v, nv)) in attach.iter().enumerate() {
        for (w, nw) in &attach[i + 1..] {
            if g.has_edge(v, w) || nv.is_disjoint(nw) {
                continue;
            }
            if !nv.is_subset(nw) && !nw.is_subset(nv) {
                b.insert_edge((*v).clone(), (*w).clone())?;
            }
        }
    }
    b.debug_check();
    Ok(b)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    fn set(items: &[&str]) -> VertexSet {
        items.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn pendant_on_triangle() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("a", "c"), ("a", "p")], Vec::<String>::new()).unwrap();
        let b = branch_graph(&g, &set(&["a", "b", "c"])).unwrap();
        assert_eq!(b.vertex_set(), set(&["p"]));
        assert_eq!(b.edge_count(), 0);
    }

    #[test]
    fn four_sun_gives_four_cycle() {
        let mut edges = Vec::new();
        for i in 1..=4 {
            for j in i + 1..=4 {
                edges.push((format!("v{i}"), format!("v{j}")));
            }
            edges.push((format!("s{i}"), format!("v{i}")));
            edges.push((format!("s{i}"), format!("v{}", i % 4 + 1)));
        }
        let g = Graph::from_edges(edges, Vec::<String>::new()).unwrap();
        let b = branch_graph(&g, &set(&["v1", "v2", "v3", "v4"])).unwrap();
        let c4 =
            Graph::from_edges([("s1", "s2"), ("s2", "s3"), ("s3", "s4"), ("s4", "s1")], Vec::<String>::new()).unwrap();
        assert_eq!(b, c4);
    }

    #[test]
    fn rejects_incomplete_sets() {
        let g = Graph::from_edges([("a", "b"), ("b", "c")], Vec::<String>::new()).unwrap();
        assert_eq!(branch_graph(&g, &set(&["a", "c"])), Err(Error::NotComplete("a".into(), "c".into())));
    }

    #[test]
    fn never_contains_clique_vertices() {
        let g = Graph::from_edges([("a", "b"), ("b", "c"), ("c", "d"), ("b", "d")], Vec::<String>::new()).unwrap();
        let c = set(&["b", "c", "d"]);
        let b = branch_graph(&g, &c).unwrap();
        assert!(b.vertices().all(|v| !c.contains(v)));
    }
}

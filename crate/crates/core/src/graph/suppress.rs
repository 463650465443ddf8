use super::{EdgeId, SignedGraph, VertexId};

/// Result of smoothing every maximal subdivided edge.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Suppressed {
    pub graph: SignedGraph,
    /// For each new edge, its preimage as an ordered path of old edge ids.
    pub edge_map: Vec<Vec<EdgeId>>,
    /// New id of each old vertex, if it survives.
    pub vertex_map: Vec<Option<VertexId>>,
}

pub(super) fn suppress(g: &SignedGraph) -> Suppressed {
    let n = g.vertex_count();
    let deg = g.degrees();
    let adj = g.incidence();
    let mut has_loop = vec![false; n];
    for e in g.edges() {
        if e.is_loop() {
            has_loop[e.u] = true;
        }
    }

    // A component whose vertices all have degree 2 is a circuit.
    let mut circuit_comp = vec![false; n];
    for comp in g.components() {
        if comp.iter().all(|&v| deg[v] == 2) {
            for &v in &comp {
                circuit_comp[v] = true;
            }
        }
    }
    let removable =
        |v: VertexId| deg[v] == 2 && !has_loop[v] && !circuit_comp[v];
    let kept = |v: VertexId| {
        if circuit_comp[v] {
            false
        } else {
            !removable(v)
        }
    };

    let mut vertex_map = vec![None; n];
    let mut next = 0;
    let mut circuit_rep = vec![usize::MAX; n];
    for comp in g.components() {
        if circuit_comp[comp[0]] {
            for &v in &comp {
                circuit_rep[v] = comp[0];
            }
        }
    }
    for v in 0..n {
        if kept(v) || (circuit_comp[v] && circuit_rep[v] == v) {
            vertex_map[v] = Some(next);
            next += 1;
        }
    }

    let mut out = SignedGraph::new(next);
    let mut edge_map = Vec::new();
    let mut used = vec![false; g.edge_count()];

    // Walk from vertex `from` along edge `e` until a non-removable vertex.
    let walk = |start: VertexId, first: EdgeId, used: &mut Vec<bool>| -> (Vec<EdgeId>, VertexId) {
        let mut path = Vec::new();
        let mut cur = start;
        let mut e = first;
        loop {
            path.push(e);
            used[e] = true;
            let w = g.e(e).other(cur);
            if !removable(w) {
                return (path, w);
            }
            let next_edge = adj[w].iter().map(|&(f, _)| f).find(|&f| f != e).unwrap();
            cur = w;
            e = next_edge;
        }
    };

    for id in 0..g.edge_count() {
        if used[id] {
            continue;
        }
        let edge = *g.e(id);
        if circuit_comp[edge.u] {
            // Traverse the whole circuit starting at this (minimum) edge.
            let rep = circuit_rep[edge.u];
            let mut path = vec![id];
            used[id] = true;
            let mut cur = edge.v;
            let mut prev = id;
            while cur != edge.u {
                let f = adj[cur].iter().map(|&(f, _)| f).find(|&f| f != prev).unwrap();
                path.push(f);
                used[f] = true;
                cur = g.e(f).other(cur);
                prev = f;
            }
            let r = vertex_map[rep].unwrap();
            out.edges.push(super::Edge {
                u: r,
                v: r,
                sign: g.sign_of_unchecked(&path),
            });
            edge_map.push(path);
            continue;
        }
        let (left, a) = if removable(edge.u) {
            let f = adj[edge.u].iter().map(|&(f, _)| f).find(|&f| f != id).unwrap();
            walk(edge.u, f, &mut used)
        } else {
            (Vec::new(), edge.u)
        };
        used[id] = true;
        let (right, b) = if removable(edge.v) {
            let f = adj[edge.v].iter().map(|&(f, _)| f).find(|&f| f != id).unwrap();
            walk(edge.v, f, &mut used)
        } else {
            (Vec::new(), edge.v)
        };
        let mut path: Vec<EdgeId> = left.into_iter().rev().collect();
        path.push(id);
        path.extend(right);
        out.edges.push(super::Edge {
            u: vertex_map[a].unwrap(),
            v: vertex_map[b].unwrap(),
            sign: g.sign_of_unchecked(&path),
        });
        edge_map.push(path);
    }

    Suppressed {
        graph: out,
        edge_map,
        vertex_map,
    }
}

#[cfg(test)]
mod tests {
    use crate::graph::{Sign::*, SignedGraph};

    #[test]
    fn path_collapses_to_edge() {
        let g = SignedGraph::from_edges(3, [(0, 1, Pos), (1, 2, Neg)]).unwrap();
        let s = g.suppress();
        assert_eq!(s.graph.edge_count(), 1);
        let e = s.graph.edge(0).unwrap();
        assert_eq!((e.u, e.v, e.sign), (0, 1, Neg));
        assert_eq!(s.edge_map, vec![vec![0, 1]]);
        assert_eq!(s.vertex_map, vec![Some(0), None, Some(1)]);
    }

    #[test]
    fn no_degree_two_is_identity() {
        let g = SignedGraph::from_edges(
            2,
            [(0, 1, Pos), (0, 1, Neg), (0, 1, Pos)],
        )
        .unwrap();
        let s = g.suppress();
        assert_eq!(s.graph, g);
        assert_eq!(s.edge_map, vec![vec![0], vec![1], vec![2]]);
    }

    #[test]
    fn circuit_component_becomes_loop() {
        let g = SignedGraph::from_edges(
            4,
            [(0, 1, Pos), (1, 2, Pos), (2, 3, Pos), (3, 0, Neg)],
        )
        .unwrap();
        let s = g.suppress();
        assert_eq!(s.graph.vertex_count(), 1);
        assert_eq!(s.graph.edge_count(), 1);
        let e = s.graph.edge(0).unwrap();
        assert!(e.is_loop());
        assert_eq!(e.sign, Neg);
        assert_eq!(s.edge_map[0].len(), 4);
    }

    #[test]
    fn subdivided_loop_at_branch_vertex() {
        // triangle hanging off vertex 0 which also has a pendant edge
        let g = SignedGraph::from_edges(
            4,
            [(0, 1, Neg), (1, 2, Pos), (2, 0, Pos), (0, 3, Pos)],
        )
        .unwrap();
        let s = g.suppress();
        assert_eq!(s.graph.edge_count(), 2);
        let l = s.graph.edge(0).unwrap();
        assert!(l.is_loop());
        assert_eq!(l.sign, Neg);
        assert_eq!(s.edge_map[0], vec![0, 1, 2]);
    }
}

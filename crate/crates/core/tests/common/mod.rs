//! Brute-force reference implementations shared by the integration tests.
#![allow(dead_code)]

use std::collections::BTreeSet;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sigcover::{EdgeId, Sign, SignedGraph, SwitchSet};

/// Every edge set forming a circuit, found by checking all subsets.
pub fn brute_circuits(g: &SignedGraph) -> BTreeSet<Vec<EdgeId>> {
    let m = g.edge_count();
    assert!(m <= 20, "subset enumeration is for small graphs");
    let mut out = BTreeSet::new();
    for mask in 1u32..(1 << m) {
        let ids: Vec<EdgeId> = (0..m).filter(|&e| mask >> e & 1 == 1).collect();
        if is_circuit(g, &ids) {
            out.insert(ids);
        }
    }
    out
}

fn is_circuit(g: &SignedGraph, ids: &[EdgeId]) -> bool {
    let n = g.vertex_count();
    let mut deg = vec![0; n];
    for &e in ids {
        let ed = g.edges()[e];
        deg[ed.u] += 1;
        deg[ed.v] += 1;
    }
    if deg.iter().any(|&d| d != 0 && d != 2) {
        return false;
    }
    // connected on the touched vertices
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut Vec<usize>, x: usize) -> usize {
        if p[x] != x {
            let r = find(p, p[x]);
            p[x] = r;
        }
        p[x]
    }
    for &e in ids {
        let ed = g.edges()[e];
        let (a, b) = (find(&mut parent, ed.u), find(&mut parent, ed.v));
        parent[a] = b;
    }
    let roots: BTreeSet<usize> = (0..n).filter(|&v| deg[v] > 0).map(|v| find(&mut parent, v)).collect();
    roots.len() == 1
}

/// Minimum number of negative edges over every switching set.
pub fn brute_epsilon(g: &SignedGraph) -> usize {
    let n = g.vertex_count();
    assert!(n <= 16);
    (0u32..(1 << n))
        .map(|mask| {
            let s: SwitchSet = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
            g.switch(&s).unwrap().negative_edges().count()
        })
        .min()
        .unwrap_or(0)
}

/// Whether some assignment of vertices to four connected, pairwise adjacent
/// branch sets exists.
pub fn brute_has_k4_minor(g: &SignedGraph) -> bool {
    let n = g.vertex_count();
    assert!(n <= 8);
    let mut adj = vec![vec![false; n]; n];
    for e in g.edges() {
        if !e.is_loop() {
            adj[e.u][e.v] = true;
            adj[e.v][e.u] = true;
        }
    }
    let mut label = vec![4usize; n];
    let total = 5usize.pow(n as u32);
    for code in 0..total {
        let mut c = code;
        for l in label.iter_mut() {
            *l = c % 5;
            c /= 5;
        }
        // symmetry: branch set i is non-empty before i+1 appears first
        let mut seen = 0;
        let mut ok = true;
        for &l in &label {
            if l < 4 {
                if l > seen {
                    ok = false;
                    break;
                }
                if l == seen {
                    seen += 1;
                }
            }
        }
        if !ok || seen < 4 {
            continue;
        }
        let connected = (0..4).all(|b| {
            let members: Vec<usize> = (0..n).filter(|&v| label[v] == b).collect();
            let mut reached = vec![members[0]];
            let mut stack = vec![members[0]];
            while let Some(v) = stack.pop() {
                for &w in &members {
                    if adj[v][w] && !reached.contains(&w) {
                        reached.push(w);
                        stack.push(w);
                    }
                }
            }
            reached.len() == members.len()
        });
        if !connected {
            continue;
        }
        let touching = |a: usize, b: usize| (0..n).any(|v| label[v] == a && (0..n).any(|w| label[w] == b && adj[v][w]));
        if (0..4).all(|a| (a + 1..4).all(|b| touching(a, b))) {
            return true;
        }
    }
    false
}

/// A random multigraph, loops and parallel edges allowed.
pub fn random_multigraph(rng: &mut ChaCha8Rng, max_vertices: usize, max_edges: usize) -> SignedGraph {
    let n = rng.gen_range(1..=max_vertices);
    let m = rng.gen_range(1..=max_edges);
    let mut g = SignedGraph::new(n);
    for _ in 0..m {
        let u = rng.gen_range(0..n);
        let v = if rng.gen_bool(0.15) { u } else { rng.gen_range(0..n) };
        let s = if rng.gen_bool(0.4) { Sign::Neg } else { Sign::Pos };
        g.add_edge(u, v, s).unwrap();
    }
    g
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Connected underlying multigraphs with at most five vertices and eight
/// edges; every sign pattern of each is a test case.
pub fn catalog() -> Vec<(usize, Vec<(usize, usize)>)> {
    vec![
        (2, vec![(0, 1), (0, 1)]),
        (1, vec![(0, 0), (0, 0)]),
        (2, vec![(0, 0), (0, 1), (1, 1)]),
        (3, vec![(0, 1), (1, 2), (2, 0)]),
        (3, vec![(0, 1), (1, 2), (2, 0), (2, 2)]),
        (3, vec![(0, 1), (0, 1), (1, 2), (1, 2)]),
        (3, vec![(0, 1), (0, 1), (1, 2), (2, 2)]),
        (4, vec![(0, 1), (1, 2), (2, 3), (3, 0), (0, 2)]),
        (4, vec![(0, 1), (0, 1), (1, 2), (2, 3), (2, 3), (3, 3)]),
        (4, vec![(0, 0), (0, 1), (1, 2), (2, 3), (3, 3), (1, 2)]),
        (4, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 3), (0, 0)]),
        (4, vec![(0, 1), (0, 2), (0, 3), (1, 2), (2, 3), (3, 1)]),
        (4, vec![(0, 1), (0, 1), (1, 2), (2, 0), (2, 3), (3, 0), (1, 3)]),
        (5, vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4), (4, 2), (4, 4)]),
        (5, vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 4), (3, 4), (2, 2)]),
        (5, vec![(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2), (2, 4), (1, 3)]),
        (4, vec![(0, 1), (0, 1), (1, 2), (1, 2), (2, 3), (2, 3), (3, 0), (3, 0)]),
        (5, vec![(0, 1), (0, 1), (1, 2), (2, 3), (2, 4), (3, 4), (3, 3), (4, 4)]),
        (3, vec![(0, 1), (0, 1), (0, 1), (1, 2), (1, 2), (1, 2), (2, 0), (2, 0)]),
        (5, vec![(0, 1), (1, 2), (2, 0), (0, 3), (3, 4), (4, 0), (1, 1), (3, 3)]),
        (4, vec![(0, 1), (0, 1), (1, 2), (2, 3), (3, 0), (1, 3), (0, 0), (2, 2)]),
    ]
}

/// `base` with the sign pattern encoded by the bits of `mask`.
pub fn with_signs(n: usize, base: &[(usize, usize)], mask: u32) -> SignedGraph {
    SignedGraph::from_edges(
        n,
        base.iter()
            .enumerate()
            .map(|(i, &(u, v))| (u, v, if mask >> i & 1 == 1 { Sign::Neg } else { Sign::Pos })),
    )
    .unwrap()
}

//! Circuits, barbells, tadpoles and signed circuits.

use std::collections::{BTreeMap, BTreeSet, HashSet};

use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};

pub const DEFAULT_CIRCUIT_CAP: usize = 100_000;
pub const DEFAULT_SIGNED_CIRCUIT_CAP: usize = 100_000;

/// A connected 2-regular edge set.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Circuit {
    /// Sorted edge ids.
    pub edge_ids: Vec<EdgeId>,
    pub sign: Sign,
}

impl Circuit {
    pub fn is_balanced(&self) -> bool {
        self.sign == Sign::Pos
    }

    pub fn vertices(&self, g: &SignedGraph) -> BTreeSet<VertexId> {
        g.vertices_of(&self.edge_ids)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum BarbellKind {
    Short,
    Long,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Barbell {
    pub circuit1: Circuit,
    pub circuit2: Circuit,
    /// Path from `circuit1` to `circuit2`, in order.
    pub path_edge_ids: Vec<EdgeId>,
    pub kind: BarbellKind,
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum SignedCircuit {
    Balanced(Circuit),
    Barbell(Barbell),
}

impl SignedCircuit {
    /// Sorted edge ids.
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        match self {
            SignedCircuit::Balanced(c) => c.edge_ids.clone(),
            SignedCircuit::Barbell(b) => {
                let mut ids: Vec<EdgeId> = b
                    .circuit1
                    .edge_ids
                    .iter()
                    .chain(&b.circuit2.edge_ids)
                    .chain(&b.path_edge_ids)
                    .copied()
                    .collect();
                ids.sort_unstable();
                ids
            }
        }
    }

    pub fn is_balanced_circuit(&self) -> bool {
        matches!(self, SignedCircuit::Balanced(_))
    }
}

/// An xy-path followed by an unbalanced circuit through y.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Tadpole {
    pub tail: VertexId,
    /// Path from the tail to the circuit, in order; empty when the tail is on the circuit.
    pub path_edge_ids: Vec<EdgeId>,
    pub circuit: Circuit,
    /// Where the path meets the circuit.
    pub head: VertexId,
}

impl Tadpole {
    pub fn edge_ids(&self) -> Vec<EdgeId> {
        let mut ids: Vec<EdgeId> = self
            .path_edge_ids
            .iter()
            .chain(&self.circuit.edge_ids)
            .copied()
            .collect();
        ids.sort_unstable();
        ids
    }
}

pub fn enumerate_circuits(g: &SignedGraph, cap: usize) -> Result<Vec<Circuit>> {
    let mut out: Vec<Vec<EdgeId>> = Vec::new();
    for l in g.loops() {
        out.push(vec![l]);
    }
    let n = g.vertex_count();
    let adj = g.incidence();
    let mut on_path = vec![false; n];
    let mut path = Vec::new();
    for e0 in 0..g.edge_count() {
        let edge = g.e(e0);
        if edge.is_loop() {
            continue;
        }
        on_path[edge.u] = true;
        on_path[edge.v] = true;
        path.push(e0);
        search_back(g, &adj, e0, edge.v, edge.u, &mut on_path, &mut path, &mut out, cap)?;
        path.pop();
        on_path[edge.u] = false;
        on_path[edge.v] = false;
        if out.len() > cap {
            return Err(Error::CircuitCap(cap));
        }
    }
    for c in &mut out {
        c.sort_unstable();
    }
    out.sort();
    Ok(out
        .into_iter()
        .map(|ids| Circuit {
            sign: g.sign_of_unchecked(&ids),
            edge_ids: ids,
        })
        .collect())
}

#[allow(clippy::too_many_arguments)]
fn search_back(
    g: &SignedGraph,
    adj: &[Vec<(EdgeId, VertexId)>],
    e0: EdgeId,
    cur: VertexId,
    target: VertexId,
    on_path: &mut [bool],
    path: &mut Vec<EdgeId>,
    out: &mut Vec<Vec<EdgeId>>,
    cap: usize,
) -> Result<()> {
    for &(f, w) in &adj[cur] {
        if f <= e0 || g.e(f).is_loop() {
            continue;
        }
        if w == target {
            path.push(f);
            out.push(path.clone());
            path.pop();
            if out.len() > cap {
                return Err(Error::CircuitCap(cap));
            }
        } else if !on_path[w] {
            on_path[w] = true;
            path.push(f);
            search_back(g, adj, e0, w, target, on_path, path, out, cap)?;
            path.pop();
            on_path[w] = false;
        }
    }
    Ok(())
}

fn check_circuit_shape(g: &SignedGraph, ids: &[EdgeId]) -> bool {
    if ids.is_empty() {
        return false;
    }
    let set: BTreeSet<EdgeId> = ids.iter().copied().collect();
    if set.len() != ids.len() {
        return false;
    }
    let deg = local_degrees(g, ids);
    deg.values().all(|&d| d == 2) && locally_connected(g, ids)
}

pub fn classify_circuit(g: &SignedGraph, c: &Circuit) -> Result<bool> {
    g.check_edges(&c.edge_ids)?;
    if !check_circuit_shape(g, &c.edge_ids) {
        return Err(Error::NotACircuit);
    }
    Ok(g.sign_of_unchecked(&c.edge_ids) == Sign::Pos)
}

/// Builds a circuit from an edge set if it is one.
pub fn as_circuit(g: &SignedGraph, ids: &[EdgeId]) -> Option<Circuit> {
    if !check_circuit_shape(g, ids) {
        return None;
    }
    let mut edge_ids = ids.to_vec();
    edge_ids.sort_unstable();
    Some(Circuit {
        sign: g.sign_of_unchecked(&edge_ids),
        edge_ids,
    })
}

pub fn enumerate_signed_circuits(g: &SignedGraph, cap: usize) -> Result<Vec<SignedCircuit>> {
    let circuits = enumerate_circuits(g, cap.max(DEFAULT_CIRCUIT_CAP))?;
    let mut out: Vec<SignedCircuit> = Vec::new();
    let mut seen: HashSet<Vec<EdgeId>> = HashSet::new();
    let push = |sc: SignedCircuit, out: &mut Vec<SignedCircuit>, seen: &mut HashSet<Vec<EdgeId>>| -> Result<()> {
        if seen.insert(sc.edge_ids()) {
            out.push(sc);
            if out.len() > cap {
                return Err(Error::SignedCircuitCap(cap));
            }
        }
        Ok(())
    };
    let mut unbalanced = Vec::new();
    for c in circuits {
        if c.is_balanced() {
            push(SignedCircuit::Balanced(c), &mut out, &mut seen)?;
        } else {
            unbalanced.push(c);
        }
    }
    let verts: Vec<BTreeSet<VertexId>> = unbalanced.iter().map(|c| c.vertices(g)).collect();
    let adj = g.incidence();
    for i in 0..unbalanced.len() {
        for j in i + 1..unbalanced.len() {
            let common = verts[i].intersection(&verts[j]).count();
            if common == 1 {
                let disjoint_edges = unbalanced[i]
                    .edge_ids
                    .iter()
                    .all(|e| !unbalanced[j].edge_ids.contains(e));
                if disjoint_edges {
                    let b = Barbell {
                        circuit1: unbalanced[i].clone(),
                        circuit2: unbalanced[j].clone(),
                        path_edge_ids: Vec::new(),
                        kind: BarbellKind::Short,
                    };
                    push(SignedCircuit::Barbell(b), &mut out, &mut seen)?;
                }
            } else if common == 0 {
                for p in connecting_paths(g, &adj, &verts[i], &verts[j]) {
                    let b = Barbell {
                        circuit1: unbalanced[i].clone(),
                        circuit2: unbalanced[j].clone(),
                        path_edge_ids: p,
                        kind: BarbellKind::Long,
                    };
                    push(SignedCircuit::Barbell(b), &mut out, &mut seen)?;
                }
            }
        }
    }
    out.sort_by_cached_key(|s| s.edge_ids());
    Ok(out)
}

/// All paths from `a` to `b` whose interior avoids both sets.
fn connecting_paths(
    g: &SignedGraph,
    adj: &[Vec<(EdgeId, VertexId)>],
    a: &BTreeSet<VertexId>,
    b: &BTreeSet<VertexId>,
) -> Vec<Vec<EdgeId>> {
    let mut out = Vec::new();
    let mut visited = vec![false; g.vertex_count()];
    let mut path = Vec::new();
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &SignedGraph,
        adj: &[Vec<(EdgeId, VertexId)>],
        v: VertexId,
        a: &BTreeSet<VertexId>,
        b: &BTreeSet<VertexId>,
        visited: &mut [bool],
        path: &mut Vec<EdgeId>,
        out: &mut Vec<Vec<EdgeId>>,
    ) {
        for &(f, w) in &adj[v] {
            if g.e(f).is_loop() || visited[w] || a.contains(&w) {
                continue;
            }
            path.push(f);
            if b.contains(&w) {
                out.push(path.clone());
            } else {
                visited[w] = true;
                go(g, adj, w, a, b, visited, path, out);
                visited[w] = false;
            }
            path.pop();
        }
    }
    for &s in a {
        go(g, adj, s, a, b, &mut visited, &mut path, &mut out);
    }
    out
}

fn local_degrees(g: &SignedGraph, ids: &[EdgeId]) -> BTreeMap<VertexId, usize> {
    let mut deg = BTreeMap::new();
    for &e in ids {
        let edge = g.e(e);
        *deg.entry(edge.u).or_insert(0) += 1;
        *deg.entry(edge.v).or_insert(0) += 1;
    }
    deg
}

fn locally_connected(g: &SignedGraph, ids: &[EdgeId]) -> bool {
    let (sub, _) = g.edge_subgraph(ids);
    sub.is_edge_connected_ignoring_isolated()
}

struct LocalShape {
    deg: BTreeMap<VertexId, usize>,
    cyclic: Vec<Circuit>,
    bridges: Vec<EdgeId>,
}

/// Splits a connected edge set into its cyclic blocks and bridges; `None`
/// if a cyclic block is not a circuit.
fn local_shape(g: &SignedGraph, ids: &[EdgeId]) -> Option<LocalShape> {
    let set: BTreeSet<EdgeId> = ids.iter().copied().collect();
    if set.len() != ids.len() || ids.is_empty() {
        return None;
    }
    if !locally_connected(g, ids) {
        return None;
    }
    let (sub, map) = g.edge_subgraph(ids);
    let blocks = sub.blocks_and_cuts();
    let mut cyclic = Vec::new();
    let mut bridges = Vec::new();
    for b in blocks.blocks {
        let orig: Vec<EdgeId> = b.iter().map(|&i| map[i]).collect();
        if orig.len() == 1 && !g.e(orig[0]).is_loop() {
            bridges.push(orig[0]);
        } else {
            cyclic.push(as_circuit(g, &orig)?);
        }
    }
    Some(LocalShape {
        deg: local_degrees(g, ids),
        cyclic,
        bridges,
    })
}

/// Orders a set of edges forming a simple path from `from`; returns the path
/// and its far end.
fn order_path(g: &SignedGraph, ids: &[EdgeId], from: VertexId) -> Option<(Vec<EdgeId>, VertexId)> {
    let mut remaining: Vec<EdgeId> = ids.to_vec();
    let mut out = Vec::with_capacity(ids.len());
    let mut cur = from;
    while !remaining.is_empty() {
        let pos = remaining.iter().position(|&e| g.e(e).touches(cur))?;
        let e = remaining.swap_remove(pos);
        cur = g.e(e).other(cur);
        out.push(e);
    }
    Some((out, cur))
}

pub fn is_signed_circuit(g: &SignedGraph, ids: &[EdgeId]) -> Result<Option<SignedCircuit>> {
    g.check_edges(ids)?;
    Ok(parse_signed_circuit(g, ids))
}

pub(crate) fn parse_signed_circuit(g: &SignedGraph, ids: &[EdgeId]) -> Option<SignedCircuit> {
    let shape = local_shape(g, ids)?;
    match shape.cyclic.len() {
        1 if shape.bridges.is_empty() => {
            let c = shape.cyclic.into_iter().next().unwrap();
            c.is_balanced().then_some(SignedCircuit::Balanced(c))
        }
        2 => {
            let mut cs = shape.cyclic;
            if cs.iter().any(|c| c.is_balanced()) {
                return None;
            }
            cs.sort();
            let c2 = cs.pop().unwrap();
            let c1 = cs.pop().unwrap();
            let v1 = c1.vertices(g);
            let v2 = c2.vertices(g);
            let common = v1.intersection(&v2).count();
            if shape.bridges.is_empty() {
                return (common == 1).then_some(SignedCircuit::Barbell(Barbell {
                    circuit1: c1,
                    circuit2: c2,
                    path_edge_ids: Vec::new(),
                    kind: BarbellKind::Short,
                }));
            }
            if common != 0 {
                return None;
            }
            if shape.deg.values().any(|&d| d != 2 && d != 3) {
                return None;
            }
            let start = *v1.iter().find(|v| shape.deg[v] == 3)?;
            let (path, end) = order_path(g, &shape.bridges, start)?;
            if !v2.contains(&end) || shape.deg.values().filter(|&&d| d == 3).count() != 2 {
                return None;
            }
            Some(SignedCircuit::Barbell(Barbell {
                circuit1: c1,
                circuit2: c2,
                path_edge_ids: path,
                kind: BarbellKind::Long,
            }))
        }
        _ => None,
    }
}

pub fn is_tadpole_at(g: &SignedGraph, ids: &[EdgeId], x: VertexId) -> Result<Option<Tadpole>> {
    g.check_edges(ids)?;
    g.check_vertex(x)?;
    Ok(parse_tadpole(g, ids, x))
}

pub(crate) fn parse_tadpole(g: &SignedGraph, ids: &[EdgeId], x: VertexId) -> Option<Tadpole> {
    let shape = local_shape(g, ids)?;
    if shape.cyclic.len() != 1 {
        return None;
    }
    let circuit = shape.cyclic.into_iter().next().unwrap();
    if circuit.is_balanced() {
        return None;
    }
    let cv = circuit.vertices(g);
    if shape.bridges.is_empty() {
        return cv.contains(&x).then_some(Tadpole {
            tail: x,
            path_edge_ids: Vec::new(),
            circuit,
            head: x,
        });
    }
    if shape.deg.get(&x) != Some(&1) || cv.contains(&x) {
        return None;
    }
    if shape.deg.values().filter(|&&d| d == 1).count() != 1
        || shape.deg.values().filter(|&&d| d == 3).count() != 1
        || shape.deg.values().any(|&d| d > 3)
    {
        return None;
    }
    let (path, end) = order_path(g, &shape.bridges, x)?;
    if !cv.contains(&end) {
        return None;
    }
    Some(Tadpole {
        tail: x,
        path_edge_ids: path,
        circuit,
        head: end,
    })
}

/// Orders an edge set as a simple path from `x` to `y` (`x != y`).
pub fn parse_path(g: &SignedGraph, ids: &[EdgeId], x: VertexId, y: VertexId) -> Option<Vec<EdgeId>> {
    if x == y || ids.is_empty() {
        return None;
    }
    let set: BTreeSet<EdgeId> = ids.iter().copied().collect();
    if set.len() != ids.len() || ids.iter().any(|&e| g.e(e).is_loop()) {
        return None;
    }
    let deg = local_degrees(g, ids);
    if deg.get(&x) != Some(&1) || deg.get(&y) != Some(&1) {
        return None;
    }
    if deg.iter().any(|(&v, &d)| v != x && v != y && d != 2) {
        return None;
    }
    let (path, end) = order_path(g, ids, x)?;
    (end == y).then_some(path)
}

/// Every simple path from `x` to `y` (`x != y`), each as an ordered edge list.
pub fn enumerate_paths(g: &SignedGraph, x: VertexId, y: VertexId, cap: usize) -> Result<Vec<Vec<EdgeId>>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    let mut out = Vec::new();
    if x == y {
        return Ok(out);
    }
    let adj = g.incidence();
    let mut visited = vec![false; g.vertex_count()];
    visited[x] = true;
    let mut path = Vec::new();
    walk_paths(g, &adj, x, &|w| w == y, &mut visited, &mut path, &mut out, cap)?;
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn walk_paths(
    g: &SignedGraph,
    adj: &[Vec<(EdgeId, VertexId)>],
    v: VertexId,
    stop: &dyn Fn(VertexId) -> bool,
    visited: &mut [bool],
    path: &mut Vec<EdgeId>,
    out: &mut Vec<Vec<EdgeId>>,
    cap: usize,
) -> Result<()> {
    for &(f, w) in &adj[v] {
        if g.e(f).is_loop() || visited[w] {
            continue;
        }
        path.push(f);
        if stop(w) {
            out.push(path.clone());
            if out.len() > cap {
                return Err(Error::CircuitCap(cap));
            }
        } else {
            visited[w] = true;
            walk_paths(g, adj, w, stop, visited, path, out, cap)?;
            visited[w] = false;
        }
        path.pop();
    }
    Ok(())
}

/// Every tadpole with tail `x`.
pub fn enumerate_tadpoles(g: &SignedGraph, x: VertexId, cap: usize) -> Result<Vec<Tadpole>> {
    g.check_vertex(x)?;
    let adj = g.incidence();
    let mut out = Vec::new();
    for c in enumerate_circuits(g, cap)? {
        if c.is_balanced() {
            continue;
        }
        let cv = c.vertices(g);
        if cv.contains(&x) {
            out.push(Tadpole {
                tail: x,
                path_edge_ids: Vec::new(),
                circuit: c,
                head: x,
            });
            continue;
        }
        let mut visited = vec![false; g.vertex_count()];
        for &v in &cv {
            visited[v] = true;
        }
        visited[x] = true;
        let mut paths = Vec::new();
        let mut path = Vec::new();
        // Interior vertices avoid the circuit; the walk stops on reaching it.
        let stop = |w: VertexId| cv.contains(&w);
        let mut vis2 = visited.clone();
        for v in cv.iter() {
            vis2[*v] = false;
        }
        walk_paths(g, &adj, x, &stop, &mut vis2, &mut path, &mut paths, cap)?;
        for p in paths {
            let head = {
                let mut cur = x;
                for &e in &p {
                    cur = g.e(e).other(cur);
                }
                cur
            };
            out.push(Tadpole {
                tail: x,
                path_edge_ids: p,
                circuit: c.clone(),
                head,
            });
            if out.len() > cap {
                return Err(Error::CircuitCap(cap));
            }
        }
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::*;

    fn g(n: usize, e: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn triangle_has_one_circuit() {
        let t = g(3, &[(0, 1, Pos), (1, 2, Pos), (2, 0, Pos)]);
        let cs = enumerate_circuits(&t, 100).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].edge_ids, vec![0, 1, 2]);
        assert!(classify_circuit(&t, &cs[0]).unwrap());
    }

    #[test]
    fn digon_with_pendant() {
        let d = g(3, &[(0, 1, Pos), (0, 1, Neg), (1, 2, Pos)]);
        let cs = enumerate_circuits(&d, 100).unwrap();
        assert_eq!(cs.len(), 1);
        assert_eq!(cs[0].edge_ids, vec![0, 1]);
        assert!(!classify_circuit(&d, &cs[0]).unwrap());
    }

    #[test]
    fn theta_has_three() {
        let t = g(2, &[(0, 1, Pos), (0, 1, Pos), (0, 1, Neg)]);
        assert_eq!(enumerate_circuits(&t, 100).unwrap().len(), 3);
    }

    #[test]
    fn circuit_cap_is_an_error() {
        let t = g(2, &[(0, 1, Pos), (0, 1, Pos), (0, 1, Neg)]);
        assert_eq!(enumerate_circuits(&t, 2), Err(Error::CircuitCap(2)));
    }

    #[test]
    fn negative_loop_is_unbalanced() {
        let l = g(1, &[(0, 0, Neg)]);
        let c = as_circuit(&l, &[0]).unwrap();
        assert!(!classify_circuit(&l, &c).unwrap());
        let bad = Circuit {
            edge_ids: vec![0, 1],
            sign: Pos,
        };
        let p = g(3, &[(0, 1, Pos), (1, 2, Pos)]);
        assert_eq!(classify_circuit(&p, &bad), Err(Error::NotACircuit));
    }

    #[test]
    fn signed_circuit_examples() {
        let lb = g(2, &[(0, 0, Neg), (0, 1, Pos), (1, 1, Neg)]);
        let sc = enumerate_signed_circuits(&lb, 100).unwrap();
        assert_eq!(sc.len(), 1);
        assert_eq!(sc[0].edge_ids(), vec![0, 1, 2]);
        assert!(matches!(&sc[0], SignedCircuit::Barbell(b) if b.kind == BarbellKind::Long));

        let d = g(2, &[(0, 1, Pos), (0, 1, Neg)]);
        assert!(enumerate_signed_circuits(&d, 100).unwrap().is_empty());

        let two = g(1, &[(0, 0, Neg), (0, 0, Neg)]);
        let sc = enumerate_signed_circuits(&two, 100).unwrap();
        assert_eq!(sc.len(), 1);
        assert!(matches!(&sc[0], SignedCircuit::Barbell(b) if b.kind == BarbellKind::Short));
    }

    #[test]
    fn parse_signed_circuits() {
        let sq = g(4, &[(0, 1, Neg), (1, 2, Pos), (2, 3, Neg), (3, 0, Pos)]);
        assert!(matches!(
            is_signed_circuit(&sq, &[0, 1, 2, 3]).unwrap(),
            Some(SignedCircuit::Balanced(_))
        ));
        let lb = g(2, &[(0, 0, Neg), (0, 1, Pos), (1, 1, Neg)]);
        assert!(matches!(
            is_signed_circuit(&lb, &[0, 1, 2]).unwrap(),
            Some(SignedCircuit::Barbell(Barbell { kind: BarbellKind::Long, .. }))
        ));
        assert_eq!(is_signed_circuit(&lb, &[0]).unwrap(), None);
        assert_eq!(is_signed_circuit(&lb, &[9]), Err(Error::EdgeOutOfRange(9)));
    }

    #[test]
    fn barbell_path_is_ordered() {
        let h = g(
            4,
            &[(0, 0, Neg), (2, 3, Pos), (0, 1, Pos), (1, 2, Neg), (3, 3, Neg)],
        );
        match parse_signed_circuit(&h, &[0, 1, 2, 3, 4]).unwrap() {
            SignedCircuit::Barbell(b) => {
                assert_eq!(b.circuit1.edge_ids, vec![0]);
                assert_eq!(b.path_edge_ids, vec![2, 3, 1]);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn tadpole_examples() {
        let l = g(1, &[(0, 0, Neg)]);
        let t = is_tadpole_at(&l, &[0], 0).unwrap().unwrap();
        assert!(t.path_edge_ids.is_empty());

        let h = g(3, &[(0, 1, Pos), (1, 2, Pos), (1, 2, Neg)]);
        let t = is_tadpole_at(&h, &[0, 1, 2], 0).unwrap().unwrap();
        assert_eq!(t.path_edge_ids, vec![0]);
        assert_eq!(t.head, 1);
        assert!(is_tadpole_at(&h, &[0, 1, 2], 1).unwrap().is_none());

        let tri = g(3, &[(0, 1, Pos), (1, 2, Pos), (2, 0, Pos)]);
        for x in 0..3 {
            assert!(is_tadpole_at(&tri, &[0, 1, 2], x).unwrap().is_none());
        }
    }

    #[test]
    fn path_and_tadpole_enumeration() {
        let r2 = g(3, &[(2, 0, Pos), (0, 1, Pos), (1, 2, Pos), (2, 1, Neg)]);
        assert_eq!(enumerate_paths(&r2, 0, 1, 100).unwrap().len(), 3);
        let tx = enumerate_tadpoles(&r2, 0, 100).unwrap();
        // digon {1,2} reached from 0 by edge 0 or edge 1, or the triangle
        // with edge 3 in place of edge 2 through 0
        assert_eq!(tx.len(), 3);
        for t in &tx {
            assert_eq!(parse_tadpole(&r2, &t.edge_ids(), 0).as_ref(), Some(t));
        }
    }

    #[test]
    fn paths() {
        let p = g(3, &[(1, 2, Neg), (0, 1, Pos)]);
        assert_eq!(parse_path(&p, &[0, 1], 0, 2), Some(vec![1, 0]));
        assert_eq!(parse_path(&p, &[0, 1], 0, 1), None);
    }
}

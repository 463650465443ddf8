//! Signed multigraphs with loops, plus the switching and balance machinery.
//!
//! Edge ids are positions in the edge list. Every derived object (circuits,
//! covers, decompositions) refers to edges by id, so parallel edges stay
//! distinguishable.

mod blocks;
pub mod io;
mod suppress;

use std::collections::{BTreeSet, VecDeque};
use std::fmt;
use std::ops::Mul;

use crate::error::{Error, Result};

pub use blocks::BlockStructure;
pub use suppress::Suppressed;

pub type VertexId = usize;
pub type EdgeId = usize;

/// Default cap on component size for the exhaustive negativeness search.
pub const DEFAULT_EPSILON_CAP: usize = 24;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Sign {
    Pos,
    Neg,
}

impl Sign {
    pub fn flip(self) -> Sign {
        match self {
            Sign::Pos => Sign::Neg,
            Sign::Neg => Sign::Pos,
        }
    }

    pub fn value(self) -> i8 {
        match self {
            Sign::Pos => 1,
            Sign::Neg => -1,
        }
    }

    pub fn is_neg(self) -> bool {
        self == Sign::Neg
    }
}

impl Mul for Sign {
    type Output = Sign;
    fn mul(self, rhs: Sign) -> Sign {
        if self == rhs {
            Sign::Pos
        } else {
            Sign::Neg
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Pos => "+",
            Sign::Neg => "-",
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// The endpoint opposite `w`. For a loop this is `w` itself.
    pub fn other(&self, w: VertexId) -> VertexId {
        if self.u == w {
            self.v
        } else {
            self.u
        }
    }

    pub fn touches(&self, w: VertexId) -> bool {
        self.u == w || self.v == w
    }
}

/// A signed multigraph. Loops and parallel edges are allowed.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct SignedGraph {
    vertex_count: usize,
    edges: Vec<Edge>,
}

/// Set of vertices to switch at.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct SwitchSet(pub BTreeSet<VertexId>);

impl SwitchSet {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn contains(&self, v: VertexId) -> bool {
        self.0.contains(&v)
    }
}

impl FromIterator<VertexId> for SwitchSet {
    fn from_iter<I: IntoIterator<Item = VertexId>>(iter: I) -> Self {
        SwitchSet(iter.into_iter().collect())
    }
}

impl SignedGraph {
    pub fn new(vertex_count: usize) -> Self {
        SignedGraph {
            vertex_count,
            edges: Vec::new(),
        }
    }

    pub fn from_edges(
        vertex_count: usize,
        edges: impl IntoIterator<Item = (VertexId, VertexId, Sign)>,
    ) -> Result<Self> {
        let mut g = SignedGraph::new(vertex_count);
        for (u, v, s) in edges {
            g.add_edge(u, v, s)?;
        }
        Ok(g)
    }

    pub fn add_vertex(&mut self) -> VertexId {
        self.vertex_count += 1;
        self.vertex_count - 1
    }

    pub fn add_edge(&mut self, u: VertexId, v: VertexId, sign: Sign) -> Result<EdgeId> {
        for w in [u, v] {
            if w >= self.vertex_count {
                return Err(Error::VertexOutOfRange(w));
            }
        }
        self.edges.push(Edge { u, v, sign });
        Ok(self.edges.len() - 1)
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_count
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge> {
        self.edges.get(e).ok_or(Error::EdgeOutOfRange(e))
    }

    /// Unchecked accessor for internal use where ids come from the graph itself.
    pub(crate) fn e(&self, e: EdgeId) -> &Edge {
        &self.edges[e]
    }

    pub fn check_edges(&self, ids: &[EdgeId]) -> Result<()> {
        match ids.iter().find(|&&e| e >= self.edges.len()) {
            Some(&e) => Err(Error::EdgeOutOfRange(e)),
            None => Ok(()),
        }
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v < self.vertex_count {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange(v))
        }
    }

    /// Incidence lists: `(edge id, other endpoint)`; a loop appears once.
    pub fn incidence(&self) -> Vec<Vec<(EdgeId, VertexId)>> {
        let mut adj = vec![Vec::new(); self.vertex_count];
        for (id, e) in self.edges.iter().enumerate() {
            adj[e.u].push((id, e.v));
            if !e.is_loop() {
                adj[e.v].push((id, e.u));
            }
        }
        adj
    }

    /// Degree with each loop contributing 2.
    pub fn degree(&self, v: VertexId) -> usize {
        self.edges
            .iter()
            .map(|e| usize::from(e.u == v) + usize::from(e.v == v))
            .sum()
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.vertex_count];
        for e in &self.edges {
            d[e.u] += 1;
            d[e.v] += 1;
        }
        d
    }

    pub fn loops(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.is_loop())
            .map(|(i, _)| i)
    }

    pub fn negative_edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.edges
            .iter()
            .enumerate()
            .filter(|(_, e)| e.sign.is_neg())
            .map(|(i, _)| i)
    }

    /// Vertices incident to at least one edge of `ids`, sorted.
    pub fn vertices_of(&self, ids: &[EdgeId]) -> BTreeSet<VertexId> {
        let mut out = BTreeSet::new();
        for &e in ids {
            out.insert(self.edges[e].u);
            out.insert(self.edges[e].v);
        }
        out
    }

    /// Connected components as vertex lists, isolated vertices included.
    pub fn components(&self) -> Vec<Vec<VertexId>> {
        let adj = self.incidence();
        let mut seen = vec![false; self.vertex_count];
        let mut out = Vec::new();
        for s in 0..self.vertex_count {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                for &(_, w) in &adj[v] {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push_back(w);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// Components that carry at least one edge.
    pub fn edge_components(&self) -> Vec<Vec<VertexId>> {
        let deg = self.degrees();
        self.components()
            .into_iter()
            .filter(|c| c.iter().any(|&v| deg[v] > 0))
            .collect()
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Connected when isolated vertices are ignored.
    pub fn is_edge_connected_ignoring_isolated(&self) -> bool {
        self.edge_components().len() <= 1
    }

    pub fn switch(&self, s: &SwitchSet) -> Result<SignedGraph> {
        if let Some(&v) = s.0.iter().find(|&&v| v >= self.vertex_count) {
            return Err(Error::VertexOutOfRange(v));
        }
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let flip = !e.is_loop() && (s.contains(e.u) != s.contains(e.v));
                Edge {
                    sign: if flip { e.sign.flip() } else { e.sign },
                    ..*e
                }
            })
            .collect();
        Ok(SignedGraph {
            vertex_count: self.vertex_count,
            edges,
        })
    }

    /// A switching set that makes every edge positive, if one exists.
    pub fn balancing_switch(&self) -> Option<SwitchSet> {
        if self.edges.iter().any(|e| e.is_loop() && e.sign.is_neg()) {
            return None;
        }
        let adj = self.incidence();
        let mut pot: Vec<Option<Sign>> = vec![None; self.vertex_count];
        for s in 0..self.vertex_count {
            if pot[s].is_some() {
                continue;
            }
            pot[s] = Some(Sign::Pos);
            let mut queue = VecDeque::from([s]);
            while let Some(v) = queue.pop_front() {
                let pv = pot[v].unwrap();
                for &(id, w) in &adj[v] {
                    let e = &self.edges[id];
                    if e.is_loop() {
                        continue;
                    }
                    let want = pv * e.sign;
                    match pot[w] {
                        None => {
                            pot[w] = Some(want);
                            queue.push_back(w);
                        }
                        Some(pw) if pw != want => return None,
                        _ => {}
                    }
                }
            }
        }
        Some(
            pot.iter()
                .enumerate()
                .filter(|(_, p)| **p == Some(Sign::Neg))
                .map(|(v, _)| v)
                .collect(),
        )
    }

    pub fn is_balanced(&self) -> bool {
        self.balancing_switch().is_some()
    }

    pub fn negativeness(&self) -> Result<usize> {
        self.negativeness_with_cap(DEFAULT_EPSILON_CAP)
    }

    /// Exact minimum number of negative edges over all switchings.
    ///
    /// Components are independent, so each is minimized separately with its
    /// smallest vertex held fixed; the cap applies to the largest component.
    pub fn negativeness_with_cap(&self, cap: usize) -> Result<usize> {
        let comps = self.components();
        if let Some(c) = comps.iter().find(|c| c.len() > cap) {
            return Err(Error::EpsilonCap { size: c.len(), cap });
        }
        let mut local = vec![usize::MAX; self.vertex_count];
        for c in &comps {
            for (i, &v) in c.iter().enumerate() {
                local[v] = i;
            }
        }
        let mut comp_of = vec![0; self.vertex_count];
        for (ci, c) in comps.iter().enumerate() {
            for &v in c {
                comp_of[v] = ci;
            }
        }
        let mut per_comp_edges: Vec<Vec<(usize, usize, bool)>> = vec![Vec::new(); comps.len()];
        let mut loops_neg = 0;
        for e in &self.edges {
            if e.is_loop() {
                loops_neg += usize::from(e.sign.is_neg());
            } else {
                per_comp_edges[comp_of[e.u]].push((local[e.u], local[e.v], e.sign.is_neg()));
            }
        }
        let mut total = loops_neg;
        for (ci, c) in comps.iter().enumerate() {
            total += min_negative_in_component(c.len(), &per_comp_edges[ci]);
        }
        Ok(total)
    }

    pub fn sign_of(&self, ids: &[EdgeId]) -> Result<Sign> {
        self.check_edges(ids)?;
        Ok(self.sign_of_unchecked(ids))
    }

    pub(crate) fn sign_of_unchecked(&self, ids: &[EdgeId]) -> Sign {
        ids.iter()
            .fold(Sign::Pos, |acc, &e| acc * self.edges[e].sign)
    }

    /// Subgraph on the given edges; vertex ids are kept, the returned vector
    /// maps new edge ids back to ids in `self`.
    pub fn edge_subgraph(&self, ids: &[EdgeId]) -> (SignedGraph, Vec<EdgeId>) {
        let mut g = SignedGraph::new(self.vertex_count);
        for &e in ids {
            g.edges.push(self.edges[e]);
        }
        (g, ids.to_vec())
    }

    /// Drops isolated vertices. Returns the compacted graph and the old id of
    /// each new vertex.
    pub fn compact(&self) -> (SignedGraph, Vec<VertexId>) {
        let deg = self.degrees();
        let keep: Vec<VertexId> = (0..self.vertex_count).filter(|&v| deg[v] > 0).collect();
        let mut new_id = vec![usize::MAX; self.vertex_count];
        for (i, &v) in keep.iter().enumerate() {
            new_id[v] = i;
        }
        let edges = self
            .edges
            .iter()
            .map(|e| Edge {
                u: new_id[e.u],
                v: new_id[e.v],
                sign: e.sign,
            })
            .collect();
        (
            SignedGraph {
                vertex_count: keep.len(),
                edges,
            },
            keep,
        )
    }

    pub fn suppress(&self) -> Suppressed {
        suppress::suppress(self)
    }

    pub fn blocks_and_cuts(&self) -> BlockStructure {
        blocks::blocks_and_cuts(self)
    }

    /// Connected with no cut vertex. Loops never create a cut vertex here:
    /// removing a vertex carrying only a loop and one other block does not
    /// increase the component count.
    pub fn is_two_connected(&self) -> bool {
        if !self.is_connected() {
            return false;
        }
        blocks::loopless_cut_vertices(self).is_empty()
    }

    /// Vertices whose removal separates non-loop edges.
    pub(crate) fn loopless_cut_vertices(&self) -> BTreeSet<VertexId> {
        blocks::loopless_cut_vertices(self)
    }

    /// Bridges: non-loop edges whose removal disconnects their endpoints.
    pub fn bridges(&self) -> Vec<EdgeId> {
        self.blocks_and_cuts()
            .blocks
            .iter()
            .filter(|b| b.len() == 1 && !self.edges[b[0]].is_loop())
            .map(|b| b[0])
            .collect()
    }
}

fn min_negative_in_component(k: usize, edges: &[(usize, usize, bool)]) -> usize {
    if edges.is_empty() {
        return 0;
    }
    let mut inc: Vec<Vec<usize>> = vec![Vec::new(); k];
    for (i, &(u, v, _)) in edges.iter().enumerate() {
        inc[u].push(i);
        inc[v].push(i);
    }
    let mut neg: Vec<bool> = edges.iter().map(|e| e.2).collect();
    let mut count = neg.iter().filter(|&&b| b).count();
    let mut best = count;
    // Gray code over vertices 1..k; vertex 0 stays unswitched.
    let steps: u64 = 1u64 << (k - 1);
    for i in 1..steps {
        let bit = i.trailing_zeros() as usize + 1;
        for &ei in &inc[bit] {
            if neg[ei] {
                count -= 1;
            } else {
                count += 1;
            }
            neg[ei] = !neg[ei];
        }
        best = best.min(count);
        if best == 0 {
            break;
        }
    }
    best
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::*;

    fn triangle(s: [Sign; 3]) -> SignedGraph {
        SignedGraph::from_edges(3, [(0, 1, s[0]), (1, 2, s[1]), (2, 0, s[2])]).unwrap()
    }

    fn digon() -> SignedGraph {
        SignedGraph::from_edges(2, [(0, 1, Pos), (0, 1, Neg)]).unwrap()
    }

    #[test]
    fn switch_at_one_vertex_of_triangle() {
        let g = triangle([Pos, Pos, Pos]);
        let h = g.switch(&[0].into_iter().collect()).unwrap();
        let signs: Vec<Sign> = h.edges().iter().map(|e| e.sign).collect();
        assert_eq!(signs, vec![Neg, Pos, Neg]);
        assert_eq!(g.switch(&SwitchSet::new()).unwrap(), g);
    }

    #[test]
    fn switching_leaves_loops_alone() {
        let g = SignedGraph::from_edges(1, [(0, 0, Neg)]).unwrap();
        let h = g.switch(&[0].into_iter().collect()).unwrap();
        assert_eq!(h.edge(0).unwrap().sign, Neg);
    }

    #[test]
    fn switch_rejects_bad_vertex() {
        let g = digon();
        assert_eq!(
            g.switch(&[5].into_iter().collect()),
            Err(Error::VertexOutOfRange(5))
        );
    }

    #[test]
    fn balance_examples() {
        assert!(triangle([Pos, Pos, Pos]).is_balanced());
        assert!(!digon().is_balanced());
        let p = SignedGraph::from_edges(3, [(0, 1, Neg), (1, 2, Neg)]).unwrap();
        assert!(p.is_balanced());
        let l = SignedGraph::from_edges(1, [(0, 0, Neg)]).unwrap();
        assert!(!l.is_balanced());
    }

    #[test]
    fn negativeness_examples() {
        assert_eq!(triangle([Pos, Pos, Pos]).negativeness().unwrap(), 0);
        assert_eq!(digon().negativeness().unwrap(), 1);
        // two unbalanced digons joined by a path of length 2
        let g = SignedGraph::from_edges(
            5,
            [
                (0, 1, Pos),
                (0, 1, Neg),
                (1, 2, Neg),
                (2, 3, Pos),
                (3, 4, Neg),
                (3, 4, Pos),
            ],
        )
        .unwrap();
        assert_eq!(g.negativeness().unwrap(), 2);
    }

    #[test]
    fn negativeness_cap() {
        let mut g = SignedGraph::new(30);
        for v in 0..29 {
            g.add_edge(v, v + 1, Pos).unwrap();
        }
        assert!(matches!(
            g.negativeness(),
            Err(Error::EpsilonCap { size: 30, cap: 24 })
        ));
    }

    #[test]
    fn sign_products() {
        let g = digon();
        assert_eq!(g.sign_of(&[]).unwrap(), Pos);
        assert_eq!(g.sign_of(&[1]).unwrap(), Neg);
        assert_eq!(g.sign_of(&[0, 1]).unwrap(), Neg);
        assert_eq!(g.sign_of(&[7]), Err(Error::EdgeOutOfRange(7)));
    }

    #[test]
    fn two_connectivity() {
        assert!(digon().is_two_connected());
        let p = SignedGraph::from_edges(3, [(0, 1, Pos), (1, 2, Pos)]).unwrap();
        assert!(!p.is_two_connected());
        let e = SignedGraph::from_edges(2, [(0, 1, Pos)]).unwrap();
        assert!(e.is_two_connected());
        // a triangle with a negative loop at one corner has no cut vertex
        let mut r1 = triangle([Pos, Pos, Pos]);
        r1.add_edge(2, 2, Neg).unwrap();
        assert!(r1.is_two_connected());
    }
}

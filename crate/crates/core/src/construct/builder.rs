//! Top-level 6-cover builder.

use std::collections::BTreeSet;
use std::fmt;

use crate::construct::engine::{cover_at_edge, Engine};
use crate::coverability::is_coverable;
use crate::cover::{verify_k_cover, CoverFamily, CoverMember};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};
use crate::oracle::{k_cover_feasible, Caps};
use crate::sp::is_k4_minor_free;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Provenance {
    Structural,
    OracleFallback,
}

impl Provenance {
    pub fn name(self) -> &'static str {
        match self {
            Provenance::Structural => "structural",
            Provenance::OracleFallback => "oracle_fallback",
        }
    }

    fn and(self, other: Provenance) -> Provenance {
        if self == Provenance::Structural {
            other
        } else {
            self
        }
    }
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct BuildOptions {
    /// Profiles kept per composition node.
    pub profile_cap: usize,
    pub caps: Caps,
    /// Fail instead of calling the oracle.
    pub structural_only: bool,
}

impl Default for BuildOptions {
    fn default() -> Self {
        BuildOptions {
            profile_cap: Engine::default().cap,
            caps: Caps::default(),
            structural_only: false,
        }
    }
}

pub fn construct_six_cover(g: &SignedGraph) -> Result<(CoverFamily, Provenance)> {
    construct_six_cover_with(g, &BuildOptions::default())
}

pub fn construct_six_cover_with(g: &SignedGraph, opts: &BuildOptions) -> Result<(CoverFamily, Provenance)> {
    if !g.is_edge_connected_ignoring_isolated() {
        return Err(Error::Disconnected);
    }
    if g.edge_count() > 0 && !is_coverable(g)?.coverable {
        return Err(Error::NotCoverable);
    }
    if !is_k4_minor_free(g) {
        return Err(Error::NotK4MinorFree);
    }
    let b = Builder { opts };
    let (sets, prov) = b.build(g)?;
    let mut f = CoverFamily::new();
    for ids in &sets {
        let m = CoverMember::signed(g, ids)
            .ok_or_else(|| Error::Construction(format!("{ids:?} is not a signed circuit")))?;
        f.push(m);
    }
    verify_k_cover(g, &f, 6).map_err(|v| Error::Construction(v.to_string()))?;
    Ok((f, prov))
}

type Sets = Vec<Vec<EdgeId>>;

fn lift(sets: Sets, map: &[EdgeId]) -> Sets {
    sets.into_iter()
        .map(|s| {
            let mut v: Vec<EdgeId> = s.into_iter().map(|e| map[e]).collect();
            v.sort_unstable();
            v
        })
        .collect()
}

/// The subgraph on `ids` without isolated vertices, the edge map back, and
/// the old id of each new vertex.
fn restrict(g: &SignedGraph, ids: &[EdgeId]) -> (SignedGraph, Vec<EdgeId>, Vec<VertexId>) {
    let (h, map) = g.edge_subgraph(ids);
    let (h, keep) = h.compact();
    (h, map, keep)
}

struct Builder<'a> {
    opts: &'a BuildOptions,
}

impl Builder<'_> {
    fn build(&self, g: &SignedGraph) -> Result<(Sets, Provenance)> {
        if g.edge_count() == 0 {
            return Ok((Vec::new(), Provenance::Structural));
        }
        let pos_loops: Vec<EdgeId> = g.loops().filter(|&e| g.e(e).sign == Sign::Pos).collect();
        if !pos_loops.is_empty() {
            let rest: Vec<EdgeId> = (0..g.edge_count()).filter(|e| !pos_loops.contains(e)).collect();
            let (h, map, _) = restrict(g, &rest);
            let (sets, prov) = self.build(&h)?;
            let mut out = lift(sets, &map);
            for &l in &pos_loops {
                out.extend(std::iter::repeat_n(vec![l], 6));
            }
            return Ok((out, prov));
        }
        if let Some(&v) = g.loopless_cut_vertices().iter().next() {
            return self.split_at(g, v);
        }
        let non_loops: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| !g.e(e).is_loop()).collect();
        if non_loops.is_empty() {
            return Ok((loop_bouquet(&g.loops().collect::<Vec<_>>())?, Provenance::Structural));
        }
        if let Some(sets) = self.compose(g, &non_loops)? {
            return Ok((sets, Provenance::Structural));
        }
        self.oracle(g)
    }

    /// Tries every root edge, first with the configured profile cap and
    /// then with a cap sixteen times larger.
    fn compose(&self, g: &SignedGraph, non_loops: &[EdgeId]) -> Result<Option<Sets>> {
        let mut roots: Vec<EdgeId> = Vec::new();
        let mut seen: BTreeSet<(VertexId, VertexId)> = BTreeSet::new();
        for &e in non_loops {
            let ed = g.e(e);
            if seen.insert((ed.u.min(ed.v), ed.u.max(ed.v))) {
                roots.push(e);
            }
        }
        for cap in [self.opts.profile_cap, self.opts.profile_cap * 16] {
            let engine = Engine { cap };
            for &e in &roots {
                if let Some(f) = cover_at_edge(g, e, &engine)? {
                    return Ok(Some(f.members.into_iter().map(|m| m.edge_ids).collect()));
                }
            }
        }
        Ok(None)
    }

    fn oracle(&self, g: &SignedGraph) -> Result<(Sets, Provenance)> {
        if self.opts.structural_only {
            return Err(Error::Construction("no structural case applies".into()));
        }
        let r = k_cover_feasible(g, 6, self.opts.caps)?;
        let f = r
            .family
            .ok_or_else(|| Error::Construction("oracle found no 6-cover of a coverable block".into()))?;
        Ok((f.members.into_iter().map(|m| m.edge_ids).collect(), Provenance::OracleFallback))
    }

    /// Splits at cut vertex `v` into the first branch and everything else.
    fn split_at(&self, g: &SignedGraph, v: VertexId) -> Result<(Sets, Provenance)> {
        let (first, rest) = branches_at(g, v);
        let (h1, map1, keep1) = restrict(g, &first);
        let (h2, map2, keep2) = restrict(g, &rest);
        if h1.is_balanced() || h2.is_balanced() {
            let (s1, p1) = self.build(&h1)?;
            let (s2, p2) = self.build(&h2)?;
            let mut out = lift(s1, &map1);
            out.extend(lift(s2, &map2));
            return Ok((out, p1.and(p2)));
        }
        let (t1, p1) = self.tadpoles_via_loop(h1, &keep1, v)?;
        let (t2, p2) = self.tadpoles_via_loop(h2, &keep2, v)?;
        let (mut c1, t1) = t1;
        let (c2, t2) = t2;
        let mut out = lift(std::mem::take(&mut c1), &map1);
        out.extend(lift(c2, &map2));
        let t1 = lift(t1, &map1);
        let t2 = lift(t2, &map2);
        for (a, b) in t1.into_iter().zip(t2) {
            let mut s = a;
            s.extend(b);
            s.sort_unstable();
            out.push(s);
        }
        Ok((out, p1.and(p2)))
    }

    /// Covers `h` plus a new negative loop at `v`; returns the members
    /// avoiding the loop and, with the loop removed, the six through it.
    fn tadpoles_via_loop(
        &self,
        mut h: SignedGraph,
        keep: &[VertexId],
        v: VertexId,
    ) -> Result<((Sets, Sets), Provenance)> {
        let local = keep.iter().position(|&w| w == v).expect("cut vertex in both sides");
        let l = h.add_edge(local, local, Sign::Neg)?;
        let (sets, prov) = self.build(&h)?;
        let (with, without): (Sets, Sets) = sets.into_iter().partition(|s| s.contains(&l));
        let tails: Sets = with
            .into_iter()
            .map(|s| s.into_iter().filter(|&e| e != l).collect())
            .collect();
        if tails.len() != 6 {
            return Err(Error::Construction("added loop not covered six times".into()));
        }
        Ok(((without, tails), prov))
    }
}

/// Edges of the branch at `v` holding the smallest edge id, and all others.
fn branches_at(g: &SignedGraph, v: VertexId) -> (Vec<EdgeId>, Vec<EdgeId>) {
    let n = g.vertex_count();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], a: usize) -> usize {
        let mut r = a;
        while p[r] != r {
            r = p[r];
        }
        let mut a = a;
        while p[a] != r {
            let next = p[a];
            p[a] = r;
            a = next;
        }
        r
    }
    for e in g.edges() {
        if e.u != v && e.v != v {
            let (a, b) = (find(&mut parent, e.u), find(&mut parent, e.v));
            parent[a] = b;
        }
    }
    let root_of = |e: EdgeId, parent: &mut Vec<usize>| {
        let ed = g.e(e);
        if ed.is_loop() && ed.u == v {
            None
        } else {
            let w = if ed.u == v { ed.v } else { ed.u };
            Some(find(parent, w))
        }
    };
    let first = (0..g.edge_count())
        .find_map(|e| root_of(e, &mut parent))
        .expect("cut vertex has a non-loop edge");
    let (mut a, mut b) = (Vec::new(), Vec::new());
    for e in 0..g.edge_count() {
        if root_of(e, &mut parent) == Some(first) {
            a.push(e);
        } else {
            b.push(e);
        }
    }
    (a, b)
}

/// Negative loops at one vertex, paired into short barbells.
fn loop_bouquet(loops: &[EdgeId]) -> Result<Sets> {
    let k = loops.len();
    let pair = |i: usize, j: usize| {
        let mut s = vec![loops[i], loops[j]];
        s.sort_unstable();
        s
    };
    match k {
        0 => Ok(Vec::new()),
        1 => Err(Error::NotCoverable),
        2 => Ok(vec![pair(0, 1); 6]),
        _ => Ok((0..k).flat_map(|i| vec![pair(i, (i + 1) % k); 3]).collect()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::*;

    fn g(n: usize, e: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::from_edges(n, e.iter().copied()).unwrap()
    }

    #[test]
    fn balanced_circuit_gives_six_copies() {
        let h = g(3, &[(0, 1, Pos), (1, 2, Neg), (2, 0, Neg)]);
        let (f, p) = construct_six_cover(&h).unwrap();
        assert_eq!(p, Provenance::Structural);
        assert_eq!(f.len(), 6);
        assert!(f.members.iter().all(|m| m.edge_ids == vec![0, 1, 2]));
    }

    #[test]
    fn long_barbell_gives_six_copies() {
        let h = g(3, &[(0, 0, Neg), (0, 1, Pos), (1, 2, Neg), (2, 2, Neg)]);
        let (f, p) = construct_six_cover(&h).unwrap();
        assert_eq!(p, Provenance::Structural);
        assert_eq!(f.len(), 6);
        assert!(f.members.iter().all(|m| m.edge_ids == vec![0, 1, 2, 3]));
    }

    #[test]
    fn bouquets() {
        for k in 2..6 {
            let loops: Vec<(usize, usize, Sign)> = vec![(0, 0, Neg); k];
            let h = g(1, &loops);
            let (f, _) = construct_six_cover(&h).unwrap();
            assert_eq!(verify_k_cover(&h, &f, 6), Ok(()));
        }
    }

    #[test]
    fn rejects_bad_inputs() {
        let digon = g(2, &[(0, 1, Pos), (0, 1, Neg)]);
        assert_eq!(construct_six_cover(&digon), Err(Error::NotCoverable));
        let k4 = g(4, &[(0, 1, Pos), (0, 2, Pos), (0, 3, Pos), (1, 2, Pos), (1, 3, Pos), (2, 3, Pos)]);
        assert_eq!(construct_six_cover(&k4), Err(Error::NotK4MinorFree));
        let split = g(4, &[(0, 1, Pos), (0, 1, Pos), (2, 3, Pos), (2, 3, Pos)]);
        assert_eq!(construct_six_cover(&split), Err(Error::Disconnected));
    }

    #[test]
    fn balanced_side_and_glued_sides() {
        // balanced triangle sharing a vertex with an unbalanced pair of digons
        let h = g(
            5,
            &[
                (0, 1, Pos),
                (1, 2, Pos),
                (2, 0, Pos),
                (0, 3, Pos),
                (0, 3, Neg),
                (3, 4, Pos),
                (3, 4, Neg),
                (4, 0, Pos),
            ],
        );
        let (f, _) = construct_six_cover(&h).unwrap();
        assert_eq!(verify_k_cover(&h, &f, 6), Ok(()));
        // two unbalanced triangles joined by a bridge path
        let h = g(
            7,
            &[
                (0, 1, Pos),
                (1, 2, Pos),
                (2, 0, Neg),
                (2, 3, Pos),
                (3, 4, Neg),
                (4, 5, Pos),
                (5, 6, Pos),
                (6, 4, Neg),
            ],
        );
        let (f, p) = construct_six_cover(&h).unwrap();
        assert_eq!(p, Provenance::Structural);
        assert_eq!(verify_k_cover(&h, &f, 6), Ok(()));
    }
}

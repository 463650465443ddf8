//! K4-minor testing and two-terminal series/parallel decomposition.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use crate::error::{Error, Result};
use crate::graph::{EdgeId, SignedGraph, VertexId};

/// True iff the underlying graph has no K4 minor.
///
/// Repeatedly drops loops, parallel copies and vertices of degree at most one
/// and smooths degree-two vertices; the graph is K4-minor-free exactly when
/// this ends with no edges.
pub fn is_k4_minor_free(g: &SignedGraph) -> bool {
    let mut adj: BTreeMap<VertexId, BTreeSet<VertexId>> = BTreeMap::new();
    for e in g.edges() {
        if e.is_loop() {
            continue;
        }
        adj.entry(e.u).or_default().insert(e.v);
        adj.entry(e.v).or_default().insert(e.u);
    }
    let mut queue: VecDeque<VertexId> = adj.keys().copied().collect();
    while let Some(v) = queue.pop_front() {
        let Some(nb) = adj.get(&v) else { continue };
        if nb.len() > 2 {
            continue;
        }
        let nb: Vec<VertexId> = nb.iter().copied().collect();
        adj.remove(&v);
        for &w in &nb {
            let s = adj.get_mut(&w).unwrap();
            s.remove(&v);
        }
        if let [a, b] = nb[..] {
            adj.get_mut(&a).unwrap().insert(b);
            adj.get_mut(&b).unwrap().insert(a);
        }
        queue.extend(nb);
    }
    adj.values().all(|s| s.is_empty())
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SpNode {
    Leaf {
        edge: EdgeId,
        x: VertexId,
        y: VertexId,
    },
    LoopLeaf {
        edge: EdgeId,
        at: VertexId,
    },
    /// Children chained through `terminals[0] .. terminals[n]`.
    Series {
        children: Vec<SpNode>,
        terminals: Vec<VertexId>,
    },
    Parallel {
        children: Vec<SpNode>,
        x: VertexId,
        y: VertexId,
    },
}

impl SpNode {
    pub fn terminals(&self) -> (VertexId, VertexId) {
        match self {
            SpNode::Leaf { x, y, .. } | SpNode::Parallel { x, y, .. } => (*x, *y),
            SpNode::LoopLeaf { at, .. } => (*at, *at),
            SpNode::Series { terminals, .. } => (terminals[0], *terminals.last().unwrap()),
        }
    }

    /// Edge ids of all leaves, in tree order.
    pub fn edges(&self) -> Vec<EdgeId> {
        let mut out = Vec::new();
        self.collect(&mut out);
        out
    }

    fn collect(&self, out: &mut Vec<EdgeId>) {
        match self {
            SpNode::Leaf { edge, .. } | SpNode::LoopLeaf { edge, .. } => out.push(*edge),
            SpNode::Series { children, .. } | SpNode::Parallel { children, .. } => {
                for c in children {
                    c.collect(out);
                }
            }
        }
    }

    fn min_edge(&self) -> EdgeId {
        self.edges().into_iter().min().unwrap_or(usize::MAX)
    }

    fn fmt_indented(&self, g: Option<&SignedGraph>, depth: usize, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pad = "  ".repeat(depth);
        match self {
            SpNode::Leaf { edge, x, y } => {
                let sign = g.map(|g| g.e(*edge).sign.to_string()).unwrap_or_default();
                writeln!(f, "{pad}leaf e{edge} {x}-{y} {sign}")?;
            }
            SpNode::LoopLeaf { edge, at } => {
                let sign = g.map(|g| g.e(*edge).sign.to_string()).unwrap_or_default();
                writeln!(f, "{pad}loop e{edge} {at} {sign}")?;
            }
            SpNode::Series { children, terminals } => {
                let ts: Vec<String> = terminals.iter().map(|t| t.to_string()).collect();
                writeln!(f, "{pad}series {}", ts.join(" "))?;
                for c in children {
                    c.fmt_indented(g, depth + 1, f)?;
                }
            }
            SpNode::Parallel { children, x, y } => {
                writeln!(f, "{pad}parallel {x} {y}")?;
                for c in children {
                    c.fmt_indented(g, depth + 1, f)?;
                }
            }
        }
        Ok(())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpTree {
    pub root: SpNode,
}

impl SpTree {
    /// Indented rendering with edge signs taken from `g`.
    pub fn render(&self, g: &SignedGraph) -> String {
        struct R<'a>(&'a SpNode, &'a SignedGraph);
        impl fmt::Display for R<'_> {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                self.0.fmt_indented(Some(self.1), 0, f)
            }
        }
        R(&self.root, g).to_string()
    }
}

impl fmt::Display for SpTree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.root.fmt_indented(None, 0, f)
    }
}

pub fn sp_decompose(h: &SignedGraph, x: VertexId, y: VertexId) -> Result<SpTree> {
    h.check_vertex(x)?;
    h.check_vertex(y)?;
    if !h.is_edge_connected_ignoring_isolated() || h.edge_count() == 0 {
        return Err(Error::Disconnected);
    }
    let all: Vec<EdgeId> = (0..h.edge_count()).collect();
    if !h.vertices_of(&all).contains(&x) || !h.vertices_of(&all).contains(&y) {
        return Err(Error::Terminals("terminal not incident to any edge".into()));
    }
    Ok(SpTree {
        root: decompose(h, &all, x, y)?,
    })
}

/// Decomposes the edge set `edges` (a connected two-terminal piece).
pub(crate) fn decompose(g: &SignedGraph, edges: &[EdgeId], x: VertexId, y: VertexId) -> Result<SpNode> {
    let not_sp = || Error::NotSeriesParallel { x, y };
    if x == y {
        return match edges {
            [e] if g.e(*e).is_loop() && g.e(*e).u == x => Ok(SpNode::LoopLeaf { edge: *e, at: x }),
            _ => Err(Error::Terminals(
                "equal terminals are only allowed for a single loop".into(),
            )),
        };
    }
    let mut loops_x = Vec::new();
    let mut loops_y = Vec::new();
    let mut rest = Vec::new();
    for &e in edges {
        let ed = g.e(e);
        if ed.is_loop() && ed.u == x {
            loops_x.push(e);
        } else if ed.is_loop() && ed.u == y {
            loops_y.push(e);
        } else {
            rest.push(e);
        }
    }
    if rest.is_empty() {
        return Err(not_sp());
    }
    let seps = separators(g, &rest, x, y).ok_or_else(not_sp)?;
    let mut chain = vec![x];
    chain.extend(&seps);
    chain.push(y);

    let mut children: Vec<SpNode> = Vec::new();
    let mut terminals = vec![x];
    for &l in &loops_x {
        children.push(SpNode::LoopLeaf { edge: l, at: x });
        terminals.push(x);
    }
    let segments = split_segments(g, &rest, &chain).ok_or_else(not_sp)?;
    for (i, seg) in segments.iter().enumerate() {
        let (a, b) = (chain[i], chain[i + 1]);
        children.push(decompose_parallel(g, &seg.edges, a, b)?);
        terminals.push(b);
        for &l in &seg.loops_at_end {
            children.push(SpNode::LoopLeaf { edge: l, at: b });
            terminals.push(b);
        }
    }
    for &l in &loops_y {
        children.push(SpNode::LoopLeaf { edge: l, at: y });
        terminals.push(y);
    }
    if children.len() == 1 {
        return Ok(children.pop().unwrap());
    }
    Ok(SpNode::Series {
        children,
        terminals,
    })
}

fn decompose_parallel(g: &SignedGraph, edges: &[EdgeId], x: VertexId, y: VertexId) -> Result<SpNode> {
    let pieces = split_pieces(g, edges, x, y);
    if pieces.len() == 1 {
        // Segments between consecutive separators have no further series
        // structure, so a lone piece must be a single edge.
        return match pieces[0][..] {
            [e] if !g.e(e).is_loop() => Ok(SpNode::Leaf { edge: e, x, y }),
            _ => Err(Error::NotSeriesParallel { x, y }),
        };
    }
    let mut children = pieces
        .iter()
        .map(|p| decompose(g, p, x, y))
        .collect::<Result<Vec<_>>>()?;
    children.sort_by_key(|c| c.min_edge());
    Ok(SpNode::Parallel { children, x, y })
}

/// Vertices other than `x`, `y` that separate `x` from `y` in the loopless
/// graph on `edges`, ordered from `x`. `None` if `x`, `y` are disconnected.
fn separators(g: &SignedGraph, edges: &[EdgeId], x: VertexId, y: VertexId) -> Option<Vec<VertexId>> {
    let verts = g.vertices_of(edges);
    if !verts.contains(&x) || !verts.contains(&y) || !reachable(g, edges, x, y, None) {
        return None;
    }
    let dist = bfs_dist(g, edges, x);
    let mut seps: Vec<VertexId> = verts
        .iter()
        .copied()
        .filter(|&m| m != x && m != y && !reachable(g, edges, x, y, Some(m)))
        .collect();
    seps.sort_by_key(|m| dist[m]);
    Some(seps)
}

fn bfs_dist(g: &SignedGraph, edges: &[EdgeId], s: VertexId) -> BTreeMap<VertexId, usize> {
    let mut dist = BTreeMap::from([(s, 0)]);
    let mut queue = VecDeque::from([s]);
    while let Some(v) = queue.pop_front() {
        let d = dist[&v];
        for &e in edges {
            let ed = g.e(e);
            if ed.is_loop() || !ed.touches(v) {
                continue;
            }
            let w = ed.other(v);
            if let std::collections::btree_map::Entry::Vacant(slot) = dist.entry(w) {
                slot.insert(d + 1);
                queue.push_back(w);
            }
        }
    }
    dist
}

fn reachable(g: &SignedGraph, edges: &[EdgeId], s: VertexId, t: VertexId, avoid: Option<VertexId>) -> bool {
    let mut seen = BTreeSet::from([s]);
    let mut stack = vec![s];
    while let Some(v) = stack.pop() {
        if v == t {
            return true;
        }
        for &e in edges {
            let ed = g.e(e);
            if ed.is_loop() || !ed.touches(v) {
                continue;
            }
            let w = ed.other(v);
            if Some(w) != avoid && seen.insert(w) {
                stack.push(w);
            }
        }
    }
    false
}

struct Segment {
    edges: Vec<EdgeId>,
    loops_at_end: Vec<EdgeId>,
}

/// Assigns the edges to the consecutive stretches of `chain`. Loops at
/// interior chain vertices are reported separately.
fn split_segments(g: &SignedGraph, edges: &[EdgeId], chain: &[VertexId]) -> Option<Vec<Segment>> {
    let k = chain.len() - 1;
    let pos: BTreeMap<VertexId, usize> = chain.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut segs: Vec<Segment> = (0..k)
        .map(|_| Segment {
            edges: Vec::new(),
            loops_at_end: Vec::new(),
        })
        .collect();
    // Components of the graph with chain vertices removed.
    let mut comp: BTreeMap<VertexId, usize> = BTreeMap::new();
    let mut ncomp = 0;
    for v in g.vertices_of(edges) {
        if pos.contains_key(&v) || comp.contains_key(&v) {
            continue;
        }
        let mut stack = vec![v];
        comp.insert(v, ncomp);
        while let Some(a) = stack.pop() {
            for &e in edges {
                let ed = g.e(e);
                if !ed.touches(a) {
                    continue;
                }
                let w = ed.other(a);
                if !pos.contains_key(&w) && !comp.contains_key(&w) {
                    comp.insert(w, ncomp);
                    stack.push(w);
                }
            }
        }
        ncomp += 1;
    }
    // Each component must attach to exactly two consecutive chain vertices.
    let mut attach: Vec<BTreeSet<usize>> = vec![BTreeSet::new(); ncomp];
    for &e in edges {
        let ed = g.e(e);
        for (a, b) in [(ed.u, ed.v), (ed.v, ed.u)] {
            if let (Some(&c), Some(&p)) = (comp.get(&a), pos.get(&b)) {
                attach[c].insert(p);
            }
        }
    }
    let mut comp_seg = vec![0; ncomp];
    for (c, a) in attach.iter().enumerate() {
        let a: Vec<usize> = a.iter().copied().collect();
        match a[..] {
            [i, j] if j == i + 1 => comp_seg[c] = i,
            _ => return None,
        }
    }
    for &e in edges {
        let ed = g.e(e);
        if let Some(&c) = comp.get(&ed.u).or_else(|| comp.get(&ed.v)) {
            segs[comp_seg[c]].edges.push(e);
        } else if ed.is_loop() {
            let p = pos[&ed.u];
            if p == 0 || p == k {
                return None;
            }
            segs[p - 1].loops_at_end.push(e);
        } else {
            let (i, j) = (pos[&ed.u], pos[&ed.v]);
            if i.abs_diff(j) != 1 {
                return None;
            }
            segs[i.min(j)].edges.push(e);
        }
    }
    if segs.iter().any(|s| s.edges.is_empty()) {
        return None;
    }
    Some(segs)
}

/// Splits at `{x, y}`: every direct `xy` edge is its own piece, and so is
/// each component left after deleting `x` and `y`. Loops at the terminals go
/// with the first piece.
fn split_pieces(g: &SignedGraph, edges: &[EdgeId], x: VertexId, y: VertexId) -> Vec<Vec<EdgeId>> {
    let mut pieces: Vec<Vec<EdgeId>> = Vec::new();
    let mut comp: BTreeMap<VertexId, usize> = BTreeMap::new();
    let is_t = |v: VertexId| v == x || v == y;
    let mut terminal_loops = Vec::new();
    for &e in edges {
        let ed = g.e(e);
        if is_t(ed.u) && is_t(ed.v) {
            if ed.is_loop() {
                terminal_loops.push(e);
            } else {
                pieces.push(vec![e]);
            }
            continue;
        }
        let inner = if is_t(ed.u) { ed.v } else { ed.u };
        if !comp.contains_key(&inner) {
            let id = pieces.len();
            pieces.push(Vec::new());
            let mut stack = vec![inner];
            comp.insert(inner, id);
            while let Some(a) = stack.pop() {
                for &f in edges {
                    let fd = g.e(f);
                    if !fd.touches(a) {
                        continue;
                    }
                    let w = fd.other(a);
                    if !is_t(w) && !comp.contains_key(&w) {
                        comp.insert(w, id);
                        stack.push(w);
                    }
                }
            }
        }
        pieces[comp[&inner]].push(e);
    }
    pieces.sort_by_key(|p| p.iter().min().copied());
    if !terminal_loops.is_empty() {
        if pieces.is_empty() {
            pieces.push(Vec::new());
        }
        pieces[0].extend(terminal_loops);
    }
    for p in &mut pieces {
        p.sort_unstable();
    }
    pieces
}

/// A two-terminal piece given by edge ids of an ambient graph.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Piece {
    pub edges: Vec<EdgeId>,
    pub x: VertexId,
    pub y: VertexId,
}

pub fn pieces_at(g: &SignedGraph, x: VertexId, y: VertexId) -> Result<Vec<Piece>> {
    g.check_vertex(x)?;
    g.check_vertex(y)?;
    if x == y {
        return Err(Error::Terminals("pieces need two distinct terminals".into()));
    }
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    let pieces = split_pieces(g, &all, x, y);
    if pieces.len() <= 1 {
        return Ok(vec![Piece { edges: all, x, y }]);
    }
    Ok(pieces
        .into_iter()
        .map(|edges| Piece { edges, x, y })
        .collect())
}

pub fn max_parallel_pieces(g: &SignedGraph, x: VertexId, y: VertexId) -> Result<usize> {
    Ok(pieces_at(g, x, y)?.len())
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartClass {
    /// A negative loop.
    B0,
    /// A single link edge.
    B1,
    /// Distinct terminals and at least two edges.
    B2,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Part {
    pub edges: Vec<EdgeId>,
    pub x: VertexId,
    pub y: VertexId,
    pub class: PartClass,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PartsPartition {
    pub x: VertexId,
    pub y: VertexId,
    pub parts: Vec<Part>,
}

impl PartsPartition {
    pub fn of_class(&self, class: PartClass) -> impl Iterator<Item = (usize, &Part)> {
        self.parts
            .iter()
            .enumerate()
            .filter(move |(_, p)| p.class == class)
    }

    pub fn count(&self, class: PartClass) -> usize {
        self.of_class(class).count()
    }
}

pub fn parts(h: &SignedGraph, x: VertexId, y: VertexId) -> Result<PartsPartition> {
    let tree = sp_decompose(h, x, y)?;
    parts_from_node(h, &tree.root)
}

pub(crate) fn parts_from_node(h: &SignedGraph, root: &SpNode) -> Result<PartsPartition> {
    let (x, y) = root.terminals();
    let children: Vec<&SpNode> = match root {
        SpNode::Series { children, .. } => children.iter().collect(),
        other => vec![other],
    };
    let mut parts = Vec::new();
    for c in children {
        let (a, b) = c.terminals();
        let mut edges = c.edges();
        edges.sort_unstable();
        let class = match c {
            SpNode::LoopLeaf { edge, .. } => {
                if !h.e(*edge).sign.is_neg() {
                    return Err(Error::Precondition(format!(
                        "positive loop {edge} cannot be a part"
                    )));
                }
                PartClass::B0
            }
            SpNode::Leaf { .. } => PartClass::B1,
            _ => PartClass::B2,
        };
        parts.push(Part {
            edges,
            x: a,
            y: b,
            class,
        });
    }
    Ok(PartsPartition { x, y, parts })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::{self, *};

    fn g(n: usize, e: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn k4() -> SignedGraph {
        g(
            4,
            &[
                (0, 1, Pos),
                (0, 2, Pos),
                (0, 3, Pos),
                (1, 2, Pos),
                (1, 3, Pos),
                (2, 3, Pos),
            ],
        )
    }

    #[test]
    fn k4_minor_examples() {
        assert!(!is_k4_minor_free(&k4()));
        let c = g(4, &[(0, 1, Pos), (1, 2, Pos), (2, 3, Pos), (3, 0, Neg)]);
        assert!(is_k4_minor_free(&c));
    }

    #[test]
    fn leaf_and_series() {
        let e = g(2, &[(0, 1, Pos)]);
        assert_eq!(
            sp_decompose(&e, 0, 1).unwrap().root,
            SpNode::Leaf { edge: 0, x: 0, y: 1 }
        );
        let p = g(3, &[(0, 1, Pos), (1, 2, Neg)]);
        assert_eq!(
            sp_decompose(&p, 0, 2).unwrap().root,
            SpNode::Series {
                children: vec![
                    SpNode::Leaf { edge: 0, x: 0, y: 1 },
                    SpNode::Leaf { edge: 1, x: 1, y: 2 }
                ],
                terminals: vec![0, 1, 2]
            }
        );
    }

    #[test]
    fn k4_is_not_decomposable() {
        assert!(matches!(
            sp_decompose(&k4(), 0, 1),
            Err(Error::NotSeriesParallel { .. })
        ));
    }

    #[test]
    fn loops_at_terminals_are_series_parts() {
        let h = g(2, &[(0, 0, Neg), (0, 1, Pos), (1, 1, Neg)]);
        let p = parts(&h, 0, 1).unwrap();
        let classes: Vec<PartClass> = p.parts.iter().map(|p| p.class).collect();
        assert_eq!(classes, vec![PartClass::B0, PartClass::B1, PartClass::B0]);
    }

    #[test]
    fn pieces_examples() {
        let d = g(2, &[(0, 1, Pos), (0, 1, Neg)]);
        assert_eq!(max_parallel_pieces(&d, 0, 1).unwrap(), 2);
        let t = g(2, &[(0, 1, Pos), (0, 1, Pos), (0, 1, Neg)]);
        assert_eq!(max_parallel_pieces(&t, 0, 1).unwrap(), 3);
        let e = g(2, &[(0, 1, Pos)]);
        assert_eq!(max_parallel_pieces(&e, 0, 1).unwrap(), 1);
        let tri = g(3, &[(0, 1, Pos), (1, 2, Pos), (2, 0, Pos)]);
        let ps = pieces_at(&tri, 0, 1).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].edges, vec![0]);
        assert_eq!(ps[1].edges, vec![1, 2]);
    }

    #[test]
    fn hanging_block_is_rejected() {
        // path 0-1-2 with a triangle hanging at 1
        let h = g(
            5,
            &[(0, 1, Pos), (1, 2, Pos), (1, 3, Pos), (3, 4, Pos), (4, 1, Pos)],
        );
        assert!(sp_decompose(&h, 0, 2).is_err());
    }
}

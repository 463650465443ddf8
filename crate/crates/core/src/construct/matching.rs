//! Isomorphism of signed graphs up to switching.

use std::collections::BTreeMap;

use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};

/// Maps from pattern vertices and edges to target ones.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SwitchingMatch {
    pub vertices: Vec<VertexId>,
    pub edges: Vec<EdgeId>,
}

type Groups = BTreeMap<(VertexId, VertexId), Vec<EdgeId>>;

fn key(u: VertexId, v: VertexId) -> (VertexId, VertexId) {
    (u.min(v), u.max(v))
}

fn groups(g: &SignedGraph) -> Groups {
    let mut out = Groups::new();
    for (i, e) in g.edges().iter().enumerate() {
        out.entry(key(e.u, e.v)).or_default().push(i);
    }
    out
}

fn multiplicity(gr: &Groups, u: VertexId, v: VertexId) -> usize {
    gr.get(&key(u, v)).map_or(0, |v| v.len())
}

/// Which products `s(u)s(v)` let the pattern group's signs land on the
/// target group's: `(pos ok, neg ok)`.
fn products(p: &SignedGraph, pe: &[EdgeId], t: &SignedGraph, te: &[EdgeId]) -> (bool, bool) {
    let negs = |g: &SignedGraph, es: &[EdgeId]| es.iter().filter(|&&e| g.e(e).sign.is_neg()).count();
    let (pn, tn) = (negs(p, pe), negs(t, te));
    let is_loop = p.e(pe[0]).is_loop();
    (pn == tn, !is_loop && pn == te.len() - tn)
}

/// Finds a bijection taking `pattern` onto `target` after switching some
/// vertex set, with each `(p, t)` in `fixed` mapped as given.
pub fn match_switching(
    pattern: &SignedGraph,
    target: &SignedGraph,
    fixed: &[(VertexId, VertexId)],
) -> Option<SwitchingMatch> {
    let n = pattern.vertex_count();
    if n != target.vertex_count() || pattern.edge_count() != target.edge_count() {
        return None;
    }
    let (pg, tg) = (groups(pattern), groups(target));
    let mut map = vec![usize::MAX; n];
    let mut used = vec![false; n];
    for &(p, t) in fixed {
        if p >= n || t >= n || (map[p] != usize::MAX && map[p] != t) || (used[t] && map[p] != t) {
            return None;
        }
        map[p] = t;
        used[t] = true;
    }
    let order: Vec<VertexId> = (0..n).filter(|&v| map[v] == usize::MAX).collect();
    search(pattern, target, &pg, &tg, &order, 0, &mut map, &mut used)
}

#[allow(clippy::too_many_arguments)]
fn search(
    p: &SignedGraph,
    t: &SignedGraph,
    pg: &Groups,
    tg: &Groups,
    order: &[VertexId],
    depth: usize,
    map: &mut Vec<VertexId>,
    used: &mut Vec<bool>,
) -> Option<SwitchingMatch> {
    if depth == order.len() {
        return finish(p, t, pg, tg, map);
    }
    let v = order[depth];
    for w in 0..t.vertex_count() {
        if used[w] {
            continue;
        }
        map[v] = w;
        let consistent = (0..p.vertex_count())
            .filter(|&a| map[a] != usize::MAX)
            .all(|a| multiplicity(pg, v, a) == multiplicity(tg, w, map[a]));
        if consistent {
            used[w] = true;
            if let Some(m) = search(p, t, pg, tg, order, depth + 1, map, used) {
                return Some(m);
            }
            used[w] = false;
        }
        map[v] = usize::MAX;
    }
    None
}

fn finish(p: &SignedGraph, t: &SignedGraph, pg: &Groups, tg: &Groups, map: &[VertexId]) -> Option<SwitchingMatch> {
    let n = p.vertex_count();
    // Constraints s(u)s(v) = d for groups that force a product.
    let mut adj: Vec<Vec<(VertexId, Sign)>> = vec![Vec::new(); n];
    for (&(u, v), pe) in pg {
        let te = &tg[&key(map[u], map[v])];
        match products(p, pe, t, te) {
            (false, false) => return None,
            (true, true) => {}
            (pos, _) => {
                let d = if pos { Sign::Pos } else { Sign::Neg };
                adj[u].push((v, d));
                adj[v].push((u, d));
            }
        }
    }
    let mut s: Vec<Option<Sign>> = vec![None; n];
    for root in 0..n {
        if s[root].is_some() {
            continue;
        }
        s[root] = Some(Sign::Pos);
        let mut stack = vec![root];
        while let Some(u) = stack.pop() {
            let su = s[u].unwrap();
            for &(v, d) in &adj[u] {
                let want = su * d;
                match s[v] {
                    None => {
                        s[v] = Some(want);
                        stack.push(v);
                    }
                    Some(sv) if sv != want => return None,
                    Some(_) => {}
                }
            }
        }
    }
    let mut edges = vec![usize::MAX; p.edge_count()];
    for (&(u, v), pe) in pg {
        let d = s[u].unwrap() * s[v].unwrap();
        let mut free: Vec<EdgeId> = tg[&key(map[u], map[v])].clone();
        for &e in pe {
            let want = p.e(e).sign * d;
            let at = free.iter().position(|&f| t.e(f).sign == want)?;
            edges[e] = free.remove(at);
        }
    }
    Some(SwitchingMatch {
        vertices: map.to_vec(),
        edges,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SwitchSet;
    use crate::instances::{gadget, GadgetId};

    #[test]
    fn switched_and_relabelled_gadgets_match() {
        for id in GadgetId::SMALL {
            let g = gadget(id).graph;
            let n = g.vertex_count();
            let s: SwitchSet = [0, n - 1].into_iter().collect();
            let switched = g.switch(&s).unwrap();
            // reverse the vertex labels
            let relabelled = SignedGraph::from_edges(
                n,
                switched.edges().iter().rev().map(|e| (n - 1 - e.u, n - 1 - e.v, e.sign)),
            )
            .unwrap();
            let m = match_switching(&g, &relabelled, &[(0, n - 1), (1, n - 2)]).expect("match");
            for (i, e) in g.edges().iter().enumerate() {
                let f = relabelled.e(m.edges[i]);
                assert_eq!(key(m.vertices[e.u], m.vertices[e.v]), key(f.u, f.v));
            }
        }
    }

    #[test]
    fn distinct_gadgets_do_not_match() {
        let r4 = gadget(GadgetId::R4).graph;
        let r3 = gadget(GadgetId::R3).graph;
        assert!(match_switching(&r3, &r4, &[]).is_none());
        let r2 = gadget(GadgetId::R2).graph;
        let positive = SignedGraph::from_edges(3, r2.edges().iter().map(|e| (e.u, e.v, Sign::Pos))).unwrap();
        assert!(match_switching(&r2, &positive, &[]).is_none());
        assert!(match_switching(&r2, &r2, &[(0, 1)]).is_none());
        assert!(match_switching(&r2, &r2, &[(0, 0), (1, 1)]).is_some());
    }
}

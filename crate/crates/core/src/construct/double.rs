//! Two pieces sharing one terminal, closed up through a new vertex.

use crate::cover::{verify_k_cover, verify_psi_cover, CoverFamily, CoverMember, PsiCover, Role};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};
use crate::instances::{gadget, GadgetId};

use super::engine::{
    closed_family, mirror, piece_options, psi_from_options, psi_options, CNode, Engine, Goal, Options,
};
use super::matching::match_switching;
use super::tables::base_psi_cover;

/// A two-terminal piece; `x` is the terminal shared with the other side.
#[derive(Clone, Copy, Debug)]
pub struct BlockSide<'a> {
    pub graph: &'a SignedGraph,
    pub x: VertexId,
    pub y: VertexId,
    /// A star Ψ(2)-cover between `x` and `y`, for pieces that are not small.
    pub psi_star: Option<&'a PsiCover>,
}

#[derive(Clone, Debug)]
pub struct DoubleBlock {
    pub graph: SignedGraph,
    pub x: VertexId,
    pub z: VertexId,
    pub cover: CoverFamily,
    /// The graph with a negative loop at `x` and its cover.
    pub looped: Option<(SignedGraph, CoverFamily)>,
    /// Ψ(t)-covers between `x` and `z` for every t when one side is a digon,
    /// otherwise a Ψ(2)-cover whose tadpoles at `z` avoid `x`.
    pub psi_xz: Vec<PsiCover>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Shape {
    Digon,
    Small,
    Star,
}

/// Role-tagged edge sets moved into the joined graph, path roles re-derived.
fn lift(g: &SignedGraph, x: VertexId, y: VertexId, members: &[(Role, Vec<EdgeId>)], emap: &[EdgeId]) -> Result<PsiCover> {
    let mapped: Vec<(Role, Vec<EdgeId>)> = members
        .iter()
        .map(|(role, ids)| {
            let ids: Vec<EdgeId> = ids.iter().map(|&e| emap[e]).collect();
            let role = match role {
                Role::PositivePath | Role::NegativePath => CoverMember::path(g, &ids, x, y).map_or(*role, |m| m.role),
                r => *r,
            };
            (role, ids)
        })
        .collect();
    PsiCover::from_roles(g, x, y, &mapped)
}

fn tagged(p: &PsiCover) -> Vec<(Role, Vec<EdgeId>)> {
    p.family().members.into_iter().map(|m| (m.role, m.edge_ids)).collect()
}

/// Profiles of one side in the joined graph `g`, where the side's edge `e`
/// is `emap[e]` and its terminals are `x`, `y`.
fn supplied_options(side: &BlockSide, g: &SignedGraph, x: VertexId, y: VertexId, emap: &[EdgeId]) -> Result<(Shape, Options)> {
    let h = side.graph;
    let vmap_ok = |p: &PsiCover| (p.x, p.y);
    let r0 = gadget(GadgetId::R0).graph;
    if let Some(m) = match_switching(&r0, h, &[(0, side.x), (1, side.y)]) {
        let (pos, neg) = if h.e(m.edges[0]).sign == Sign::Pos {
            (m.edges[0], m.edges[1])
        } else {
            (m.edges[1], m.edges[0])
        };
        let mut covers = Vec::new();
        for t in 0..=3 {
            let mut members = vec![(Role::PositivePath, vec![pos]); t];
            members.extend(vec![(Role::NegativePath, vec![neg]); t]);
            members.extend(vec![(Role::TadpoleAtX, vec![pos, neg]); t]);
            members.extend(vec![(Role::TadpoleAtY, vec![pos, neg]); 6 - 2 * t]);
            covers.push(lift(g, x, y, &members, emap)?);
        }
        return Ok((Shape::Digon, psi_options(g, &covers)));
    }
    for id in [GadgetId::R2, GadgetId::R4, GadgetId::R5] {
        let pattern = gadget(id).graph;
        let Some(m) = match_switching(&pattern, h, &[(0, side.x), (1, side.y)]) else {
            continue;
        };
        let through: Vec<EdgeId> = m.edges.iter().map(|&e| emap[e]).collect();
        let mut forward = Vec::new();
        let mut backward = Vec::new();
        for t in 0..=3 {
            if let Some(p) = base_psi_cover(id, (0, 1), t, false)? {
                forward.push(lift(g, x, y, &tagged(&p), &through)?);
            }
            if let Some(p) = base_psi_cover(id, (1, 0), t, false)? {
                backward.push(lift(g, y, x, &tagged(&p), &through)?);
            }
        }
        let mut o = psi_options(g, &forward);
        for (c, w) in mirror(&psi_options(g, &backward)) {
            o.entry(c).or_insert(w);
        }
        return Ok((Shape::Small, o));
    }
    let p = side
        .psi_star
        .ok_or_else(|| Error::Precondition("side is neither a digon, a small gadget nor star-covered".into()))?;
    if !p.star || vmap_ok(p) != (side.x, side.y) {
        return Err(Error::Precondition("side's star cover has the wrong terminals".into()));
    }
    verify_psi_cover(h, side.x, side.y, p).map_err(|v| Error::Precondition(format!("invalid star cover: {v}")))?;
    let lifted = lift(g, x, y, &tagged(p), emap)?;
    Ok((Shape::Star, psi_options(g, &[lifted])))
}

/// Supplied or tabulated profiles together with those derived from the
/// side's own decomposition.
fn side_options(side: &BlockSide, g: &SignedGraph, x: VertexId, y: VertexId, emap: &[EdgeId], engine: &Engine) -> Result<(Shape, Options)> {
    let (shape, mut o) = supplied_options(side, g, x, y, emap)?;
    if let Ok(own) = piece_options(side.graph, side.x, side.y, emap, engine) {
        for (c, w) in own {
            o.entry(c).or_insert(w);
        }
    }
    Ok((shape, o))
}

/// Glues the sides at their `x`, adds a vertex `z` joined to both far
/// terminals with signs `links`, and composes a 6-cover of the result, of
/// the result with a negative loop at `x` when `add_loop`, and Ψ-covers
/// between `x` and `z`.
pub fn double_block_compose(h1: &BlockSide, h2: &BlockSide, links: (Sign, Sign), add_loop: bool) -> Result<DoubleBlock> {
    let (n1, m1) = (h1.graph.vertex_count(), h1.graph.edge_count());
    let mut g = h1.graph.clone();
    let vmap: Vec<VertexId> = (0..h2.graph.vertex_count())
        .map(|v| if v == h2.x { h1.x } else { g.add_vertex() })
        .collect();
    let mut e2map = Vec::with_capacity(h2.graph.edge_count());
    for e in h2.graph.edges() {
        e2map.push(g.add_edge(vmap[e.u], vmap[e.v], e.sign)?);
    }
    let (x, y1, y2) = (h1.x, h1.y, vmap[h2.y]);
    debug_assert!(y2 >= n1);
    let z = g.add_vertex();
    let l1 = g.add_edge(y1, z, links.0)?;
    let l2 = g.add_edge(y2, z, links.1)?;
    let e1map: Vec<EdgeId> = (0..m1).collect();

    let side_engine = Engine { cap: 20_000 };
    let (s1, o1) = side_options(h1, &g, x, y1, &e1map, &side_engine)?;
    let (s2, o2) = side_options(h2, &g, x, y2, &e2map, &side_engine)?;
    let digon = s1 == Shape::Digon || s2 == Shape::Digon;
    let engine = Engine { cap: 2560 };
    let branch = |lead: Option<EdgeId>, o: Options, link: EdgeId, sign: Sign| {
        let mut parts: Vec<CNode> = lead.map(|edge| CNode::Loop { edge }).into_iter().collect();
        parts.push(CNode::Opaque(o));
        parts.push(CNode::Edge { edge: link, sign });
        engine.eval(&CNode::Series(parts))
    };
    let b1 = branch(None, o1.clone(), l1, links.0);
    let b2 = branch(None, o2, l2, links.1);
    let failed = |what: &str| Error::Construction(format!("no {what} from the sides' covers"));

    let root = engine.parallel_where(&b1, &b2, Goal::Closed);
    let cover = closed_family(&g, &root)?.ok_or_else(|| failed("6-cover"))?;
    verify_k_cover(&g, &cover, 6).map_err(|v| Error::Construction(v.to_string()))?;

    let root = engine.parallel_where(&b1, &b2, Goal::Psi);
    let mut psi_xz = Vec::new();
    let wanted: Vec<(usize, bool)> = if digon { (0..=3).map(|t| (t, false)).collect() } else { vec![(2, true)] };
    for (t, avoid) in wanted {
        let p = psi_from_options(&g, x, z, &root, t, avoid)?.ok_or_else(|| failed("Ψ-cover"))?;
        verify_psi_cover(&g, x, z, &p).map_err(|v| Error::Construction(v.to_string()))?;
        psi_xz.push(p);
    }

    let looped = if add_loop {
        let mut gl = g.clone();
        let lx = gl.add_edge(x, x, Sign::Neg)?;
        let b1 = branch(Some(lx), o1, l1, links.0);
        let root = engine.parallel_where(&b1, &b2, Goal::Closed);
        let f = closed_family(&gl, &root)?.ok_or_else(|| failed("6-cover with the loop"))?;
        verify_k_cover(&gl, &f, 6).map_err(|v| Error::Construction(v.to_string()))?;
        Some((gl, f))
    } else {
        None
    };
    Ok(DoubleBlock {
        graph: g,
        x,
        z,
        cover,
        looped,
        psi_xz,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::SwitchSet;

    fn side(g: &SignedGraph) -> BlockSide<'_> {
        BlockSide {
            graph: g,
            x: 0,
            y: 1,
            psi_star: None,
        }
    }

    #[test]
    fn two_digons() {
        let r0 = gadget(GadgetId::R0).graph;
        for links in [(Sign::Pos, Sign::Pos), (Sign::Pos, Sign::Neg)] {
            let d = double_block_compose(&side(&r0), &side(&r0), links, true).unwrap();
            assert_eq!(d.graph.edge_count(), 6);
            assert_eq!(d.psi_xz.len(), 4);
            assert!(d.looped.is_some());
        }
    }

    #[test]
    fn small_and_star_sides() {
        let r3 = gadget(GadgetId::R3).graph;
        let star = base_psi_cover(GadgetId::R3, (0, 1), 2, true).unwrap().unwrap();
        let r3_side = BlockSide {
            psi_star: Some(&star),
            ..side(&r3)
        };
        let s: SwitchSet = [2].into_iter().collect();
        let r4 = gadget(GadgetId::R4).graph.switch(&s).unwrap();
        let r5 = gadget(GadgetId::R5).graph;
        let r2 = gadget(GadgetId::R2).graph;
        let r0 = gadget(GadgetId::R0).graph;
        let pairs: [(BlockSide, BlockSide); 5] = [
            (side(&r2), side(&r4)),
            (r3_side, side(&r5)),
            (r3_side, r3_side),
            (side(&r0), r3_side),
            (side(&r5), side(&r0)),
        ];
        for (a, b) in pairs {
            for links in [(Sign::Pos, Sign::Pos), (Sign::Neg, Sign::Pos)] {
                let d = double_block_compose(&a, &b, links, true)
                    .unwrap_or_else(|e| panic!("{} {} {links:?}: {e}", a.graph.edge_count(), b.graph.edge_count()));
                let digon = a.graph.vertex_count() == 2 || b.graph.vertex_count() == 2;
                assert_eq!(d.psi_xz.len(), if digon { 4 } else { 1 });
                if !digon {
                    assert!(d.psi_xz[0].y_tadpoles_avoid_x(&d.graph));
                }
            }
        }
    }

    #[test]
    fn unknown_side_is_rejected() {
        let r1 = gadget(GadgetId::R1).graph;
        let r0 = gadget(GadgetId::R0).graph;
        assert!(matches!(
            double_block_compose(&side(&r1), &side(&r0), (Sign::Pos, Sign::Pos), false),
            Err(Error::Precondition(_))
        ));
    }
}

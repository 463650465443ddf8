//! Extending a piece by an unbalanced triangle on its terminal edge.

use crate::cover::{verify_psi_cover, CoverMember, PsiCover, Role};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};
use crate::instances::{gadget, GadgetId};

use super::matching::match_switching;

use Role::{NegativePath as N, PositivePath as P, SignedCircuit as C, TadpoleAtX as TX, TadpoleAtY as TY};

type Table = &'static [(Role, &'static [EdgeId])];

// Each gadget plus z with edges (x, z, -) and (z, y, +), terminals (x, z).
const R2_EXT: Table = &[
    (C, &[0, 1, 2]),
    (C, &[0, 1, 2]),
    (C, &[0, 3, 4, 5]),
    (C, &[1, 2, 3, 4, 5]),
    (P, &[0, 2, 5]),
    (P, &[1, 5]),
    (N, &[4]),
    (N, &[4]),
    (TX, &[0, 1, 3]),
    (TX, &[2, 3, 4, 5]),
    (TY, &[2, 3, 5]),
    (TY, &[0, 1, 3, 4]),
];

const R4_EXT: Table = &[
    (C, &[0, 1, 2, 5, 6, 7]),
    (C, &[0, 1, 2, 5, 6, 7]),
    (C, &[0, 2, 3]),
    (C, &[1, 2, 4]),
    (C, &[1, 2, 4]),
    (C, &[1, 2, 4]),
    (P, &[0, 3, 4, 7]),
    (P, &[1, 7]),
    (N, &[6]),
    (N, &[6]),
    (TX, &[0, 3, 5]),
    (TX, &[3, 4, 5, 6, 7]),
    (TY, &[3, 4, 5, 7]),
    (TY, &[0, 3, 5, 6]),
];

const R5_EXT: Table = &[
    (C, &[0, 1, 2, 3, 6, 7, 8]),
    (C, &[0, 1, 2, 3, 6, 7, 8]),
    (C, &[0, 1, 3, 4, 5]),
    (C, &[0, 2, 3, 4]),
    (C, &[1, 2, 5]),
    (C, &[1, 2, 5]),
    (P, &[1, 8]),
    (P, &[2, 5, 8]),
    (N, &[7]),
    (N, &[7]),
    (TX, &[0, 4, 6]),
    (TX, &[3, 4, 5, 6, 7, 8]),
    (TY, &[3, 4, 5, 6, 8]),
    (TY, &[0, 4, 6, 7]),
];

/// `h` plus a new vertex `z` joined to `x` and `y`; returns the graph, `z`
/// and the ids of the edges `xz` and `zy`.
fn with_apex(h: &SignedGraph, x: VertexId, y: VertexId, xz: Sign, zy: Sign) -> Result<(SignedGraph, VertexId, EdgeId, EdgeId)> {
    let mut g = h.clone();
    let z = g.add_vertex();
    let e1 = g.add_edge(x, z, xz)?;
    let e2 = g.add_edge(z, y, zy)?;
    Ok((g, z, e1, e2))
}

/// Re-parses role-tagged edge sets in `g`, re-deriving path roles from signs.
fn star_cover(g: &SignedGraph, x: VertexId, z: VertexId, xz: EdgeId, members: &[(Role, Vec<EdgeId>)]) -> Result<PsiCover> {
    let retagged: Vec<(Role, Vec<EdgeId>)> = members
        .iter()
        .map(|(role, ids)| {
            let role = match role {
                Role::PositivePath | Role::NegativePath => {
                    CoverMember::path(g, ids, x, z).map_or(*role, |m| m.role)
                }
                r => *r,
            };
            (role, ids.clone())
        })
        .collect();
    let mut p = PsiCover::from_roles(g, x, z, &retagged)?;
    p.star = true;
    p.xy_edge = Some(xz);
    verify_psi_cover(g, x, z, &p).map_err(|v| Error::Construction(v.to_string()))?;
    Ok(p)
}

fn triangle_check(h: &SignedGraph, x: VertexId, y: VertexId, xz: Sign, zy: Sign) -> Result<EdgeId> {
    let e0 = h
        .edges()
        .iter()
        .position(|e| !e.is_loop() && e.touches(x) && e.touches(y))
        .ok_or_else(|| Error::Precondition("no edge joins the terminals".into()))?;
    if h.e(e0).sign * xz * zy != Sign::Neg {
        return Err(Error::Precondition("the triangle is balanced".into()));
    }
    Ok(e0)
}

/// Adds `z` with edges `xz`, `zy` to a piece carrying a star Ψ(2)-cover
/// between `x` and `y`, and builds a star Ψ(2)-cover between `x` and `z`
/// whose terminal edge is `xz`. The triangle on the star cover's terminal
/// edge must be unbalanced.
pub fn triangle_extend(h: &SignedGraph, psi_star: &PsiCover, xz: Sign, zy: Sign) -> Result<(SignedGraph, PsiCover)> {
    let (x, y) = (psi_star.x, psi_star.y);
    let e0 = psi_star
        .xy_edge
        .filter(|_| psi_star.star)
        .ok_or_else(|| Error::Precondition("not a star cover".into()))?;
    verify_psi_cover(h, x, y, psi_star).map_err(|v| Error::Precondition(format!("invalid star cover: {v}")))?;
    if h.e(e0).sign * xz * zy != Sign::Neg {
        return Err(Error::Precondition("the triangle is balanced".into()));
    }
    let (g, z, e1, e2) = with_apex(h, x, y, xz, zy)?;

    let (same, other) = match h.e(e0).sign {
        Sign::Pos => (&psi_star.pos_paths, &psi_star.neg_paths),
        Sign::Neg => (&psi_star.neg_paths, &psi_star.pos_paths),
    };
    let split = |ts: &[CoverMember], far: VertexId| -> (Vec<EdgeId>, Vec<EdgeId>) {
        let avoid = ts.iter().position(|m| !m.contains_vertex(h, far)).expect("star side");
        let through = 1 - avoid;
        let rest: Vec<EdgeId> = ts[through].edge_ids.iter().copied().filter(|&e| e != e0).collect();
        (ts[avoid].edge_ids.clone(), rest)
    };
    // tadpole at x avoiding y, and the one through xy minus that edge (a tadpole at y)
    let (tx1, ty2) = split(&psi_star.tadpoles_x, y);
    let (ty1, tx2) = split(&psi_star.tadpoles_y, x);
    let cat = |parts: &[&[EdgeId]]| -> Vec<EdgeId> { parts.iter().flat_map(|p| p.iter().copied()).collect() };

    let mut members: Vec<(Role, Vec<EdgeId>)> = psi_star
        .circuits
        .iter()
        .map(|m| (Role::SignedCircuit, m.edge_ids.clone()))
        .collect();
    for p in same.iter() {
        members.push((Role::PositivePath, cat(&[&p.edge_ids, &[e2]])));
    }
    members.push((Role::PositivePath, vec![e1]));
    members.push((Role::PositivePath, vec![e1]));
    members.push((Role::TadpoleAtX, tx1));
    members.push((Role::TadpoleAtX, cat(&[&[e1, e2], &ty2])));
    members.push((Role::TadpoleAtY, cat(&[&[e2], &ty1])));
    members.push((Role::TadpoleAtY, cat(&[&[e1, e0], &other[1].edge_ids])));
    members.push((Role::SignedCircuit, cat(&[&[e1, e2, e0], &tx2])));
    members.push((Role::SignedCircuit, cat(&[&[e1, e2], &other[0].edge_ids])));
    let p = star_cover(&g, x, z, e1, &members)?;
    Ok((g, p))
}

/// The same extension for pieces that are switching-isomorphic to R2, R4 or
/// R5 with terminals `(x, y)`; these have no star cover of their own.
pub fn triangle_extend_small(
    h: &SignedGraph,
    x: VertexId,
    y: VertexId,
    xz: Sign,
    zy: Sign,
) -> Result<(SignedGraph, PsiCover)> {
    triangle_check(h, x, y, xz, zy)?;
    let (g, z, e1, e2) = with_apex(h, x, y, xz, zy)?;
    for (id, table) in [(GadgetId::R2, R2_EXT), (GadgetId::R4, R4_EXT), (GadgetId::R5, R5_EXT)] {
        let (pattern, pz, ..) = with_apex(&gadget(id).graph, 0, 1, Sign::Neg, Sign::Pos)?;
        let Some(m) = match_switching(&pattern, &g, &[(0, x), (1, y), (pz, z)]) else {
            continue;
        };
        let pxz = pattern.edge_count() - 2;
        debug_assert_eq!(m.edges[pxz], e1);
        debug_assert_eq!(m.edges[pxz + 1], e2);
        let members: Vec<(Role, Vec<EdgeId>)> = table
            .iter()
            .map(|(r, ids)| (*r, ids.iter().map(|&e| m.edges[e]).collect()))
            .collect();
        return Ok((g.clone(), star_cover(&g, x, z, e1, &members)?));
    }
    Err(Error::Precondition("the piece is not a small gadget".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::search::{psi_search, PsiSpec};
    use crate::construct::tables::base_psi_cover;
    use crate::graph::SwitchSet;
    use crate::oracle::Caps;

    #[test]
    fn tables_match_search() {
        for (id, table) in [(GadgetId::R2, R2_EXT), (GadgetId::R4, R4_EXT), (GadgetId::R5, R5_EXT)] {
            let (g, z, e1, _) = with_apex(&gadget(id).graph, 0, 1, Sign::Neg, Sign::Pos).unwrap();
            let members: Vec<(Role, Vec<EdgeId>)> = table.iter().map(|(r, ids)| (*r, ids.to_vec())).collect();
            star_cover(&g, 0, z, e1, &members).unwrap();
            let found = psi_search(&g, 0, z, &PsiSpec::star(e1), Caps::default()).unwrap();
            assert!(found.is_some(), "{id}");
        }
    }

    #[test]
    fn extends_r3_repeatedly() {
        let h = gadget(GadgetId::R3).graph;
        let mut psi = base_psi_cover(GadgetId::R3, (0, 1), 2, true).unwrap().unwrap();
        let mut g = h;
        for signs in [(Sign::Neg, Sign::Pos), (Sign::Pos, Sign::Pos), (Sign::Neg, Sign::Neg)] {
            let s0 = g.e(psi.xy_edge.unwrap()).sign;
            let (xz, zy) = if s0 * signs.0 * signs.1 == Sign::Neg { signs } else { (signs.0, signs.1.flip()) };
            let (next, p) = triangle_extend(&g, &psi, xz, zy).unwrap();
            assert_eq!(p.x, psi.x);
            assert_eq!(next.vertex_count(), g.vertex_count() + 1);
            g = next;
            psi = p;
        }
        assert!(triangle_extend(&g, &psi, Sign::Pos, g.e(psi.xy_edge.unwrap()).sign).is_err());
    }

    #[test]
    fn small_pieces_after_switching() {
        for id in [GadgetId::R2, GadgetId::R4, GadgetId::R5] {
            let h = gadget(id).graph;
            let s: SwitchSet = [1].into_iter().collect();
            let switched = h.switch(&s).unwrap();
            // xy is now negative
            let (g, p) = triangle_extend_small(&switched, 0, 1, Sign::Pos, Sign::Pos).unwrap();
            assert!(p.star);
            assert_eq!(g.vertex_count(), h.vertex_count() + 1);
        }
        let r3 = gadget(GadgetId::R3).graph;
        assert!(matches!(
            triangle_extend_small(&r3, 0, 1, Sign::Neg, Sign::Pos),
            Err(Error::Precondition(_))
        ));
    }
}

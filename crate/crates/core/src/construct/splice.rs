//! Replacing a path gadget by a two-terminal piece inside a 6-cover.

use crate::cover::{partition_by_trace, verify_k_cover, CoverFamily, CoverMember, PsiCover, Role};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, SignedGraph, VertexId};
use crate::instances::{gadget, GadgetId};

/// A graph `g` and the graph `g_prime` obtained from it by replacing one
/// two-terminal piece with a D1 or D2 gadget.
#[derive(Clone, Debug)]
pub struct Splice {
    pub gadget: GadgetId,
    pub g_prime: SignedGraph,
    /// The gadget's edges in `g_prime`, in the gadget's own order.
    pub gadget_edges: Vec<EdgeId>,
    pub g: SignedGraph,
    /// Id in `g` of each `g_prime` edge outside the gadget.
    pub edge_map: Vec<Option<EdgeId>>,
    /// Ids in `g` of the replaced piece's edges.
    pub piece_edges: Vec<EdgeId>,
    pub terminals: (VertexId, VertexId),
}

fn trace_patterns(id: GadgetId) -> Result<Vec<Vec<usize>>> {
    match id {
        GadgetId::D1 => Ok(vec![vec![0, 1], vec![1, 2], vec![0, 2], vec![0, 1, 2]]),
        GadgetId::D2 => Ok(vec![vec![0, 1, 2], vec![0, 2, 3], vec![0, 1, 3], vec![1, 2, 3]]),
        other => Err(Error::Precondition(format!("{other} is not a path gadget"))),
    }
}

impl Splice {
    /// Glues `piece` (terminals `x`, `y`) onto `base` at `u`, `v`, once as is
    /// and once replaced by the gadget.
    pub fn glue(
        base: &SignedGraph,
        (u, v): (VertexId, VertexId),
        piece: &SignedGraph,
        (x, y): (VertexId, VertexId),
        id: GadgetId,
    ) -> Result<Splice> {
        trace_patterns(id)?;
        base.check_vertex(u)?;
        base.check_vertex(v)?;
        piece.check_vertex(x)?;
        piece.check_vertex(y)?;
        if u == v || x == y {
            return Err(Error::Precondition("terminals coincide".into()));
        }
        let d = gadget(id);
        let (dx, dy) = d.terminals.expect("path gadgets have terminals");
        let attach = |target: &mut SignedGraph, h: &SignedGraph, hx: VertexId, hy: VertexId| -> Result<Vec<EdgeId>> {
            let mut ids = vec![usize::MAX; h.vertex_count()];
            for (w, slot) in ids.iter_mut().enumerate() {
                *slot = if w == hx {
                    u
                } else if w == hy {
                    v
                } else {
                    target.add_vertex()
                };
            }
            h.edges()
                .iter()
                .map(|e| target.add_edge(ids[e.u], ids[e.v], e.sign))
                .collect()
        };
        let mut g = base.clone();
        let piece_edges = attach(&mut g, piece, x, y)?;
        let mut g_prime = base.clone();
        let gadget_edges = attach(&mut g_prime, &d.graph, dx, dy)?;
        let mut edge_map: Vec<Option<EdgeId>> = (0..base.edge_count()).map(Some).collect();
        edge_map.resize(g_prime.edge_count(), None);
        Ok(Splice {
            gadget: id,
            g_prime,
            gadget_edges,
            g,
            edge_map,
            piece_edges,
            terminals: (u, v),
        })
    }

    /// Moves a Ψ-cover of the standalone piece into `g`'s edge ids.
    pub fn lift_psi(&self, psi: &PsiCover) -> Result<PsiCover> {
        let members: Vec<(Role, Vec<EdgeId>)> = psi
            .family()
            .members
            .into_iter()
            .map(|m| (m.role, m.edge_ids.iter().map(|&e| self.piece_edges[e]).collect()))
            .collect();
        let (u, v) = self.terminals;
        let mut out = PsiCover::from_roles(&self.g, u, v, &members)?;
        out.t = psi.t;
        out.star = psi.star;
        out.xy_edge = psi.xy_edge.map(|e| self.piece_edges[e]);
        Ok(out)
    }
}

/// Rewrites a 6-cover of `g_prime` into one of `g`: members through the
/// gadget are classified by their trace on it and each class has its trace
/// swapped for the matching paths or tadpoles of `psi`, whose circuits are
/// added as they are.
///
/// `psi` is a Ψ-cover of the piece in `g`'s edge ids. For D1 its tadpoles at
/// the first terminal must avoid the second; for D2 it must be a Ψ(2)-cover
/// whose tadpoles avoid the opposite terminal on both sides.
pub fn two_sum_replace(s: &Splice, f_prime: &CoverFamily, psi: &PsiCover) -> Result<CoverFamily> {
    let patterns: Vec<Vec<EdgeId>> = trace_patterns(s.gadget)?
        .into_iter()
        .map(|p| p.into_iter().map(|i| s.gadget_edges[i]).collect())
        .collect();
    let (u, v) = s.terminals;
    if (psi.x, psi.y) != (u, v) {
        return Err(Error::Precondition("Ψ-cover terminals differ from the splice".into()));
    }
    if !psi.x_tadpoles_avoid_y(&s.g) {
        return Err(Error::Precondition("tadpoles at x must avoid y".into()));
    }
    if s.gadget == GadgetId::D2 && (psi.t != 2 || !psi.y_tadpoles_avoid_x(&s.g)) {
        return Err(Error::Precondition("D2 needs a Ψ(2)-cover avoiding both terminals".into()));
    }
    let groups = partition_by_trace(f_prime, &patterns)?;
    let sizes = groups.sizes();
    let t = sizes[0];
    if sizes[1] != t || sizes[2] != t || sizes[3] + 2 * t != 6 {
        return Err(Error::Precondition(format!("trace classes {sizes:?} are not a 6-cover")));
    }
    if psi.t != t {
        return Err(Error::Precondition(format!("t mismatch: cover has {t}, Ψ-cover has {}", psi.t)));
    }

    let outside = |m: &CoverMember| -> Vec<EdgeId> {
        m.edge_ids.iter().filter_map(|&e| s.edge_map[e]).collect()
    };
    let mut members: Vec<Vec<EdgeId>> = Vec::with_capacity(f_prime.len() + psi.circuits.len());
    for &i in &groups.untouched {
        members.push(outside(&f_prime.members[i]));
    }
    let replacements = [&psi.pos_paths, &psi.neg_paths, &psi.tadpoles_x, &psi.tadpoles_y];
    for (group, with) in groups.groups.iter().zip(replacements) {
        for (&i, r) in group.iter().zip(with.iter()) {
            let mut ids = outside(&f_prime.members[i]);
            ids.extend(&r.edge_ids);
            members.push(ids);
        }
    }
    members.extend(psi.circuits.iter().map(|m| m.edge_ids.clone()));

    let mut f = CoverFamily::new();
    for ids in members {
        let m = CoverMember::signed(&s.g, &ids)
            .ok_or_else(|| Error::Construction(format!("{ids:?} is not a signed circuit")))?;
        f.push(m);
    }
    verify_k_cover(&s.g, &f, 6).map_err(|e| Error::Construction(e.to_string()))?;
    Ok(f)
}

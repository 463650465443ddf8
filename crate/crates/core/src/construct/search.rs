//! Exact search for structured Ψ-covers of small pieces.

use crate::circuits::{enumerate_paths, enumerate_signed_circuits, enumerate_tadpoles};
use crate::cover::{PsiCover, Role};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};
use crate::oracle::search::{solve, Problem};
use crate::oracle::Caps;

/// Which tadpoles at one terminal may fill a quota.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TadpoleClass {
    Any,
    /// Does not touch the other terminal.
    AvoidsOther,
    /// Touches the other terminal.
    ContainsOther,
    /// The tadpole path uses this edge.
    PathThrough(EdgeId),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiSpec {
    pub t: usize,
    pub at_x: Vec<(TadpoleClass, usize)>,
    pub at_y: Vec<(TadpoleClass, usize)>,
    pub star_edge: Option<EdgeId>,
}

impl PsiSpec {
    pub fn plain(t: usize) -> PsiSpec {
        PsiSpec {
            t,
            at_x: vec![(TadpoleClass::Any, t)],
            at_y: vec![(TadpoleClass::Any, 6 - 2 * t)],
            star_edge: None,
        }
    }

    pub fn star(xy: EdgeId) -> PsiSpec {
        let side = vec![(TadpoleClass::AvoidsOther, 1), (TadpoleClass::PathThrough(xy), 1)];
        PsiSpec {
            t: 2,
            at_x: side.clone(),
            at_y: side,
            star_edge: Some(xy),
        }
    }
}

/// Finds a Ψ-cover of `h` with terminals `(x, y)` meeting `spec`, if one exists.
pub fn psi_search(h: &SignedGraph, x: VertexId, y: VertexId, spec: &PsiSpec, caps: Caps) -> Result<Option<PsiCover>> {
    h.check_vertex(x)?;
    h.check_vertex(y)?;
    if x == y || spec.t > 3 {
        return Err(Error::Precondition("terminals must differ and t must be at most 3".into()));
    }
    let sum = |v: &[(TadpoleClass, usize)]| v.iter().map(|c| c.1).sum::<usize>();
    if sum(&spec.at_x) != spec.t || sum(&spec.at_y) != 6 - 2 * spec.t {
        return Err(Error::Precondition("tadpole quotas do not match t".into()));
    }
    let mut elements: Vec<Vec<EdgeId>> = Vec::new();
    let mut roles: Vec<Role> = Vec::new();
    let mut group: Vec<Option<usize>> = Vec::new();
    let mut quota: Vec<usize> = Vec::new();

    for sc in enumerate_signed_circuits(h, caps.circuits)? {
        elements.push(sc.edge_ids());
        roles.push(Role::SignedCircuit);
        group.push(None);
    }
    let (gp, gn) = (quota.len(), quota.len() + 1);
    quota.push(spec.t);
    quota.push(spec.t);
    for p in enumerate_paths(h, x, y, caps.circuits)? {
        let (role, gi) = match h.sign_of_unchecked(&p) {
            Sign::Pos => (Role::PositivePath, gp),
            Sign::Neg => (Role::NegativePath, gn),
        };
        let mut ids = p;
        ids.sort_unstable();
        elements.push(ids);
        roles.push(role);
        group.push(Some(gi));
    }
    for (tail, other, classes, role) in [
        (x, y, &spec.at_x, Role::TadpoleAtX),
        (y, x, &spec.at_y, Role::TadpoleAtY),
    ] {
        let tadpoles = enumerate_tadpoles(h, tail, caps.circuits)?;
        for &(class, q) in classes.iter() {
            let gi = quota.len();
            quota.push(q);
            for tp in &tadpoles {
                let ids = tp.edge_ids();
                let touches = ids.iter().any(|&e| h.e(e).touches(other));
                let fits = match class {
                    TadpoleClass::Any => true,
                    TadpoleClass::AvoidsOther => !touches,
                    TadpoleClass::ContainsOther => touches,
                    TadpoleClass::PathThrough(e) => tp.path_edge_ids.contains(&e),
                };
                if fits {
                    elements.push(ids);
                    roles.push(role);
                    group.push(Some(gi));
                }
            }
        }
    }
    let out = solve(Problem {
        elements: &elements,
        demand: vec![6; h.edge_count()],
        group,
        quota,
        node_cap: caps.nodes,
    })?;
    let Some(mut picks) = out.solution else {
        return Ok(None);
    };
    picks.sort_unstable();
    let members: Vec<(Role, Vec<EdgeId>)> = picks.iter().map(|&i| (roles[i], elements[i].clone())).collect();
    let mut p = PsiCover::from_roles(h, x, y, &members)?;
    if let Some(xy) = spec.star_edge {
        p.star = true;
        p.xy_edge = Some(xy);
    }
    Ok(Some(p))
}

//! Frozen Ψ-cover families for the R-gadgets, in the gadgets' own edge ids.

use crate::cover::{verify_psi_cover, PsiCover, Role};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, VertexId};
use crate::instances::{gadget, GadgetId};

use Role::{NegativePath as N, PositivePath as P, SignedCircuit as C, TadpoleAtX as TX, TadpoleAtY as TY};

type Table = &'static [(Role, &'static [EdgeId])];

// R2 with terminals (y, x)
const R2_YX: [Table; 4] = [
    &[
        (C, &[0, 1, 2]),
        (C, &[0, 1, 2]),
        (TY, &[0, 1, 3]),
        (TY, &[0, 1, 3]),
        (TY, &[0, 2, 3]),
        (TY, &[0, 2, 3]),
        (TY, &[1, 2, 3]),
        (TY, &[1, 2, 3]),
    ],
    &[
        (C, &[0, 1, 2]),
        (C, &[0, 1, 2]),
        (P, &[1]),
        (N, &[0, 3]),
        (TX, &[0, 1, 3]),
        (TY, &[0, 2, 3]),
        (TY, &[0, 2, 3]),
        (TY, &[1, 2, 3]),
        (TY, &[1, 2, 3]),
    ],
    &[
        (C, &[0, 1, 2]),
        (C, &[0, 1, 2]),
        (P, &[1]),
        (P, &[0, 2]),
        (N, &[0, 3]),
        (N, &[0, 3]),
        (TX, &[0, 1, 3]),
        (TX, &[2, 3]),
        (TY, &[1, 2, 3]),
        (TY, &[1, 2, 3]),
    ],
    &[
        (C, &[0, 1, 2]),
        (C, &[0, 1, 2]),
        (C, &[0, 1, 2]),
        (P, &[1]),
        (P, &[1]),
        (P, &[1]),
        (N, &[0, 3]),
        (N, &[0, 3]),
        (N, &[0, 3]),
        (TX, &[2, 3]),
        (TX, &[2, 3]),
        (TX, &[2, 3]),
    ],
];

const R2_XY: Table = &[
    (C, &[0, 1, 2]),
    (C, &[0, 1, 2]),
    (P, &[0, 2]),
    (P, &[1]),
    (N, &[0, 3]),
    (N, &[0, 3]),
    (TX, &[1, 2, 3]),
    (TX, &[1, 2, 3]),
    (TY, &[2, 3]),
    (TY, &[0, 1, 3]),
];

const R3_STAR: Table = &[
    (C, &[0, 1, 2, 3]),
    (C, &[0, 1, 2, 3]),
    (P, &[1]),
    (P, &[1]),
    (N, &[0, 3, 4]),
    (N, &[0, 3, 4]),
    (TX, &[0, 2, 4]),
    (TX, &[1, 2, 3, 4]),
    (TY, &[2, 3, 4]),
    (TY, &[0, 1, 2, 4]),
];

const R4_XY: Table = &[
    (C, &[0, 2, 3]),
    (C, &[0, 2, 3]),
    (C, &[1, 2, 4]),
    (C, &[1, 2, 4]),
    (C, &[1, 2, 4]),
    (P, &[1]),
    (P, &[1]),
    (N, &[0, 4, 5]),
    (N, &[0, 4, 5]),
    (TX, &[0, 3, 5]),
    (TX, &[2, 3, 5]),
    (TY, &[3, 4, 5]),
    (TY, &[0, 1, 3, 5]),
];

const R5_XY: Table = &[
    (C, &[0, 2, 3, 4]),
    (C, &[0, 2, 3, 4]),
    (C, &[1, 2, 5]),
    (C, &[1, 2, 5]),
    (C, &[1, 2, 5]),
    (P, &[1]),
    (P, &[1]),
    (N, &[0, 3, 5, 6]),
    (N, &[0, 3, 5, 6]),
    (TX, &[0, 4, 6]),
    (TX, &[2, 3, 4, 6]),
    (TY, &[3, 4, 5, 6]),
    (TY, &[0, 1, 4, 6]),
];

/// Edge `xy` in every R-gadget that has one.
pub(crate) const GADGET_XY_EDGE: EdgeId = 1;

fn lookup(id: GadgetId, orientation: (VertexId, VertexId), t: usize, star: bool) -> Option<Table> {
    match (id, orientation, t, star) {
        (GadgetId::R2, (1, 0), t, false) if t <= 3 => Some(R2_YX[t]),
        (GadgetId::R2, (0, 1), 2, false) => Some(R2_XY),
        (GadgetId::R3, (0, 1), 2, true) => Some(R3_STAR),
        (GadgetId::R4, (0, 1), 2, false) => Some(R4_XY),
        (GadgetId::R5, (0, 1), 2, false) => Some(R5_XY),
        _ => None,
    }
}

/// The Ψ-covers of the R-gadgets guaranteed by the base case, in gadget ids
/// (`x = 0`, `y = 1`). `None` for every other shape.
pub fn base_psi_cover(id: GadgetId, orientation: (VertexId, VertexId), t: usize, star: bool) -> Result<Option<PsiCover>> {
    if !matches!(
        id,
        GadgetId::R0 | GadgetId::R1 | GadgetId::R2 | GadgetId::R3 | GadgetId::R4 | GadgetId::R5
    ) {
        return Err(Error::UnknownGadget(id.name().to_string()));
    }
    let Some(table) = lookup(id, orientation, t, star) else {
        return Ok(None);
    };
    let h = gadget(id).graph;
    let (x, y) = orientation;
    let members: Vec<(Role, Vec<EdgeId>)> = table.iter().map(|(r, ids)| (*r, ids.to_vec())).collect();
    let mut p = PsiCover::from_roles(&h, x, y, &members)?;
    if star {
        p.star = true;
        p.xy_edge = Some(GADGET_XY_EDGE);
    }
    verify_psi_cover(&h, x, y, &p).map_err(|v| Error::Construction(format!("frozen table: {v}")))?;
    Ok(Some(p))
}

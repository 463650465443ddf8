//! Deciding whether a signed graph admits a signed circuit cover.

use std::fmt;

use crate::circuits::{enumerate_signed_circuits, DEFAULT_SIGNED_CIRCUIT_CAP};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, SignedGraph, VertexId, DEFAULT_EPSILON_CAP};

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Obstruction {
    /// Negativeness is exactly one.
    EpsilonOne,
    /// Removing the bridge leaves a balanced component on `side`.
    BalancedBridgeSide {
        bridge: EdgeId,
        side: Vec<VertexId>,
    },
}

impl fmt::Display for Obstruction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Obstruction::EpsilonOne => write!(f, "epsilon=1"),
            Obstruction::BalancedBridgeSide { bridge, side } => {
                let vs: Vec<String> = side.iter().map(|v| v.to_string()).collect();
                write!(f, "bridge={} balanced_side={}", bridge, vs.join(","))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coverability {
    pub coverable: bool,
    pub epsilon: usize,
    pub obstruction: Option<Obstruction>,
}

pub fn is_coverable(g: &SignedGraph) -> Result<Coverability> {
    is_coverable_with_cap(g, DEFAULT_EPSILON_CAP)
}

pub fn is_coverable_with_cap(g: &SignedGraph, cap: usize) -> Result<Coverability> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let epsilon = g.negativeness_with_cap(cap)?;
    if epsilon == 1 {
        return Ok(Coverability {
            coverable: false,
            epsilon,
            obstruction: Some(Obstruction::EpsilonOne),
        });
    }
    for b in g.bridges() {
        if let Some(side) = balanced_side_after_removing(g, b) {
            return Ok(Coverability {
                coverable: false,
                epsilon,
                obstruction: Some(Obstruction::BalancedBridgeSide { bridge: b, side }),
            });
        }
    }
    Ok(Coverability {
        coverable: true,
        epsilon,
        obstruction: None,
    })
}

/// The vertex set of a balanced component of `g - b`, if any.
pub(crate) fn balanced_side_after_removing(g: &SignedGraph, b: EdgeId) -> Option<Vec<VertexId>> {
    let rest: Vec<EdgeId> = (0..g.edge_count()).filter(|&e| e != b).collect();
    let (h, _) = g.edge_subgraph(&rest);
    let edge = g.e(b);
    let comps = h.components();
    for end in [edge.u, edge.v] {
        let comp = comps.iter().find(|c| c.contains(&end)).unwrap();
        let ids: Vec<EdgeId> = (0..h.edge_count())
            .filter(|&e| comp.contains(&h.e(e).u))
            .collect();
        let (side, _) = h.edge_subgraph(&ids);
        if side.is_balanced() {
            return Some(comp.clone());
        }
    }
    None
}

/// Every edge lies in at least one signed circuit.
pub fn is_coverable_oracle(g: &SignedGraph) -> Result<bool> {
    is_coverable_oracle_with_cap(g, DEFAULT_SIGNED_CIRCUIT_CAP)
}

pub fn is_coverable_oracle_with_cap(g: &SignedGraph, cap: usize) -> Result<bool> {
    let mut hit = vec![false; g.edge_count()];
    for sc in enumerate_signed_circuits(g, cap)? {
        for e in sc.edge_ids() {
            hit[e] = true;
        }
    }
    Ok(hit.into_iter().all(|h| h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::Sign::*;

    #[test]
    fn digon_is_not_coverable() {
        let d = SignedGraph::from_edges(2, [(0, 1, Pos), (0, 1, Neg)]).unwrap();
        let c = is_coverable(&d).unwrap();
        assert!(!c.coverable);
        assert_eq!(c.obstruction, Some(Obstruction::EpsilonOne));
        assert!(!is_coverable_oracle(&d).unwrap());
    }

    #[test]
    fn long_barbell_is_coverable() {
        let g = SignedGraph::from_edges(2, [(0, 0, Neg), (0, 1, Pos), (1, 1, Neg)]).unwrap();
        assert!(is_coverable(&g).unwrap().coverable);
        assert!(is_coverable_oracle(&g).unwrap());
    }

    #[test]
    fn bridge_to_balanced_side() {
        let g = SignedGraph::from_edges(
            4,
            [
                (0, 0, Neg),
                (0, 1, Pos),
                (1, 2, Pos),
                (2, 3, Pos),
                (3, 1, Pos),
                (0, 0, Neg),
            ],
        )
        .unwrap();
        let c = is_coverable(&g).unwrap();
        assert!(!c.coverable);
        assert_eq!(
            c.obstruction,
            Some(Obstruction::BalancedBridgeSide {
                bridge: 1,
                side: vec![1, 2, 3]
            })
        );
        assert!(!is_coverable_oracle(&g).unwrap());
    }

    #[test]
    fn disconnected_is_an_error() {
        let g = SignedGraph::from_edges(3, [(0, 1, Pos), (0, 1, Pos)]).unwrap();
        assert_eq!(is_coverable(&g), Err(Error::Disconnected));
    }
}

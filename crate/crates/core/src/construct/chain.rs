//! Covers of series chains assembled from Ψ(2)-covers of their parts.

use std::collections::BTreeMap;

use crate::cover::{verify_psi_cover, verify_subgraph_cover, CoverFamily, CoverMember, PsiCover, Role};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph};
use crate::sp::{PartClass, PartsPartition};

/// Signs of the four end-to-end paths.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct ThetaPattern {
    signs: [Sign; 4],
}

impl ThetaPattern {
    pub const MIXED: ThetaPattern = ThetaPattern {
        signs: [Sign::Pos, Sign::Pos, Sign::Neg, Sign::Neg],
    };
    pub const ALL_NEGATIVE: ThetaPattern = ThetaPattern { signs: [Sign::Neg; 4] };

    pub fn new(signs: [Sign; 4]) -> Result<ThetaPattern> {
        let t = ThetaPattern { signs };
        if t == Self::MIXED || t == Self::ALL_NEGATIVE {
            Ok(t)
        } else {
            Err(Error::Precondition(format!("inadmissible path signs {signs:?}")))
        }
    }

    pub fn signs(&self) -> [Sign; 4] {
        self.signs
    }
}

fn precondition(msg: impl Into<String>) -> Error {
    Error::Precondition(msg.into())
}

fn join(parts: &[&[EdgeId]]) -> Vec<EdgeId> {
    let mut v: Vec<EdgeId> = parts.iter().flat_map(|p| p.iter().copied()).collect();
    v.sort_unstable();
    v
}

/// Which two of the four paths receive the positive segments.
const PAIRS: [[bool; 4]; 6] = [
    [true, true, false, false],
    [true, false, true, false],
    [true, false, false, true],
    [false, true, true, false],
    [false, true, false, true],
    [false, false, true, true],
];

fn sign_of(b: bool) -> Sign {
    if b {
        Sign::Pos
    } else {
        Sign::Neg
    }
}

/// A 6-cover of the chain made of its parts' Ψ(2)-covers: the parts'
/// circuits and the barbells between consecutive loop or Ψ parts, two
/// copies of each loop part as open members, four end-to-end paths with
/// signs `theta`, two tadpoles at the first terminal and two at the last.
///
/// `h` must consist of exactly the chain's edges; `psi_inputs` maps each
/// multi-edge part index to a Ψ(2)-cover in `h`'s edge ids.
pub fn series_compose(
    h: &SignedGraph,
    chain: &PartsPartition,
    psi_inputs: &BTreeMap<usize, PsiCover>,
    theta: ThetaPattern,
) -> Result<CoverFamily> {
    let parts = &chain.parts;
    let spanned: usize = parts.iter().map(|p| p.edges.len()).sum();
    if spanned != h.edge_count() {
        return Err(precondition("the chain must consist of every edge of the graph"));
    }
    let psi_parts: Vec<usize> = chain.of_class(PartClass::B2).map(|(i, _)| i).collect();
    if psi_parts.is_empty() {
        return Err(precondition("the chain has no multi-edge part"));
    }
    if theta == ThetaPattern::ALL_NEGATIVE && psi_parts.len() < 2 {
        return Err(precondition("all-negative paths need two multi-edge parts"));
    }
    for &i in &psi_parts {
        let p = psi_inputs
            .get(&i)
            .ok_or_else(|| precondition(format!("missing Ψ-cover for part {i}")))?;
        let part = &parts[i];
        if p.t != 2 || p.x != part.x || p.y != part.y {
            return Err(precondition(format!("part {i} needs a Ψ(2)-cover between its terminals")));
        }
    }
    let link_sign = chain
        .of_class(PartClass::B1)
        .fold(Sign::Pos, |s, (_, p)| s * h.e(p.edges[0]).sign);

    // Assign each part's two positive and two negative paths to the four
    // end-to-end paths so their signs come out as `theta`.
    let mut choice: Vec<[bool; 4]> = vec![PAIRS[0]; psi_parts.len()];
    let free = psi_parts.len().min(2);
    let combos: Vec<Vec<usize>> = if free == 1 {
        (0..6).map(|a| vec![a]).collect()
    } else {
        (0..36).map(|c| vec![c / 6, c % 6]).collect()
    };
    let target = theta.signs();
    let found = combos.into_iter().find(|combo| {
        let mut trial = choice.clone();
        for (slot, &c) in combo.iter().enumerate() {
            trial[slot] = PAIRS[c];
        }
        (0..4).all(|j| trial.iter().fold(link_sign, |s, c| s * sign_of(c[j])) == target[j])
    });
    let combo = found.ok_or_else(|| Error::Construction("no path assignment meets theta".into()))?;
    for (slot, &c) in combo.iter().enumerate() {
        choice[slot] = PAIRS[c];
    }

    let (x0, xn) = (chain.x, chain.y);
    let mut f = CoverFamily::new();
    let bad = |what: &str, ids: &[EdgeId]| Error::Construction(format!("{what} {ids:?} does not parse"));

    for i in &psi_parts {
        for m in &psi_inputs[i].circuits {
            f.push(m.clone());
        }
    }

    let mut paths: [Vec<EdgeId>; 4] = Default::default();
    for (i, part) in parts.iter().enumerate() {
        match part.class {
            PartClass::B0 => {}
            PartClass::B1 => {
                for p in &mut paths {
                    p.push(part.edges[0]);
                }
            }
            PartClass::B2 => {
                let slot = psi_parts.iter().position(|&k| k == i).unwrap();
                let psi = &psi_inputs[&i];
                let (mut pos, mut neg) = (psi.pos_paths.iter(), psi.neg_paths.iter());
                for (j, p) in paths.iter_mut().enumerate() {
                    let seg = if choice[slot][j] { pos.next() } else { neg.next() }.unwrap();
                    p.extend(&seg.edge_ids);
                }
            }
        }
    }
    for (j, p) in paths.iter().enumerate() {
        let m = CoverMember::path(h, p, x0, xn).ok_or_else(|| bad("path", p))?;
        let want = match target[j] {
            Sign::Pos => Role::PositivePath,
            Sign::Neg => Role::NegativePath,
        };
        if m.role != want {
            return Err(Error::Construction(format!("path {j} has the wrong sign")));
        }
        f.push(m);
    }

    // Tadpoles and barbells through the loop and multi-edge parts.
    let ends: Vec<usize> = (0..parts.len()).filter(|&i| parts[i].class != PartClass::B1).collect();
    let left = |i: usize, j: usize| -> Vec<EdgeId> {
        match parts[i].class {
            PartClass::B0 => parts[i].edges.clone(),
            _ => psi_inputs[&i].tadpoles_x[j].edge_ids.clone(),
        }
    };
    let right = |i: usize, j: usize| -> Vec<EdgeId> {
        match parts[i].class {
            PartClass::B0 => parts[i].edges.clone(),
            _ => psi_inputs[&i].tadpoles_y[j].edge_ids.clone(),
        }
    };
    let links = |from: usize, to: usize| -> Vec<EdgeId> {
        (from..to)
            .filter(|&i| parts[i].class == PartClass::B1)
            .map(|i| parts[i].edges[0])
            .collect()
    };
    let first = ends[0];
    let last = *ends.last().unwrap();
    for j in 0..2 {
        let ids = join(&[&links(0, first), &left(first, j)]);
        f.push(CoverMember::tadpole(h, &ids, x0, Role::TadpoleAtX).ok_or_else(|| bad("tadpole", &ids))?);
    }
    for j in 0..2 {
        let ids = join(&[&right(last, j), &links(last + 1, parts.len())]);
        f.push(CoverMember::tadpole(h, &ids, xn, Role::TadpoleAtY).ok_or_else(|| bad("tadpole", &ids))?);
    }
    for w in ends.windows(2) {
        for j in 0..2 {
            let ids = join(&[&right(w[0], j), &links(w[0] + 1, w[1]), &left(w[1], j)]);
            f.push(CoverMember::signed(h, &ids).ok_or_else(|| bad("barbell", &ids))?);
        }
    }
    for (_, part) in chain.of_class(PartClass::B0) {
        let m = CoverMember::unbalanced_circuit(h, &part.edges).ok_or_else(|| bad("loop", &part.edges))?;
        f.push(m.clone());
        f.push(m);
    }

    verify_subgraph_cover(h, &f, 6, x0, xn).map_err(|v| Error::Construction(v.to_string()))?;
    Ok(f)
}

/// Whether a chain without loop parts has a Ψ(2)-cover whose tadpoles never
/// reach the opposite terminal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SeriesPsiStatus {
    Clean(PsiCover),
    /// The only multi-edge part is the first one and its supplied cover has
    /// a tadpole at its far end through the chain's first terminal.
    LeftObstructed,
    RightObstructed,
}

pub fn series_psi_status(
    h: &SignedGraph,
    chain: &PartsPartition,
    psi_inputs: &BTreeMap<usize, PsiCover>,
) -> Result<SeriesPsiStatus> {
    if chain.count(PartClass::B0) > 0 {
        return Err(precondition("the chain has a loop part"));
    }
    if chain.parts.len() < 2 {
        return Err(precondition("the chain needs at least two parts"));
    }
    let f = series_compose(h, chain, psi_inputs, ThetaPattern::MIXED)?;
    let (x0, xn) = (chain.x, chain.y);
    let members: Vec<(Role, Vec<EdgeId>)> = f.members.iter().map(|m| (m.role, m.edge_ids.clone())).collect();
    let psi = PsiCover::from_roles(h, x0, xn, &members)?;
    verify_psi_cover(h, x0, xn, &psi).map_err(|v| Error::Construction(v.to_string()))?;
    let left_cross = psi.tadpoles_y.iter().any(|m| m.contains_vertex(h, x0));
    let right_cross = psi.tadpoles_x.iter().any(|m| m.contains_vertex(h, xn));
    Ok(match (left_cross, right_cross) {
        (false, false) => SeriesPsiStatus::Clean(psi),
        (true, _) => SeriesPsiStatus::LeftObstructed,
        (false, true) => SeriesPsiStatus::RightObstructed,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::construct::search::{psi_search, PsiSpec};
    use crate::graph::Sign::*;
    use crate::oracle::Caps;
    use crate::sp::parts;

    fn g(n: usize, e: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::from_edges(n, e.iter().copied()).unwrap()
    }

    /// Ψ(2)-cover of the part, found on its own subgraph.
    fn part_psi(h: &SignedGraph, chain: &PartsPartition, i: usize) -> PsiCover {
        let part = &chain.parts[i];
        let (sub, map) = h.edge_subgraph(&part.edges);
        let p = psi_search(&sub, part.x, part.y, &PsiSpec::plain(2), Caps::default())
            .unwrap()
            .unwrap();
        let members: Vec<(Role, Vec<EdgeId>)> = p
            .family()
            .members
            .into_iter()
            .map(|m| (m.role, m.edge_ids.iter().map(|&e| map[e]).collect()))
            .collect();
        PsiCover::from_roles(h, part.x, part.y, &members).unwrap()
    }

    #[test]
    fn digon_loop_chain() {
        // link, digon, loop, link
        let h = g(4, &[(0, 1, Pos), (1, 2, Pos), (1, 2, Neg), (2, 2, Neg), (2, 3, Neg)]);
        let chain = parts(&h, 0, 3).unwrap();
        let classes: Vec<PartClass> = chain.parts.iter().map(|p| p.class).collect();
        assert_eq!(classes, vec![PartClass::B1, PartClass::B2, PartClass::B0, PartClass::B1]);
        let inputs = BTreeMap::from([(1, part_psi(&h, &chain, 1))]);
        let f = series_compose(&h, &chain, &inputs, ThetaPattern::MIXED).unwrap();
        let at_x: Vec<_> = f.with_role(Role::TadpoleAtX).collect();
        assert!(at_x.iter().all(|m| m.edge_ids.contains(&1) || m.edge_ids.contains(&2)));
        assert!(f.with_role(Role::TadpoleAtY).all(|m| m.edge_ids.contains(&3)));
        assert!(matches!(
            series_compose(&h, &chain, &inputs, ThetaPattern::ALL_NEGATIVE),
            Err(Error::Precondition(_))
        ));
        assert!(matches!(
            series_compose(&h, &chain, &BTreeMap::new(), ThetaPattern::MIXED),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn theta_is_matched_exactly() {
        // digon, link, digon
        let h = g(4, &[(0, 1, Pos), (0, 1, Neg), (1, 2, Neg), (2, 3, Pos), (2, 3, Neg)]);
        let chain = parts(&h, 0, 3).unwrap();
        let inputs = BTreeMap::from([(0, part_psi(&h, &chain, 0)), (2, part_psi(&h, &chain, 2))]);
        for theta in [ThetaPattern::MIXED, ThetaPattern::ALL_NEGATIVE] {
            let f = series_compose(&h, &chain, &inputs, theta).unwrap();
            let signs: Vec<Sign> = f
                .members
                .iter()
                .filter(|m| matches!(m.role, Role::PositivePath | Role::NegativePath))
                .map(|m| h.sign_of(&m.edge_ids).unwrap())
                .collect();
            assert_eq!(signs, theta.signs().to_vec());
        }
        assert!(matches!(series_psi_status(&h, &chain, &inputs), Ok(SeriesPsiStatus::Clean(_))));
    }

    #[test]
    fn theta_values() {
        assert!(ThetaPattern::new([Pos, Pos, Neg, Neg]).is_ok());
        assert!(ThetaPattern::new([Pos, Neg, Pos, Neg]).is_err());
    }

    #[test]
    fn obstruction_at_the_ends() {
        // digon then link: the digon's tadpoles at its far end contain x0
        let h = g(3, &[(0, 1, Pos), (0, 1, Neg), (1, 2, Pos)]);
        let chain = parts(&h, 0, 2).unwrap();
        let inputs = BTreeMap::from([(0, part_psi(&h, &chain, 0))]);
        assert_eq!(series_psi_status(&h, &chain, &inputs), Ok(SeriesPsiStatus::LeftObstructed));
        let h = g(3, &[(0, 1, Pos), (1, 2, Pos), (1, 2, Neg)]);
        let chain = parts(&h, 0, 2).unwrap();
        let inputs = BTreeMap::from([(1, part_psi(&h, &chain, 1))]);
        assert_eq!(series_psi_status(&h, &chain, &inputs), Ok(SeriesPsiStatus::RightObstructed));
        // link, digon, link
        let h = g(4, &[(0, 1, Pos), (1, 2, Pos), (1, 2, Neg), (2, 3, Pos)]);
        let chain = parts(&h, 0, 3).unwrap();
        let inputs = BTreeMap::from([(1, part_psi(&h, &chain, 1))]);
        assert!(matches!(series_psi_status(&h, &chain, &inputs), Ok(SeriesPsiStatus::Clean(_))));
    }
}

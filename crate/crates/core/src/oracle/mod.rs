//! Exact search over the signed-circuit space: k-cover feasibility, the
//! least feasible k, and minimum cover length.

pub(crate) mod search;

use std::time::{Duration, Instant};

use crate::circuits::{enumerate_signed_circuits, DEFAULT_SIGNED_CIRCUIT_CAP};
use crate::cover::{CoverFamily, CoverMember};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, SignedGraph};

pub const DEFAULT_NODE_CAP: usize = 10_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Caps {
    pub circuits: usize,
    pub nodes: usize,
}

impl Default for Caps {
    fn default() -> Self {
        Caps {
            circuits: DEFAULT_SIGNED_CIRCUIT_CAP,
            nodes: DEFAULT_NODE_CAP,
        }
    }
}

#[derive(Clone, Debug)]
pub struct SolveReport {
    pub feasible: bool,
    pub family: Option<CoverFamily>,
    pub nodes_explored: usize,
    pub wall_time: Duration,
}

impl PartialEq for SolveReport {
    /// Wall time is ignored.
    fn eq(&self, other: &Self) -> bool {
        self.feasible == other.feasible
            && self.family == other.family
            && self.nodes_explored == other.nodes_explored
    }
}

fn circuit_sets(g: &SignedGraph, caps: Caps) -> Result<Vec<Vec<EdgeId>>> {
    Ok(enumerate_signed_circuits(g, caps.circuits)?
        .into_iter()
        .map(|c| c.edge_ids())
        .collect())
}

fn family_of(g: &SignedGraph, sets: &[Vec<EdgeId>], picks: &[usize]) -> CoverFamily {
    let mut picks = picks.to_vec();
    picks.sort_unstable();
    picks
        .into_iter()
        .map(|i| CoverMember::signed(g, &sets[i]).expect("enumerated signed circuit"))
        .collect()
}

pub fn k_cover_feasible(g: &SignedGraph, k: usize, caps: Caps) -> Result<SolveReport> {
    let start = Instant::now();
    let sets = circuit_sets(g, caps)?;
    k_cover_from_sets(g, &sets, k, caps, start)
}

fn k_cover_from_sets(
    g: &SignedGraph,
    sets: &[Vec<EdgeId>],
    k: usize,
    caps: Caps,
    start: Instant,
) -> Result<SolveReport> {
    let out = search::solve(search::Problem {
        elements: sets,
        demand: vec![k; g.edge_count()],
        group: vec![None; sets.len()],
        quota: Vec::new(),
        node_cap: caps.nodes,
    })?;
    let family = out.solution.map(|picks| family_of(g, sets, &picks));
    Ok(SolveReport {
        feasible: family.is_some(),
        family,
        nodes_explored: out.nodes,
        wall_time: start.elapsed(),
    })
}

/// Least `k` in `1..=k_max` admitting a signed circuit k-cover.
pub fn min_k_with_cover(g: &SignedGraph, k_max: usize, caps: Caps) -> Result<Option<usize>> {
    let sets = circuit_sets(g, caps)?;
    for k in 1..=k_max {
        if k_cover_from_sets(g, &sets, k, caps, Instant::now())?.feasible {
            return Ok(Some(k));
        }
    }
    Ok(None)
}

#[derive(Clone, Debug, PartialEq)]
pub struct LengthReport {
    pub length: usize,
    pub family: CoverFamily,
    pub nodes_explored: usize,
}

/// Minimum total size of a family of signed circuits covering every edge.
pub fn min_cover_length(g: &SignedGraph, caps: Caps) -> Result<LengthReport> {
    let sets = circuit_sets(g, caps)?;
    let m = g.edge_count();
    let mut by_edge = vec![Vec::new(); m];
    for (i, s) in sets.iter().enumerate() {
        for &e in s {
            by_edge[e].push(i);
        }
    }
    if by_edge.iter().any(|c| c.is_empty()) {
        return Err(Error::NotCoverable);
    }
    let mut st = LengthSearch {
        sets: &sets,
        by_edge,
        covered: vec![0; m],
        excluded: vec![false; sets.len()],
        chosen: Vec::new(),
        length: 0,
        best: usize::MAX,
        best_pick: Vec::new(),
        nodes: 0,
        node_cap: caps.nodes,
    };
    st.go()?;
    Ok(LengthReport {
        length: st.best,
        family: family_of(g, &sets, &st.best_pick),
        nodes_explored: st.nodes,
    })
}

struct LengthSearch<'a> {
    sets: &'a [Vec<EdgeId>],
    by_edge: Vec<Vec<usize>>,
    covered: Vec<usize>,
    excluded: Vec<bool>,
    chosen: Vec<usize>,
    length: usize,
    best: usize,
    best_pick: Vec<usize>,
    nodes: usize,
    node_cap: usize,
}

impl LengthSearch<'_> {
    fn gain(&self, i: usize) -> usize {
        self.sets[i].iter().filter(|&&e| self.covered[e] == 0).count()
    }

    /// Each uncovered edge pays at least the cheapest per-new-edge price of
    /// any circuit through it. `None` if some edge has no circuit left.
    fn lower_bound(&self) -> Option<f64> {
        let mut lb = 0.0;
        for e in 0..self.covered.len() {
            if self.covered[e] > 0 {
                continue;
            }
            let price = self.by_edge[e]
                .iter()
                .filter(|&&i| !self.excluded[i])
                .map(|&i| self.sets[i].len() as f64 / self.gain(i) as f64)
                .fold(f64::INFINITY, f64::min);
            if price.is_infinite() {
                return None;
            }
            lb += price;
        }
        Some(lb)
    }

    fn go(&mut self) -> Result<()> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Error::NodeCap(self.node_cap));
        }
        let Some(lb) = self.lower_bound() else {
            return Ok(());
        };
        if self.length as f64 + lb >= self.best as f64 - 1e-9 {
            return Ok(());
        }
        // Uncovered edge with the fewest remaining options.
        let pick = (0..self.covered.len())
            .filter(|&e| self.covered[e] == 0)
            .min_by_key(|&e| self.by_edge[e].iter().filter(|&&i| !self.excluded[i]).count());
        let Some(e) = pick else {
            self.best = self.length;
            self.best_pick = self.chosen.clone();
            return Ok(());
        };
        let cands: Vec<usize> = self.by_edge[e].iter().copied().filter(|&i| !self.excluded[i]).collect();
        let mut newly_excluded = Vec::new();
        for i in cands {
            for &f in &self.sets[i] {
                self.covered[f] += 1;
            }
            self.length += self.sets[i].len();
            self.chosen.push(i);
            self.go()?;
            self.chosen.pop();
            self.length -= self.sets[i].len();
            for &f in &self.sets[i] {
                self.covered[f] -= 1;
            }
            self.excluded[i] = true;
            newly_excluded.push(i);
        }
        for i in newly_excluded {
            self.excluded[i] = false;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_k_cover;
    use crate::graph::Sign::*;

    #[test]
    fn balanced_circuit_is_a_one_cover() {
        let g = SignedGraph::from_edges(3, [(0, 1, Pos), (1, 2, Neg), (2, 0, Neg)]).unwrap();
        let r = k_cover_feasible(&g, 1, Caps::default()).unwrap();
        assert!(r.feasible);
        assert_eq!(verify_k_cover(&g, r.family.as_ref().unwrap(), 1), Ok(()));
        assert_eq!(min_k_with_cover(&g, 6, Caps::default()).unwrap(), Some(1));
        assert_eq!(min_cover_length(&g, Caps::default()).unwrap().length, 3);
    }

    #[test]
    fn digon_is_infeasible() {
        let g = SignedGraph::from_edges(2, [(0, 1, Pos), (0, 1, Neg)]).unwrap();
        for k in 1..4 {
            assert!(!k_cover_feasible(&g, k, Caps::default()).unwrap().feasible);
        }
        assert_eq!(min_cover_length(&g, Caps::default()), Err(Error::NotCoverable));
    }

    #[test]
    fn long_barbell() {
        let g = SignedGraph::from_edges(3, [(0, 0, Neg), (0, 1, Pos), (1, 2, Neg), (2, 2, Neg)]).unwrap();
        assert_eq!(min_k_with_cover(&g, 6, Caps::default()).unwrap(), Some(1));
        assert_eq!(min_cover_length(&g, Caps::default()).unwrap().length, 4);
    }
}

//! Exact multiplicity cover by depth-first branch and bound.
//!
//! Given edge sets ("elements") and a residual demand per edge, find a
//! multiset of elements whose coverage meets every demand exactly. Elements
//! may belong to a quota group whose total use must hit an exact count.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::EdgeId;

pub(crate) struct Problem<'a> {
    pub elements: &'a [Vec<EdgeId>],
    pub demand: Vec<usize>,
    /// Group of each element, if any.
    pub group: Vec<Option<usize>>,
    pub quota: Vec<usize>,
    pub node_cap: usize,
}

pub(crate) struct Outcome {
    pub solution: Option<Vec<usize>>,
    pub nodes: usize,
}

const MEMO_CAP: usize = 4_000_000;

struct Solver<'a> {
    elements: &'a [Vec<EdgeId>],
    by_edge: Vec<Vec<usize>>,
    group: Vec<Option<usize>>,
    res: Vec<usize>,
    quota: Vec<usize>,
    chosen: Vec<usize>,
    nodes: usize,
    node_cap: usize,
    failed: HashSet<Vec<u16>>,
}

impl Solver<'_> {
    fn usable(&self, i: usize) -> bool {
        if let Some(g) = self.group[i] {
            if self.quota[g] == 0 {
                return false;
            }
        }
        self.elements[i].iter().all(|&e| self.res[e] > 0)
    }

    fn apply(&mut self, i: usize) {
        for &e in &self.elements[i] {
            self.res[e] -= 1;
        }
        if let Some(g) = self.group[i] {
            self.quota[g] -= 1;
        }
        self.chosen.push(i);
    }

    fn undo(&mut self, i: usize) {
        for &e in &self.elements[i] {
            self.res[e] += 1;
        }
        if let Some(g) = self.group[i] {
            self.quota[g] += 1;
        }
        self.chosen.pop();
    }

    fn key(&self) -> Vec<u16> {
        self.res
            .iter()
            .chain(&self.quota)
            .map(|&v| v as u16)
            .collect()
    }

    /// Picks the open edge with the fewest usable elements; `Err(())` if
    /// some open edge has none.
    fn pick_edge(&self) -> std::result::Result<Option<EdgeId>, ()> {
        let mut best: Option<(usize, EdgeId)> = None;
        for e in 0..self.res.len() {
            if self.res[e] == 0 {
                continue;
            }
            let mut cap = 0usize;
            let mut n = 0usize;
            for &i in &self.by_edge[e] {
                if self.usable(i) {
                    n += 1;
                    let room = self.elements[i].iter().map(|&f| self.res[f]).min().unwrap();
                    let room = match self.group[i] {
                        Some(g) => room.min(self.quota[g]),
                        None => room,
                    };
                    cap += room;
                }
            }
            if n == 0 || cap < self.res[e] {
                return Err(());
            }
            if best.is_none_or(|(bn, _)| n < bn) {
                best = Some((n, e));
            }
        }
        Ok(best.map(|(_, e)| e))
    }

    fn solve(&mut self) -> Result<bool> {
        self.nodes += 1;
        if self.nodes > self.node_cap {
            return Err(Error::NodeCap(self.node_cap));
        }
        let e = match self.pick_edge() {
            Err(()) => return Ok(false),
            Ok(None) => return Ok(self.quota.iter().all(|&q| q == 0)),
            Ok(Some(e)) => e,
        };
        let key = self.key();
        if self.failed.contains(&key) {
            return Ok(false);
        }
        let cands: Vec<usize> = self.by_edge[e].iter().copied().filter(|&i| self.usable(i)).collect();
        let need = self.res[e];
        if self.distribute(&cands, 0, need)? {
            return Ok(true);
        }
        if self.failed.len() < MEMO_CAP {
            self.failed.insert(key);
        }
        Ok(false)
    }

    /// Chooses `left` more elements from `cands[start..]` with repetition.
    fn distribute(&mut self, cands: &[usize], start: usize, left: usize) -> Result<bool> {
        if left == 0 {
            return self.solve();
        }
        for k in start..cands.len() {
            let i = cands[k];
            if !self.usable(i) {
                continue;
            }
            self.apply(i);
            let ok = self.distribute(cands, k, left - 1)?;
            if ok {
                return Ok(true);
            }
            self.undo(i);
        }
        Ok(false)
    }
}

pub(crate) fn solve(p: Problem<'_>) -> Result<Outcome> {
    let m = p.demand.len();
    let mut by_edge = vec![Vec::new(); m];
    for (i, el) in p.elements.iter().enumerate() {
        for &e in el {
            by_edge[e].push(i);
        }
    }
    let mut s = Solver {
        elements: p.elements,
        by_edge,
        group: p.group,
        res: p.demand,
        quota: p.quota,
        chosen: Vec::new(),
        nodes: 0,
        node_cap: p.node_cap,
        failed: HashSet::new(),
    };
    let found = s.solve()?;
    Ok(Outcome {
        solution: found.then(|| s.chosen.clone()),
        nodes: s.nodes,
    })
}

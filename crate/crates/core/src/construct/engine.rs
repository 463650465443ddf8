//! Bottom-up composition of open cover members along a series-parallel tree.
//!
//! Every node of the tree carries a set of "profiles": how many members of
//! each open kind a 6-fold family of the piece leaves at its terminals, each
//! with one witnessing family. Children are combined by pairing open members
//! at the shared terminals; a member is closed once it is a signed circuit.

use std::collections::{BTreeMap, HashMap};

use crate::cover::{CoverFamily, CoverMember, PsiCover, Role};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};
use crate::sp::SpNode;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) enum Kind {
    PPos,
    PNeg,
    /// Tadpole at `x` avoiding `y`.
    Tx0,
    /// Tadpole at `x` whose path passes `y`; the sign is that of the
    /// stretch from `x` to `y`.
    TxPPos,
    TxPNeg,
    /// Tadpole at `x` whose circuit passes `y`.
    TxC,
    Ty0,
    TyPPos,
    TyPNeg,
    TyC,
    /// Unbalanced circuit through both terminals.
    U,
    /// Path with a negative loop at `x`.
    LxPos,
    LxNeg,
    /// Path with a negative loop at `y`.
    LyPos,
    LyNeg,
    /// Path with an unbalanced circuit hanging at an inner vertex.
    HPos,
    HNeg,
}

use Kind::*;

const NK: usize = 17;

const KINDS: [Kind; NK] = [
    PPos, PNeg, Tx0, TxPPos, TxPNeg, TxC, Ty0, TyPPos, TyPNeg, TyC, U, LxPos, LxNeg, LyPos, LyNeg, HPos, HNeg,
];

impl Kind {
    fn path(s: Sign) -> Kind {
        match s {
            Sign::Pos => PPos,
            Sign::Neg => PNeg,
        }
    }

    fn txp(s: Sign) -> Kind {
        match s {
            Sign::Pos => TxPPos,
            Sign::Neg => TxPNeg,
        }
    }

    fn typ(s: Sign) -> Kind {
        match s {
            Sign::Pos => TyPPos,
            Sign::Neg => TyPNeg,
        }
    }

    fn lx(s: Sign) -> Kind {
        match s {
            Sign::Pos => LxPos,
            Sign::Neg => LxNeg,
        }
    }

    fn ly(s: Sign) -> Kind {
        match s {
            Sign::Pos => LyPos,
            Sign::Neg => LyNeg,
        }
    }

    fn hanging(s: Sign) -> Kind {
        match s {
            Sign::Pos => HPos,
            Sign::Neg => HNeg,
        }
    }

    /// Sign of the underlying terminal-to-terminal path or stretch.
    fn sign(self) -> Sign {
        match self {
            PNeg | LxNeg | LyNeg | HNeg | TxPNeg | TyPNeg => Sign::Neg,
            _ => Sign::Pos,
        }
    }

    fn is_p(self) -> bool {
        matches!(self, PPos | PNeg)
    }

    /// Path with something unbalanced attached, closable by a path.
    fn is_decorated(self) -> bool {
        matches!(self, LxPos | LxNeg | LyPos | LyNeg | HPos | HNeg | TxPPos | TxPNeg | TyPPos | TyPNeg)
    }

    fn is_lx(self) -> bool {
        matches!(self, LxPos | LxNeg)
    }

    fn is_ly(self) -> bool {
        matches!(self, LyPos | LyNeg)
    }

    fn is_h(self) -> bool {
        matches!(self, HPos | HNeg)
    }

    /// A tadpole at `x` of any flavour.
    fn at_x(self) -> bool {
        matches!(self, Tx0 | TxPPos | TxPNeg | TxC) || self.is_ly()
    }

    fn at_y(self) -> bool {
        matches!(self, Ty0 | TyPPos | TyPNeg | TyC) || self.is_lx()
    }

    /// A tadpole at `y` that touches `x`.
    fn at_y_through_x(self) -> bool {
        self.at_y() && self != Ty0
    }

    fn mirror(self) -> Kind {
        match self {
            Tx0 => Ty0,
            TxPPos => TyPPos,
            TxPNeg => TyPNeg,
            TxC => TyC,
            Ty0 => Tx0,
            TyPPos => TxPPos,
            TyPNeg => TxPNeg,
            TyC => TxC,
            LxPos => LyPos,
            LxNeg => LyNeg,
            LyPos => LxPos,
            LyNeg => LxNeg,
            k => k,
        }
    }
}

pub(crate) type Counts = [u8; NK];

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub(crate) struct Witness {
    pub open: [Vec<Vec<EdgeId>>; NK],
    pub closed: Vec<Vec<EdgeId>>,
}

impl Witness {
    fn counts(&self) -> Counts {
        let mut c = [0u8; NK];
        for k in KINDS {
            c[k as usize] = self.open[k as usize].len() as u8;
        }
        c
    }

    fn mirrored(&self) -> Witness {
        let mut w = Witness {
            open: Default::default(),
            closed: self.closed.clone(),
        };
        for k in KINDS {
            w.open[k.mirror() as usize] = self.open[k as usize].clone();
        }
        w
    }
}

pub(crate) type Options = BTreeMap<Counts, Witness>;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
enum Out {
    Open(Kind),
    Closed,
}

/// How a fold treats each pair of open members and each member left alone.
/// `None` forbids the pair, or forbids leaving the member unpaired.
struct Rules {
    pair: fn(Kind, Kind) -> Option<Out>,
    left_alone: fn(Kind) -> Option<Out>,
    right_alone: fn(Kind) -> Option<Out>,
}

/// Left piece `(x, m)`, right piece `(m, y)`, pairing at `m`.
fn series_pair(l: Kind, r: Kind) -> Option<Out> {
    let s = l.sign() * r.sign();
    // m-ends on the left that are tadpoles at m, and on the right
    let left_tad = l.at_y() || l == U;
    let right_tad = r.at_x() || r == U;
    Some(match (l, r) {
        _ if l.is_p() && r.is_p() => Out::Open(Kind::path(s)),
        _ if l.is_p() && r.is_ly() => Out::Open(Kind::ly(s)),
        _ if l.is_p() && (r.is_lx() || r.is_h()) => Out::Open(Kind::hanging(s)),
        _ if r.is_p() && l.is_lx() => Out::Open(Kind::lx(s)),
        _ if r.is_p() && (l.is_ly() || l.is_h()) => Out::Open(Kind::hanging(s)),
        (PPos | PNeg, Tx0) => Out::Open(Tx0),
        (PPos | PNeg, TxPPos | TxPNeg) => Out::Open(Kind::txp(s)),
        (PPos | PNeg, TxC | U) => Out::Open(TxC),
        (Ty0, PPos | PNeg) => Out::Open(Ty0),
        (TyPPos | TyPNeg, PPos | PNeg) => Out::Open(Kind::typ(s)),
        (TyC | U, PPos | PNeg) => Out::Open(TyC),
        _ if left_tad && right_tad => Out::Closed,
        _ => return None,
    })
}

const SERIES: Rules = Rules {
    pair: series_pair,
    left_alone: |k| (k.at_x() || k == U).then_some(Out::Open(Tx0)),
    right_alone: |k| (k.at_y() || k == U).then_some(Out::Open(Ty0)),
};

/// Right side is a loop at `y`, given as six `U` members.
const LOOP_AT_Y: Rules = Rules {
    pair: |l, r| match (l, r) {
        (PPos | PNeg, U) => Some(Out::Open(Kind::ly(l.sign()))),
        (_, U) if l.at_y() || l == U => Some(Out::Closed),
        _ => None,
    },
    left_alone: |k| Some(Out::Open(k)),
    right_alone: |_| Some(Out::Open(Ty0)),
};

fn parallel_pair(l: Kind, r: Kind) -> Option<Out> {
    let unbalanced = l.sign() != r.sign();
    Some(match (l, r) {
        (PPos | PNeg, PPos | PNeg) if unbalanced => Out::Open(U),
        (PPos | PNeg, PPos | PNeg) => Out::Closed,
        _ if (l.is_decorated() && r.is_p()) || (l.is_p() && r.is_decorated()) => {
            if unbalanced {
                Out::Closed
            } else {
                return None;
            }
        }
        (Tx0, _) if r.at_x() => Out::Closed,
        (_, Tx0) if l.at_x() => Out::Closed,
        (Ty0, _) if r.at_y() => Out::Closed,
        (_, Ty0) if l.at_y() => Out::Closed,
        (Tx0, PPos | PNeg) => Out::Open(Kind::typ(r.sign())),
        (PPos | PNeg, Tx0) => Out::Open(Kind::typ(l.sign())),
        (Ty0, PPos | PNeg) => Out::Open(Kind::txp(r.sign())),
        (PPos | PNeg, Ty0) => Out::Open(Kind::txp(l.sign())),
        (U, Tx0 | Ty0) | (Tx0 | Ty0, U) => Out::Closed,
        _ => return None,
    })
}

const PARALLEL: Rules = Rules {
    pair: parallel_pair,
    left_alone: |k| Some(Out::Open(k)),
    right_alone: |k| Some(Out::Open(k)),
};

/// One way of pairing: `(left kind, right kind or alone, count)`.
type Plan = Vec<(Kind, Option<Kind>, u8)>;

/// All distinct outcome profiles of pairing `lc` against `rc`, each with one plan.
fn pairings(lc: &Counts, rc: &Counts, rules: &Rules, bound: &dyn Fn(&Counts) -> bool) -> Vec<(Counts, Plan)> {
    let mut states: HashMap<(Counts, Counts), Plan> = HashMap::new();
    states.insert((*rc, [0; NK]), Vec::new());
    for lk in KINDS {
        let c = lc[lk as usize];
        if c == 0 {
            continue;
        }
        let mut targets: Vec<Option<Kind>> = KINDS
            .iter()
            .filter(|&&rk| rc[rk as usize] > 0 && (rules.pair)(lk, rk).is_some())
            .map(|&rk| Some(rk))
            .collect();
        if (rules.left_alone)(lk).is_some() {
            targets.push(None);
        }
        let mut next: HashMap<(Counts, Counts), Plan> = HashMap::new();
        for ((rem, res), plan) in &states {
            distribute(lk, c, &targets, 0, *rem, *res, plan.clone(), rules, bound, &mut next);
        }
        states = next;
        if states.is_empty() {
            return Vec::new();
        }
    }
    let mut out: HashMap<Counts, Plan> = HashMap::new();
    'state: for ((rem, mut res), plan) in states {
        for rk in KINDS {
            let n = rem[rk as usize];
            if n == 0 {
                continue;
            }
            match (rules.right_alone)(rk) {
                Some(Out::Open(k)) => res[k as usize] += n,
                Some(Out::Closed) => {}
                None => continue 'state,
            }
        }
        if bound(&res) {
            out.entry(res).or_insert(plan);
        }
    }
    out.into_iter().collect()
}

#[allow(clippy::too_many_arguments)]
fn distribute(
    lk: Kind,
    left: u8,
    targets: &[Option<Kind>],
    i: usize,
    rem: Counts,
    res: Counts,
    plan: Plan,
    rules: &Rules,
    bound: &dyn Fn(&Counts) -> bool,
    out: &mut HashMap<(Counts, Counts), Plan>,
) {
    if left == 0 {
        out.entry((rem, res)).or_insert(plan);
        return;
    }
    if i == targets.len() {
        return;
    }
    let avail = match targets[i] {
        Some(rk) => rem[rk as usize].min(left),
        None => left,
    };
    // The unpaired option is last, so it must absorb everything left.
    let lo = if targets[i].is_none() { left } else { 0 };
    for n in lo..=avail {
        let mut rem2 = rem;
        let mut res2 = res;
        let mut plan2 = plan.clone();
        if n > 0 {
            let out = match targets[i] {
                Some(rk) => {
                    rem2[rk as usize] -= n;
                    (rules.pair)(lk, rk).unwrap()
                }
                None => (rules.left_alone)(lk).unwrap(),
            };
            if let Out::Open(k) = out {
                res2[k as usize] += n;
                if !bound(&res2) {
                    continue;
                }
            }
            plan2.push((lk, targets[i], n));
        }
        distribute(lk, left - n, targets, i + 1, rem2, res2, plan2, rules, bound, out);
    }
}

fn union(a: &[EdgeId], b: &[EdgeId]) -> Vec<EdgeId> {
    let mut v: Vec<EdgeId> = a.iter().chain(b).copied().collect();
    v.sort_unstable();
    v
}

fn realize(lw: &Witness, rw: &Witness, plan: &Plan, rules: &Rules) -> Witness {
    let mut l = lw.open.clone();
    let mut r = rw.open.clone();
    let mut w = Witness {
        open: Default::default(),
        closed: lw.closed.iter().chain(&rw.closed).cloned().collect(),
    };
    let place = |out: Out, ids: Vec<EdgeId>, w: &mut Witness| match out {
        Out::Open(k) => w.open[k as usize].push(ids),
        Out::Closed => w.closed.push(ids),
    };
    for &(lk, rk, n) in plan {
        for _ in 0..n {
            let a = l[lk as usize].pop().expect("plan within counts");
            match rk {
                Some(rk) => {
                    let b = r[rk as usize].pop().expect("plan within counts");
                    place((rules.pair)(lk, rk).unwrap(), union(&a, &b), &mut w);
                }
                None => place((rules.left_alone)(lk).unwrap(), a, &mut w),
            }
        }
    }
    for rk in KINDS {
        for b in std::mem::take(&mut r[rk as usize]) {
            place((rules.right_alone)(rk).unwrap(), b, &mut w);
        }
    }
    debug_assert!(l.iter().all(|v| v.is_empty()));
    w
}

/// Keeps at most `cap` profiles, preferring fewer open members.
fn combine(l: &Options, r: &Options, rules: &Rules, cap: usize) -> Options {
    combine_where(l, r, rules, cap, &|_| true, &|_| true)
}

/// `bound` must reject every profile from which pairing more members can
/// only lead to profiles `keep` rejects.
fn combine_where(
    l: &Options,
    r: &Options,
    rules: &Rules,
    cap: usize,
    keep: &dyn Fn(&Counts) -> bool,
    bound: &dyn Fn(&Counts) -> bool,
) -> Options {
    let mut cands: HashMap<Counts, (&Witness, &Witness, Plan)> = HashMap::new();
    for (lc, lw) in l {
        for (rc, rw) in r {
            for (res, plan) in pairings(lc, rc, rules, bound) {
                cands.entry(res).or_insert((lw, rw, plan));
            }
        }
    }
    let mut keys: Vec<Counts> = cands.keys().copied().filter(|c| keep(c)).collect();
    keys.sort_by_key(|c| (c.iter().map(|&v| v as u32).sum::<u32>(), *c));
    keys.truncate(cap);
    keys.into_iter()
        .map(|k| {
            let (lw, rw, plan) = &cands[&k];
            let w = realize(lw, rw, plan, rules);
            debug_assert_eq!(w.counts(), k);
            (k, w)
        })
        .collect()
}

pub(crate) fn mirror(o: &Options) -> Options {
    o.values()
        .map(|w| {
            let m = w.mirrored();
            (m.counts(), m)
        })
        .collect()
}

fn single(w: Witness) -> Options {
    let mut o = Options::new();
    o.insert(w.counts(), w);
    o
}

fn loop_options(edge: EdgeId) -> Options {
    let mut w = Witness::default();
    w.open[U as usize] = vec![vec![edge]; 6];
    single(w)
}

/// Composition tree. Loops inside a series sit at the junction reached so
/// far, or at the start terminal if no other child precedes them.
#[derive(Clone, Debug)]
pub(crate) enum CNode {
    Edge { edge: EdgeId, sign: Sign },
    Loop { edge: EdgeId },
    Series(Vec<CNode>),
    Parallel(Vec<CNode>),
    Opaque(Options),
}

impl CNode {
    pub(crate) fn from_sp(g: &SignedGraph, n: &SpNode) -> CNode {
        match n {
            SpNode::Leaf { edge, .. } => CNode::Edge {
                edge: *edge,
                sign: g.e(*edge).sign,
            },
            SpNode::LoopLeaf { edge, .. } => CNode::Loop { edge: *edge },
            SpNode::Series { children, .. } => CNode::Series(children.iter().map(|c| CNode::from_sp(g, c)).collect()),
            SpNode::Parallel { children, .. } => {
                CNode::Parallel(children.iter().map(|c| CNode::from_sp(g, c)).collect())
            }
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) struct Engine {
    pub cap: usize,
}

impl Default for Engine {
    fn default() -> Self {
        Engine { cap: 160 }
    }
}

impl Engine {
    /// Parallel join of two evaluated pieces keeping only the profiles of
    /// `goal`.
    pub(crate) fn parallel_where(&self, l: &Options, r: &Options, goal: Goal) -> Options {
        type Test = fn(&Counts) -> bool;
        let (keep, bound): (Test, Test) = match goal {
            Goal::Closed => (all_closed, all_closed),
            Goal::Psi => (psi_shaped, psi_bound),
        };
        combine_where(l, r, &PARALLEL, usize::MAX, &keep, &bound)
    }

    /// Evaluates `n`, keeping at the top parallel join only profiles with no
    /// open members.
    pub(crate) fn eval_closed(&self, n: &CNode) -> Options {
        match n {
            CNode::Parallel(children) if children.len() >= 2 => {
                let (last, rest) = children.split_last().unwrap();
                let head = if rest.len() == 1 {
                    self.eval(&rest[0])
                } else {
                    self.eval(&CNode::Parallel(rest.to_vec()))
                };
                self.parallel_where(&head, &self.eval(last), Goal::Closed)
            }
            _ => self.eval(n),
        }
    }

    pub(crate) fn eval(&self, n: &CNode) -> Options {
        match n {
            CNode::Edge { edge, sign } => {
                let mut w = Witness::default();
                w.open[Kind::path(*sign) as usize] = vec![vec![*edge]; 6];
                single(w)
            }
            CNode::Loop { edge } => {
                // A bare loop between equal terminals: six tadpoles with empty path.
                let mut w = Witness::default();
                w.open[Tx0 as usize] = vec![vec![*edge]; 6];
                single(w)
            }
            CNode::Opaque(o) => o.clone(),
            CNode::Parallel(children) => {
                let mut acc = self.eval(&children[0]);
                for c in &children[1..] {
                    if acc.is_empty() {
                        break;
                    }
                    acc = combine(&acc, &self.eval(c), &PARALLEL, self.cap);
                }
                acc
            }
            CNode::Series(children) => {
                let mut start_loops = Vec::new();
                let mut acc: Option<Options> = None;
                for c in children {
                    match (c, &acc) {
                        (CNode::Loop { edge }, None) => start_loops.push(*edge),
                        (CNode::Loop { edge }, Some(a)) => {
                            acc = Some(combine(a, &loop_options(*edge), &LOOP_AT_Y, self.cap));
                        }
                        (_, None) => acc = Some(self.eval(c)),
                        (_, Some(a)) => acc = Some(combine(a, &self.eval(c), &SERIES, self.cap)),
                    }
                }
                let mut acc = acc.unwrap_or_default();
                if !start_loops.is_empty() {
                    acc = mirror(&acc);
                    for e in start_loops {
                        acc = combine(&acc, &loop_options(e), &LOOP_AT_Y, self.cap);
                    }
                    acc = mirror(&acc);
                }
                acc
            }
        }
    }
}

/// A 6-cover from a profile with no open members, if the root has one.
pub(crate) fn closed_family(g: &SignedGraph, root: &Options) -> Result<Option<CoverFamily>> {
    let Some(w) = root.get(&[0; NK]) else {
        return Ok(None);
    };
    let mut f = CoverFamily::new();
    for ids in &w.closed {
        let m = CoverMember::signed(g, ids)
            .ok_or_else(|| Error::Construction(format!("composed member {ids:?} is not a signed circuit")))?;
        f.push(m);
    }
    Ok(Some(f))
}

/// Kind of a tadpole at the first terminal relative to the other one.
fn tadpole_kind(h: &SignedGraph, m: &CoverMember, other: VertexId) -> Kind {
    if !m.contains_vertex(h, other) {
        return Tx0;
    }
    let mut s = Sign::Pos;
    for &e in m.tadpole_path() {
        s = s * h.e(e).sign;
        if h.e(e).touches(other) {
            return Kind::txp(s);
        }
    }
    TxC
}

/// Profiles of a Ψ-cover, as an opaque leaf.
pub(crate) fn psi_options(h: &SignedGraph, covers: &[PsiCover]) -> Options {
    let mut o = Options::new();
    for p in covers {
        let mut w = Witness {
            open: Default::default(),
            closed: p.circuits.iter().map(|m| m.edge_ids.clone()).collect(),
        };
        for m in &p.pos_paths {
            w.open[PPos as usize].push(m.edge_ids.clone());
        }
        for m in &p.neg_paths {
            w.open[PNeg as usize].push(m.edge_ids.clone());
        }
        for m in &p.tadpoles_x {
            w.open[tadpole_kind(h, m, p.y) as usize].push(m.edge_ids.clone());
        }
        for m in &p.tadpoles_y {
            w.open[tadpole_kind(h, m, p.x).mirror() as usize].push(m.edge_ids.clone());
        }
        o.entry(w.counts()).or_insert(w);
    }
    o
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum Goal {
    /// No open members.
    Closed,
    /// Open members shaped like a Ψ-cover.
    Psi,
}

fn psi_bound(c: &Counts) -> bool {
    let open: usize = c.iter().map(|&v| v as usize).sum();
    c[PPos as usize] <= 3 && c[PNeg as usize] <= 3 && c[HPos as usize] == 0 && c[HNeg as usize] == 0 && open <= 9
}

/// Profiles that can yield a Ψ(t)-cover for some t.
fn psi_shaped(c: &Counts) -> bool {
    let sum = |f: fn(Kind) -> bool| KINDS.iter().filter(|&&k| f(k)).map(|&k| c[k as usize] as usize).sum::<usize>();
    let t = c[PPos as usize] as usize;
    t <= 3 && c[PNeg as usize] as usize == t && sum(Kind::is_h) == 0 && sum(Kind::at_x) + sum(Kind::at_y) + c[U as usize] as usize == 6 - t
}

fn all_closed(c: &Counts) -> bool {
    c.iter().all(|&v| v == 0)
}

/// A Ψ(t)-cover among the profiles, optionally with no tadpole at `y` through `x`.
pub(crate) fn psi_from_options(
    h: &SignedGraph,
    x: VertexId,
    y: VertexId,
    o: &Options,
    t: usize,
    y_avoids_x: bool,
) -> Result<Option<PsiCover>> {
    let t8 = t as u8;
    for (c, w) in o {
        let sum = |f: fn(Kind) -> bool| KINDS.iter().filter(|&&k| f(k)).map(|&k| c[k as usize] as usize).sum::<usize>();
        let (tx, ty) = (sum(Kind::at_x), sum(Kind::at_y));
        // circuits through both terminals serve as tadpoles at either end
        let u = c[U as usize] as usize;
        if c[PPos as usize] != t8 || c[PNeg as usize] != t8 || sum(Kind::is_h) != 0 {
            continue;
        }
        if tx > t || ty > 6 - 2 * t || tx + ty + u != 6 - t {
            continue;
        }
        let u_at_x = t - tx;
        if y_avoids_x && (sum(Kind::at_y_through_x) > 0 || u_at_x != u) {
            continue;
        }
        let mut members: Vec<(Role, Vec<EdgeId>)> = Vec::new();
        for ids in &w.closed {
            members.push((Role::SignedCircuit, ids.clone()));
        }
        for k in KINDS {
            for (i, ids) in w.open[k as usize].iter().enumerate() {
                let role = match k {
                    PPos => Role::PositivePath,
                    PNeg => Role::NegativePath,
                    U if i < u_at_x => Role::TadpoleAtX,
                    U => Role::TadpoleAtY,
                    _ if k.at_x() => Role::TadpoleAtX,
                    _ => Role::TadpoleAtY,
                };
                members.push((role, ids.clone()));
            }
        }
        return PsiCover::from_roles(h, x, y, &members).map(Some);
    }
    Ok(None)
}

/// Profiles of a piece between `x` and `y` from its own decomposition,
/// with edge ids sent through `emap`.
pub(crate) fn piece_options(h: &SignedGraph, x: VertexId, y: VertexId, emap: &[EdgeId], engine: &Engine) -> Result<Options> {
    let all: Vec<EdgeId> = (0..h.edge_count()).collect();
    let node = crate::sp::decompose(h, &all, x, y)?;
    let o = engine.eval(&CNode::from_sp(h, &node));
    let map = |sets: &[Vec<EdgeId>]| -> Vec<Vec<EdgeId>> {
        sets.iter().map(|ids| ids.iter().map(|&e| emap[e]).collect()).collect()
    };
    Ok(o.into_iter()
        .map(|(c, w)| {
            let open = std::array::from_fn(|k| map(&w.open[k]));
            (c, Witness { open, closed: map(&w.closed) })
        })
        .collect())
}

/// Roots the block at edge `root` and composes a closed 6-cover.
pub(crate) fn cover_at_edge(g: &SignedGraph, root: EdgeId, engine: &Engine) -> Result<Option<CoverFamily>> {
    let e = g.e(root);
    let all: Vec<EdgeId> = (0..g.edge_count()).collect();
    let node = crate::sp::decompose(g, &all, e.u, e.v)?;
    let tree = CNode::from_sp(g, &node);
    closed_family(g, &engine.eval_closed(&tree))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cover::verify_k_cover;
    use crate::graph::Sign::*;

    fn g(n: usize, e: &[(usize, usize, Sign)]) -> SignedGraph {
        SignedGraph::from_edges(n, e.iter().copied()).unwrap()
    }

    fn covers(h: &SignedGraph) -> bool {
        (0..h.edge_count()).filter(|&e| !h.e(e).is_loop()).any(|e| {
            match cover_at_edge(h, e, &Engine::default()).unwrap() {
                Some(f) => {
                    assert_eq!(verify_k_cover(h, &f, 6), Ok(()));
                    true
                }
                None => false,
            }
        })
    }

    #[test]
    fn pairing_rules_are_exhaustive_for_paths() {
        let mut lc = [0u8; NK];
        lc[PPos as usize] = 1;
        let mut rc = [0u8; NK];
        rc[PNeg as usize] = 1;
        let s = pairings(&lc, &rc, &SERIES, &|_| true);
        assert_eq!(s.len(), 1);
        assert_eq!(s[0].0[PNeg as usize], 1);
        let p = pairings(&lc, &rc, &PARALLEL, &|_| true);
        // pair into U, or keep both
        assert_eq!(p.len(), 2);
    }

    #[test]
    fn small_blocks() {
        // balanced triangle
        assert!(covers(&g(3, &[(0, 1, Pos), (1, 2, Neg), (2, 0, Neg)])));
        // square with two opposite unbalanced digons
        assert!(covers(&g(
            4,
            &[(0, 1, Pos), (0, 1, Neg), (1, 2, Pos), (2, 3, Pos), (2, 3, Neg), (3, 0, Pos)]
        )));
        // unbalanced digon with a loop at each end
        assert!(covers(&g(2, &[(0, 1, Pos), (0, 1, Neg), (0, 0, Neg), (1, 1, Neg)])));
    }

    #[test]
    fn psi_round_trip() {
        use crate::construct::base_psi_cover;
        use crate::instances::{gadget, GadgetId};
        let h = gadget(GadgetId::R4).graph;
        let p = base_psi_cover(GadgetId::R4, (0, 1), 2, false).unwrap().unwrap();
        let o = psi_options(&h, std::slice::from_ref(&p));
        let q = psi_from_options(&h, 0, 1, &o, 2, false).unwrap().unwrap();
        assert_eq!(crate::cover::verify_psi_cover(&h, 0, 1, &q), Ok(()));
        assert!(psi_from_options(&h, 0, 1, &o, 1, false).unwrap().is_none());
    }
}

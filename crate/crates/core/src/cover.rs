//! Cover families, structured Ψ-covers and their verifiers.

use std::collections::BTreeSet;
use std::fmt;
use std::fmt::Write as _;

use crate::circuits::{
    as_circuit, parse_path, parse_signed_circuit, parse_tadpole, Circuit, SignedCircuit, Tadpole,
};
use crate::error::{Error, Result};
use crate::graph::{EdgeId, Sign, SignedGraph, VertexId};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Role {
    SignedCircuit,
    PositivePath,
    NegativePath,
    TadpoleAtX,
    TadpoleAtY,
    /// A lone unbalanced circuit, used as an open member during composition.
    UnbalancedCircuit,
}

impl Role {
    pub const ALL: [Role; 6] = [
        Role::SignedCircuit,
        Role::PositivePath,
        Role::NegativePath,
        Role::TadpoleAtX,
        Role::TadpoleAtY,
        Role::UnbalancedCircuit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Role::SignedCircuit => "signed_circuit",
            Role::PositivePath => "positive_path",
            Role::NegativePath => "negative_path",
            Role::TadpoleAtX => "tadpole_at_x",
            Role::TadpoleAtY => "tadpole_at_y",
            Role::UnbalancedCircuit => "unbalanced_circuit",
        }
    }

    pub fn from_name(s: &str) -> Option<Role> {
        Role::ALL.into_iter().find(|r| r.name() == s)
    }
}

impl fmt::Display for Role {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum MemberParse {
    Signed(SignedCircuit),
    /// Edges in order from the first terminal to the second.
    Path(Vec<EdgeId>),
    Tadpole(Tadpole),
    Circuit(Circuit),
}

#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoverMember {
    /// Sorted edge ids.
    pub edge_ids: Vec<EdgeId>,
    pub role: Role,
    pub parse: MemberParse,
}

fn sorted(ids: &[EdgeId]) -> Vec<EdgeId> {
    let mut v = ids.to_vec();
    v.sort_unstable();
    v
}

impl CoverMember {
    pub fn signed(g: &SignedGraph, ids: &[EdgeId]) -> Option<CoverMember> {
        let sc = parse_signed_circuit(g, ids)?;
        Some(CoverMember {
            edge_ids: sorted(ids),
            role: Role::SignedCircuit,
            parse: MemberParse::Signed(sc),
        })
    }

    /// A path from `x` to `y`; the role follows its sign.
    pub fn path(g: &SignedGraph, ids: &[EdgeId], x: VertexId, y: VertexId) -> Option<CoverMember> {
        let p = parse_path(g, ids, x, y)?;
        let role = match g.sign_of_unchecked(&p) {
            Sign::Pos => Role::PositivePath,
            Sign::Neg => Role::NegativePath,
        };
        Some(CoverMember {
            edge_ids: sorted(ids),
            role,
            parse: MemberParse::Path(p),
        })
    }

    pub fn tadpole(g: &SignedGraph, ids: &[EdgeId], tail: VertexId, role: Role) -> Option<CoverMember> {
        let t = parse_tadpole(g, ids, tail)?;
        Some(CoverMember {
            edge_ids: sorted(ids),
            role,
            parse: MemberParse::Tadpole(t),
        })
    }

    pub fn unbalanced_circuit(g: &SignedGraph, ids: &[EdgeId]) -> Option<CoverMember> {
        let c = as_circuit(g, ids)?;
        if c.is_balanced() {
            return None;
        }
        Some(CoverMember {
            edge_ids: sorted(ids),
            role: Role::UnbalancedCircuit,
            parse: MemberParse::Circuit(c),
        })
    }

    /// Parses `ids` for `role` relative to the terminals.
    pub fn with_role(
        g: &SignedGraph,
        ids: &[EdgeId],
        role: Role,
        x: VertexId,
        y: VertexId,
    ) -> Option<CoverMember> {
        match role {
            Role::SignedCircuit => CoverMember::signed(g, ids),
            Role::PositivePath | Role::NegativePath => {
                CoverMember::path(g, ids, x, y).filter(|m| m.role == role)
            }
            Role::TadpoleAtX => CoverMember::tadpole(g, ids, x, role),
            Role::TadpoleAtY => CoverMember::tadpole(g, ids, y, role),
            Role::UnbalancedCircuit => CoverMember::unbalanced_circuit(g, ids),
        }
    }

    pub fn tadpole_path(&self) -> &[EdgeId] {
        match &self.parse {
            MemberParse::Tadpole(t) => &t.path_edge_ids,
            _ => &[],
        }
    }

    pub fn contains_vertex(&self, g: &SignedGraph, v: VertexId) -> bool {
        self.edge_ids.iter().any(|&e| g.e(e).touches(v))
    }
}

/// Ordered multiset of members.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct CoverFamily {
    pub members: Vec<CoverMember>,
}

impl CoverFamily {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn push(&mut self, m: CoverMember) {
        self.members.push(m);
    }

    pub fn extend(&mut self, other: CoverFamily) {
        self.members.extend(other.members);
    }

    /// Copies of every member, `times` times over.
    pub fn repeated(&self, times: usize) -> CoverFamily {
        let mut out = CoverFamily::new();
        for _ in 0..times {
            out.members.extend(self.members.iter().cloned());
        }
        out
    }

    pub fn coverage(&self, edge_count: usize) -> Vec<usize> {
        let mut c = vec![0; edge_count];
        for m in &self.members {
            for &e in &m.edge_ids {
                if e < edge_count {
                    c[e] += 1;
                }
            }
        }
        c
    }

    pub fn total_length(&self) -> usize {
        self.members.iter().map(|m| m.edge_ids.len()).sum()
    }

    pub fn with_role(&self, role: Role) -> impl Iterator<Item = &CoverMember> {
        self.members.iter().filter(move |m| m.role == role)
    }
}

impl FromIterator<CoverMember> for CoverFamily {
    fn from_iter<I: IntoIterator<Item = CoverMember>>(iter: I) -> Self {
        CoverFamily {
            members: iter.into_iter().collect(),
        }
    }
}

pub fn coverage_count(f: &CoverFamily, e: EdgeId) -> usize {
    f.members.iter().filter(|m| m.edge_ids.contains(&e)).count()
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Violation {
    BadMember { index: usize, reason: String },
    Coverage { edge: EdgeId, count: usize, expected: usize },
    Shape(String),
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::BadMember { index, reason } => write!(f, "member={index} {reason}"),
            Violation::Coverage {
                edge,
                count,
                expected,
            } => write!(f, "edge={edge} count={count} expected={expected}"),
            Violation::Shape(s) => f.write_str(s),
        }
    }
}

/// `Ok(())` or the first violation found.
pub type Verdict = std::result::Result<(), Violation>;

fn check_coverage(g: &SignedGraph, f: &CoverFamily, k: usize) -> Verdict {
    let cov = f.coverage(g.edge_count());
    match cov.iter().position(|&c| c != k) {
        Some(edge) => Err(Violation::Coverage {
            edge,
            count: cov[edge],
            expected: k,
        }),
        None => Ok(()),
    }
}

fn bad(index: usize, reason: impl Into<String>) -> Violation {
    Violation::BadMember {
        index,
        reason: reason.into(),
    }
}

/// Every member is a signed circuit of `g` and every edge is covered `k` times.
pub fn verify_k_cover(g: &SignedGraph, f: &CoverFamily, k: usize) -> Verdict {
    for (i, m) in f.members.iter().enumerate() {
        if g.check_edges(&m.edge_ids).is_err() {
            return Err(bad(i, "edge id out of range"));
        }
        if m.role != Role::SignedCircuit {
            return Err(bad(i, format!("role {} is not a signed circuit", m.role)));
        }
        if parse_signed_circuit(g, &m.edge_ids).is_none() {
            return Err(bad(i, "not a signed circuit"));
        }
    }
    check_coverage(g, f, k)
}

/// Checks each member against its role relative to terminals `(x, y)` and
/// that every edge is covered `k` times.
pub fn verify_subgraph_cover(g: &SignedGraph, f: &CoverFamily, k: usize, x: VertexId, y: VertexId) -> Verdict {
    for (i, m) in f.members.iter().enumerate() {
        if g.check_edges(&m.edge_ids).is_err() {
            return Err(bad(i, "edge id out of range"));
        }
        if CoverMember::with_role(g, &m.edge_ids, m.role, x, y).is_none() {
            return Err(bad(i, format!("does not parse as {}", m.role)));
        }
    }
    check_coverage(g, f, k)
}

/// A structured 6-cover of a two-terminal piece.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PsiCover {
    pub x: VertexId,
    pub y: VertexId,
    pub t: usize,
    pub circuits: Vec<CoverMember>,
    pub pos_paths: Vec<CoverMember>,
    pub neg_paths: Vec<CoverMember>,
    pub tadpoles_x: Vec<CoverMember>,
    pub tadpoles_y: Vec<CoverMember>,
    pub star: bool,
    /// The terminal edge named by the star conditions.
    pub xy_edge: Option<EdgeId>,
}

impl PsiCover {
    pub fn family(&self) -> CoverFamily {
        self.circuits
            .iter()
            .chain(&self.pos_paths)
            .chain(&self.neg_paths)
            .chain(&self.tadpoles_x)
            .chain(&self.tadpoles_y)
            .cloned()
            .collect()
    }

    /// Builds a Ψ-cover from role-tagged edge sets, parsing each against `h`.
    pub fn from_roles(
        h: &SignedGraph,
        x: VertexId,
        y: VertexId,
        members: &[(Role, Vec<EdgeId>)],
    ) -> Result<PsiCover> {
        let mut p = PsiCover {
            x,
            y,
            t: 0,
            circuits: Vec::new(),
            pos_paths: Vec::new(),
            neg_paths: Vec::new(),
            tadpoles_x: Vec::new(),
            tadpoles_y: Vec::new(),
            star: false,
            xy_edge: None,
        };
        for (role, ids) in members {
            let m = CoverMember::with_role(h, ids, *role, x, y).ok_or_else(|| {
                Error::Construction(format!("{ids:?} does not parse as {role}"))
            })?;
            match role {
                Role::SignedCircuit => p.circuits.push(m),
                Role::PositivePath => p.pos_paths.push(m),
                Role::NegativePath => p.neg_paths.push(m),
                Role::TadpoleAtX => p.tadpoles_x.push(m),
                Role::TadpoleAtY => p.tadpoles_y.push(m),
                Role::UnbalancedCircuit => {
                    return Err(Error::Construction("unbalanced circuit in a Ψ-cover".into()))
                }
            }
        }
        p.t = p.pos_paths.len();
        Ok(p)
    }

    /// Exchanges the roles of the terminals.
    pub fn reversed(&self, h: &SignedGraph) -> PsiCover {
        let flip_path = |m: &CoverMember| CoverMember::path(h, &m.edge_ids, self.y, self.x).unwrap();
        let retag = |m: &CoverMember, role: Role| CoverMember { role, ..m.clone() };
        PsiCover {
            x: self.y,
            y: self.x,
            t: self.t,
            circuits: self.circuits.clone(),
            pos_paths: self.pos_paths.iter().map(flip_path).collect(),
            neg_paths: self.neg_paths.iter().map(flip_path).collect(),
            tadpoles_x: self.tadpoles_y.iter().map(|m| retag(m, Role::TadpoleAtX)).collect(),
            tadpoles_y: self.tadpoles_x.iter().map(|m| retag(m, Role::TadpoleAtY)).collect(),
            star: self.star,
            xy_edge: self.xy_edge,
        }
    }

    /// No tadpole at `x` touches `y`.
    pub fn x_tadpoles_avoid_y(&self, h: &SignedGraph) -> bool {
        self.tadpoles_x.iter().all(|m| !m.contains_vertex(h, self.y))
    }

    /// No tadpole at `y` touches `x`.
    pub fn y_tadpoles_avoid_x(&self, h: &SignedGraph) -> bool {
        self.tadpoles_y.iter().all(|m| !m.contains_vertex(h, self.x))
    }

    /// Edges of all members, as a multiset keyed by edge set.
    pub fn member_edge_sets(&self) -> Vec<Vec<EdgeId>> {
        self.family().members.into_iter().map(|m| m.edge_ids).collect()
    }
}

fn star_side_ok(h: &SignedGraph, tadpoles: &[CoverMember], other: VertexId, xy: EdgeId) -> bool {
    if tadpoles.len() != 2 {
        return false;
    }
    let avoids = |m: &CoverMember| !m.contains_vertex(h, other);
    let through = |m: &CoverMember| m.tadpole_path().contains(&xy);
    (avoids(&tadpoles[0]) && through(&tadpoles[1])) || (avoids(&tadpoles[1]) && through(&tadpoles[0]))
}

pub fn verify_psi_cover(h: &SignedGraph, x: VertexId, y: VertexId, p: &PsiCover) -> Verdict {
    let shape = |s: String| Err(Violation::Shape(s));
    if p.x != x || p.y != y {
        return shape(format!("terminals ({}, {}) != ({x}, {y})", p.x, p.y));
    }
    if x == y {
        return shape("terminals coincide".into());
    }
    let t = p.t;
    if t > 3 {
        return shape(format!("t={t} out of range"));
    }
    let counts = [
        ("positive paths", p.pos_paths.len(), t),
        ("negative paths", p.neg_paths.len(), t),
        ("tadpoles at x", p.tadpoles_x.len(), t),
        ("tadpoles at y", p.tadpoles_y.len(), 6 - 2 * t),
    ];
    for (what, have, want) in counts {
        if have != want {
            return shape(format!("{what}: {have} != {want}"));
        }
    }
    let groups: [(&[CoverMember], Role); 5] = [
        (&p.circuits, Role::SignedCircuit),
        (&p.pos_paths, Role::PositivePath),
        (&p.neg_paths, Role::NegativePath),
        (&p.tadpoles_x, Role::TadpoleAtX),
        (&p.tadpoles_y, Role::TadpoleAtY),
    ];
    let mut index = 0;
    for (members, role) in groups {
        for m in members {
            if h.check_edges(&m.edge_ids).is_err() {
                return Err(bad(index, "edge id out of range"));
            }
            if CoverMember::with_role(h, &m.edge_ids, role, x, y).is_none() {
                return Err(bad(index, format!("does not parse as {role}")));
            }
            index += 1;
        }
    }
    check_coverage(h, &p.family(), 6)?;
    if p.star {
        if t != 2 {
            return shape("star cover needs t=2".into());
        }
        let Some(xy) = p.xy_edge else {
            return shape("star cover without a terminal edge".into());
        };
        match h.edge(xy) {
            Ok(e) if !e.is_loop() && e.touches(x) && e.touches(y) => {}
            _ => return shape(format!("edge {xy} does not join the terminals")),
        }
        if !star_side_ok(h, &p.tadpoles_x, y, xy) {
            return shape("tadpoles at x violate the star condition".into());
        }
        if !star_side_ok(h, &p.tadpoles_y, x, xy) {
            return shape("tadpoles at y violate the star condition".into());
        }
    }
    Ok(())
}

pub fn symdiff(a: &[EdgeId], b: &[EdgeId]) -> Vec<EdgeId> {
    let a: BTreeSet<EdgeId> = a.iter().copied().collect();
    let b: BTreeSet<EdgeId> = b.iter().copied().collect();
    a.symmetric_difference(&b).copied().collect()
}

/// Member indices grouped by which pattern their trace equals.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct TraceGroups {
    pub groups: Vec<Vec<usize>>,
    pub untouched: Vec<usize>,
}

impl TraceGroups {
    pub fn sizes(&self) -> Vec<usize> {
        self.groups.iter().map(|g| g.len()).collect()
    }
}

pub fn partition_by_trace(f: &CoverFamily, patterns: &[Vec<EdgeId>]) -> Result<TraceGroups> {
    let pats: Vec<BTreeSet<EdgeId>> = patterns.iter().map(|p| p.iter().copied().collect()).collect();
    let universe: BTreeSet<EdgeId> = pats.iter().flatten().copied().collect();
    let mut out = TraceGroups {
        groups: vec![Vec::new(); patterns.len()],
        untouched: Vec::new(),
    };
    for (i, m) in f.members.iter().enumerate() {
        let trace: BTreeSet<EdgeId> = m.edge_ids.iter().copied().filter(|e| universe.contains(e)).collect();
        if trace.is_empty() {
            out.untouched.push(i);
            continue;
        }
        match pats.iter().position(|p| *p == trace) {
            Some(j) => out.groups[j].push(i),
            None => return Err(Error::Unclassifiable(trace.into_iter().collect())),
        }
    }
    Ok(out)
}

pub fn write_cover(f: &CoverFamily, k: usize) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "cover k={k} members={}", f.len());
    for m in &f.members {
        let ids: Vec<String> = m.edge_ids.iter().map(|e| e.to_string()).collect();
        let _ = writeln!(s, "{} : {}", m.role, ids.join(" "));
    }
    s
}

/// Parsed cover text: the header's `k` and the raw role-tagged edge sets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoverText {
    pub k: usize,
    pub members: Vec<(Role, Vec<EdgeId>)>,
}

pub fn parse_cover(text: &str) -> Result<CoverText> {
    let err = |line: usize, m: String| Error::Parse { line, message: m };
    let mut header: Option<(usize, usize)> = None;
    let mut members = Vec::new();
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("").trim();
        if content.is_empty() {
            continue;
        }
        if header.is_none() {
            let mut toks = content.split_whitespace();
            if toks.next() != Some("cover") {
                return Err(err(line, "expected `cover k=<k> members=<m>` header".into()));
            }
            let mut k = None;
            let mut m = None;
            for tok in toks {
                let (key, val) = tok
                    .split_once('=')
                    .ok_or_else(|| err(line, format!("bad header token `{tok}`")))?;
                let val: usize = val
                    .parse()
                    .map_err(|_| err(line, format!("bad number `{val}`")))?;
                match key {
                    "k" => k = Some(val),
                    "members" => m = Some(val),
                    _ => return Err(err(line, format!("unknown header key `{key}`"))),
                }
            }
            header = Some((
                k.ok_or_else(|| err(line, "missing k".into()))?,
                m.ok_or_else(|| err(line, "missing members".into()))?,
            ));
            continue;
        }
        let (role, ids) = content
            .split_once(':')
            .ok_or_else(|| err(line, "expected `<role> : <edge ids>`".into()))?;
        let role = Role::from_name(role.trim())
            .ok_or_else(|| err(line, format!("unknown role `{}`", role.trim())))?;
        let ids = ids
            .split_whitespace()
            .map(|t| t.parse().map_err(|_| err(line, format!("bad edge id `{t}`"))))
            .collect::<Result<Vec<EdgeId>>>()?;
        members.push((role, ids));
    }
    let (k, m) = header.ok_or_else(|| err(1, "missing cover header".into()))?;
    if m != members.len() {
        return Err(err(
            text.lines().count(),
            format!("header says {m} members, found {}", members.len()),
        ));
    }
    Ok(CoverText { k, members })
}

impl CoverText {
    /// Parses every member as a signed circuit of `g`.
    pub fn into_family(self, g: &SignedGraph) -> Result<CoverFamily> {
        let mut f = CoverFamily::new();
        for (i, (role, ids)) in self.members.into_iter().enumerate() {
            g.check_edges(&ids)?;
            if role != Role::SignedCircuit {
                return Err(Error::Construction(format!("member {i} has role {role}")));
            }
            let m = CoverMember::signed(g, &ids).ok_or_else(|| {
                Error::Construction(format!("member {i} is not a signed circuit"))
            })?;
            f.push(m);
        }
        Ok(f)
    }
}

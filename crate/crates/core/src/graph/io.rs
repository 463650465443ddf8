//! Line-oriented text format for signed graphs.
//!
//! ```text
//! # comment
//! v 3
//! e 0 1 +
//! e 1 2 -
//! t 0 2
//! ```

use std::fmt::Write as _;

use super::{Sign, SignedGraph, VertexId};
use crate::error::{Error, Result};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GraphFile {
    pub graph: SignedGraph,
    pub terminals: Option<(VertexId, VertexId)>,
}

fn parse_err(line: usize, message: impl Into<String>) -> Error {
    Error::Parse {
        line,
        message: message.into(),
    }
}

fn parse_usize(tok: Option<&str>, line: usize, what: &str) -> Result<usize> {
    let tok = tok.ok_or_else(|| parse_err(line, format!("missing {what}")))?;
    tok.parse()
        .map_err(|_| parse_err(line, format!("bad {what} `{tok}`")))
}

pub fn parse(text: &str) -> Result<GraphFile> {
    let mut graph: Option<SignedGraph> = None;
    let mut terminals = None;
    for (idx, raw) in text.lines().enumerate() {
        let line = idx + 1;
        let content = raw.split('#').next().unwrap_or("");
        let mut toks = content.split_whitespace();
        let Some(kind) = toks.next() else { continue };
        match (kind, graph.as_mut()) {
            ("v", None) => {
                let n = parse_usize(toks.next(), line, "vertex count")?;
                graph = Some(SignedGraph::new(n));
            }
            ("v", Some(_)) => return Err(parse_err(line, "duplicate `v` record")),
            (_, None) => return Err(parse_err(line, "expected `v <n>` first")),
            ("e", Some(g)) => {
                let u = parse_usize(toks.next(), line, "endpoint")?;
                let v = parse_usize(toks.next(), line, "endpoint")?;
                let sign = match toks.next() {
                    Some("+") | Some("+1") => Sign::Pos,
                    Some("-") | Some("-1") => Sign::Neg,
                    Some(t) => return Err(parse_err(line, format!("bad sign `{t}`"))),
                    None => return Err(parse_err(line, "missing sign")),
                };
                g.add_edge(u, v, sign)
                    .map_err(|e| parse_err(line, e.to_string()))?;
            }
            ("t", Some(g)) => {
                let x = parse_usize(toks.next(), line, "terminal")?;
                let y = parse_usize(toks.next(), line, "terminal")?;
                for w in [x, y] {
                    g.check_vertex(w)
                        .map_err(|e| parse_err(line, e.to_string()))?;
                }
                terminals = Some((x, y));
            }
            (k, Some(_)) => return Err(parse_err(line, format!("unknown record `{k}`"))),
        }
        if let Some(extra) = toks.next() {
            return Err(parse_err(line, format!("unexpected token `{extra}`")));
        }
    }
    let graph = graph.ok_or_else(|| parse_err(text.lines().count().max(1), "missing `v` record"))?;
    Ok(GraphFile { graph, terminals })
}

pub fn write(g: &SignedGraph, terminals: Option<(VertexId, VertexId)>) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "v {}", g.vertex_count());
    for e in g.edges() {
        let _ = writeln!(s, "e {} {} {}", e.u, e.v, e.sign);
    }
    if let Some((x, y)) = terminals {
        let _ = writeln!(s, "t {x} {y}");
    }
    s
}

impl std::str::FromStr for SignedGraph {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        parse(s).map(|f| f.graph)
    }
}

impl std::fmt::Display for SignedGraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&write(self, None))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn round_trip() {
        let text = "# digon\nv 2\ne 0 1 +\ne 0 1 -\nt 0 1\n";
        let f = parse(text).unwrap();
        assert_eq!(f.graph.edge_count(), 2);
        assert_eq!(f.terminals, Some((0, 1)));
        assert_eq!(write(&f.graph, f.terminals), "v 2\ne 0 1 +\ne 0 1 -\nt 0 1\n");
    }

    #[test]
    fn errors_carry_line_numbers() {
        let err = parse("v 2\ne 0 1 +\ne 0 5 -\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 3, .. }));
        let err = parse("e 0 1 +\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 1, .. }));
        let err = parse("v 2\ne 0 1 *\n").unwrap_err();
        assert!(matches!(err, Error::Parse { line: 2, .. }));
    }
}

//! Named small signed graphs and a seeded generator of series-parallel ones.

use std::fmt;
use std::str::FromStr;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::coverability::is_coverable;
use crate::error::{Error, Result};
use crate::graph::{Sign, SignedGraph, VertexId};
use crate::par;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum GadgetId {
    R0,
    R1,
    R2,
    R3,
    R4,
    R5,
    D1,
    D2,
    Fig1Chain,
    Tightness,
}

impl GadgetId {
    pub const ALL: [GadgetId; 10] = [
        GadgetId::R0,
        GadgetId::R1,
        GadgetId::R2,
        GadgetId::R3,
        GadgetId::R4,
        GadgetId::R5,
        GadgetId::D1,
        GadgetId::D2,
        GadgetId::Fig1Chain,
        GadgetId::Tightness,
    ];

    pub const SMALL: [GadgetId; 6] = [
        GadgetId::R0,
        GadgetId::R1,
        GadgetId::R2,
        GadgetId::R3,
        GadgetId::R4,
        GadgetId::R5,
    ];

    pub fn name(self) -> &'static str {
        match self {
            GadgetId::R0 => "R0",
            GadgetId::R1 => "R1",
            GadgetId::R2 => "R2",
            GadgetId::R3 => "R3",
            GadgetId::R4 => "R4",
            GadgetId::R5 => "R5",
            GadgetId::D1 => "D1",
            GadgetId::D2 => "D2",
            GadgetId::Fig1Chain => "FIG1_CHAIN",
            GadgetId::Tightness => "TIGHTNESS",
        }
    }
}

impl fmt::Display for GadgetId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for GadgetId {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        GadgetId::ALL
            .into_iter()
            .find(|g| g.name().eq_ignore_ascii_case(s))
            .ok_or_else(|| Error::UnknownGadget(s.to_string()))
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Gadget {
    pub graph: SignedGraph,
    pub terminals: Option<(VertexId, VertexId)>,
}

use Sign::{Neg as N, Pos as P};

fn build(n: usize, edges: &[(usize, usize, Sign)], terminals: Option<(VertexId, VertexId)>) -> Gadget {
    Gadget {
        graph: SignedGraph::from_edges(n, edges.iter().copied()).expect("valid gadget"),
        terminals,
    }
}

/// Frozen transcriptions. Terminals are `x = 0` and `y = 1` for the R
/// family; the remaining vertices are listed in the comments.
pub fn gadget(id: GadgetId) -> Gadget {
    match id {
        GadgetId::R0 => build(2, &[(0, 1, P), (0, 1, N)], Some((0, 1))),
        // apex 2 carries the loop
        GadgetId::R1 => build(3, &[(0, 1, P), (1, 2, P), (2, 0, P), (2, 2, N)], Some((0, 1))),
        // w = 2
        GadgetId::R2 => build(3, &[(2, 0, P), (0, 1, P), (1, 2, P), (2, 1, N)], Some((0, 1))),
        // b = 2 above x, a = 3 above y
        GadgetId::R3 => build(
            4,
            &[(2, 0, P), (0, 1, P), (2, 3, P), (1, 3, P), (2, 3, N)],
            Some((0, 1)),
        ),
        GadgetId::R4 => build(
            4,
            &[(2, 0, P), (0, 1, P), (0, 3, P), (2, 3, P), (1, 3, P), (2, 3, N)],
            Some((0, 1)),
        ),
        // a = 2, c = 3, d = 4
        GadgetId::R5 => build(
            5,
            &[
                (3, 0, P),
                (0, 1, P),
                (0, 2, P),
                (4, 2, P),
                (3, 4, P),
                (1, 2, P),
                (3, 4, N),
            ],
            Some((0, 1)),
        ),
        // x = 0, middle 1, y = 2
        GadgetId::D1 => build(3, &[(0, 1, P), (1, 2, P), (0, 1, N)], Some((0, 2))),
        // x = 0, 1, 2, y = 3
        GadgetId::D2 => build(4, &[(0, 1, P), (1, 2, P), (2, 3, P), (1, 2, N)], Some((0, 3))),
        GadgetId::Fig1Chain => build(
            6,
            &[
                (0, 1, N),
                (1, 1, N),
                (1, 2, P),
                (2, 3, P),
                (2, 3, N),
                (3, 4, N),
                (4, 4, N),
                (4, 5, P),
                (4, 5, N),
            ],
            Some((0, 5)),
        ),
        // balanced digon {0,1}, unbalanced digons {2,3} and {4,5}
        GadgetId::Tightness => build(
            6,
            &[
                (0, 1, P),
                (0, 1, P),
                (2, 3, P),
                (2, 3, N),
                (4, 5, P),
                (4, 5, N),
                (1, 2, P),
                (3, 4, P),
                (5, 0, P),
            ],
            None,
        ),
    }
}

/// Knobs for [`random_sp_signed`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct GenParams {
    /// Most children under one series or parallel node.
    pub max_parts: usize,
    pub max_depth: usize,
    /// Chance of a negative loop at each series junction.
    pub loop_prob: f64,
    pub neg_prob: f64,
    /// Most extra blocks glued on at existing vertices.
    pub extra_blocks: usize,
}

impl Default for GenParams {
    fn default() -> Self {
        GenParams {
            max_parts: 3,
            max_depth: 3,
            loop_prob: 0.15,
            neg_prob: 0.35,
            extra_blocks: 1,
        }
    }
}

struct Gen<'a> {
    rng: &'a mut ChaCha8Rng,
    p: GenParams,
    g: SignedGraph,
}

impl Gen<'_> {
    fn sign(&mut self) -> Sign {
        if self.rng.gen_bool(self.p.neg_prob.clamp(0.0, 1.0)) {
            Sign::Neg
        } else {
            Sign::Pos
        }
    }

    fn edge(&mut self, s: VertexId, t: VertexId) {
        let sign = self.sign();
        self.g.add_edge(s, t, sign).unwrap();
    }

    fn node(&mut self, s: VertexId, t: VertexId, depth: usize) {
        let kind = if depth >= self.p.max_depth || self.p.max_parts < 2 {
            0
        } else {
            self.rng.gen_range(0..3)
        };
        let parts = if self.p.max_parts >= 2 {
            self.rng.gen_range(2..=self.p.max_parts)
        } else {
            1
        };
        match kind {
            1 => {
                let mut prev = s;
                for i in 0..parts {
                    let next = if i + 1 == parts { t } else { self.g.add_vertex() };
                    self.node(prev, next, depth + 1);
                    if i + 1 < parts && self.rng.gen_bool(self.p.loop_prob.clamp(0.0, 1.0)) {
                        self.g.add_edge(next, next, Sign::Neg).unwrap();
                    }
                    prev = next;
                }
            }
            2 => {
                for _ in 0..parts {
                    self.node(s, t, depth + 1);
                }
            }
            _ => self.edge(s, t),
        }
    }
}

/// A connected K4-minor-free signed multigraph drawn from a random
/// series-parallel tree; the same seed gives the same graph.
pub fn random_sp_signed(params: GenParams, seed: u64) -> SignedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    random_sp_from(params, &mut rng)
}

fn random_sp_from(params: GenParams, rng: &mut ChaCha8Rng) -> SignedGraph {
    let mut gen = Gen {
        rng,
        p: params,
        g: SignedGraph::new(2),
    };
    // Start from a parallel node so the base block has a cycle.
    let d = params.max_depth.min(1);
    gen.node(0, 1, d);
    let blocks = if params.extra_blocks > 0 {
        gen.rng.gen_range(0..=params.extra_blocks)
    } else {
        0
    };
    for _ in 0..blocks {
        let at = gen.rng.gen_range(0..gen.g.vertex_count());
        let far = gen.g.add_vertex();
        gen.node(at, far, 1);
    }
    gen.g
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct CorpusBounds {
    pub max_vertices: usize,
    pub max_edges: usize,
    /// Smooth every degree-two vertex before filtering.
    pub no_deg2: bool,
}

impl Default for CorpusBounds {
    fn default() -> Self {
        CorpusBounds {
            max_vertices: 12,
            max_edges: 20,
            no_deg2: false,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Corpus {
    pub graphs: Vec<SignedGraph>,
    /// Index of the draw each graph came from.
    pub draw_index: Vec<u64>,
    pub draws: usize,
    pub rejected: usize,
}

/// The `i`-th draw of the stream keyed by `seed`.
pub fn draw(params: GenParams, bounds: CorpusBounds, seed: u64, i: u64) -> SignedGraph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(i);
    let g = random_sp_from(params, &mut rng);
    if bounds.no_deg2 {
        g.suppress().graph
    } else {
        g
    }
}

fn accept(g: &SignedGraph, bounds: CorpusBounds) -> bool {
    g.vertex_count() <= bounds.max_vertices
        && g.edge_count() <= bounds.max_edges
        && g.edge_count() > 0
        && matches!(is_coverable(g), Ok(c) if c.coverable)
}

/// First `n` coverable draws within the bounds.
pub fn coverable_corpus(n: usize, params: GenParams, bounds: CorpusBounds, seed: u64) -> Result<Corpus> {
    let draw_cap = 1000 + 200 * n;
    let batch = 64;
    let mut out = Corpus {
        graphs: Vec::new(),
        draw_index: Vec::new(),
        draws: 0,
        rejected: 0,
    };
    let mut next = 0u64;
    while out.graphs.len() < n {
        if next as usize >= draw_cap {
            return Err(Error::CorpusExhausted {
                wanted: n,
                draws: draw_cap,
            });
        }
        let results = par::map_range(batch, |k| {
            let i = next + k as u64;
            let g = draw(params, bounds, seed, i);
            let ok = accept(&g, bounds);
            (i, g, ok)
        });
        for (i, g, ok) in results {
            if out.graphs.len() == n {
                break;
            }
            out.draws += 1;
            if ok {
                out.graphs.push(g);
                out.draw_index.push(i);
            } else {
                out.rejected += 1;
            }
        }
        next += batch as u64;
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::sp::is_k4_minor_free;

    #[test]
    fn names_round_trip() {
        for id in GadgetId::ALL {
            assert_eq!(id.name().parse::<GadgetId>().unwrap(), id);
        }
        assert!(matches!("R9".parse::<GadgetId>(), Err(Error::UnknownGadget(_))));
    }

    #[test]
    fn small_gadgets_have_negativeness_one() {
        for id in GadgetId::SMALL {
            let g = gadget(id).graph;
            assert_eq!(g.negativeness().unwrap(), 1, "{id}");
            assert!(!g.is_balanced());
            assert!(is_k4_minor_free(&g));
        }
    }

    #[test]
    fn r0_and_d1_shapes() {
        let r0 = gadget(GadgetId::R0).graph;
        assert_eq!(r0.vertex_count(), 2);
        assert_eq!(r0.negative_edges().count(), 1);
        let d1 = gadget(GadgetId::D1).graph;
        assert_eq!(d1.edge_count(), 3);
    }

    #[test]
    fn generator_is_deterministic() {
        let p = GenParams::default();
        assert_eq!(random_sp_signed(p, 7), random_sp_signed(p, 7));
        for s in 0..50 {
            let g = random_sp_signed(p, s);
            assert!(is_k4_minor_free(&g));
            assert!(g.is_connected());
        }
    }

    #[test]
    fn no_loops_without_loop_prob() {
        let p = GenParams {
            loop_prob: 0.0,
            ..GenParams::default()
        };
        for s in 0..50 {
            assert_eq!(random_sp_signed(p, s).loops().count(), 0);
        }
    }

    #[test]
    fn corpus_basics() {
        let p = GenParams::default();
        let b = CorpusBounds::default();
        assert!(coverable_corpus(0, p, b, 1).unwrap().graphs.is_empty());
        let c = coverable_corpus(10, p, b, 1).unwrap();
        assert_eq!(c.graphs.len(), 10);
        assert_eq!(c, coverable_corpus(10, p, b, 1).unwrap());
        for g in &c.graphs {
            assert!(is_coverable(g).unwrap().coverable);
        }
    }
}

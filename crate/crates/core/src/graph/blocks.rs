use std::collections::BTreeSet;

use super::{EdgeId, SignedGraph, VertexId};

/// Biconnected components of the underlying multigraph.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct BlockStructure {
    /// Each block as a sorted edge-id list; blocks sorted by smallest edge id.
    pub blocks: Vec<Vec<EdgeId>>,
    /// Vertices lying in at least two blocks.
    pub cut_vertices: BTreeSet<VertexId>,
}

impl BlockStructure {
    /// Index of the block containing each edge.
    pub fn block_of_edge(&self, edge_count: usize) -> Vec<usize> {
        let mut out = vec![usize::MAX; edge_count];
        for (i, b) in self.blocks.iter().enumerate() {
            for &e in b {
                out[e] = i;
            }
        }
        out
    }
}

struct Tarjan {
    adj: Vec<Vec<(EdgeId, VertexId)>>,
    disc: Vec<usize>,
    low: Vec<usize>,
    time: usize,
    stack: Vec<EdgeId>,
    blocks: Vec<Vec<EdgeId>>,
}

impl Tarjan {
    fn visit(&mut self, v: VertexId, parent: Option<EdgeId>) {
        self.time += 1;
        self.disc[v] = self.time;
        self.low[v] = self.time;
        for i in 0..self.adj[v].len() {
            let (e, w) = self.adj[v][i];
            if Some(e) == parent {
                continue;
            }
            if self.disc[w] == 0 {
                self.stack.push(e);
                self.visit(w, Some(e));
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= self.disc[v] {
                    let mut block = Vec::new();
                    while let Some(f) = self.stack.pop() {
                        block.push(f);
                        if f == e {
                            break;
                        }
                    }
                    self.blocks.push(block);
                }
            } else if self.disc[w] < self.disc[v] {
                self.stack.push(e);
                self.low[v] = self.low[v].min(self.disc[w]);
            }
        }
    }
}

fn non_loop_blocks(g: &SignedGraph) -> Vec<Vec<EdgeId>> {
    let mut adj = vec![Vec::new(); g.vertex_count()];
    for (id, e) in g.edges().iter().enumerate() {
        if !e.is_loop() {
            adj[e.u].push((id, e.v));
            adj[e.v].push((id, e.u));
        }
    }
    let mut t = Tarjan {
        adj,
        disc: vec![0; g.vertex_count()],
        low: vec![0; g.vertex_count()],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..g.vertex_count() {
        if t.disc[v] == 0 {
            t.visit(v, None);
        }
    }
    t.blocks
}

fn cut_vertices_of(g: &SignedGraph, blocks: &[Vec<EdgeId>]) -> BTreeSet<VertexId> {
    let mut count = vec![0usize; g.vertex_count()];
    for b in blocks {
        for v in g.vertices_of(b) {
            count[v] += 1;
        }
    }
    (0..g.vertex_count()).filter(|&v| count[v] >= 2).collect()
}

pub(super) fn blocks_and_cuts(g: &SignedGraph) -> BlockStructure {
    let mut blocks = non_loop_blocks(g);
    for l in g.loops() {
        blocks.push(vec![l]);
    }
    for b in &mut blocks {
        b.sort_unstable();
    }
    blocks.sort();
    let cut_vertices = cut_vertices_of(g, &blocks);
    BlockStructure {
        blocks,
        cut_vertices,
    }
}

/// Cut vertices of the underlying graph with loops removed.
pub(crate) fn loopless_cut_vertices(g: &SignedGraph) -> BTreeSet<VertexId> {
    let blocks = non_loop_blocks(g);
    cut_vertices_of(g, &blocks)
}

#[cfg(test)]
mod tests {
    use crate::graph::{Sign::*, SignedGraph};

    #[test]
    fn triangle_is_one_block() {
        let g = SignedGraph::from_edges(3, [(0, 1, Pos), (1, 2, Pos), (2, 0, Pos)]).unwrap();
        let b = g.blocks_and_cuts();
        assert_eq!(b.blocks, vec![vec![0, 1, 2]]);
        assert!(b.cut_vertices.is_empty());
    }

    #[test]
    fn bowtie_has_one_cut() {
        let g = SignedGraph::from_edges(
            5,
            [
                (0, 1, Pos),
                (1, 2, Pos),
                (2, 0, Pos),
                (2, 3, Pos),
                (3, 4, Pos),
                (4, 2, Pos),
            ],
        )
        .unwrap();
        let b = g.blocks_and_cuts();
        assert_eq!(b.blocks.len(), 2);
        assert_eq!(b.cut_vertices.into_iter().collect::<Vec<_>>(), vec![2]);
    }

    #[test]
    fn long_barbell_blocks() {
        let g = SignedGraph::from_edges(2, [(0, 0, Neg), (0, 1, Pos), (1, 1, Neg)]).unwrap();
        let b = g.blocks_and_cuts();
        assert_eq!(b.blocks, vec![vec![0], vec![1], vec![2]]);
        assert_eq!(b.cut_vertices.into_iter().collect::<Vec<_>>(), vec![0, 1]);
        assert_eq!(g.bridges(), vec![1]);
    }

    #[test]
    fn parallel_edges_form_one_block() {
        let g = SignedGraph::from_edges(3, [(0, 1, Pos), (0, 1, Neg), (1, 2, Pos)]).unwrap();
        let b = g.blocks_and_cuts();
        assert_eq!(b.blocks, vec![vec![0, 1], vec![2]]);
        assert_eq!(g.bridges(), vec![2]);
    }
}

//! Block decomposition (biconnected components) and the cyclomatic
//! number.

use crate::error::{Error, Result};
use crate::graph::Graph;

/// One block: a maximal 2-connected subgraph or a single bridge edge.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// Sorted edge set of the block. Every edge of the graph lies in
    /// exactly one block.
    pub edges: Vec<(usize, usize)>,
    /// Sorted vertex set of the block.
    pub vertices: Vec<usize>,
    /// At least three vertices.
    pub non_trivial: bool,
    /// The block induces a cycle (m = n within the block).
    pub is_cycle: bool,
    /// Contains exactly one cut vertex of the whole graph.
    pub is_end_block: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// Blocks ordered by their smallest contained edge.
    pub blocks: Vec<Block>,
    /// Sorted cut vertices of the graph.
    pub cut_vertices: Vec<usize>,
}

impl BlockDecomposition {
    pub fn block_of_edge(&self, e: (usize, usize)) -> Option<usize> {
        let key = (e.0.min(e.1), e.0.max(e.1));
        self.blocks
            .iter()
            .position(|b| b.edges.binary_search(&key).is_ok())
    }

    /// Indices of blocks containing vertex `v`.
    pub fn blocks_of_vertex(&self, v: usize) -> Vec<usize> {
        self.blocks
            .iter()
            .enumerate()
            .filter(|(_, b)| b.vertices.binary_search(&v).is_ok())
            .map(|(i, _)| i)
            .collect()
    }
}

/// `c(G) = |E| - |V| + 1` for connected graphs.
pub fn cyclomatic_number(g: &Graph) -> Result<usize> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "cyclomatic_number",
        });
    }
    Ok(g.m() + 1 - g.n())
}

struct BlockDfs<'a> {
    g: &'a Graph,
    depth: Vec<usize>,
    low: Vec<usize>,
    visited: Vec<bool>,
    edge_stack: Vec<(usize, usize)>,
    raw_blocks: Vec<Vec<(usize, usize)>>,
    is_cut: Vec<bool>,
}

impl<'a> BlockDfs<'a> {
    fn run(g: &'a Graph) -> Self {
        let n = g.n();
        let mut s = BlockDfs {
            g,
            depth: vec![0; n],
            low: vec![0; n],
            visited: vec![false; n],
            edge_stack: Vec::new(),
            raw_blocks: Vec::new(),
            is_cut: vec![false; n],
        };
        s.dfs(0, usize::MAX, 0);
        s
    }

    fn dfs(&mut self, v: usize, parent: usize, depth: usize) {
        self.visited[v] = true;
        self.depth[v] = depth;
        self.low[v] = depth;
        let mut children = 0usize;
        for &w in self.g.neighbors(v) {
            if !self.visited[w] {
                children += 1;
                self.edge_stack.push((v, w));
                self.dfs(w, v, depth + 1);
                self.low[v] = self.low[v].min(self.low[w]);
                if self.low[w] >= depth {
                    // v separates the subtree at w: pop one block
                    let mut block = Vec::new();
                    while let Some(&top) = self.edge_stack.last() {
                        block.push(self.edge_stack.pop().unwrap());
                        if top == (v, w) {
                            break;
                        }
                    }
                    self.raw_blocks.push(block);
                    if parent != usize::MAX {
                        self.is_cut[v] = true;
                    }
                }
            } else if w != parent && self.depth[w] < self.depth[v] {
                self.edge_stack.push((v, w));
                self.low[v] = self.low[v].min(self.depth[w]);
            }
        }
        if parent == usize::MAX && children >= 2 {
            self.is_cut[v] = true;
        }
    }
}

/// Edge-partition into biconnected components, with cut vertices and
/// per-block flags. Blocks come back sorted by their smallest edge so
/// downstream witnesses are reproducible.
pub fn block_decomposition(g: &Graph) -> Result<BlockDecomposition> {
    if !g.is_connected() {
        return Err(Error::Disconnected {
            op: "block_decomposition",
        });
    }
    let dfs = BlockDfs::run(g);
    let cut_vertices: Vec<usize> = (0..g.n()).filter(|&v| dfs.is_cut[v]).collect();
    let mut blocks: Vec<Block> = dfs
        .raw_blocks
        .into_iter()
        .map(|raw| {
            let mut edges: Vec<(usize, usize)> =
                raw.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
            edges.sort_unstable();
            edges.dedup();
            let mut vertices: Vec<usize> =
                edges.iter().flat_map(|&(a, b)| [a, b]).collect();
            vertices.sort_unstable();
            vertices.dedup();
            let non_trivial = vertices.len() >= 3;
            let is_cycle = non_trivial && edges.len() == vertices.len();
            let cuts_inside = vertices
                .iter()
                .filter(|v| dfs.is_cut[**v])
                .count();
            Block {
                is_end_block: cuts_inside == 1,
                edges,
                vertices,
                non_trivial,
                is_cycle,
            }
        })
        .collect();
    blocks.sort_by_key(|b| b.edges[0]);
    Ok(BlockDecomposition {
        blocks,
        cut_vertices,
    })
}

//! Block decomposition, block graphs and special blocks.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Graph;
use crate::vertex_set::VertexSet;

/// Biconnected components (bridges included) plus one singleton block per
/// isolated vertex.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct BlockDecomposition {
    pub blocks: Vec<VertexSet>,
    pub cut_vertices: VertexSet,
}

pub fn block_decomposition(g: &Graph) -> BlockDecomposition {
    struct Dfs<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<VertexSet>,
        cuts: VertexSet,
    }
    impl Dfs<'_> {
        fn visit(&mut self, u: usize, parent: Option<usize>) {
            self.time += 1;
            self.disc[u] = self.time;
            self.low[u] = self.time;
            let mut children = 0;
            for w in self.g.neighbors(u).iter() {
                if self.disc[w] == 0 {
                    children += 1;
                    self.stack.push((u, w));
                    self.visit(w, Some(u));
                    self.low[u] = self.low[u].min(self.low[w]);
                    if self.low[w] >= self.disc[u] {
                        if parent.is_some() || children > 1 {
                            self.cuts.insert(u);
                        }
                        let mut block = VertexSet::EMPTY;
                        while let Some((a, b)) = self.stack.pop() {
                            block = block.with(a).with(b);
                            if (a, b) == (u, w) {
                                break;
                            }
                        }
                        self.blocks.push(block);
                    }
                } else if Some(w) != parent && self.disc[w] < self.disc[u] {
                    self.stack.push((u, w));
                    self.low[u] = self.low[u].min(self.disc[w]);
                }
            }
        }
    }
    let n = g.n_vertices();
    let mut d = Dfs {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
        cuts: VertexSet::EMPTY,
    };
    for v in 0..n {
        if d.disc[v] == 0 {
            if g.degree(v) == 0 {
                d.disc[v] = usize::MAX;
                d.blocks.push(VertexSet::singleton(v));
            } else {
                d.visit(v, None);
            }
        }
    }
    let mut blocks = d.blocks;
    blocks.sort();
    BlockDecomposition {
        blocks,
        cut_vertices: d.cuts,
    }
}

/// A block graph is one whose blocks are all cliques (equivalently, a
/// chordal graph whose maximal cliques share at most one vertex pairwise).
pub fn is_block_graph(g: &Graph) -> (bool, BlockDecomposition) {
    let d = block_decomposition(g);
    (d.blocks.iter().all(|&b| g.is_clique(b)), d)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum SpecialBlockType {
    I,
    II,
    III,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpecialBlockWitness {
    pub block: VertexSet,
    pub block_type: SpecialBlockType,
    /// `u_1, .., u_d`; only the position of `u_d` matters, the rest ascend.
    pub ordering: Vec<usize>,
    /// For type III: `u_i` (with `i < d`) to the far ends of its pendant edges.
    pub attached_pendants: BTreeMap<usize, Vec<usize>>,
}

/// `𝒩_G(L, u)`: blocks other than `L` meeting `L` exactly in `u`.
pub fn attached_blocks(blocks: &[VertexSet], l: VertexSet, u: usize) -> Vec<VertexSet> {
    blocks
        .iter()
        .copied()
        .filter(|&d| d != l && d & l == VertexSet::singleton(u))
        .collect()
}

/// All special blocks with every admissible choice of the last vertex `u_d`.
pub fn special_blocks(g: &Graph) -> Result<Vec<SpecialBlockWitness>> {
    let (ok, dec) = is_block_graph(g);
    if !ok {
        return Err(Error::NotABlockGraph);
    }
    let mut out = Vec::new();
    for &l in &dec.blocks {
        let verts = l.to_vec();
        let d = verts.len();
        let att: BTreeMap<usize, Vec<VertexSet>> = verts
            .iter()
            .map(|&u| (u, attached_blocks(&dec.blocks, l, u)))
            .collect();
        if d <= 2 && att.values().all(|a| a.is_empty()) {
            out.push(SpecialBlockWitness {
                block: l,
                block_type: SpecialBlockType::I,
                ordering: verts.clone(),
                attached_pendants: BTreeMap::new(),
            });
            continue;
        }
        for &last in &verts {
            let mut ordering: Vec<usize> = verts.iter().copied().filter(|&u| u != last).collect();
            ordering.push(last);
            let others = &ordering[..d - 1];
            let loaded: Vec<usize> = others
                .iter()
                .copied()
                .filter(|u| !att[u].is_empty())
                .collect();
            let block_type = if d >= 3 && loaded.is_empty() {
                SpecialBlockType::II
            } else if d >= 2
                && !loaded.is_empty()
                && loaded.iter().all(|u| att[u].iter().all(|b| b.len() == 2))
            {
                SpecialBlockType::III
            } else {
                continue;
            };
            let attached_pendants = if block_type == SpecialBlockType::III {
                loaded
                    .iter()
                    .map(|&u| {
                        (
                            u,
                            att[&u].iter().map(|b| b.without(u).to_vec()[0]).collect(),
                        )
                    })
                    .collect()
            } else {
                BTreeMap::new()
            };
            out.push(SpecialBlockWitness {
                block: l,
                block_type,
                ordering,
                attached_pendants,
            });
        }
    }
    Ok(out)
}

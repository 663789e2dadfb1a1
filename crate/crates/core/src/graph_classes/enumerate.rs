//! Exhaustive generation of small graphs up to isomorphism.
//!
//! The canonical form of a graph is the relabelling whose upper-triangle
//! adjacency bits, read column by column as in graph6, are lexicographically
//! smallest. Placing vertices one at a time fixes a prefix of that string, so
//! the permutation search prunes every branch whose prefix already loses.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::blocks::is_block_graph;
use super::chordal::{is_chordal, is_cm_chordal, is_weakly_chordal};
use crate::error::{Error, Result};
use crate::hypergraph::Graph;
use crate::vertex_set::VertexSet;

/// Largest order for which codes fit in a `u128`.
pub const MAX_CANONICAL_ORDER: usize = 16;
/// Sweeps above this order need an explicit override.
pub const DEFAULT_MAX_ORDER: usize = 8;
pub const DEFAULT_NODE_BUDGET: u64 = 50_000_000;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClassFilter {
    pub connected: bool,
    pub chordal: bool,
    pub weakly_chordal: bool,
    pub block: bool,
    pub forest: bool,
    pub complete: bool,
    /// Not hereditary, so applied after generation.
    pub cm_chordal: bool,
}

impl ClassFilter {
    pub fn all() -> Self {
        Self::default()
    }

    pub fn connected() -> Self {
        Self {
            connected: true,
            ..Self::default()
        }
    }

    /// Classes closed under deleting a vertex; connectivity is included since
    /// every connected graph has a vertex whose deletion keeps it connected.
    fn generation_ok(&self, g: &Graph) -> bool {
        (!self.connected || g.n_vertices() == 0 || g.is_connected())
            && (!self.complete
                || g.n_edges() * 2 == g.n_vertices() * g.n_vertices().saturating_sub(1))
            && (!self.forest || g.n_edges() + g.components().len() == g.n_vertices())
            && (!self.block || is_block_graph(g).0)
            && (!self.chordal || is_chordal(g).0)
            && (!self.weakly_chordal || is_weakly_chordal(g).0)
    }

    pub fn accepts(&self, g: &Graph) -> bool {
        self.generation_ok(g) && (!self.cm_chordal || is_cm_chordal(g).0)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct EnumerationOptions {
    pub max_order: usize,
    /// Search nodes allowed per canonicalization.
    pub node_budget: u64,
}

impl Default for EnumerationOptions {
    fn default() -> Self {
        Self {
            max_order: DEFAULT_MAX_ORDER,
            node_budget: DEFAULT_NODE_BUDGET,
        }
    }
}

fn code_len(n: usize) -> u32 {
    (n * n.saturating_sub(1) / 2) as u32
}

/// Code of `g` under the labelling that puts `order[i]` at position `i`.
pub fn code_under(g: &Graph, order: &[usize]) -> u128 {
    let mut code = 0u128;
    for j in 1..order.len() {
        for i in 0..j {
            code = code << 1 | g.has_edge(order[i], order[j]) as u128;
        }
    }
    code
}

/// Lexicographically smallest code with the labelling that attains it.
pub fn canonical_labelling(g: &Graph, node_budget: u64) -> Result<(u128, Vec<usize>)> {
    let n = g.n_vertices();
    if n > MAX_CANONICAL_ORDER {
        return Err(Error::InvalidParameter(format!(
            "canonical forms are limited to {MAX_CANONICAL_ORDER} vertices"
        )));
    }
    struct Search<'a> {
        g: &'a Graph,
        total: u32,
        best: Option<(u128, Vec<usize>)>,
        nodes: u64,
        budget: u64,
    }
    impl Search<'_> {
        // `prefix` holds the bits of columns 1..order.len()-1
        fn go(&mut self, order: &mut Vec<usize>, left: VertexSet, prefix: u128) -> Result<()> {
            self.nodes += 1;
            if self.nodes > self.budget {
                return Err(Error::BudgetExceeded(format!(
                    "canonical labelling exceeded {} search nodes",
                    self.budget
                )));
            }
            if left.is_empty() {
                if self.best.as_ref().is_none_or(|(b, _)| prefix < *b) {
                    self.best = Some((prefix, order.clone()));
                }
                return Ok(());
            }
            let j = order.len();
            let bits = j as u32 * (j as u32 + 1) / 2;
            let mut children: Vec<(u128, usize)> = left
                .iter()
                .map(|v| {
                    let mut c = prefix;
                    for &u in order.iter() {
                        c = c << 1 | self.g.has_edge(u, v) as u128;
                    }
                    (c, v)
                })
                .collect();
            children.sort();
            for (c, v) in children {
                if let Some((b, _)) = &self.best {
                    if c > b >> (self.total - bits) {
                        break;
                    }
                }
                order.push(v);
                self.go(order, left.without(v), c)?;
                order.pop();
            }
            Ok(())
        }
    }
    let mut s = Search {
        g,
        total: code_len(n),
        best: None,
        nodes: 0,
        budget: node_budget,
    };
    s.go(&mut Vec::with_capacity(n), g.vertices(), 0)?;
    Ok(s.best.expect("at least one labelling"))
}

pub fn canonical_code(g: &Graph) -> Result<u128> {
    Ok(canonical_labelling(g, DEFAULT_NODE_BUDGET)?.0)
}

/// The graph whose code under the identity labelling is `code`.
pub fn graph_from_code(n: usize, code: u128) -> Graph {
    let total = code_len(n);
    let mut edges = Vec::new();
    let mut pos = 0;
    for j in 1..n {
        for i in 0..j {
            pos += 1;
            if code >> (total - pos) & 1 == 1 {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, edges).expect("valid pairs")
}

pub fn canonical_form(g: &Graph) -> Result<Graph> {
    Ok(graph_from_code(g.n_vertices(), canonical_code(g)?))
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> Result<bool> {
    Ok(a.n_vertices() == b.n_vertices()
        && a.n_edges() == b.n_edges()
        && canonical_code(a)? == canonical_code(b)?)
}

pub fn enumerate_graphs(n: usize, filter: &ClassFilter) -> Result<Vec<Graph>> {
    enumerate_graphs_with(n, filter, &EnumerationOptions::default())
}

/// One canonical representative per isomorphism class on exactly `n`
/// vertices, sorted by canonical code.
pub fn enumerate_graphs_with(
    n: usize,
    filter: &ClassFilter,
    opts: &EnumerationOptions,
) -> Result<Vec<Graph>> {
    if n > opts.max_order {
        return Err(Error::InvalidParameter(format!(
            "n = {n} exceeds the sweep limit {}; raise it explicitly",
            opts.max_order
        )));
    }
    Ok(enumerate_codes(n, filter, opts)?
        .into_iter()
        .map(|c| graph_from_code(n, c))
        .filter(|g| !filter.cm_chordal || is_cm_chordal(g).0)
        .collect())
}

fn enumerate_codes(
    n: usize,
    filter: &ClassFilter,
    opts: &EnumerationOptions,
) -> Result<BTreeSet<u128>> {
    let mut level = BTreeSet::from([0u128]);
    for m in 1..=n {
        let mut next = BTreeSet::new();
        for &code in &level {
            let base = graph_from_code(m - 1, code);
            let edges = base.edge_pairs();
            for s in VertexSet::full(m - 1).subsets() {
                let mut e = edges.clone();
                e.extend(s.iter().map(|u| (u, m - 1)));
                let g = Graph::new(m, e)?;
                if filter.generation_ok(&g) {
                    next.insert(canonical_labelling(&g, opts.node_budget)?.0);
                }
            }
        }
        level = next;
    }
    Ok(level)
}

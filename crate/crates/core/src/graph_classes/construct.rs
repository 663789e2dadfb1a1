//! Graphs built by gluing complete graphs and whiskers onto a base graph.
//! The base graph keeps its vertex indices; new vertices come after them.

use crate::error::{Error, Result};
use crate::hypergraph::Graph;
use crate::vertex_set::{VertexSet, MAX_UNIVERSE};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Construction {
    pub graph: Graph,
    /// Indices of `x_1, .., x_n`.
    pub clique: Vec<usize>,
    /// Indices of the whisker ends `y_1, .., y_r` (`y_i` hangs off `clique[i]`).
    pub whiskers: Vec<usize>,
}

fn check_size(total: usize) -> Result<()> {
    if total > MAX_UNIVERSE {
        return Err(Error::UniverseTooLarge(total));
    }
    Ok(())
}

/// `Γ = G ⊔ K_n` plus the edges `{u, x_n}` for `u ∈ S`.
pub fn build_attach_kn(g: &Graph, s: VertexSet, n: usize) -> Result<Construction> {
    if n < 2 {
        return Err(Error::InvalidParameter(format!(
            "attached clique needs n >= 2, got {n}"
        )));
    }
    if !s.is_subset(g.vertices()) {
        return Err(Error::InvalidParameter(format!(
            "{s} is not a subset of V(G)"
        )));
    }
    let m = g.n_vertices();
    check_size(m + n)?;
    let clique: Vec<usize> = (m..m + n).collect();
    let mut e = g.edge_pairs();
    for i in 0..n {
        for j in i + 1..n {
            e.push((clique[i], clique[j]));
        }
    }
    let last = clique[n - 1];
    e.extend(s.iter().map(|u| (u, last)));
    Ok(Construction {
        graph: Graph::new(m + n, e)?,
        clique,
        whiskers: Vec::new(),
    })
}

/// `Γ = G ⊔ W(K_n)` plus the edges `{v, x}` for every clique vertex `x`.
pub fn build_whiskered_attach(g: &Graph, v: usize, n: usize) -> Result<Construction> {
    if n < 1 {
        return Err(Error::InvalidParameter(
            "whiskered clique needs n >= 1".into(),
        ));
    }
    if v >= g.n_vertices() {
        return Err(Error::VertexOutOfRange {
            vertex: v,
            universe: g.n_vertices(),
        });
    }
    let m = g.n_vertices();
    check_size(m + 2 * n)?;
    let w = whisker_complete(n)?;
    let (u, off) = g.disjoint_union(&w.graph);
    let clique: Vec<usize> = w.clique.iter().map(|&x| x + off).collect();
    let whiskers: Vec<usize> = w.whiskers.iter().map(|&y| y + off).collect();
    let mut e = u.edge_pairs();
    e.extend(clique.iter().map(|&x| (v, x)));
    debug_assert_eq!(off, m);
    Ok(Construction {
        graph: Graph::new(u.n_vertices(), e)?,
        clique,
        whiskers,
    })
}

/// `K_n` with `r` pendant vertices attached to distinct clique vertices
/// `0, .., r - 1`.
pub fn complete_with_pendants(n: usize, r: usize) -> Result<Construction> {
    if r > n {
        return Err(Error::InvalidParameter(format!("{r} pendants on K_{n}")));
    }
    check_size(n + r)?;
    let clique: Vec<usize> = (0..n).collect();
    let whiskers: Vec<usize> = (n..n + r).collect();
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            e.push((i, j));
        }
    }
    e.extend((0..r).map(|i| (i, n + i)));
    Ok(Construction {
        graph: Graph::new(n + r, e)?,
        clique,
        whiskers,
    })
}

/// `W(K_n)`: one pendant at every vertex of `K_n`. `W(K_1)` is a single edge.
pub fn whisker_complete(n: usize) -> Result<Construction> {
    complete_with_pendants(n, n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whisker_of_k1_is_an_edge() {
        let w = whisker_complete(1).unwrap();
        assert_eq!(w.graph, Graph::complete(2));
    }

    #[test]
    fn attach_shapes() {
        // K_3 with S = V and K_2 attached is K_4 plus a whisker
        let c = build_attach_kn(&Graph::complete(3), VertexSet::full(3), 2).unwrap();
        assert_eq!(c.graph.n_vertices(), 5);
        assert_eq!(c.graph.n_edges(), 3 + 1 + 3);
        assert_eq!(c.graph.degree(4), 4);
        assert_eq!(c.graph.degree(3), 1);
        assert!(build_attach_kn(&Graph::complete(3), VertexSet::full(3), 1).is_err());
        assert!(build_attach_kn(&Graph::complete(3), VertexSet::singleton(5), 2).is_err());

        let w = build_whiskered_attach(&Graph::path(2), 1, 2).unwrap();
        assert_eq!(w.graph.n_vertices(), 6);
        assert_eq!(w.clique, vec![2, 3]);
        assert_eq!(w.whiskers, vec![4, 5]);
        assert_eq!(w.graph.neighbors(1), [0usize, 2, 3].iter().collect());
        assert!(build_whiskered_attach(&Graph::path(2), 2, 2).is_err());
    }
}

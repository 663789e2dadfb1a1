//! Chordal, weakly chordal and Cohen–Macaulay chordal recognition.

use serde::Serialize;

use crate::hypergraph::Graph;
use crate::vertex_set::VertexSet;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum ChordalWitness {
    /// Vertices in elimination order: each is simplicial in what remains.
    PerfectEliminationOrder(Vec<usize>),
    /// A shortest induced cycle of length at least 4, in cyclic order.
    InducedCycle(Vec<usize>),
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum WeaklyChordalWitness {
    NoLongHole,
    /// An induced cycle of length at least 5 in the graph or its complement.
    InducedCycle {
        in_complement: bool,
        cycle: Vec<usize>,
    },
}

/// Vertices whose neighbourhood is a clique.
pub fn simplicial_vertices(g: &Graph) -> VertexSet {
    g.vertices()
        .iter()
        .filter(|&v| g.is_clique(g.neighbors(v)))
        .collect()
}

fn simplicial_in(g: &Graph, alive: VertexSet, v: usize) -> bool {
    let nb = g.neighbors(v) & alive;
    nb.iter().all(|u| nb.without(u).is_subset(g.neighbors(u)))
}

/// Chordality by repeatedly removing a simplicial vertex.
pub fn is_chordal(g: &Graph) -> (bool, ChordalWitness) {
    let mut alive = g.vertices();
    let mut order = Vec::with_capacity(g.n_vertices());
    while let Some(v) = alive.iter().find(|&v| simplicial_in(g, alive, v)) {
        order.push(v);
        alive.remove(v);
    }
    if alive.is_empty() {
        return (true, ChordalWitness::PerfectEliminationOrder(order));
    }
    let cycle = shortest_hole(g).expect("a graph with no simplicial vertex has a hole");
    (false, ChordalWitness::InducedCycle(cycle))
}

/// Shortest induced cycle of length at least 4. For each vertex `v` and
/// non-adjacent neighbours `a`, `b`, a shortest `a`–`b` path avoiding the
/// rest of `N[v]` closes an induced cycle through `v`; every shortest hole
/// arises this way.
pub fn shortest_hole(g: &Graph) -> Option<Vec<usize>> {
    let mut best: Option<Vec<usize>> = None;
    for v in g.vertices().iter() {
        let nv = g.neighbors(v);
        for a in nv.iter() {
            for b in nv.iter().filter(|&b| b > a && !g.has_edge(a, b)) {
                let allowed = (g.vertices() - g.closed_neighborhood(v)).with(a).with(b);
                if let Some(path) = bfs_path(g, a, b, allowed) {
                    if best.as_ref().is_none_or(|c| path.len() + 1 < c.len()) {
                        let mut cyc = vec![v];
                        cyc.extend(path);
                        best = Some(cyc);
                    }
                }
            }
        }
    }
    best
}

fn bfs_path(g: &Graph, from: usize, to: usize, allowed: VertexSet) -> Option<Vec<usize>> {
    let mut prev = vec![usize::MAX; g.n_vertices()];
    let mut seen = VertexSet::singleton(from);
    let mut queue = std::collections::VecDeque::from([from]);
    while let Some(u) = queue.pop_front() {
        if u == to {
            let mut path = vec![to];
            let mut cur = to;
            while cur != from {
                cur = prev[cur];
                path.push(cur);
            }
            path.reverse();
            return Some(path);
        }
        for w in (g.neighbors(u) & allowed).iter() {
            if !seen.contains(w) {
                seen.insert(w);
                prev[w] = u;
                queue.push_back(w);
            }
        }
    }
    None
}

/// A shortest induced cycle with at least `min_len` vertices, by extending
/// induced paths from their smallest vertex.
pub fn find_induced_cycle(g: &Graph, min_len: usize) -> Option<Vec<usize>> {
    fn extend(
        g: &Graph,
        start: usize,
        path: &mut Vec<usize>,
        inside: VertexSet,
        min_len: usize,
        best: &mut Option<Vec<usize>>,
    ) {
        if best.as_ref().is_some_and(|b| path.len() >= b.len()) {
            return;
        }
        let last = *path.last().expect("nonempty path");
        let before_last = inside.without(last);
        for w in g
            .neighbors(last)
            .iter()
            .filter(|&w| w > start && !inside.contains(w))
        {
            let touches = g.neighbors(w) & before_last;
            if touches.is_empty() {
                path.push(w);
                extend(g, start, path, inside.with(w), min_len, best);
                path.pop();
            } else if touches == VertexSet::singleton(start) && path.len() >= 2 {
                // w closes the cycle start .. last, w
                if path.len() + 1 >= min_len
                    && best.as_ref().is_none_or(|b| path.len() + 1 < b.len())
                {
                    let mut c = path.clone();
                    c.push(w);
                    *best = Some(c);
                }
            }
        }
    }
    let mut best = None;
    for s in g.vertices().iter() {
        let mut path = vec![s];
        extend(g, s, &mut path, VertexSet::singleton(s), min_len, &mut best);
    }
    best
}

/// No induced cycle of length at least 5 in `g` or its complement.
pub fn is_weakly_chordal(g: &Graph) -> (bool, WeaklyChordalWitness) {
    if let Some(cycle) = find_induced_cycle(g, 5) {
        return (
            false,
            WeaklyChordalWitness::InducedCycle {
                in_complement: false,
                cycle,
            },
        );
    }
    if let Some(cycle) = find_induced_cycle(&g.complement(), 5) {
        return (
            false,
            WeaklyChordalWitness::InducedCycle {
                in_complement: true,
                cycle,
            },
        );
    }
    (true, WeaklyChordalWitness::NoLongHole)
}

/// Cohen–Macaulay chordal: chordal, and `V` is partitioned by maximal
/// cliques each containing a simplicial vertex. Such a clique is `N[s]` for
/// a simplicial `s`, so the search is an exact cover over those sets, tried
/// in lex order.
pub fn is_cm_chordal(g: &Graph) -> (bool, Option<Vec<VertexSet>>) {
    if !is_chordal(g).0 {
        return (false, None);
    }
    let mut cliques: Vec<VertexSet> = simplicial_vertices(g)
        .iter()
        .map(|s| g.closed_neighborhood(s))
        .collect();
    cliques.sort();
    cliques.dedup();
    fn cover(rest: VertexSet, cliques: &[VertexSet], chosen: &mut Vec<VertexSet>) -> bool {
        let Some(v) = rest.min() else {
            return true;
        };
        for &c in cliques {
            if c.contains(v) && c.is_subset(rest) {
                chosen.push(c);
                if cover(rest - c, cliques, chosen) {
                    return true;
                }
                chosen.pop();
            }
        }
        false
    }
    let mut chosen = Vec::new();
    if cover(g.vertices(), &cliques, &mut chosen) {
        chosen.sort();
        (true, Some(chosen))
    } else {
        (false, None)
    }
}

/// Independent re-check of a CM-chordal partition.
pub fn validate_cm_partition(g: &Graph, parts: &[VertexSet]) -> bool {
    let maximal = g.maximal_cliques();
    let simplicial = simplicial_vertices(g);
    let mut seen = VertexSet::EMPTY;
    for &p in parts {
        if !p.is_disjoint(seen) || !maximal.contains(&p) || (p & simplicial).is_empty() {
            return false;
        }
        seen = seen | p;
    }
    seen == g.vertices() && is_chordal(g).0
}

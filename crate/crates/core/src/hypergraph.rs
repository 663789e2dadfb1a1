//! Hypergraphs and graphs over a dense vertex universe `{0, .., n-1}`, with
//! the matching, independence and cover invariants used throughout the crate.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::vertex_set::{VertexSet, MAX_UNIVERSE};

/// A simple hypergraph: its edges form an inclusion antichain of nonempty sets.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<VertexSet>,
}

impl Hypergraph {
    /// Validates the antichain condition and stores the edges in lex order.
    pub fn new(n: usize, edges: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        let mut edges: Vec<VertexSet> = edges.into_iter().collect();
        for e in &edges {
            if e.is_empty() {
                return Err(Error::EmptyEdge);
            }
            if let Some(v) = e.iter().find(|&v| v >= n) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    universe: n,
                });
            }
        }
        edges.sort_by(|a, b| a.lex_cmp(*b));
        for (i, a) in edges.iter().enumerate() {
            for b in &edges[i + 1..] {
                if a.is_subset(*b) || b.is_subset(*a) {
                    return Err(Error::NotAntichain(format!("{a:?} and {b:?}")));
                }
            }
        }
        Ok(Hypergraph { n, edges })
    }

    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_UNIVERSE);
        Hypergraph {
            n,
            edges: Vec::new(),
        }
    }

    pub fn n_vertices(&self) -> usize {
        self.n
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn edges(&self) -> &[VertexSet] {
        &self.edges
    }

    pub fn is_graph(&self) -> bool {
        self.edges.iter().all(|e| e.len() == 2)
    }

    /// Vertices lying in at least one edge.
    pub fn covered_vertices(&self) -> VertexSet {
        self.edges.iter().fold(VertexSet::EMPTY, |acc, &e| acc | e)
    }

    /// Edges contained in `w`, kept in the original labels.
    pub fn edges_within(&self, w: VertexSet) -> impl Iterator<Item = VertexSet> + '_ {
        self.edges.iter().copied().filter(move |e| e.is_subset(w))
    }

    pub fn is_independent(&self, s: VertexSet) -> bool {
        self.edges.iter().all(|e| !e.is_subset(s))
    }

    pub fn is_vertex_cover(&self, c: VertexSet) -> bool {
        self.edges.iter().all(|e| !e.is_disjoint(c))
    }

    /// The induced sub-hypergraph on `w`, relabelled to `0..|w|` in increasing
    /// order. The returned map sends new indices to old ones.
    pub fn induced(&self, w: VertexSet) -> (Hypergraph, Vec<usize>) {
        let map = w.to_vec();
        let mut inverse = vec![usize::MAX; self.n.max(w.max().map_or(0, |m| m + 1))];
        for (new, &old) in map.iter().enumerate() {
            inverse[old] = new;
        }
        let edges = self.edges_within(w).map(|e| e.map(&inverse)).collect();
        (
            Hypergraph {
                n: map.len(),
                edges,
            },
            map,
        )
    }

    /// Vertices of `other` are shifted by `self.n_vertices()`; the offset is returned.
    pub fn disjoint_union(&self, other: &Hypergraph) -> Result<(Hypergraph, usize)> {
        let offset = self.n;
        let n = self.n + other.n;
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .chain(other.edges.iter().map(|e| e.shift(offset)));
        Ok((Hypergraph::new(n, edges)?, offset))
    }

    /// Connected components of the vertices in `w` with respect to the edges
    /// inside `w`. Isolated vertices form singleton components.
    pub fn components_within(&self, w: VertexSet) -> Vec<VertexSet> {
        let inner: Vec<VertexSet> = self.edges_within(w).collect();
        let mut remaining = w;
        let mut out = Vec::new();
        while let Some(v) = remaining.min() {
            let mut comp = VertexSet::singleton(v);
            loop {
                let grown = inner
                    .iter()
                    .filter(|e| !e.is_disjoint(comp))
                    .fold(comp, |acc, &e| acc | e);
                if grown == comp {
                    break;
                }
                comp = grown;
            }
            remaining = remaining - comp;
            out.push(comp);
        }
        out
    }

    pub fn matching_number(&self) -> usize {
        fn go(edges: &[VertexSet], avail: VertexSet) -> usize {
            // Branch on the smallest vertex that still lies in some edge.
            let live: Vec<VertexSet> = edges
                .iter()
                .copied()
                .filter(|e| e.is_subset(avail))
                .collect();
            let Some(v) = live.iter().fold(VertexSet::EMPTY, |a, &e| a | e).min() else {
                return 0;
            };
            let mut best = go(&live, avail.without(v));
            for e in live.iter().filter(|e| e.contains(v)) {
                best = best.max(1 + go(&live, avail - *e));
            }
            best
        }
        go(&self.edges, self.vertices())
    }

    /// Maximum size of a matching `M` with `E(H[∪M]) = M`.
    ///
    /// Written `ν₁` in some sources and `ν` in others; this crate only uses
    /// the descriptive name.
    pub fn induced_matching_number(&self) -> usize {
        self.maximum_induced_matching().len()
    }

    pub fn maximum_induced_matching(&self) -> Vec<VertexSet> {
        fn go(
            h: &Hypergraph,
            from: usize,
            chosen: &mut Vec<VertexSet>,
            union: VertexSet,
            best: &mut Vec<VertexSet>,
        ) {
            if chosen.len() > best.len() {
                *best = chosen.clone();
            }
            for i in from..h.edges.len() {
                let e = h.edges[i];
                if !e.is_disjoint(union) {
                    continue;
                }
                let u = union | e;
                if h.edges_within(u).count() != chosen.len() + 1 {
                    continue;
                }
                chosen.push(e);
                go(h, i + 1, chosen, u, best);
                chosen.pop();
            }
        }
        let mut best = Vec::new();
        go(self, 0, &mut Vec::new(), VertexSet::EMPTY, &mut best);
        best
    }

    pub fn independence_number(&self) -> usize {
        self.maximum_independent_set().len()
    }

    pub fn maximum_independent_set(&self) -> VertexSet {
        fn go(h: &Hypergraph, undecided: VertexSet, chosen: VertexSet, best: &mut VertexSet) {
            if chosen.len() + undecided.len() <= best.len() {
                return;
            }
            let Some(v) = undecided.min() else {
                *best = chosen;
                return;
            };
            let rest = undecided.without(v);
            let with = chosen.with(v);
            if h.edges.iter().all(|e| !e.contains(v) || !e.is_subset(with)) {
                go(h, rest, with, best);
            }
            go(h, rest, chosen, best);
        }
        let mut best = VertexSet::EMPTY;
        go(self, self.vertices(), VertexSet::EMPTY, &mut best);
        best
    }

    /// Minimum size of a vertex cover, read off the minimal covers.
    pub fn cover_number(&self) -> usize {
        self.minimal_vertex_covers()
            .iter()
            .map(|c| c.len())
            .min()
            .unwrap_or(0)
    }

    /// All inclusion-minimal vertex covers, sorted in lex order. An edgeless
    /// hypergraph has the single cover `∅`.
    pub fn minimal_vertex_covers(&self) -> Vec<VertexSet> {
        let mut covers: Vec<VertexSet> = if self.is_graph() {
            let g = Graph::from_hypergraph(self.clone()).expect("checked graph");
            g.maximal_independent_sets()
                .into_iter()
                .map(|s| self.vertices() - s)
                .collect()
        } else {
            self.minimal_transversals()
        };
        covers.sort_by(|a, b| a.lex_cmp(*b));
        covers
    }

    fn minimal_transversals(&self) -> Vec<VertexSet> {
        fn is_minimal(h: &Hypergraph, t: VertexSet) -> bool {
            t.iter().all(|v| !h.is_vertex_cover(t.without(v)))
        }
        fn go(h: &Hypergraph, t: VertexSet, out: &mut BTreeSet<u64>) {
            if !is_minimal_partial(h, t) {
                return;
            }
            match h.edges.iter().find(|e| e.is_disjoint(t)) {
                None => {
                    if is_minimal(h, t) {
                        out.insert(t.bits());
                    }
                }
                Some(&e) => {
                    for v in e.iter() {
                        go(h, t.with(v), out);
                    }
                }
            }
        }
        // A vertex added earlier must keep a private edge among the edges it
        // hits; once every edge it hits is also hit by others it is redundant
        // in every extension.
        fn is_minimal_partial(h: &Hypergraph, t: VertexSet) -> bool {
            t.iter().all(|v| {
                h.edges
                    .iter()
                    .any(|e| e.contains(v) && e.intersection(t) == VertexSet::singleton(v))
            })
        }
        let mut out = BTreeSet::new();
        go(self, VertexSet::EMPTY, &mut out);
        out.into_iter().map(VertexSet::from_bits).collect()
    }
}

/// A hypergraph whose edges all have two vertices, with adjacency lists.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Graph {
    hyper: Hypergraph,
    adj: Vec<VertexSet>,
}

impl Graph {
    pub fn new(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Result<Self> {
        if n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(n));
        }
        let mut sets = Vec::new();
        for (a, b) in edges {
            if a == b {
                return Err(Error::InvalidParameter(format!("self-loop at vertex {a}")));
            }
            if a >= n || b >= n {
                return Err(Error::VertexOutOfRange {
                    vertex: a.max(b),
                    universe: n,
                });
            }
            sets.push(VertexSet::singleton(a).with(b));
        }
        Graph::from_hypergraph(Hypergraph::new(n, sets)?)
    }

    pub fn from_hypergraph(hyper: Hypergraph) -> Result<Self> {
        if !hyper.is_graph() {
            return Err(Error::NotAGraph);
        }
        let mut adj = vec![VertexSet::EMPTY; hyper.n];
        for e in &hyper.edges {
            let v: Vec<usize> = e.to_vec();
            adj[v[0]].insert(v[1]);
            adj[v[1]].insert(v[0]);
        }
        Ok(Graph { hyper, adj })
    }

    /// Builds a graph from adjacency sets; the caller guarantees symmetry.
    pub(crate) fn from_adjacency(adj: Vec<VertexSet>) -> Self {
        let n = adj.len();
        let mut edges = Vec::new();
        for (u, nb) in adj.iter().enumerate() {
            for v in nb.iter().filter(|&v| v > u) {
                edges.push(VertexSet::singleton(u).with(v));
            }
        }
        edges.sort_by(|a, b| a.lex_cmp(*b));
        Graph {
            hyper: Hypergraph { n, edges },
            adj,
        }
    }

    pub fn complete(n: usize) -> Self {
        let all = VertexSet::full(n);
        Graph::from_adjacency((0..n).map(|v| all.without(v)).collect())
    }

    pub fn path(n: usize) -> Self {
        Graph::new(n, (1..n).map(|i| (i - 1, i))).expect("valid path")
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3);
        Graph::new(n, (0..n).map(|i| (i, (i + 1) % n))).expect("valid cycle")
    }

    /// `t` pairwise disjoint edges on `2t` vertices.
    pub fn disjoint_edges(t: usize) -> Self {
        Graph::new(2 * t, (0..t).map(|i| (2 * i, 2 * i + 1))).expect("valid matching")
    }

    pub fn hypergraph(&self) -> &Hypergraph {
        &self.hyper
    }

    pub fn into_hypergraph(self) -> Hypergraph {
        self.hyper
    }

    pub fn n_vertices(&self) -> usize {
        self.hyper.n
    }

    pub fn vertices(&self) -> VertexSet {
        self.hyper.vertices()
    }

    pub fn n_edges(&self) -> usize {
        self.hyper.edges.len()
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        self.hyper
            .edges
            .iter()
            .map(|e| {
                let v = e.to_vec();
                (v[0], v[1])
            })
            .collect()
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.adj[v]
    }

    pub fn adjacency(&self) -> &[VertexSet] {
        &self.adj
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].contains(v)
    }

    /// `(N[A], N(A))`.
    pub fn neighborhoods(&self, a: VertexSet) -> (VertexSet, VertexSet) {
        let closed = a.iter().fold(a, |acc, v| acc | self.adj[v]);
        (closed, closed - a)
    }

    pub fn closed_neighborhood(&self, v: usize) -> VertexSet {
        self.adj[v].with(v)
    }

    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| (s.without(v)).is_subset(self.adj[v]))
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        Graph::from_adjacency(
            (0..self.n_vertices())
                .map(|v| (all - self.adj[v]).without(v))
                .collect(),
        )
    }

    pub fn induced(&self, w: VertexSet) -> (Graph, Vec<usize>) {
        let (h, map) = self.hyper.induced(w);
        (
            Graph::from_hypergraph(h).expect("induced subgraph of a graph"),
            map,
        )
    }

    /// Removes the vertices in `w`, relabelling the rest.
    pub fn remove(&self, w: VertexSet) -> (Graph, Vec<usize>) {
        self.induced(self.vertices() - w)
    }

    pub fn is_connected(&self) -> bool {
        self.hyper.components_within(self.vertices()).len() <= 1
    }

    pub fn components(&self) -> Vec<VertexSet> {
        self.hyper.components_within(self.vertices())
    }

    pub fn disjoint_union(&self, other: &Graph) -> (Graph, usize) {
        let (h, offset) = self
            .hyper
            .disjoint_union(&other.hyper)
            .expect("union of graphs stays within the universe cap");
        (Graph::from_hypergraph(h).expect("graph"), offset)
    }

    /// Maximal independent sets via Bron–Kerbosch with pivoting on the
    /// complement graph.
    pub fn maximal_independent_sets(&self) -> Vec<VertexSet> {
        let n = self.n_vertices();
        let all = self.vertices();
        let co: Vec<VertexSet> = (0..n).map(|v| (all - self.adj[v]).without(v)).collect();
        let mut out = Vec::new();
        bron_kerbosch(&co, VertexSet::EMPTY, all, VertexSet::EMPTY, &mut out);
        out
    }

    /// Maximal cliques via Bron–Kerbosch with pivoting.
    pub fn maximal_cliques(&self) -> Vec<VertexSet> {
        let mut out = Vec::new();
        bron_kerbosch(
            &self.adj,
            VertexSet::EMPTY,
            self.vertices(),
            VertexSet::EMPTY,
            &mut out,
        );
        out.sort_by(|a, b| a.lex_cmp(*b));
        out
    }
}

fn bron_kerbosch(
    adj: &[VertexSet],
    r: VertexSet,
    p: VertexSet,
    x: VertexSet,
    out: &mut Vec<VertexSet>,
) {
    if p.is_empty() {
        if x.is_empty() {
            out.push(r);
        }
        return;
    }
    let pivot = (p | x)
        .iter()
        .max_by_key(|&u| (adj[u] & p).len())
        .expect("p nonempty");
    let mut p = p;
    let mut x = x;
    for v in (p - adj[pivot]).iter() {
        bron_kerbosch(adj, r.with(v), p & adj[v], x & adj[v], out);
        p.remove(v);
        x.insert(v);
    }
}

/// JSON form `{"n": int, "edges": [[i, ...], ...]}` shared by graphs and hypergraphs.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct EdgeListJson {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
}

impl From<&Hypergraph> for EdgeListJson {
    fn from(h: &Hypergraph) -> Self {
        EdgeListJson {
            n: h.n,
            edges: h.edges.iter().map(|e| e.to_vec()).collect(),
        }
    }
}

impl TryFrom<EdgeListJson> for Hypergraph {
    type Error = Error;
    fn try_from(j: EdgeListJson) -> Result<Self> {
        if j.n > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(j.n));
        }
        let mut sets = Vec::with_capacity(j.edges.len());
        for e in j.edges {
            if let Some(&v) = e.iter().find(|&&v| v >= j.n) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    universe: j.n,
                });
            }
            let s: VertexSet = e.iter().collect();
            if s.len() != e.len() {
                return Err(Error::InvalidParameter(format!(
                    "repeated vertex in edge {e:?}"
                )));
            }
            sets.push(s);
        }
        Hypergraph::new(j.n, sets)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(v: &[usize]) -> VertexSet {
        v.iter().collect()
    }

    fn brute_matching(h: &Hypergraph, induced: bool) -> usize {
        let m = h.edges().len();
        let mut best = 0;
        for mask in 0u32..(1 << m) {
            let chosen: Vec<VertexSet> = (0..m)
                .filter(|i| mask >> i & 1 == 1)
                .map(|i| h.edges()[i])
                .collect();
            let union = chosen.iter().fold(VertexSet::EMPTY, |a, &e| a | e);
            if union.len() != chosen.iter().map(|e| e.len()).sum::<usize>() {
                continue;
            }
            if induced && h.edges_within(union).count() != chosen.len() {
                continue;
            }
            best = best.max(chosen.len());
        }
        best
    }

    fn brute_covers(h: &Hypergraph) -> Vec<VertexSet> {
        let all: Vec<VertexSet> = h
            .vertices()
            .subsets()
            .filter(|&c| h.is_vertex_cover(c))
            .collect();
        let mut min: Vec<VertexSet> = all
            .iter()
            .copied()
            .filter(|&c| c.iter().all(|v| !h.is_vertex_cover(c.without(v))))
            .collect();
        min.sort_by(|a, b| a.lex_cmp(*b));
        min
    }

    #[test]
    fn induced_on_triangle_and_path() {
        let k3 = Graph::complete(3);
        let (h, map) = k3.hypergraph().induced(set(&[0, 1]));
        assert_eq!(h.edges(), &[set(&[0, 1])]);
        assert_eq!(map, vec![0, 1]);

        let p3 = Graph::path(3);
        let (h, _) = p3.hypergraph().induced(set(&[0, 2]));
        assert_eq!(h.n_vertices(), 2);
        assert!(h.edges().is_empty());
    }

    #[test]
    fn induced_c5_on_four_consecutive_is_p4() {
        let c5 = Graph::cycle(5);
        for start in 0..5 {
            let w: VertexSet = (0..4).map(|i| (start + i) % 5).collect();
            let (h, map) = c5.hypergraph().induced(w);
            // brute force: edges of C5 contained in w, relabelled
            let expected: Vec<VertexSet> = c5
                .hypergraph()
                .edges()
                .iter()
                .filter(|e| e.is_subset(w))
                .map(|e| {
                    e.iter()
                        .map(|v| map.iter().position(|&m| m == v).unwrap())
                        .collect()
                })
                .collect();
            assert_eq!(h.edges().len(), 3);
            let mut sorted = expected.clone();
            sorted.sort_by(|a, b| a.lex_cmp(*b));
            assert_eq!(h.edges(), &sorted[..]);
            let g = Graph::from_hypergraph(h).unwrap();
            let mut degs: Vec<usize> = (0..4).map(|v| g.degree(v)).collect();
            degs.sort();
            assert_eq!(degs, vec![1, 1, 2, 2]);
        }
    }

    #[test]
    fn matching_numbers_small_cases() {
        let c5 = Graph::cycle(5);
        assert_eq!(c5.hypergraph().matching_number(), 2);
        assert_eq!(c5.hypergraph().induced_matching_number(), 1);
        assert_eq!(brute_matching(c5.hypergraph(), false), 2);
        assert_eq!(brute_matching(c5.hypergraph(), true), 1);

        let p6 = Graph::path(6);
        assert_eq!(p6.hypergraph().induced_matching_number(), 2);
        assert_eq!(brute_matching(p6.hypergraph(), true), 2);

        for t in 0..5 {
            let m = Graph::disjoint_edges(t);
            assert_eq!(m.hypergraph().matching_number(), t);
            assert_eq!(m.hypergraph().induced_matching_number(), t);
        }
        assert_eq!(Hypergraph::empty(4).matching_number(), 0);
    }

    #[test]
    fn covers_and_independence() {
        for n in 2..7 {
            let k = Graph::complete(n);
            let h = k.hypergraph();
            assert_eq!(h.cover_number(), n - 1);
            assert_eq!(h.independence_number(), 1);
            let covers = h.minimal_vertex_covers();
            assert_eq!(covers.len(), n);
            assert!(covers.iter().all(|c| c.len() == n - 1));
        }
        let e = Graph::complete(2);
        assert_eq!(
            e.hypergraph().minimal_vertex_covers(),
            vec![set(&[0]), set(&[1])]
        );

        let c5 = Graph::cycle(5);
        assert_eq!(c5.hypergraph().cover_number(), 3);
        assert_eq!(c5.hypergraph().independence_number(), 2);
        assert_eq!(
            c5.hypergraph().minimal_vertex_covers(),
            brute_covers(c5.hypergraph())
        );

        let empty = Hypergraph::empty(3);
        assert_eq!(empty.minimal_vertex_covers(), vec![VertexSet::EMPTY]);
        assert_eq!(empty.cover_number(), 0);
        assert_eq!(empty.independence_number(), 3);
    }

    #[test]
    fn hypergraph_transversals_match_brute_force() {
        let h = Hypergraph::new(5, [set(&[0, 1, 2]), set(&[2, 3]), set(&[1, 3, 4])]).unwrap();
        assert_eq!(h.minimal_vertex_covers(), brute_covers(&h));
        assert_eq!(h.independence_number() + h.cover_number(), 5);
    }

    #[test]
    fn disjoint_union_offsets() {
        let (u, off) = Graph::complete(2).disjoint_union(&Graph::complete(2));
        assert_eq!(off, 2);
        assert_eq!(u.edge_pairs(), vec![(0, 1), (2, 3)]);
        let (u, _) = Graph::complete(3).disjoint_union(&Graph::complete(2));
        assert_eq!((u.n_vertices(), u.n_edges()), (5, 4));
    }

    #[test]
    fn neighborhoods_examples() {
        let star = Graph::new(4, [(0, 1), (0, 2), (0, 3)]).unwrap();
        let (closed, open) = star.neighborhoods(set(&[0]));
        assert_eq!(closed, VertexSet::full(4));
        assert_eq!(open, set(&[1, 2, 3]));

        let iso = Graph::new(3, [(0, 1)]).unwrap();
        assert_eq!(iso.neighborhoods(set(&[2])), (set(&[2]), VertexSet::EMPTY));

        // K4 minus {0,1}: N[0] = {0,2,3}
        let g = Graph::new(4, [(0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        let (closed, _) = g.neighborhoods(set(&[0]));
        assert_eq!(closed.len(), 3);
        assert_eq!(closed, set(&[0, 2, 3]));
    }

    #[test]
    fn constructor_rejects_non_antichains() {
        assert!(Hypergraph::new(3, [set(&[0, 1]), set(&[0, 1, 2])]).is_err());
        assert!(Hypergraph::new(3, [set(&[0, 1]), set(&[0, 1])]).is_err());
        assert!(Hypergraph::new(3, [VertexSet::EMPTY]).is_err());
        assert!(Hypergraph::new(2, [set(&[0, 2])]).is_err());
        assert!(Graph::new(3, [(0, 0)]).is_err());
    }

    #[test]
    fn json_round_trip_rejects_bad_input() {
        let j: EdgeListJson = serde_json::from_str(r#"{"n":3,"edges":[[0,1],[1,2]]}"#).unwrap();
        let h = Hypergraph::try_from(j.clone()).unwrap();
        assert_eq!(EdgeListJson::from(&h), j);
        let bad: EdgeListJson = serde_json::from_str(r#"{"n":2,"edges":[[0,5]]}"#).unwrap();
        assert!(Hypergraph::try_from(bad).is_err());
        let rep: EdgeListJson = serde_json::from_str(r#"{"n":3,"edges":[[1,1]]}"#).unwrap();
        assert!(Hypergraph::try_from(rep).is_err());
    }
}

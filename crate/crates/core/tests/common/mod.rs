//! Brute-force reference implementations, written straight from the
//! definitions and sharing no code with the library beyond its data types.
#![allow(dead_code)]

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use sqfpow_core::{Graph, Hypergraph, VertexSet};

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn all_subsets(w: VertexSet) -> Vec<VertexSet> {
    let v = w.to_vec();
    (0u64..1 << v.len())
        .map(|m| {
            (0..v.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| v[i])
                .collect()
        })
        .collect()
}

/// Inclusion-minimal members of a family of sets.
pub fn minimal(mut f: Vec<VertexSet>) -> Vec<VertexSet> {
    f.sort_by_key(|s| s.len());
    let mut out: Vec<VertexSet> = Vec::new();
    for s in f {
        if !out.iter().any(|t| t.is_subset(s)) {
            out.push(s);
        }
    }
    out.sort();
    out
}

pub fn edges_in(h: &Hypergraph, w: VertexSet) -> Vec<VertexSet> {
    h.edges()
        .iter()
        .copied()
        .filter(|e| e.is_subset(w))
        .collect()
}

pub fn is_cover(h: &Hypergraph, c: VertexSet) -> bool {
    h.edges().iter().all(|e| !e.is_disjoint(c))
}

pub fn min_covers(h: &Hypergraph) -> Vec<VertexSet> {
    minimal(
        all_subsets(h.vertices())
            .into_iter()
            .filter(|&c| is_cover(h, c))
            .collect(),
    )
}

pub fn cover_number(h: &Hypergraph) -> usize {
    all_subsets(h.vertices())
        .into_iter()
        .filter(|&c| is_cover(h, c))
        .map(|c| c.len())
        .min()
        .unwrap_or(0)
}

pub fn independence(h: &Hypergraph, w: VertexSet) -> usize {
    all_subsets(w)
        .into_iter()
        .filter(|&s| h.edges().iter().all(|e| !e.is_subset(s)))
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

/// Families of `k` pairwise disjoint edges, as unions.
pub fn matching_unions(edges: &[VertexSet], k: usize) -> Vec<VertexSet> {
    fn go(edges: &[VertexSet], k: usize, used: VertexSet, out: &mut Vec<VertexSet>) {
        if k == 0 {
            out.push(used);
            return;
        }
        for (i, &e) in edges.iter().enumerate() {
            if e.is_disjoint(used) {
                go(&edges[i + 1..], k - 1, used | e, out);
            }
        }
    }
    let mut out = Vec::new();
    go(edges, k, VertexSet::EMPTY, &mut out);
    out
}

pub fn matching_number(h: &Hypergraph) -> usize {
    (0..=h.edges().len())
        .take_while(|&k| !matching_unions(h.edges(), k).is_empty())
        .last()
        .unwrap_or(0)
}

pub fn induced_matching_number(g: &Graph) -> usize {
    let e = g.hypergraph().edges().to_vec();
    let mut best = 0;
    for m in 0u64..1 << e.len() {
        let chosen: Vec<VertexSet> = (0..e.len())
            .filter(|i| m >> i & 1 == 1)
            .map(|i| e[i])
            .collect();
        let union = chosen.iter().fold(VertexSet::EMPTY, |a, &b| a | b);
        if union.len() == 2 * chosen.len() && edges_in(g.hypergraph(), union).len() == chosen.len()
        {
            best = best.max(chosen.len());
        }
    }
    best
}

/// Generators of `I(H)^[k]`.
pub fn sqf_power(h: &Hypergraph, k: usize) -> Vec<VertexSet> {
    minimal(matching_unions(h.edges(), k))
}

/// Generators of `I(H)^{k}`: minimal sets meeting every minimal cover `k` times.
pub fn sqf_symbolic(h: &Hypergraph, k: usize) -> Vec<VertexSet> {
    let covers = min_covers(h);
    minimal(
        all_subsets(h.vertices())
            .into_iter()
            .filter(|&s| covers.iter().all(|&c| (c & s).len() >= k))
            .collect(),
    )
}

pub fn set_partitions(items: &[usize]) -> Vec<Vec<Vec<usize>>> {
    let Some((&first, rest)) = items.split_first() else {
        return vec![vec![]];
    };
    let mut out = Vec::new();
    for p in set_partitions(rest) {
        for i in 0..p.len() {
            let mut q = p.clone();
            q[i].insert(0, first);
            out.push(q);
        }
        let mut q = p;
        q.insert(0, vec![first]);
        out.push(q);
    }
    out
}

/// `H[W]` relabelled onto `0..|W|`.
pub fn induced(h: &Hypergraph, w: VertexSet) -> Hypergraph {
    let idx: Vec<usize> = w.to_vec();
    let pos = |v: usize| idx.iter().position(|&x| x == v).unwrap();
    Hypergraph::new(
        idx.len(),
        edges_in(h, w)
            .into_iter()
            .map(|e| e.iter().map(pos).collect::<VertexSet>()),
    )
    .unwrap()
}

/// Maximum score over all k-admissible sets, straight from the definition:
/// every part induces an edge, no edge of `H[C]` crosses parts,
/// `k <= Σν_i <= r + k - 1` and `F(H[C_i], ν_i)` is `(x_{C_i})`.
pub fn adm_brute(h: &Hypergraph, k: usize, symbolic: bool) -> Option<usize> {
    let nu = |g: &Hypergraph| {
        if symbolic {
            cover_number(g)
        } else {
            matching_number(g)
        }
    };
    let power = |g: &Hypergraph, j: usize| {
        if symbolic {
            sqf_symbolic(g, j)
        } else {
            sqf_power(g, j)
        }
    };
    let mut best = None;
    for c in all_subsets(h.vertices()) {
        for parts in set_partitions(&c.to_vec()) {
            let sets: Vec<VertexSet> = parts.iter().map(|p| p.iter().collect()).collect();
            if sets.iter().any(|&p| edges_in(h, p).is_empty()) {
                continue;
            }
            if edges_in(h, c)
                .iter()
                .any(|e| !sets.iter().any(|p| e.is_subset(*p)))
            {
                continue;
            }
            let subs: Vec<Hypergraph> = sets.iter().map(|&p| induced(h, p)).collect();
            let nus: Vec<usize> = subs.iter().map(nu).collect();
            let total: usize = nus.iter().sum();
            if total < k || total > sets.len() + k - 1 {
                continue;
            }
            let principal = subs
                .iter()
                .zip(&nus)
                .all(|(g, &j)| power(g, j) == vec![g.vertices()]);
            if principal {
                let score = c.len() - total;
                best = Some(best.map_or(score, |b: usize| b.max(score)));
            }
        }
    }
    best
}

pub fn random_graph(r: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut e = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            if r.gen_bool(p) {
                e.push((i, j));
            }
        }
    }
    Graph::new(n, e).unwrap()
}

/// Random simple hypergraph with edges of size 2 or 3.
pub fn random_hypergraph(r: &mut impl Rng, n: usize, m: usize) -> Hypergraph {
    let mut edges: Vec<VertexSet> = (0..m)
        .map(|_| {
            let size = r.gen_range(2..=3.min(n));
            let mut s = VertexSet::EMPTY;
            while s.len() < size {
                s.insert(r.gen_range(0..n));
            }
            s
        })
        .collect();
    edges = minimal(edges);
    Hypergraph::new(n, edges).unwrap()
}

pub fn random_family(r: &mut impl Rng, n: usize, m: usize) -> Vec<VertexSet> {
    (0..m)
        .map(|_| {
            let mut s = VertexSet::EMPTY;
            while s.is_empty() {
                s = (0..n).filter(|_| r.gen_bool(0.4)).collect();
            }
            s
        })
        .collect()
}

/// All labelled graphs on `n` vertices.
pub fn labelled_graphs(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    (0u64..1 << pairs.len()).map(move |m| {
        Graph::new(
            n,
            (0..pairs.len())
                .filter(|i| m >> i & 1 == 1)
                .map(|i| pairs[i]),
        )
        .unwrap()
    })
}

/// Number of isomorphism classes of labelled graphs satisfying `pred`, by
/// taking the minimum adjacency string over all n! relabellings.
pub fn brute_class_count(n: usize, pred: impl Fn(&Graph) -> bool) -> usize {
    let perms = permutations(n);
    let mut seen = std::collections::BTreeSet::new();
    for g in labelled_graphs(n).filter(|g| pred(g)) {
        let key = perms
            .iter()
            .map(|p| {
                let mut bits = Vec::new();
                for j in 0..n {
                    for i in 0..j {
                        bits.push(g.has_edge(p[i], p[j]));
                    }
                }
                bits
            })
            .min()
            .unwrap();
        seen.insert(key);
    }
    seen.len()
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..n {
            let mut q = p.clone();
            q.insert(i, n - 1);
            out.push(q);
        }
    }
    out
}

/// Induced cycles of length at least `min` on vertex subsets, by checking
/// that the subset induces a connected 2-regular graph.
pub fn has_induced_cycle(g: &Graph, min: usize) -> bool {
    all_subsets(g.vertices()).into_iter().any(|s| {
        s.len() >= min && s.iter().all(|v| (g.neighbors(v) & s).len() == 2) && {
            let (sub, _) = g.induced(s);
            sub.is_connected()
        }
    })
}

pub fn maximal_cliques(g: &Graph) -> Vec<VertexSet> {
    let cliques: Vec<VertexSet> = all_subsets(g.vertices())
        .into_iter()
        .filter(|&s| s.iter().all(|v| (s.without(v)).is_subset(g.neighbors(v))))
        .collect();
    cliques
        .iter()
        .copied()
        .filter(|&c| !cliques.iter().any(|&d| d != c && c.is_subset(d)))
        .collect()
}

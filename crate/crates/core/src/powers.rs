//! Squarefree powers, squarefree symbolic powers, filtrations and mixed sums.

use std::collections::HashSet;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::ideal::SqfIdeal;
use crate::vertex_set::VertexSet;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PowerKind {
    /// `I^[k]`, generated by the k-matchings.
    #[serde(rename = "ordinary")]
    SquarefreeOrdinary,
    /// `I^{k}`, the squarefree part of the k-th symbolic power.
    #[serde(rename = "symbolic")]
    SquarefreeSymbolic,
}

impl PowerKind {
    pub const ALL: [PowerKind; 2] = [PowerKind::SquarefreeOrdinary, PowerKind::SquarefreeSymbolic];

    pub fn name(self) -> &'static str {
        match self {
            PowerKind::SquarefreeOrdinary => "ordinary",
            PowerKind::SquarefreeSymbolic => "symbolic",
        }
    }

    pub fn power(self, h: &Hypergraph, k: usize) -> SqfIdeal {
        match self {
            PowerKind::SquarefreeOrdinary => sqf_power(h, k),
            PowerKind::SquarefreeSymbolic => sqf_symbolic_power(h, k as i64),
        }
    }
}

impl std::str::FromStr for PowerKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "ordinary" => Ok(PowerKind::SquarefreeOrdinary),
            "symbolic" => Ok(PowerKind::SquarefreeSymbolic),
            _ => Err(Error::InvalidParameter(format!("unknown power kind {s:?}"))),
        }
    }
}

/// `I(H)^[k]`: minimal unions of k pairwise disjoint edges. `k = 0` gives
/// the unit ideal; the result is zero exactly when `k` exceeds the matching
/// number.
pub fn sqf_power(h: &Hypergraph, k: usize) -> SqfIdeal {
    let n = h.n_vertices();
    if k == 0 {
        return SqfIdeal::unit(n);
    }
    fn go(edges: &[VertexSet], from: usize, used: VertexSet, left: usize, out: &mut HashSet<u64>) {
        if left == 0 {
            out.insert(used.bits());
            return;
        }
        if edges.len() - from < left {
            return;
        }
        for i in from..edges.len() {
            if edges[i].is_disjoint(used) {
                go(edges, i + 1, used | edges[i], left - 1, out);
            }
        }
    }
    let mut out = HashSet::new();
    go(h.edges(), 0, VertexSet::EMPTY, k, &mut out);
    SqfIdeal::from_gens_unchecked(n, out.into_iter().map(VertexSet::from_bits).collect())
}

/// `I(H)^{k}`: squarefree monomials meeting every minimal vertex cover in at
/// least `k` vertices. `k <= 0` gives the unit ideal.
pub fn sqf_symbolic_power(h: &Hypergraph, k: i64) -> SqfIdeal {
    let n = h.n_vertices();
    if k <= 0 {
        return SqfIdeal::unit(n);
    }
    let k = k as usize;
    let covers = h.minimal_vertex_covers();
    symbolic_from_covers(n, &covers, k)
}

/// Generators of `∩_C 𝔭_C^{k}` (squarefree part) by branch and bound.
pub(crate) fn symbolic_from_covers(n: usize, covers: &[VertexSet], k: usize) -> SqfIdeal {
    if covers.iter().any(|c| c.len() < k) {
        return SqfIdeal::zero(n);
    }
    // Vertices in many covers first: they satisfy the most constraints.
    let useful = covers.iter().fold(VertexSet::EMPTY, |a, &c| a | c);
    let mut order: Vec<usize> = useful.iter().collect();
    order.sort_by_key(|&v| {
        (
            std::cmp::Reverse(covers.iter().filter(|c| c.contains(v)).count()),
            v,
        )
    });
    let mut suffix = vec![VertexSet::EMPTY; order.len() + 1];
    for i in (0..order.len()).rev() {
        suffix[i] = suffix[i + 1].with(order[i]);
    }

    struct Search<'a> {
        covers: &'a [VertexSet],
        order: &'a [usize],
        suffix: &'a [VertexSet],
        k: usize,
        out: Vec<VertexSet>,
    }
    impl Search<'_> {
        fn go(&mut self, idx: usize, m: VertexSet) {
            let mut satisfied = true;
            for &c in self.covers {
                let have = (m & c).len();
                if have < self.k {
                    satisfied = false;
                    if have + (self.suffix[idx] & c).len() < self.k {
                        return;
                    }
                }
            }
            if satisfied {
                // m is minimal iff each member is needed by a tight cover.
                let minimal = m.iter().all(|x| {
                    self.covers
                        .iter()
                        .any(|&c| c.contains(x) && (m & c).len() == self.k)
                });
                if minimal {
                    self.out.push(m);
                }
                return;
            }
            let v = self.order[idx];
            self.go(idx + 1, m.with(v));
            self.go(idx + 1, m);
        }
    }
    let mut s = Search {
        covers,
        order: &order,
        suffix: &suffix,
        k,
        out: Vec::new(),
    };
    s.go(0, VertexSet::EMPTY);
    SqfIdeal::from_gens_unchecked(n, s.out)
}

/// `ν_F(H)`: the largest k with a nonzero k-th power.
pub fn nu_f(h: &Hypergraph, kind: PowerKind) -> usize {
    match kind {
        PowerKind::SquarefreeOrdinary => h.matching_number(),
        // ht I(H) equals β(H): the minimal primes are the minimal covers.
        PowerKind::SquarefreeSymbolic => h.cover_number(),
    }
}

/// Whether `F(H, ν_F(H)) = (x_{V(H)})`.
///
/// For the symbolic kind this is decided twice, by the minimal-cover
/// criterion and by comparing generators; a disagreement is an internal error.
pub fn is_principal_full_support(h: &Hypergraph, kind: PowerKind) -> Result<bool> {
    if h.edges().is_empty() {
        return Err(Error::InvalidParameter(
            "principality test needs at least one edge".into(),
        ));
    }
    let full = SqfIdeal::principal(h.n_vertices(), h.vertices());
    match kind {
        PowerKind::SquarefreeOrdinary => Ok(sqf_power(h, h.matching_number()) == full),
        PowerKind::SquarefreeSymbolic => {
            let covers = h.minimal_vertex_covers();
            let beta = covers.iter().map(|c| c.len()).min().unwrap_or(0);
            let criterion = h
                .vertices()
                .iter()
                .all(|x| covers.iter().any(|c| c.contains(x) && c.len() == beta));
            let direct = symbolic_from_covers(h.n_vertices(), &covers, beta) == full;
            if criterion != direct {
                return Err(Error::Internal(format!(
                    "cover criterion ({criterion}) and generators ({direct}) disagree on {:?}",
                    h.edges()
                )));
            }
            Ok(direct)
        }
    }
}

/// A decreasing sequence `I_0 = R ⊇ I_1 ⊇ ...` that is zero past `nu`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Filtration {
    universe: usize,
    ideals: Vec<SqfIdeal>,
}

impl Filtration {
    /// `ideals[i] = I_i` for `0 <= i <= ν`; trailing zero ideals are dropped.
    pub fn new(mut ideals: Vec<SqfIdeal>) -> Result<Self> {
        while ideals.last().is_some_and(|i| i.is_zero()) {
            ideals.pop();
        }
        let universe = ideals.first().map_or(0, |i| i.universe());
        if ideals.first().is_none_or(|i| !i.is_unit()) {
            return Err(Error::InvalidParameter(
                "filtration must start with the unit ideal".into(),
            ));
        }
        if ideals.len() < 2 || ideals[1].is_unit() {
            return Err(Error::InvalidParameter(
                "I_1 must be a nonzero proper ideal".into(),
            ));
        }
        for w in ideals.windows(2) {
            if w[1].universe() != universe {
                return Err(Error::UniverseMismatch {
                    left: universe,
                    right: w[1].universe(),
                });
            }
            if w[1].is_zero() || !w[1].is_contained_in(&w[0]) {
                return Err(Error::InvalidParameter(
                    "filtration is not decreasing".into(),
                ));
            }
        }
        Ok(Filtration { universe, ideals })
    }

    /// `{F(H, i)}_{i ≥ 0}`; `H` needs at least one edge.
    pub fn from_power(h: &Hypergraph, kind: PowerKind) -> Result<Self> {
        let nu = nu_f(h, kind);
        Filtration::new((0..=nu).map(|i| kind.power(h, i)).collect())
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    /// `ν(𝓘)`, the last index with a nonzero ideal.
    pub fn nu(&self) -> usize {
        self.ideals.len() - 1
    }

    pub fn get(&self, i: usize) -> SqfIdeal {
        self.ideals
            .get(i)
            .cloned()
            .unwrap_or_else(|| SqfIdeal::zero(self.universe))
    }

    pub fn ideals(&self) -> &[SqfIdeal] {
        &self.ideals
    }

    /// Variables occurring in some generator of some `I_i`.
    pub fn support(&self) -> VertexSet {
        self.ideals
            .iter()
            .fold(VertexSet::EMPTY, |a, i| a | i.support())
    }

    /// Moves the variables to `offset..offset+universe` inside a larger ring.
    pub fn embed(&self, offset: usize, universe: usize) -> Result<Filtration> {
        if offset + self.universe > universe {
            return Err(Error::UniverseTooLarge(offset + self.universe));
        }
        let map: Vec<usize> = (0..self.universe).map(|v| v + offset).collect();
        Ok(Filtration {
            universe,
            ideals: self
                .ideals
                .iter()
                .map(|i| i.relabel(&map, universe))
                .collect(),
        })
    }

    /// Per step `k = 1..=ν`, whether `∂*(I_k) ⊆ I_{k-1}`, the sufficient
    /// condition for the inclusion `I_k → I_{k-1}` to be Tor-vanishing.
    pub fn check_del_condition(&self) -> Vec<bool> {
        (1..self.ideals.len())
            .map(|k| {
                let del = self.ideals[k]
                    .del_star()
                    .expect("I_k is proper and nonzero");
                del.is_contained_in(&self.ideals[k - 1])
            })
            .collect()
    }

    pub fn is_tor_vanishing_by_del(&self) -> bool {
        self.check_del_condition().iter().all(|&b| b)
    }
}

/// `Q_n = Σ_{i+j=n} I_{n-i} J_i` for filtrations over the same ring whose
/// ideals live in disjoint sets of variables. Past `ν(𝓘) + ν(𝓙)` the sum is
/// empty and the zero ideal is returned.
pub fn mixed_sum(fa: &Filtration, fb: &Filtration, n: usize) -> Result<SqfIdeal> {
    if fa.universe != fb.universe {
        return Err(Error::UniverseMismatch {
            left: fa.universe,
            right: fb.universe,
        });
    }
    if !fa.support().is_disjoint(fb.support()) {
        return Err(Error::OverlappingSupports);
    }
    let lo = n.saturating_sub(fa.nu());
    let hi = n.min(fb.nu());
    let mut acc = SqfIdeal::zero(fa.universe);
    for i in lo..=hi {
        acc = acc.sum(&fa.get(n - i).product(&fb.get(i))?)?;
    }
    Ok(acc)
}

//! Squarefree monomial ideals stored as their minimal generating antichain.

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::vertex_set::{VertexSet, MAX_UNIVERSE};

/// Minimal degree of an ideal; the zero ideal has degree `Infinite`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    Finite(usize),
    Infinite,
}

/// A squarefree monomial ideal of `K[x_0, .., x_{n-1}]`.
///
/// `gens` is the unique minimal generating set, kept in lex order. The zero
/// ideal has no generators; the unit ideal is generated by the empty support.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct SqfIdeal {
    universe: usize,
    gens: Vec<VertexSet>,
}

/// Removes non-minimal supports and sorts in lex order.
pub fn minimalize(mut sets: Vec<VertexSet>) -> Vec<VertexSet> {
    sets.sort_by_key(|s| (s.len(), s.bits()));
    sets.dedup();
    let mut kept: Vec<VertexSet> = Vec::with_capacity(sets.len());
    for s in sets {
        if !kept.iter().any(|k| k.is_subset(s)) {
            kept.push(s);
        }
    }
    kept.sort_by(|a, b| a.lex_cmp(*b));
    kept
}

impl SqfIdeal {
    pub fn zero(universe: usize) -> Self {
        SqfIdeal {
            universe,
            gens: Vec::new(),
        }
    }

    pub fn unit(universe: usize) -> Self {
        SqfIdeal {
            universe,
            gens: vec![VertexSet::EMPTY],
        }
    }

    pub fn principal(universe: usize, m: VertexSet) -> Self {
        SqfIdeal {
            universe,
            gens: vec![m],
        }
    }

    /// Minimalizes an arbitrary generating family.
    pub fn from_gens(universe: usize, gens: impl IntoIterator<Item = VertexSet>) -> Result<Self> {
        if universe > MAX_UNIVERSE {
            return Err(Error::UniverseTooLarge(universe));
        }
        let gens: Vec<VertexSet> = gens.into_iter().collect();
        if let Some(g) = gens.iter().find(|g| !g.within(universe)) {
            return Err(Error::VertexOutOfRange {
                vertex: (*g).max().unwrap_or(0),
                universe,
            });
        }
        Ok(SqfIdeal {
            universe,
            gens: minimalize(gens),
        })
    }

    pub(crate) fn from_gens_unchecked(universe: usize, gens: Vec<VertexSet>) -> Self {
        SqfIdeal {
            universe,
            gens: minimalize(gens),
        }
    }

    /// Edge ideal `I(H)`.
    pub fn edge_ideal(h: &Hypergraph) -> Self {
        SqfIdeal {
            universe: h.n_vertices(),
            gens: h.edges().to_vec(),
        }
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn gens(&self) -> &[VertexSet] {
        &self.gens
    }

    pub fn is_zero(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.gens.first() == Some(&VertexSet::EMPTY)
    }

    /// Union of all generator supports.
    pub fn support(&self) -> VertexSet {
        self.gens.iter().fold(VertexSet::EMPTY, |a, &g| a | g)
    }

    pub fn membership(&self, m: VertexSet) -> bool {
        self.gens.iter().any(|g| g.is_subset(m))
    }

    pub fn equals(&self, other: &SqfIdeal) -> bool {
        self == other
    }

    /// `self ⊆ other`.
    pub fn is_contained_in(&self, other: &SqfIdeal) -> bool {
        self.gens.iter().all(|&g| other.membership(g))
    }

    /// `δ(I)`, the least degree of a monomial in the ideal.
    pub fn delta_min_degree(&self) -> Degree {
        self.gens
            .iter()
            .map(|g| g.len())
            .min()
            .map_or(Degree::Infinite, Degree::Finite)
    }

    fn check_universe(&self, other: &SqfIdeal) -> Result<()> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch {
                left: self.universe,
                right: other.universe,
            });
        }
        Ok(())
    }

    pub fn sum(&self, other: &SqfIdeal) -> Result<SqfIdeal> {
        self.check_universe(other)?;
        let gens = self.gens.iter().chain(other.gens.iter()).copied().collect();
        Ok(SqfIdeal::from_gens_unchecked(self.universe, gens))
    }

    /// Product of two ideals generated in disjoint sets of variables, the
    /// only case where the product of squarefree ideals stays squarefree.
    pub fn product(&self, other: &SqfIdeal) -> Result<SqfIdeal> {
        self.check_universe(other)?;
        if !self.support().is_disjoint(other.support()) {
            return Err(Error::OverlappingSupports);
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| a | b))
            .collect();
        Ok(SqfIdeal::from_gens_unchecked(self.universe, gens))
    }

    pub fn intersect(&self, other: &SqfIdeal) -> Result<SqfIdeal> {
        self.check_universe(other)?;
        let gens = self
            .gens
            .iter()
            .flat_map(|&a| other.gens.iter().map(move |&b| a | b))
            .collect();
        Ok(SqfIdeal::from_gens_unchecked(self.universe, gens))
    }

    /// `(I : x_m)`.
    pub fn colon(&self, m: VertexSet) -> Result<SqfIdeal> {
        if !m.within(self.universe) {
            return Err(Error::VertexOutOfRange {
                vertex: m.max().unwrap_or(0),
                universe: self.universe,
            });
        }
        let gens = self.gens.iter().map(|&g| g - m).collect();
        Ok(SqfIdeal::from_gens_unchecked(self.universe, gens))
    }

    /// `I^{≤ x_m}`: generators dividing `x_m`.
    pub fn restrict(&self, m: VertexSet) -> SqfIdeal {
        SqfIdeal {
            universe: self.universe,
            gens: self
                .gens
                .iter()
                .copied()
                .filter(|g| g.is_subset(m))
                .collect(),
        }
    }

    /// `∂*(I)`, generated by `m/x` for generators `m` and `x | m`.
    pub fn del_star(&self) -> Result<SqfIdeal> {
        if self.is_zero() {
            return Err(Error::DegenerateIdeal("zero"));
        }
        if self.is_unit() {
            return Err(Error::DegenerateIdeal("unit"));
        }
        let gens = self
            .gens
            .iter()
            .flat_map(|&g| g.iter().map(move |x| g.without(x)))
            .collect();
        Ok(SqfIdeal::from_gens_unchecked(self.universe, gens))
    }

    /// Renames variables into a universe of size `universe` through `map`.
    pub fn relabel(&self, map: &[usize], universe: usize) -> SqfIdeal {
        SqfIdeal::from_gens_unchecked(universe, self.gens.iter().map(|g| g.map(map)).collect())
    }

    /// Canonical serialization; byte-stable for equal ideals.
    pub fn to_json(&self) -> IdealJson {
        IdealJson {
            n: self.universe,
            gens: self.gens.iter().map(|g| g.to_vec()).collect(),
        }
    }

    pub fn canonical_string(&self) -> String {
        serde_json::to_string(&self.to_json()).expect("plain data serializes")
    }

    pub fn from_json(j: &IdealJson) -> Result<SqfIdeal> {
        let mut gens = Vec::with_capacity(j.gens.len());
        for g in &j.gens {
            if let Some(&v) = g.iter().find(|&&v| v >= j.n.min(MAX_UNIVERSE)) {
                return Err(Error::VertexOutOfRange {
                    vertex: v,
                    universe: j.n,
                });
            }
            gens.push(g.iter().collect());
        }
        SqfIdeal::from_gens(j.n, gens)
    }
}

impl PartialOrd for SqfIdeal {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for SqfIdeal {
    fn cmp(&self, other: &Self) -> Ordering {
        self.universe.cmp(&other.universe).then_with(|| {
            let a = self.gens.iter().map(|g| g.to_vec());
            let b = other.gens.iter().map(|g| g.to_vec());
            a.cmp(b)
        })
    }
}

impl fmt::Debug for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

impl fmt::Display for SqfIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "(0)");
        }
        write!(f, "(")?;
        for (i, g) in self.gens.iter().enumerate() {
            if i > 0 {
                write!(f, ", ")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ")")
    }
}

impl Serialize for SqfIdeal {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.to_json().serialize(s)
    }
}

impl<'de> Deserialize<'de> for SqfIdeal {
    fn deserialize<D: Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let j = IdealJson::deserialize(d)?;
        SqfIdeal::from_json(&j).map_err(serde::de::Error::custom)
    }
}

/// JSON form `{"n": int, "gens": [[vars...], ...]}` with sorted generators.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub gens: Vec<Vec<usize>>,
}

//! General monomial ideals over exponent vectors. Used only as an
//! independent oracle for squarefree symbolic powers.

use crate::error::{Error, Result};
use crate::ideal::SqfIdeal;
use crate::vertex_set::VertexSet;

/// Default cap on intermediate generator counts.
pub const DEFAULT_GENERATOR_CAP: usize = 1_000_000;

#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GenMonomial(Vec<u8>);

impl GenMonomial {
    pub fn one(universe: usize) -> Self {
        GenMonomial(vec![0; universe])
    }

    pub fn variable(universe: usize, v: usize) -> Self {
        let mut e = vec![0; universe];
        e[v] = 1;
        GenMonomial(e)
    }

    pub fn from_support(universe: usize, s: VertexSet) -> Self {
        GenMonomial((0..universe).map(|v| s.contains(v) as u8).collect())
    }

    pub fn exponents(&self) -> &[u8] {
        &self.0
    }

    pub fn divides(&self, other: &GenMonomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn lcm(&self, other: &GenMonomial) -> GenMonomial {
        GenMonomial(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| *a.max(b))
                .collect(),
        )
    }

    pub fn mul(&self, other: &GenMonomial) -> Result<GenMonomial> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(a, b)| a.checked_add(*b).ok_or(Error::ExponentOverflow))
            .collect::<Result<Vec<u8>>>()
            .map(GenMonomial)
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.iter().all(|&e| e <= 1)
    }

    pub fn support(&self) -> VertexSet {
        self.0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(v, _)| v)
            .collect()
    }

    fn degree(&self) -> usize {
        self.0.iter().map(|&e| e as usize).sum()
    }
}

/// A monomial ideal given by its divisibility-minimal generators.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GenIdeal {
    universe: usize,
    gens: Vec<GenMonomial>,
    cap: usize,
}

fn minimal(mut gens: Vec<GenMonomial>) -> Vec<GenMonomial> {
    gens.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| a.cmp(b)));
    gens.dedup();
    let mut kept: Vec<GenMonomial> = Vec::with_capacity(gens.len());
    for g in gens {
        if !kept.iter().any(|k| k.divides(&g)) {
            kept.push(g);
        }
    }
    kept.sort();
    kept
}

impl GenIdeal {
    pub fn new(universe: usize, gens: Vec<GenMonomial>) -> Result<Self> {
        if gens.iter().any(|g| g.0.len() != universe) {
            return Err(Error::InvalidParameter("exponent vector length".into()));
        }
        Ok(GenIdeal {
            universe,
            gens: minimal(gens),
            cap: DEFAULT_GENERATOR_CAP,
        })
    }

    /// The prime `(x_v : v ∈ s)`.
    pub fn prime(universe: usize, s: VertexSet) -> Self {
        GenIdeal {
            universe,
            gens: s
                .iter()
                .map(|v| GenMonomial::variable(universe, v))
                .collect(),
            cap: DEFAULT_GENERATOR_CAP,
        }
    }

    pub fn unit(universe: usize) -> Self {
        GenIdeal {
            universe,
            gens: vec![GenMonomial::one(universe)],
            cap: DEFAULT_GENERATOR_CAP,
        }
    }

    pub fn with_cap(mut self, cap: usize) -> Self {
        self.cap = cap;
        self
    }

    pub fn universe(&self) -> usize {
        self.universe
    }

    pub fn gens(&self) -> &[GenMonomial] {
        &self.gens
    }

    fn guard(&self, count: usize) -> Result<()> {
        if count > self.cap {
            return Err(Error::BudgetExceeded(format!(
                "{count} intermediate generators exceeds cap {}",
                self.cap
            )));
        }
        Ok(())
    }

    pub fn gen_intersect(&self, other: &GenIdeal) -> Result<GenIdeal> {
        if self.universe != other.universe {
            return Err(Error::UniverseMismatch {
                left: self.universe,
                right: other.universe,
            });
        }
        self.guard(self.gens.len().saturating_mul(other.gens.len()))?;
        let gens = self
            .gens
            .iter()
            .flat_map(|a| other.gens.iter().map(move |b| a.lcm(b)))
            .collect();
        Ok(GenIdeal {
            universe: self.universe,
            gens: minimal(gens),
            cap: self.cap.min(other.cap),
        })
    }

    fn gen_product(&self, other: &GenIdeal) -> Result<GenIdeal> {
        self.guard(self.gens.len().saturating_mul(other.gens.len()))?;
        let mut gens = Vec::with_capacity(self.gens.len() * other.gens.len());
        for a in &self.gens {
            for b in &other.gens {
                gens.push(a.mul(b)?);
            }
        }
        Ok(GenIdeal {
            universe: self.universe,
            gens: minimal(gens),
            cap: self.cap,
        })
    }

    /// `I^k` by repeated multiplication, minimalizing at every step.
    pub fn gen_power(&self, k: usize) -> Result<GenIdeal> {
        if k == 0 {
            return Err(Error::InvalidParameter("gen_power needs k >= 1".into()));
        }
        let mut acc = self.clone();
        for _ in 1..k {
            acc = acc.gen_product(self)?;
        }
        Ok(acc)
    }

    /// `sqf(I)`: the squarefree minimal generators.
    pub fn sqf_part(&self) -> SqfIdeal {
        SqfIdeal::from_gens_unchecked(
            self.universe,
            self.gens
                .iter()
                .filter(|g| g.is_squarefree())
                .map(|g| g.support())
                .collect(),
        )
    }
}

/// `sqf(𝔭_1^k ∩ ⋯ ∩ 𝔭_r^k)` for the primes given by `covers`.
pub fn symbolic_power_oracle(universe: usize, covers: &[VertexSet], k: usize) -> Result<SqfIdeal> {
    let mut acc = GenIdeal::unit(universe);
    for &c in covers {
        if c.is_empty() {
            continue;
        }
        let p = GenIdeal::prime(universe, c).gen_power(k)?;
        acc = acc.gen_intersect(&p)?;
    }
    Ok(acc.sqf_part())
}

//! Multigraded Betti tables and Castelnuovo–Mumford regularity of
//! squarefree monomial ideals, computed twice: through the Stanley–Reisner
//! complex (Hochster) and through upper Koszul complexes.

use std::collections::{BTreeMap, HashSet};
use std::time::{Duration, Instant};

use serde::Serialize;

use crate::error::{Error, Result};
use crate::homology::{reduced_homology, FieldChoice};
use crate::ideal::SqfIdeal;
use crate::powers::{mixed_sum, Filtration};
use crate::vertex_set::VertexSet;

pub const DEFAULT_MAX_SUPPORT: usize = 12;

/// Limits for one regularity computation.
#[derive(Clone, Copy, Debug)]
pub struct Budget {
    pub deadline: Option<Instant>,
    /// Largest number of variables an ideal may actually involve.
    pub max_support: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget {
            deadline: None,
            max_support: DEFAULT_MAX_SUPPORT,
        }
    }
}

impl Budget {
    pub fn with_timeout(timeout: Duration) -> Self {
        Budget {
            deadline: Some(Instant::now() + timeout),
            ..Budget::default()
        }
    }

    fn check_time(&self) -> Result<()> {
        match self.deadline {
            Some(d) if Instant::now() > d => Err(Error::BudgetExceeded("deadline passed".into())),
            _ => Ok(()),
        }
    }

    fn check_support(&self, a: &SqfIdeal) -> Result<()> {
        let s = a.support().len();
        if s > self.max_support {
            return Err(Error::BudgetExceeded(format!(
                "ideal involves {s} variables, cap is {}",
                self.max_support
            )));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BettiModule {
    /// Betti numbers of `S/I`.
    Quotient,
    /// Betti numbers of `I`.
    Ideal,
}

/// Nonzero multigraded Betti numbers `β_{i,σ}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    pub module: BettiModule,
    pub entries: BTreeMap<(usize, VertexSet), u64>,
}

#[derive(Serialize)]
struct BettiEntryJson {
    i: usize,
    multidegree: VertexSet,
    rank: u64,
}

impl Serialize for BettiTable {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Table<'a> {
            module: &'a BettiModule,
            entries: Vec<BettiEntryJson>,
        }
        Table {
            module: &self.module,
            entries: self
                .entries
                .iter()
                .map(|(&(i, multidegree), &rank)| BettiEntryJson {
                    i,
                    multidegree,
                    rank,
                })
                .collect(),
        }
        .serialize(s)
    }
}

impl BettiTable {
    pub fn get(&self, i: usize, sigma: VertexSet) -> u64 {
        self.entries.get(&(i, sigma)).copied().unwrap_or(0)
    }

    /// `(i, j) -> Σ_{|σ| = j} β_{i,σ}`.
    pub fn coarse(&self) -> BTreeMap<(usize, usize), u64> {
        let mut out = BTreeMap::new();
        for (&(i, s), &b) in &self.entries {
            *out.entry((i, s.len())).or_insert(0) += b;
        }
        out
    }

    /// Total Betti numbers indexed by homological degree.
    pub fn totals(&self) -> Vec<u64> {
        let len = self.entries.keys().map(|&(i, _)| i + 1).max().unwrap_or(0);
        let mut out = vec![0; len];
        for (&(i, _), &b) in &self.entries {
            out[i] += b;
        }
        out
    }

    /// Converts a table of `S/I` into the table of `I`, using
    /// `β_{i,σ}(I) = β_{i+1,σ}(S/I)`. The unit ideal has an empty quotient
    /// table and the ideal table `{(0, ∅): 1}`.
    pub fn to_ideal(&self) -> BettiTable {
        match self.module {
            BettiModule::Ideal => self.clone(),
            BettiModule::Quotient => {
                let entries = if self.entries.is_empty() {
                    BTreeMap::from([((0, VertexSet::EMPTY), 1)])
                } else {
                    self.entries
                        .iter()
                        .filter(|(&(i, _), _)| i >= 1)
                        .map(|(&(i, s), &b)| ((i - 1, s), b))
                        .collect()
                };
                BettiTable {
                    module: BettiModule::Ideal,
                    entries,
                }
            }
        }
    }

    /// `reg(I) = max{|σ| - i}` over the ideal table; 0 for an empty table.
    pub fn regularity(&self) -> usize {
        let t = self.to_ideal();
        t.entries
            .keys()
            .map(|&(i, s)| s.len() - i)
            .max()
            .unwrap_or(0)
    }
}

/// The lcm lattice: every union of a set of generators, including `∅`.
pub fn lcm_lattice(a: &SqfIdeal) -> Vec<VertexSet> {
    let mut seen: HashSet<u64> = HashSet::from([0]);
    let mut all = vec![VertexSet::EMPTY];
    for &g in a.gens() {
        let mut fresh = Vec::new();
        for &s in &all {
            let u = s | g;
            if seen.insert(u.bits()) {
                fresh.push(u);
            }
        }
        all.extend(fresh);
    }
    all.sort();
    all
}

/// Betti table of `S/a` by Hochster's formula
/// `β_{i,σ}(S/a) = dim H̃_{|σ|-i-1}(Δ_σ)`, where the faces of `Δ` are the
/// squarefree monomials outside `a`. Only the lcm lattice is visited.
pub fn betti_table(a: &SqfIdeal, field: FieldChoice, budget: &Budget) -> Result<BettiTable> {
    budget.check_support(a)?;
    let mut entries = BTreeMap::new();
    for sigma in lcm_lattice(a) {
        budget.check_time()?;
        let h = reduced_homology(sigma, |t| !a.membership(t), field);
        for (d, b) in h {
            let i = sigma.len() as i64 - d - 1;
            entries.insert((i as usize, sigma), b);
        }
    }
    Ok(BettiTable {
        module: BettiModule::Quotient,
        entries,
    })
}

/// Betti table of `a` itself through upper Koszul complexes:
/// `β_{i,σ}(a) = dim H̃_{i-1}(K^σ)` with `K^σ = {τ ⊆ σ : x_{σ∖τ} ∈ a}`.
/// Visits every squarefree σ in `a` on its support, without lattice pruning.
pub fn betti_table_koszul(a: &SqfIdeal, field: FieldChoice, budget: &Budget) -> Result<BettiTable> {
    budget.check_support(a)?;
    let mut entries = BTreeMap::new();
    if !a.is_zero() {
        for sigma in a.support().subsets() {
            if !a.membership(sigma) {
                continue;
            }
            budget.check_time()?;
            let h = reduced_homology(sigma, |t| a.membership(sigma - t), field);
            for (d, b) in h {
                entries.insert(((d + 1) as usize, sigma), b);
            }
        }
    }
    Ok(BettiTable {
        module: BettiModule::Ideal,
        entries,
    })
}

/// `reg(a)` with the conventions `reg(0) = reg(R) = 0`.
pub fn regularity(a: &SqfIdeal, field: FieldChoice) -> Result<usize> {
    regularity_with(a, field, &Budget::default())
}

pub fn regularity_with(a: &SqfIdeal, field: FieldChoice, budget: &Budget) -> Result<usize> {
    if a.is_zero() || a.is_unit() {
        return Ok(0);
    }
    Ok(betti_table(a, field, budget)?.regularity())
}

/// Direct `reg(Q_n)` next to both max-formulas for mixed sums of
/// Tor-vanishing filtrations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MixedSumReport {
    pub n: usize,
    pub nu_a: usize,
    pub nu_b: usize,
    /// False when `n > ν(𝓘) + ν(𝓙)`; then `Q_n = 0` and no formula applies.
    pub in_range: bool,
    pub direct: usize,
    /// `(a, b)`: `i ∈ [a, b]`, `j ∈ [a + 1, b]`.
    pub window_first: (usize, usize),
    pub first_form: Option<usize>,
    /// `(a', b')`: `i ∈ [a', b']`, `j ∈ [a + 1, b]`.
    pub window_second: (usize, usize),
    pub second_form: Option<usize>,
    pub holds: bool,
}

/// Checks `reg(Q_n)` against the filtration formula. Both filtrations
/// must satisfy the `∂*` criterion.
pub fn verify_mixed_sum_regularity(
    fa: &Filtration,
    fb: &Filtration,
    n: usize,
    field: FieldChoice,
    budget: &Budget,
) -> Result<MixedSumReport> {
    if !fa.is_tor_vanishing_by_del() || !fb.is_tor_vanishing_by_del() {
        return Err(Error::InvalidParameter(
            "filtrations must satisfy the del-star condition".into(),
        ));
    }
    let (nu_a, nu_b) = (fa.nu(), fb.nu());
    let q = mixed_sum(fa, fb, n)?;
    let direct = regularity_with(&q, field, budget)?;
    let a = n.saturating_sub(nu_a);
    let b = n.min(nu_b);
    let a2 = a.max(1);
    let b2 = n.saturating_sub(1).min(nu_b);

    let mut reg_cache: BTreeMap<(bool, usize), usize> = BTreeMap::new();
    let mut reg = |left: bool, idx: usize| -> Result<usize> {
        if let Some(&r) = reg_cache.get(&(left, idx)) {
            return Ok(r);
        }
        let ideal = if left { fa.get(idx) } else { fb.get(idx) };
        let r = regularity_with(&ideal, field, budget)?;
        reg_cache.insert((left, idx), r);
        Ok(r)
    };
    let mut eval = |i_lo: usize, i_hi: usize| -> Result<Option<usize>> {
        let mut best: Option<usize> = None;
        for i in i_lo..=i_hi {
            best = best.max(Some(reg(true, n - i)? + reg(false, i)?));
        }
        for j in a + 1..=b {
            best = best.max(Some(reg(true, n - j + 1)? + reg(false, j)? - 1));
        }
        Ok(best)
    };
    let in_range = n <= nu_a + nu_b;
    let (first_form, second_form) = if in_range {
        (eval(a, b)?, eval(a2, b2)?)
    } else {
        (None, None)
    };
    let holds = if in_range {
        first_form == Some(direct) && second_form.map_or(direct == 0, |v| v == direct)
    } else {
        q.is_zero() && direct == 0
    };
    Ok(MixedSumReport {
        n,
        nu_a,
        nu_b,
        in_range,
        direct,
        window_first: (a, b),
        first_form,
        window_second: (a2, b2),
        second_form,
        holds,
    })
}

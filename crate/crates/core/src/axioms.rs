//! Checks of the squarefree-power-like axioms on finite samples.
//!
//! A function `F(H, k)` is squarefree-power-like when
//! (a) `F(H, 0) = R`, `F(H, 1) = I(H)` and `F(H, k)` lives on `V(H)`;
//! (b) `∂* F(H, k) ⊆ F(H, k - 1)`;
//! (c) restricting `F(H, k)` to an induced `H_1` gives `F(H_1, k)`;
//! (d) `F(H_1 + H_2, k) = Σ_i F(H_1, i) F(H_2, k - i)`.

use serde::Serialize;

use crate::hypergraph::{EdgeListJson, Hypergraph};
use crate::ideal::SqfIdeal;
use crate::powers::{nu_f, PowerKind};
use crate::vertex_set::VertexSet;

pub trait PowerFunction: Sync {
    fn name(&self) -> String;
    fn power(&self, h: &Hypergraph, k: usize) -> SqfIdeal;

    /// Largest `k` with `F(H, k) ≠ 0`, found by scanning.
    fn nu(&self, h: &Hypergraph) -> usize {
        (1..=h.n_vertices() + 1)
            .take_while(|&k| !self.power(h, k).is_zero())
            .last()
            .unwrap_or(0)
    }
}

impl PowerFunction for PowerKind {
    fn name(&self) -> String {
        PowerKind::name(*self).to_string()
    }

    fn power(&self, h: &Hypergraph, k: usize) -> SqfIdeal {
        PowerKind::power(*self, h, k)
    }

    fn nu(&self, h: &Hypergraph) -> usize {
        nu_f(h, *self)
    }
}

/// Negative control: `kind` with the lex-last generator of `F(H, k)` removed
/// whenever that ideal has at least two generators.
#[derive(Clone, Copy, Debug)]
pub struct DropLastGenerator {
    pub kind: PowerKind,
    pub k: usize,
}

impl PowerFunction for DropLastGenerator {
    fn name(&self) -> String {
        format!(
            "{} without its last generator at k = {}",
            self.kind.name(),
            self.k
        )
    }

    fn power(&self, h: &Hypergraph, k: usize) -> SqfIdeal {
        let p = self.kind.power(h, k);
        if k != self.k || p.gens().len() < 2 {
            return p;
        }
        let gens = &p.gens()[..p.gens().len() - 1];
        SqfIdeal::from_gens(p.universe(), gens.iter().copied()).expect("subset of valid generators")
    }

    fn nu(&self, h: &Hypergraph) -> usize {
        nu_f(h, self.kind)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Axiom {
    #[serde(rename = "a")]
    Normalization,
    #[serde(rename = "b")]
    DelStar,
    #[serde(rename = "c")]
    Restriction,
    #[serde(rename = "d")]
    DisjointUnion,
}

#[derive(Clone, Debug, Serialize)]
pub struct AxiomViolation {
    pub axiom: Axiom,
    pub hypergraph: EdgeListJson,
    pub k: usize,
    /// Induced vertex set for (c), or the first group of components for (d).
    pub subset: Option<VertexSet>,
    /// A smallest monomial on which the two sides differ.
    pub witness: Option<VertexSet>,
    pub detail: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct AxiomReport {
    pub function: String,
    pub hypergraphs: usize,
    /// Checks performed per axiom (a), (b), (c), (d).
    pub checks: [usize; 4],
    pub violations: Vec<AxiomViolation>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Smallest monomial in exactly one of the two ideals, among their generators.
pub fn difference_witness(x: &SqfIdeal, y: &SqfIdeal) -> Option<VertexSet> {
    x.gens()
        .iter()
        .filter(|&&g| !y.membership(g))
        .chain(y.gens().iter().filter(|&&g| !x.membership(g)))
        .copied()
        .min_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)))
}

/// Runs all four axioms on every sample, every induced subset, every split
/// of the components into two groups, and on the disjoint unions of
/// consecutive samples. At most one violation per (sample, axiom) is kept,
/// the one with smallest `k` and then smallest subset.
pub fn check_splf_axioms(samples: &[Hypergraph], f: &dyn PowerFunction) -> AxiomReport {
    let mut report = AxiomReport {
        function: f.name(),
        ..AxiomReport::default()
    };
    let mut all: Vec<Hypergraph> = samples.to_vec();
    for pair in samples.windows(2) {
        if let Ok((u, _)) = pair[0].disjoint_union(&pair[1]) {
            all.push(u);
        }
    }
    for h in &all {
        report.hypergraphs += 1;
        check_one(h, f, &mut report);
    }
    report
}

fn check_one(h: &Hypergraph, f: &dyn PowerFunction, report: &mut AxiomReport) {
    let n = h.n_vertices();
    let top = f.nu(h) + 1;
    let powers: Vec<SqfIdeal> = (0..=top).map(|k| f.power(h, k)).collect();
    let mut push = |axiom, k, subset, witness, detail: String| {
        report.violations.push(AxiomViolation {
            axiom,
            hypergraph: EdgeListJson::from(h),
            k,
            subset,
            witness,
            detail,
        })
    };

    // (a)
    report.checks[0] += 1;
    let unit = SqfIdeal::unit(n);
    let edge = SqfIdeal::edge_ideal(h);
    if powers[0] != unit {
        push(
            Axiom::Normalization,
            0,
            None,
            difference_witness(&powers[0], &unit),
            "F(H, 0) is not R".into(),
        );
    } else if powers[1] != edge {
        push(
            Axiom::Normalization,
            1,
            None,
            difference_witness(&powers[1], &edge),
            "F(H, 1) is not I(H)".into(),
        );
    } else if let Some((k, p)) = powers
        .iter()
        .enumerate()
        .find(|(_, p)| !p.support().is_subset(h.vertices()))
    {
        push(
            Axiom::Normalization,
            k,
            None,
            Some(p.support() - h.vertices()),
            "generators leave V(H)".into(),
        );
    }

    // (b)
    report.checks[1] += 1;
    for k in 1..=top {
        let p = &powers[k];
        if p.is_zero() || p.is_unit() {
            continue;
        }
        let del = p.del_star().expect("proper nonzero");
        if !del.is_contained_in(&powers[k - 1]) {
            let w = del
                .gens()
                .iter()
                .copied()
                .find(|&g| !powers[k - 1].membership(g));
            push(Axiom::DelStar, k, None, w, "∂*F(H, k) ⊄ F(H, k - 1)".into());
            break;
        }
    }

    // (c), smallest subsets first
    let mut subsets: Vec<VertexSet> = h.vertices().subsets().collect();
    subsets.sort_by(|a, b| a.len().cmp(&b.len()).then(a.cmp(b)));
    'c: for k in 0..=top {
        for &w in &subsets {
            report.checks[2] += 1;
            let (sub, map) = h.induced(w);
            let lhs = powers[k].restrict(w);
            let rhs = f.power(&sub, k).relabel(&map, n);
            if lhs != rhs {
                let wit = difference_witness(&lhs, &rhs);
                push(
                    Axiom::Restriction,
                    k,
                    Some(w),
                    wit,
                    "F(H, k) restricted to W differs from F(H[W], k)".into(),
                );
                break 'c;
            }
        }
    }

    // (d) over splits of the components into two nonempty groups
    let comps = h.components_within(h.vertices());
    if comps.len() >= 2 {
        let rest = comps.len() - 1;
        'd: for mask in 0..(1u64 << rest) - 1 {
            // component 0 always goes to the first group; the second is nonempty
            let mut a = comps[0];
            let mut b = VertexSet::EMPTY;
            for (i, &c) in comps[1..].iter().enumerate() {
                if mask >> i & 1 == 1 {
                    a = a | c;
                } else {
                    b = b | c;
                }
            }
            let (h1, m1) = h.induced(a);
            let (h2, m2) = h.induced(b);
            for k in 0..=top {
                report.checks[3] += 1;
                let mut sum = SqfIdeal::zero(n);
                for i in 0..=k {
                    let p1 = f.power(&h1, i).relabel(&m1, n);
                    let p2 = f.power(&h2, k - i).relabel(&m2, n);
                    let prod = p1.product(&p2).expect("disjoint vertex blocks");
                    sum = sum.sum(&prod).expect("same universe");
                }
                if sum != powers[k] {
                    let wit = difference_witness(&sum, &powers[k]);
                    push(
                        Axiom::DisjointUnion,
                        k,
                        Some(a),
                        wit,
                        "F(H_1 + H_2, k) differs from the convolution".into(),
                    );
                    break 'd;
                }
            }
        }
    }
}

//! The single-input commands: invariants of one graph, mixed sums of two,
//! and the axiom checks.

use std::time::Duration;

use serde::Serialize;
use sqfpow_core::admissible::{adm_number, ind_number, AdmissibleCertificate};
use sqfpow_core::axioms::{check_splf_axioms, AxiomReport};
use sqfpow_core::gen_ideal::symbolic_power_oracle;
use sqfpow_core::graph_classes::{
    classify, enumerate_graphs_with, ClassFilter, EnumerationOptions, GraphClassReport,
};
use sqfpow_core::io::to_graph6;
use sqfpow_core::powers::nu_f;
use sqfpow_core::regularity::{verify_mixed_sum_regularity, Budget, MixedSumReport};
use sqfpow_core::{Error, FieldChoice, Filtration, Graph, Hypergraph, PowerKind};

use crate::cache::Cache;
use crate::CliError;

/// Largest vertex count for which the general-monomial oracle is replayed.
const ORACLE_MAX_N: usize = 8;

#[derive(Clone, Debug, Serialize)]
pub struct PowerRow {
    pub k: usize,
    pub generators: Vec<String>,
    pub reg: Option<usize>,
    pub bound: Option<usize>,
    pub slack: Option<i64>,
    pub certificate: Option<AdmissibleCertificate>,
    /// Symbolic kind only: agreement with `sqf(∩ p^k)` over the minimal covers.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub oracle_agrees: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct KindInvariants {
    pub kind: PowerKind,
    pub nu_f: usize,
    pub powers: Vec<PowerRow>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InvariantsReport {
    pub graph6: String,
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    pub alpha: usize,
    pub beta: usize,
    pub matching_number: usize,
    pub induced_matching_number: usize,
    pub classes: GraphClassReport,
    pub kinds: Vec<KindInvariants>,
}

pub fn invariants(
    g: &Graph,
    kinds: &[PowerKind],
    k: Option<usize>,
    field: FieldChoice,
    budget_ms: u64,
    cache: &Cache,
) -> Result<InvariantsReport, CliError> {
    let h = g.hypergraph();
    let mut out = InvariantsReport {
        graph6: to_graph6(g),
        n: g.n_vertices(),
        edges: g.edge_pairs(),
        alpha: h.independence_number(),
        beta: h.cover_number(),
        matching_number: h.matching_number(),
        induced_matching_number: h.induced_matching_number(),
        classes: classify(g),
        kinds: Vec::new(),
    };
    let covers = h.minimal_vertex_covers();
    for &kind in kinds {
        let nu = nu_f(h, kind);
        if let Some(k) = k.filter(|k| !(1..=nu).contains(k)) {
            return Err(Error::KOutOfRange {
                k: k as i64,
                max: nu,
            }
            .into());
        }
        let ks: Vec<usize> = match k {
            Some(k) => vec![k],
            None => (1..=nu).collect(),
        };
        let mut powers = Vec::new();
        for k in ks {
            let p = kind.power(h, k);
            let mut row = PowerRow {
                k,
                generators: p.gens().iter().map(|m| m.to_string()).collect(),
                reg: None,
                bound: None,
                slack: None,
                certificate: None,
                oracle_agrees: None,
                detail: None,
            };
            if kind == PowerKind::SquarefreeSymbolic && g.n_vertices() <= ORACLE_MAX_N {
                row.oracle_agrees = symbolic_power_oracle(g.n_vertices(), &covers, k)
                    .ok()
                    .map(|o| o == p);
            }
            let budget = Budget::with_timeout(Duration::from_millis(budget_ms));
            match cache.regularity(&p, field, &budget) {
                Ok((r, _)) => row.reg = Some(r),
                Err(e) => row.detail = Some(e.to_string()),
            }
            let bound = match kind {
                PowerKind::SquarefreeSymbolic => ind_number(h, k)?,
                PowerKind::SquarefreeOrdinary => adm_number(h, k, kind)?,
            };
            row.bound = Some(bound.0);
            row.slack = row.reg.map(|r| r as i64 - (bound.0 + k) as i64);
            row.certificate = Some(bound.1);
            powers.push(row);
        }
        out.kinds.push(KindInvariants {
            kind,
            nu_f: nu,
            powers,
        });
    }
    Ok(out)
}

#[derive(Clone, Debug, Serialize)]
pub struct MixedSumRow {
    pub kind: PowerKind,
    #[serde(flatten)]
    pub report: MixedSumReport,
}

/// Both power filtrations of `a` and `b` placed in disjoint variables, and
/// the formula check for every `n` from 1 to `ν(𝓘) + ν(𝓙)`.
pub fn mixed_sum_rows(
    a: &Graph,
    b: &Graph,
    kinds: &[PowerKind],
    field: FieldChoice,
    budget_ms: u64,
) -> Result<Vec<MixedSumRow>, CliError> {
    if a.n_edges() == 0 || b.n_edges() == 0 {
        return Err(CliError::Usage(
            "mixed sums need two graphs with at least one edge".into(),
        ));
    }
    let (u, off) = a.disjoint_union(b);
    let total = u.n_vertices();
    let mut out = Vec::new();
    for &kind in kinds {
        let fa = Filtration::from_power(a.hypergraph(), kind)?.embed(0, total)?;
        let fb = Filtration::from_power(b.hypergraph(), kind)?.embed(off, total)?;
        for n in 1..=fa.nu() + fb.nu() {
            let budget = Budget::with_timeout(Duration::from_millis(budget_ms));
            let report = verify_mixed_sum_regularity(&fa, &fb, n, field, &budget)?;
            out.push(MixedSumRow { kind, report });
        }
    }
    Ok(out)
}

/// Every graph on at most `max_n` vertices, connected or not.
pub fn all_graphs(max_n: usize) -> Result<Vec<Hypergraph>, CliError> {
    let opts = EnumerationOptions::default();
    let mut out = Vec::new();
    for n in 1..=max_n {
        out.extend(
            enumerate_graphs_with(n, &ClassFilter::all(), &opts)?
                .into_iter()
                .map(Graph::into_hypergraph),
        );
    }
    Ok(out)
}

pub fn axioms(samples: &[Hypergraph], kinds: &[PowerKind]) -> Vec<AxiomReport> {
    kinds
        .iter()
        .map(|k| check_splf_axioms(samples, k))
        .collect()
}

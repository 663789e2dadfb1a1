//! Verification campaigns: every (graph, kind, k) row of a family, with the
//! regularity, the admissible bound and their comparison.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use sqfpow_core::admissible::{adm_number, ind_number, AdmissibleCertificate};
use sqfpow_core::graph_classes::{enumerate_graphs_with, ClassFilter, EnumerationOptions};
use sqfpow_core::io::to_graph6;
use sqfpow_core::powers::nu_f;
use sqfpow_core::regularity::Budget;
use sqfpow_core::{Error, FieldChoice, Graph, PowerKind, SqfIdeal};

use crate::cache::Cache;
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Family {
    All,
    Chordal,
    Block,
    CmChordal,
    Complete,
    DisjointEdges,
    Custom,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::All => "all",
            Family::Chordal => "chordal",
            Family::Block => "block",
            Family::CmChordal => "cm_chordal",
            Family::Complete => "complete",
            Family::DisjointEdges => "disjoint_edges",
            Family::Custom => "custom",
        }
    }

    /// Kinds a family is checked for unless told otherwise.
    pub fn default_kinds(self) -> Vec<PowerKind> {
        match self {
            Family::All | Family::Custom => PowerKind::ALL.to_vec(),
            Family::DisjointEdges => vec![PowerKind::SquarefreeOrdinary],
            _ => vec![PowerKind::SquarefreeSymbolic],
        }
    }

    /// Families with an exact formula expect equality; the rest only the
    /// lower bound.
    pub fn default_expectation(self) -> Expectation {
        match self {
            Family::All | Family::Custom => Expectation::LowerBound,
            _ => Expectation::Equality,
        }
    }

    pub fn default_k(self) -> KPolicy {
        match self {
            Family::CmChordal => KPolicy::Fixed(2),
            _ => KPolicy::AllValid,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        Ok(match s {
            "all" => Family::All,
            "chordal" => Family::Chordal,
            "block" => Family::Block,
            "cm_chordal" | "cm-chordal" => Family::CmChordal,
            "complete" => Family::Complete,
            "disjoint_edges" | "disjoint-edges" => Family::DisjointEdges,
            "custom" => Family::Custom,
            _ => return Err(CliError::Usage(format!("unknown family {s:?}"))),
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum KPolicy {
    AllValid,
    Fixed(usize),
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Expectation {
    /// `reg = bound + k` on every row.
    Equality,
    /// `reg >= bound + k` on every row.
    LowerBound,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignConfig {
    pub family: Family,
    pub min_n: usize,
    pub max_n: usize,
    pub connected: bool,
    pub k_policy: KPolicy,
    pub kinds: Vec<PowerKind>,
    #[serde(serialize_with = "crate::serialize_display")]
    pub field: FieldChoice,
    pub expect: Expectation,
    /// Per regularity computation.
    pub budget_ms: u64,
    /// Whole campaign; rows not started in time are skipped.
    pub campaign_budget_ms: u64,
    #[serde(skip)]
    pub workers: usize,
    /// Raises the enumerator's order cap.
    pub max_order: usize,
    #[serde(skip)]
    pub custom: Vec<Graph>,
    #[serde(skip)]
    pub timings: bool,
}

impl CampaignConfig {
    pub fn new(family: Family, max_n: usize) -> Self {
        CampaignConfig {
            family,
            min_n: 1,
            max_n,
            connected: false,
            k_policy: family.default_k(),
            kinds: family.default_kinds(),
            field: FieldChoice::Rationals,
            expect: family.default_expectation(),
            budget_ms: 5_000,
            campaign_budget_ms: 600_000,
            workers: 0,
            max_order: EnumerationOptions::default().max_order,
            custom: Vec::new(),
            timings: false,
        }
    }

    fn filter(&self) -> ClassFilter {
        let mut f = ClassFilter {
            connected: self.connected,
            ..ClassFilter::default()
        };
        match self.family {
            Family::Chordal => f.chordal = true,
            Family::Block => f.block = true,
            Family::CmChordal => {
                f.chordal = true;
                f.cm_chordal = true;
            }
            _ => {}
        }
        f
    }

    /// The graphs of the campaign in report order.
    pub fn instances(&self) -> Result<Vec<Graph>, CliError> {
        if self.budget_ms == 0 || self.campaign_budget_ms == 0 {
            return Err(CliError::Usage("budgets must be positive".into()));
        }
        let lo = self.min_n;
        let hi = self.max_n;
        Ok(match self.family {
            Family::Custom => self.custom.clone(),
            Family::Complete => (lo.max(2)..=hi).map(Graph::complete).collect(),
            // n counts vertices, so t edges need 2t <= max_n
            Family::DisjointEdges => (lo.div_ceil(2).max(1)..=hi / 2)
                .map(Graph::disjoint_edges)
                .collect(),
            _ => {
                let opts = EnumerationOptions {
                    max_order: self.max_order,
                    ..EnumerationOptions::default()
                };
                let mut out = Vec::new();
                for n in lo..=hi {
                    out.extend(enumerate_graphs_with(n, &self.filter(), &opts)?);
                }
                out
            }
        })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum RowStatus {
    Equality,
    Strict,
    Violation,
    Skipped,
}

#[derive(Clone, Debug, Serialize)]
pub struct Row {
    pub graph6: String,
    pub n: usize,
    pub kind: PowerKind,
    pub k: usize,
    /// `ν_F(G)`: matching number (ordinary) or cover number β (symbolic).
    pub nu_f: usize,
    pub induced_matching: usize,
    /// Whether `k` also lies in `1..=ν(G)`, the range some statements use.
    pub k_le_induced_matching: bool,
    pub reg: Option<usize>,
    /// `adm^F(G, k)`, or `ind(G, k)` for the symbolic kind.
    pub bound: Option<usize>,
    /// `reg - (bound + k)`.
    pub slack: Option<i64>,
    pub status: RowStatus,
    pub cache_hit: bool,
    pub certificate_ref: Option<String>,
    pub certificate: Option<AdmissibleCertificate>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u64>,
}

#[derive(Clone, Debug, Default, Serialize, PartialEq, Eq)]
pub struct Summary {
    pub instances: usize,
    pub rows: usize,
    pub equalities: usize,
    pub strict: usize,
    pub violations: usize,
    pub skipped: usize,
    pub cache_hits: usize,
}

#[derive(Clone, Debug, Serialize)]
pub struct CampaignReport {
    pub config: CampaignConfig,
    pub summary: Summary,
    pub rows: Vec<Row>,
}

impl CampaignReport {
    /// 0 all checks hold, 2 a theorem violation, 3 budget exhausted.
    pub fn exit_code(&self) -> i32 {
        if self.summary.violations > 0 {
            2
        } else if self.summary.skipped > 0 {
            3
        } else {
            0
        }
    }

    pub fn violations(&self) -> impl Iterator<Item = &Row> {
        self.rows
            .iter()
            .filter(|r| r.status == RowStatus::Violation)
    }
}

struct Task {
    graph: usize,
    kind: PowerKind,
    k: usize,
}

fn tasks(config: &CampaignConfig, graphs: &[Graph]) -> Vec<Task> {
    let mut out = Vec::new();
    for (gi, g) in graphs.iter().enumerate() {
        if g.n_edges() == 0 {
            continue;
        }
        for &kind in &config.kinds {
            let nu = nu_f(g.hypergraph(), kind);
            let ks: Vec<usize> = match config.k_policy {
                KPolicy::AllValid => (1..=nu).collect(),
                KPolicy::Fixed(k) if (1..=nu).contains(&k) => vec![k],
                KPolicy::Fixed(_) => vec![],
            };
            out.extend(ks.into_iter().map(|k| Task { graph: gi, kind, k }));
        }
    }
    out
}

type Outcome<T> = Result<T, Error>;

fn exhausted() -> Error {
    Error::BudgetExceeded("campaign budget exhausted".into())
}

fn compute_reg(
    config: &CampaignConfig,
    ideal: &SqfIdeal,
    cache: &Cache,
    deadline: Instant,
) -> Outcome<(usize, bool)> {
    let start = Instant::now();
    if start > deadline {
        return Err(exhausted());
    }
    let budget = Budget {
        deadline: Some(start + Duration::from_millis(config.budget_ms)),
        ..Budget::default()
    };
    cache.regularity(ideal, config.field, &budget)
}

fn compute_bound(
    g: &Graph,
    kind: PowerKind,
    k: usize,
    deadline: Instant,
) -> Outcome<(usize, AdmissibleCertificate)> {
    if Instant::now() > deadline {
        return Err(exhausted());
    }
    match kind {
        PowerKind::SquarefreeSymbolic => ind_number(g.hypergraph(), k),
        PowerKind::SquarefreeOrdinary => adm_number(g.hypergraph(), k, kind),
    }
}

fn assemble(
    config: &CampaignConfig,
    g: &Graph,
    t: &Task,
    reg: &Outcome<(usize, bool)>,
    bound: Outcome<(usize, AdmissibleCertificate)>,
    cache: &Cache,
    elapsed: Duration,
) -> Row {
    let h = g.hypergraph();
    let induced_matching = h.induced_matching_number();
    let mut row = Row {
        graph6: to_graph6(g),
        n: g.n_vertices(),
        kind: t.kind,
        k: t.k,
        nu_f: nu_f(h, t.kind),
        induced_matching,
        k_le_induced_matching: t.k <= induced_matching,
        reg: None,
        bound: None,
        slack: None,
        status: RowStatus::Skipped,
        cache_hit: false,
        certificate_ref: None,
        certificate: None,
        detail: None,
        elapsed_ms: config.timings.then_some(elapsed.as_millis() as u64),
    };
    let (b, cert) = match bound {
        Ok(x) => x,
        Err(e) => {
            row.set_error(e);
            return row;
        }
    };
    row.bound = Some(b);
    match cache.store_certificate(&row.graph6, &cert) {
        Ok(key) => row.certificate_ref = Some(key),
        Err(e) => row.detail = Some(format!("certificate not persisted: {e}")),
    }
    row.certificate = Some(cert);
    let (reg, hit) = match reg {
        Ok(x) => *x,
        Err(e) => {
            row.set_error(e.clone());
            return row;
        }
    };
    let slack = reg as i64 - (b + t.k) as i64;
    row.reg = Some(reg);
    row.slack = Some(slack);
    row.cache_hit = hit;
    row.status = match (slack, config.expect) {
        (s, _) if s < 0 => RowStatus::Violation,
        (0, _) => RowStatus::Equality,
        (_, Expectation::Equality) => RowStatus::Violation,
        _ => RowStatus::Strict,
    };
    row
}

impl Row {
    /// Budget exhaustion skips a row; any other error is a failed check.
    fn set_error(&mut self, e: Error) {
        self.status = match e {
            Error::BudgetExceeded(_) => RowStatus::Skipped,
            _ => RowStatus::Violation,
        };
        self.detail = Some(e.to_string());
    }
}

/// Runs every row, in parallel when `config.workers != 1`. Each distinct ideal
/// is computed once; a row counts as a cache hit unless it is the first row
/// needing an ideal the cache did not hold, so the report does not depend on
/// scheduling.
pub fn run_campaign(config: &CampaignConfig, cache: &Cache) -> Result<CampaignReport, CliError> {
    let graphs = config.instances()?;
    let work = tasks(config, &graphs);
    let deadline = Instant::now() + Duration::from_millis(config.campaign_budget_ms);

    let mut ideal_of_task = Vec::with_capacity(work.len());
    let mut first_use = Vec::with_capacity(work.len());
    let mut unique: Vec<SqfIdeal> = Vec::new();
    let mut index: HashMap<String, usize> = HashMap::new();
    for t in &work {
        let ideal = t.kind.power(graphs[t.graph].hypergraph(), t.k);
        let next = unique.len();
        let i = *index.entry(ideal.canonical_string()).or_insert(next);
        first_use.push(i == next);
        if i == next {
            unique.push(ideal);
        }
        ideal_of_task.push(i);
    }

    let run = || -> Vec<Row> {
        let regs: Vec<Outcome<(usize, bool)>> = unique
            .par_iter()
            .map(|i| compute_reg(config, i, cache, deadline))
            .collect();
        work.par_iter()
            .enumerate()
            .map(|(ti, t)| {
                let start = Instant::now();
                let g = &graphs[t.graph];
                let bound = compute_bound(g, t.kind, t.k, deadline);
                let reg = match &regs[ideal_of_task[ti]] {
                    Ok((r, hit)) => Ok((*r, *hit || !first_use[ti])),
                    Err(e) => Err(e.clone()),
                };
                assemble(config, g, t, &reg, bound, cache, start.elapsed())
            })
            .collect()
    };
    let rows = if config.workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(config.workers)
            .build()
            .map_err(|e| CliError::Usage(e.to_string()))?
            .install(run)
    };
    let mut summary = Summary {
        instances: graphs.len(),
        rows: rows.len(),
        ..Summary::default()
    };
    for r in &rows {
        match r.status {
            RowStatus::Equality => summary.equalities += 1,
            RowStatus::Strict => summary.strict += 1,
            RowStatus::Violation => summary.violations += 1,
            RowStatus::Skipped => summary.skipped += 1,
        }
        summary.cache_hits += usize::from(r.cache_hit);
    }
    Ok(CampaignReport {
        config: config.clone(),
        summary,
        rows,
    })
}

//! JSON and CSV rendering. JSON carries everything; CSV is a flat view.

use std::io::Write;
use std::str::FromStr;

use serde::Serialize;
use sqfpow_core::axioms::AxiomReport;

use crate::campaign::{CampaignReport, RowStatus};
use crate::commands::{InvariantsReport, MixedSumRow};
use crate::CliError;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

impl FromStr for Format {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        match s {
            "json" => Ok(Format::Json),
            "csv" => Ok(Format::Csv),
            _ => Err(CliError::Usage(format!("unknown format {s:?}"))),
        }
    }
}

pub fn write_json<T: Serialize>(w: impl Write, value: &T) -> Result<(), CliError> {
    let mut w = w;
    serde_json::to_writer_pretty(&mut w, value)?;
    writeln!(w)?;
    Ok(())
}

fn write_csv<T: Serialize>(
    w: impl Write,
    rows: impl IntoIterator<Item = T>,
) -> Result<(), CliError> {
    let mut c = csv::Writer::from_writer(w);
    for r in rows {
        c.serialize(r)?;
    }
    c.flush()?;
    Ok(())
}

#[derive(Serialize)]
struct CampaignCsv<'a> {
    graph6: &'a str,
    n: usize,
    kind: &'static str,
    k: usize,
    nu_f: usize,
    induced_matching: usize,
    k_le_induced_matching: bool,
    reg: Option<usize>,
    bound: Option<usize>,
    slack: Option<i64>,
    status: &'static str,
    cache_hit: bool,
    certificate_ref: Option<&'a str>,
}

fn status_name(s: RowStatus) -> &'static str {
    match s {
        RowStatus::Equality => "equality",
        RowStatus::Strict => "strict",
        RowStatus::Violation => "violation",
        RowStatus::Skipped => "skipped",
    }
}

pub fn write_campaign(w: impl Write, rep: &CampaignReport, format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(w, rep),
        Format::Csv => write_csv(
            w,
            rep.rows.iter().map(|r| CampaignCsv {
                graph6: &r.graph6,
                n: r.n,
                kind: r.kind.name(),
                k: r.k,
                nu_f: r.nu_f,
                induced_matching: r.induced_matching,
                k_le_induced_matching: r.k_le_induced_matching,
                reg: r.reg,
                bound: r.bound,
                slack: r.slack,
                status: status_name(r.status),
                cache_hit: r.cache_hit,
                certificate_ref: r.certificate_ref.as_deref(),
            }),
        ),
    }
}

#[derive(Serialize)]
struct InvariantsCsv<'a> {
    graph6: &'a str,
    kind: &'static str,
    k: usize,
    generators: String,
    reg: Option<usize>,
    bound: Option<usize>,
    slack: Option<i64>,
}

pub fn write_invariants(
    mut w: impl Write,
    reps: &[InvariantsReport],
    format: Format,
) -> Result<(), CliError> {
    match format {
        Format::Json if reps.len() == 1 => write_json(w, &reps[0]),
        Format::Json => write_json(w, &reps),
        Format::Csv => {
            let rows = reps.iter().flat_map(|r| {
                r.kinds.iter().flat_map(move |ki| {
                    ki.powers.iter().map(move |p| InvariantsCsv {
                        graph6: &r.graph6,
                        kind: ki.kind.name(),
                        k: p.k,
                        generators: p.generators.join(" "),
                        reg: p.reg,
                        bound: p.bound,
                        slack: p.slack,
                    })
                })
            });
            write_csv(&mut w, rows)
        }
    }
}

#[derive(Serialize)]
struct MixedCsv {
    kind: &'static str,
    n: usize,
    direct: usize,
    first_form: Option<usize>,
    second_form: Option<usize>,
    holds: bool,
}

pub fn write_mixed(w: impl Write, rows: &[MixedSumRow], format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(w, &rows),
        Format::Csv => write_csv(
            w,
            rows.iter().map(|r| MixedCsv {
                kind: r.kind.name(),
                n: r.report.n,
                direct: r.report.direct,
                first_form: r.report.first_form,
                second_form: r.report.second_form,
                holds: r.report.holds,
            }),
        ),
    }
}

#[derive(Serialize)]
struct AxiomCsv<'a> {
    function: &'a str,
    hypergraphs: usize,
    checks_a: usize,
    checks_b: usize,
    checks_c: usize,
    checks_d: usize,
    violations: usize,
}

pub fn write_axioms(w: impl Write, reps: &[AxiomReport], format: Format) -> Result<(), CliError> {
    match format {
        Format::Json => write_json(w, &reps),
        Format::Csv => write_csv(
            w,
            reps.iter().map(|r| AxiomCsv {
                function: &r.function,
                hypergraphs: r.hypergraphs,
                checks_a: r.checks[0],
                checks_b: r.checks[1],
                checks_c: r.checks[2],
                checks_d: r.checks[3],
                violations: r.violations.len(),
            }),
        ),
    }
}

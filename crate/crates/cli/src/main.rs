use std::io::{self, Read, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use sqfpow::cache::Cache;
use sqfpow::campaign::{run_campaign, CampaignConfig, Expectation, Family, KPolicy};
use sqfpow::commands::{all_graphs, axioms, invariants, mixed_sum_rows};
use sqfpow::input::{parse_args, parse_graphs};
use sqfpow::output::{
    write_axioms, write_campaign, write_invariants, write_json, write_mixed, Format,
};
use sqfpow::CliError;
use sqfpow_core::{FieldChoice, Graph, PowerKind};

#[derive(Parser)]
#[command(
    name = "sqfpow",
    version,
    about = "Regularity of squarefree powers and symbolic powers of edge ideals"
)]
struct Cli {
    /// Persistent cache directory; without it results live in memory only.
    #[arg(long, global = true, env = "SQFPOW_CACHE_DIR")]
    cache_dir: Option<PathBuf>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum KindArg {
    Ordinary,
    Symbolic,
    Both,
}

impl KindArg {
    fn kinds(self) -> Vec<PowerKind> {
        match self {
            KindArg::Ordinary => vec![PowerKind::SquarefreeOrdinary],
            KindArg::Symbolic => vec![PowerKind::SquarefreeSymbolic],
            KindArg::Both => PowerKind::ALL.to_vec(),
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum ExpectArg {
    Equality,
    LowerBound,
}

#[derive(Args)]
struct Common {
    /// q (rationals) or gfP for a prime P.
    #[arg(long, default_value = "q")]
    field: FieldChoice,
    #[arg(long, value_enum, default_value = "json")]
    format: FormatArg,
    /// Wall-clock limit per regularity computation.
    #[arg(long, default_value_t = 5_000)]
    budget_ms: u64,
}

impl Common {
    fn format(&self) -> Format {
        match self.format {
            FormatArg::Json => Format::Json,
            FormatArg::Csv => Format::Csv,
        }
    }
}

#[derive(Subcommand)]
enum Command {
    /// Powers, regularities and admissible bounds of single graphs.
    Invariants {
        /// graph6 strings or JSON objects; read from --input or stdin if absent.
        graphs: Vec<String>,
        #[arg(long)]
        input: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindArg,
        #[arg(long)]
        k: Option<usize>,
        #[command(flatten)]
        common: Common,
    },
    /// Checks reg = bound + k (or the lower bound) over a graph family.
    Verify {
        #[arg(long)]
        family: Family,
        #[arg(long, default_value_t = 1)]
        min_n: usize,
        #[arg(long, default_value_t = 6)]
        max_n: usize,
        #[arg(long)]
        connected: bool,
        #[arg(long, value_enum)]
        kind: Option<KindArg>,
        #[arg(long)]
        k: Option<usize>,
        #[arg(long, value_enum)]
        expect: Option<ExpectArg>,
        #[arg(long, default_value_t = 600_000)]
        campaign_budget_ms: u64,
        /// 0 uses every core.
        #[arg(long, default_value_t = 0)]
        workers: usize,
        #[arg(long)]
        timings: bool,
        #[arg(long)]
        max_order: Option<usize>,
        /// Graphs for --family custom; stdin when absent.
        #[arg(long)]
        input: Option<PathBuf>,
        #[command(flatten)]
        common: Common,
    },
    /// Regularity of I_a J_b sums against the filtration formula.
    MixedSum {
        a: String,
        b: String,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindArg,
        #[command(flatten)]
        common: Common,
    },
    /// The four power-function axioms on given graphs or on all small graphs.
    Axioms {
        graphs: Vec<String>,
        /// Used when no graphs are given.
        #[arg(long, default_value_t = 5)]
        max_n: usize,
        #[arg(long, value_enum, default_value = "both")]
        kind: KindArg,
        #[arg(long, value_enum, default_value = "json")]
        format: FormatArg,
    },
    Cache {
        #[command(subcommand)]
        action: CacheAction,
    },
}

#[derive(Subcommand)]
enum CacheAction {
    Stats,
    /// Removes interrupted writes and unreadable entries.
    Gc,
    /// Revalidates certificates and keys; --deep also recomputes regularities.
    Audit {
        #[arg(long)]
        deep: bool,
    },
}

fn read_graphs(args: &[String], input: Option<&PathBuf>) -> Result<Vec<Graph>, CliError> {
    if !args.is_empty() {
        return parse_args(args);
    }
    let text = match input {
        Some(p) if p.as_os_str() != "-" => std::fs::read_to_string(p)?,
        _ => {
            let mut s = String::new();
            io::stdin().read_to_string(&mut s)?;
            s
        }
    };
    parse_graphs(&text)
}

fn open_cache(dir: Option<PathBuf>) -> Result<Cache, CliError> {
    Ok(match dir {
        Some(d) => Cache::open(d)?,
        None => Cache::in_memory(),
    })
}

fn run(cli: Cli) -> Result<i32, CliError> {
    let cache = open_cache(cli.cache_dir)?;
    let out = io::stdout().lock();
    match cli.command {
        Command::Invariants {
            graphs,
            input,
            kind,
            k,
            common,
        } => {
            let graphs = read_graphs(&graphs, input.as_ref())?;
            let reps = graphs
                .iter()
                .map(|g| invariants(g, &kind.kinds(), k, common.field, common.budget_ms, &cache))
                .collect::<Result<Vec<_>, _>>()?;
            write_invariants(out, &reps, common.format())?;
            let rows = || reps.iter().flat_map(|r| &r.kinds).flat_map(|k| &k.powers);
            let bad =
                rows().any(|p| p.slack.is_some_and(|s| s < 0) || p.oracle_agrees == Some(false));
            let skipped = rows().any(|p| p.reg.is_none());
            Ok(if bad {
                2
            } else if skipped {
                3
            } else {
                0
            })
        }
        Command::Verify {
            family,
            min_n,
            max_n,
            connected,
            kind,
            k,
            expect,
            campaign_budget_ms,
            workers,
            timings,
            max_order,
            input,
            common,
        } => {
            let mut config = CampaignConfig::new(family, max_n);
            config.min_n = min_n;
            config.connected = connected;
            if let Some(kind) = kind {
                config.kinds = kind.kinds();
            }
            if let Some(k) = k {
                config.k_policy = KPolicy::Fixed(k);
            }
            if let Some(e) = expect {
                config.expect = match e {
                    ExpectArg::Equality => Expectation::Equality,
                    ExpectArg::LowerBound => Expectation::LowerBound,
                };
            }
            config.field = common.field;
            config.budget_ms = common.budget_ms;
            config.campaign_budget_ms = campaign_budget_ms;
            config.workers = workers;
            config.timings = timings;
            if let Some(m) = max_order {
                config.max_order = m;
            }
            if family == Family::Custom {
                config.custom = read_graphs(&[], input.as_ref())?;
            }
            let rep = run_campaign(&config, &cache)?;
            write_campaign(out, &rep, common.format())?;
            Ok(rep.exit_code())
        }
        Command::MixedSum { a, b, kind, common } => {
            let gs = parse_args(&[a, b])?;
            let rows = mixed_sum_rows(
                &gs[0],
                &gs[1],
                &kind.kinds(),
                common.field,
                common.budget_ms,
            )?;
            write_mixed(out, &rows, common.format())?;
            Ok(if rows.iter().all(|r| r.report.holds) {
                0
            } else {
                2
            })
        }
        Command::Axioms {
            graphs,
            max_n,
            kind,
            format,
        } => {
            let samples = if graphs.is_empty() {
                all_graphs(max_n)?
            } else {
                parse_args(&graphs)?
                    .into_iter()
                    .map(Graph::into_hypergraph)
                    .collect()
            };
            let reps = axioms(&samples, &kind.kinds());
            let format = match format {
                FormatArg::Json => Format::Json,
                FormatArg::Csv => Format::Csv,
            };
            write_axioms(out, &reps, format)?;
            Ok(if reps.iter().all(|r| r.passed()) {
                0
            } else {
                2
            })
        }
        Command::Cache { action } => match action {
            CacheAction::Stats => {
                write_json(out, &cache.stats()?)?;
                Ok(0)
            }
            CacheAction::Gc => {
                write_json(out, &cache.gc()?)?;
                Ok(0)
            }
            CacheAction::Audit { deep } => {
                let rep = cache.audit(deep)?;
                write_json(out, &rep)?;
                Ok(if rep.passed() { 0 } else { 2 })
            }
        },
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => ExitCode::from(code as u8),
        Err(e) => {
            let _ = writeln!(io::stderr(), "sqfpow: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

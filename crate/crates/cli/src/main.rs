use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use kgonal::asymptotics::{self, OmegaEvaluator};
use kgonal::cache;
use kgonal::universal;
use kgonal::{family_counts, labelled_counts, unlabelled_counts, BTable, Family, GonalParams};

mod verify;

#[derive(Parser)]
#[command(name = "kgonal", version, about = "Enumeration of k-gonal 2-trees")]
struct Cli {
    /// Directory for cached b tables (falls back to $KGONAL_CACHE).
    #[arg(long, global = true)]
    cache_dir: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Level {
    Quick,
    Full,
}

#[derive(Subcommand)]
enum Command {
    /// Counts of one family as JSON.
    Count {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "unlabelled")]
        family: Family,
        /// Single size to report.
        #[arg(long, conflicts_with = "order")]
        n: Option<usize>,
        /// Report sizes 0..=order.
        #[arg(long)]
        order: Option<usize>,
    },
    /// Coefficients of one family, one per line.
    Series {
        #[arg(long)]
        k: u32,
        #[arg(long, default_value = "unlabelled")]
        family: Family,
        #[arg(long)]
        order: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Unlabelled counts for a range of k, one column per k.
    Table {
        #[arg(long, default_value_t = 2)]
        k_min: u32,
        #[arg(long, default_value_t = 12)]
        k_max: u32,
        #[arg(long, default_value_t = 20)]
        order: usize,
        #[arg(long, value_enum, default_value = "csv")]
        format: Format,
    },
    /// Singularity and amplitude constants for p = k - 1.
    Constants {
        #[arg(long)]
        p: u32,
        /// Order of the b table; also the largest probe of the amplitude
        /// extrapolation.
        #[arg(long, default_value_t = 1000)]
        series_order: usize,
        #[arg(long, default_value_t = 1e-15)]
        tol: f64,
    },
    /// Universal coefficients of the expansion of xi_p in 1/p.
    Universal {
        #[arg(long, default_value_t = 5)]
        m_max: u32,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Cross-checks between independent routes.
    Verify {
        #[arg(long, value_enum, default_value = "quick")]
        level: Level,
        /// Include the brute-force enumeration.
        #[arg(long)]
        oracle: bool,
    },
}

#[derive(Serialize)]
struct CountEntry {
    n: usize,
    value: String,
}

#[derive(Serialize)]
struct CountDoc<'a> {
    k: u32,
    family: &'a str,
    counts: Vec<CountEntry>,
}

#[derive(Serialize)]
struct TableColumn {
    k: u32,
    values: Vec<String>,
}

#[derive(Serialize)]
struct TableDoc {
    order: usize,
    columns: Vec<TableColumn>,
}

#[derive(Serialize)]
struct UniversalEntry {
    m: u32,
    closed_form: String,
    decimal: String,
    value: f64,
}

type CliResult<T> = Result<T, String>;

fn load_table(cache_dir: Option<&Path>, k: u32, order: usize) -> CliResult<BTable> {
    let params = GonalParams::new(k).map_err(|e| e.to_string())?;
    let (table, _) = cache::load_or_compute(cache_dir, params, order).map_err(|e| e.to_string())?;
    Ok(table)
}

fn counts(cache_dir: Option<&Path>, k: u32, family: Family, order: usize) -> CliResult<Vec<BigInt>> {
    let params = GonalParams::new(k).map_err(|e| e.to_string())?;
    if family.is_labelled() {
        return labelled_counts(params, family, order).map_err(|e| e.to_string());
    }
    let table = load_table(cache_dir, k, order)?;
    family_counts(&table, family).map_err(|e| e.to_string())
}

fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("serializable");
    s.push('\n');
    s
}

fn run(cli: Cli) -> CliResult<(String, bool)> {
    let cache_dir = cache::resolve_dir(cli.cache_dir.as_deref());
    let cache_dir = cache_dir.as_deref();
    match cli.command {
        Command::Count { k, family, n, order } => {
            let top = n.or(order).ok_or("one of --n or --order is required")?;
            let values = counts(cache_dir, k, family, top)?;
            let first = if n.is_some() { top } else { 0 };
            let doc = CountDoc {
                k,
                family: family.name(),
                counts: (first..=top)
                    .map(|i| CountEntry {
                        n: i,
                        value: values[i].to_string(),
                    })
                    .collect(),
            };
            Ok((to_json(&doc), true))
        }
        Command::Series {
            k,
            family,
            order,
            format,
        } => {
            let values = counts(cache_dir, k, family, order)?;
            let out = match format {
                Format::Csv => {
                    let mut s = String::from("n,value\n");
                    for (i, v) in values.iter().enumerate() {
                        s.push_str(&format!("{i},{v}\n"));
                    }
                    s
                }
                Format::Json => to_json(&values.iter().map(BigInt::to_string).collect::<Vec<_>>()),
            };
            Ok((out, true))
        }
        Command::Table {
            k_min,
            k_max,
            order,
            format,
        } => {
            if k_min < 2 || k_min > k_max {
                return Err(format!("need 2 <= k-min <= k-max, got {k_min}..{k_max}"));
            }
            let columns: Vec<TableColumn> = (k_min..=k_max)
                .into_par_iter()
                .map(|k| {
                    let table = load_table(cache_dir, k, order)?;
                    let values = unlabelled_counts(&table).map_err(|e| e.to_string())?;
                    Ok(TableColumn {
                        k,
                        values: values.iter().map(BigInt::to_string).collect(),
                    })
                })
                .collect::<CliResult<_>>()?;
            let out = match format {
                Format::Csv => {
                    let mut s = String::from("n");
                    for c in &columns {
                        s.push_str(&format!(",k{}", c.k));
                    }
                    s.push('\n');
                    for n in 0..=order {
                        s.push_str(&n.to_string());
                        for c in &columns {
                            s.push(',');
                            s.push_str(&c.values[n]);
                        }
                        s.push('\n');
                    }
                    s
                }
                Format::Json => to_json(&TableDoc { order, columns }),
            };
            Ok((out, true))
        }
        Command::Constants {
            p,
            series_order,
            tol,
        } => {
            if p == 0 {
                return Err("p must be at least 1".into());
            }
            if series_order < 16 {
                return Err("series order must be at least 16".into());
            }
            let table = load_table(cache_dir, p + 1, series_order)?;
            let omega = OmegaEvaluator::new(&table);
            let sol = asymptotics::solve_xi(&omega, tol).map_err(|e| e.to_string())?;
            let ext = asymptotics::oriented_amplitude(&table, sol.xi, series_order);
            let report = asymptotics::constants(&omega, sol, Some(ext)).map_err(|e| e.to_string())?;
            Ok((to_json(&report), true))
        }
        Command::Universal { m_max, format } => {
            if m_max == 0 {
                return Err("m-max must be at least 1".into());
            }
            let entries: Vec<UniversalEntry> = (1..=m_max)
                .map(|m| {
                    let c = universal::universal_c(m);
                    UniversalEntry {
                        m,
                        closed_form: c.closed_form(),
                        decimal: c.decimal(20),
                        value: c.value(),
                    }
                })
                .collect();
            let out = match format {
                Format::Json => to_json(&entries),
                Format::Csv => {
                    let mut s = String::from("m,closed_form,decimal\n");
                    for e in &entries {
                        s.push_str(&format!("{},{},{}\n", e.m, e.closed_form, e.decimal));
                    }
                    s
                }
            };
            Ok((out, true))
        }
        Command::Verify { level, oracle } => {
            let full = matches!(level, Level::Full);
            let report = verify::run(cache_dir, full, oracle || full);
            Ok((report.render(), report.passed()))
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok((out, ok)) => {
            let mut stdout = io::stdout().lock();
            if stdout.write_all(out.as_bytes()).is_err() {
                return ExitCode::FAILURE;
            }
            if ok {
                ExitCode::SUCCESS
            } else {
                ExitCode::FAILURE
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::FAILURE
        }
    }
}

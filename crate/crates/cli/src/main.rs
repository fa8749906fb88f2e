use std::path::PathBuf;
use std::process::ExitCode;

use anyhow::Context;
use clap::{Parser, Subcommand, ValueEnum};
use dcp_core::brute::{dump_shapes, generate_with_threads};
use dcp_core::closed_form::ratio_table;
use dcp_core::counts::CountTable;
use dcp_core::layered::{nose_breakdown, perimeter_counts};
use dcp_core::verify::{parse_d_samples, run_suite, Suite, VerifyOptions};
use dcp_core::Rational;
use serde_json::{Map, Value};

mod output;

use output::{aligned, big_number, emit, Counts, Format};

/// A bad flag value; exits with status 2 like clap's own usage errors.
#[derive(Debug)]
pub struct UsageError(pub String);

impl std::fmt::Display for UsageError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(&self.0)
    }
}

impl std::error::Error for UsageError {}

#[derive(Parser)]
#[command(
    name = "dcp",
    version,
    about = "Exact enumeration of diagonally convex polyominoes by perimeter"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum By {
    Perimeter,
    Diagonals,
    Noses,
}

#[derive(Subcommand)]
enum Command {
    /// Counts from the layered functional equations.
    #[command(name = "dcp-series", alias = "series")]
    Series {
        #[arg(long)]
        max_perimeter: u32,
        #[arg(long, value_enum, default_value = "perimeter")]
        by: By,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Counts by exhaustive generation.
    Brute {
        #[arg(long)]
        max_perimeter: u32,
        /// Refine by diagonals, nose class and last-diagonal size.
        #[arg(long)]
        classify: bool,
        /// Worker threads; 0 lets the pool decide.
        #[arg(long, env = "DCP_THREADS", default_value_t = 0)]
        threads: usize,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
        /// Also write every shape, one canonical line each.
        #[arg(long)]
        dump: Option<PathBuf>,
    },
    /// Column-convex versus diagonally convex counts.
    Ratios {
        #[arg(long)]
        max_perimeter: u32,
        #[arg(long, value_enum, default_value = "table")]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Runs identity and cross-check suites.
    Verify {
        #[arg(long, default_value = "all")]
        suite: Suite,
        /// Truncation order; defaults to 40, or 16 for the oracle suite.
        #[arg(long)]
        order: Option<usize>,
        #[arg(long, default_value = "1,1/2,2,3", value_parser = d_samples)]
        d_samples: DSamples,
    },
}

#[derive(Clone, Debug)]
struct DSamples(Vec<Rational>);

fn d_samples(s: &str) -> Result<DSamples, String> {
    parse_d_samples(s).map(DSamples)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            if e.downcast_ref::<UsageError>().is_some() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

fn check_perimeter(n: u32, min: u32) -> Result<(), UsageError> {
    if n < min || n % 2 == 1 {
        return Err(UsageError(format!(
            "--max-perimeter must be even and at least {min}, got {n}"
        )));
    }
    Ok(())
}

fn run(command: Command) -> anyhow::Result<ExitCode> {
    match command {
        Command::Series {
            max_perimeter,
            by,
            format,
            out,
        } => {
            check_perimeter(max_perimeter, 4)?;
            let n = max_perimeter as usize;
            let counts = match by {
                By::Perimeter => Counts::from_sequence(&perimeter_counts(n)?),
                By::Diagonals => by_diagonals(&nose_breakdown(n)?),
                By::Noses => by_noses(&nose_breakdown(n)?),
            };
            emit(&counts.render(format)?, out.as_deref())?;
        }
        Command::Brute {
            max_perimeter,
            classify,
            threads,
            format,
            out,
            dump,
        } => {
            check_perimeter(max_perimeter, 4)?;
            let table = generate_with_threads(max_perimeter, threads);
            let counts = if classify {
                joint(&table)
            } else {
                Counts::from_sequence(&table.by_perimeter())
            };
            let text = counts.render(format)?;
            if let Some(path) = dump {
                let mut lines = dump_shapes(max_perimeter).join("\n");
                lines.push('\n');
                emit(&lines, Some(&path)).context("writing the shape dump")?;
            }
            emit(&text, out.as_deref())?;
        }
        Command::Ratios {
            max_perimeter,
            format,
            out,
        } => {
            check_perimeter(max_perimeter, 14)?;
            let rows = ratio_table(max_perimeter)?;
            let text = match format {
                Format::Bfile => {
                    return Err(UsageError("ratios have no bfile form".into()).into());
                }
                Format::Table | Format::Csv => {
                    let header: Vec<String> = ["n", "cc", "dc", "ra"].map(String::from).to_vec();
                    let body: Vec<Vec<String>> = rows
                        .iter()
                        .map(|r| {
                            vec![
                                r.n.to_string(),
                                r.cc.to_string(),
                                r.dc.to_string(),
                                r.ratio.clone(),
                            ]
                        })
                        .collect();
                    if format == Format::Table {
                        aligned(&header, &body)
                    } else {
                        std::iter::once(header)
                            .chain(body)
                            .map(|r| r.join(",") + "\n")
                            .collect()
                    }
                }
                Format::Json => {
                    let mut root = Map::new();
                    for r in &rows {
                        let mut row = Map::new();
                        row.insert("cc".into(), big_number(&r.cc));
                        row.insert("dc".into(), big_number(&r.dc));
                        row.insert("ra".into(), Value::String(r.ratio.clone()));
                        root.insert(r.n.to_string(), Value::Object(row));
                    }
                    serde_json::to_string_pretty(&Value::Object(root))? + "\n"
                }
            };
            emit(&text, out.as_deref())?;
        }
        Command::Verify {
            suite,
            order,
            d_samples,
        } => {
            let opts = VerifyOptions {
                order,
                d_samples: d_samples.0,
            };
            let checks = match run_suite(suite, &opts) {
                Ok(c) => c,
                Err(e @ dcp_core::verify::VerifyError::Layered(_)) => return Err(e.into()),
                Err(e) => return Err(UsageError(e.to_string()).into()),
            };
            let failed = checks.iter().filter(|c| !c.passed).count();
            for c in &checks {
                println!("{c}");
            }
            println!("{} checks, {failed} failed", checks.len());
            if failed > 0 {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn by_diagonals(table: &CountTable) -> Counts {
    Counts {
        key_names: vec!["perimeter", "diagonals"],
        rows: table
            .by_perimeter_diagonals()
            .into_iter()
            .map(|((p, k), c)| (vec![p.to_string(), k.to_string()], c))
            .collect(),
    }
}

fn by_noses(table: &CountTable) -> Counts {
    Counts {
        key_names: vec!["perimeter", "noses"],
        rows: table
            .by_perimeter_noses()
            .into_iter()
            .map(|((p, n), c)| (vec![p.to_string(), n.to_string()], c))
            .collect(),
    }
}

fn joint(table: &CountTable) -> Counts {
    Counts {
        key_names: vec!["perimeter", "diagonals", "noses", "last"],
        rows: table
            .iter()
            .map(|(k, c)| {
                (
                    vec![
                        k.perimeter.to_string(),
                        k.diagonals.to_string(),
                        k.noses.to_string(),
                        k.last_diag.to_string(),
                    ],
                    c.clone(),
                )
            })
            .collect(),
    }
}

//! `lozenge`: verification sweeps, enumeration and rendering for dented hexagons.

use std::fs;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use lozenge::checks::{self, CheckRecord, Report, CRITERIA, DEFAULT_SEED};
use lozenge::detid::{enumerate_admissible, enumerate_dyck, parse_sequence, ADMISSIBLE_MAX, MPPP_MAX};
use lozenge::regions::{enumerate_tilings, render_svg, tiling_weight, Region};

const MAX_REGION_SIDE: i64 = 8;
const MAX_LEMMA_N: i64 = 12;

#[derive(Parser)]
#[command(name = "lozenge", version, about = "Exact checks for weighted lozenge tilings of dented hexagons")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    output: Output,
}

#[derive(Args)]
struct Output {
    /// Report format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,
    /// Write the report to this file instead of standard output.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
    /// Omit timings so that reports are reproducible byte for byte.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Command {
    /// Path closed forms, LGV determinants, the widening factorization and tilings of half hexagons.
    VerifyHalf {
        #[arg(long, default_value_t = 4)]
        max_width: i64,
        #[arg(long, default_value_t = 4)]
        max_height: i64,
        /// Largest widening in the factorization sweep.
        #[arg(long, default_value_t = 3)]
        d_max: i64,
    },
    /// Quarter-hexagon closed forms and product formula against brute force.
    VerifyQuarter {
        #[arg(long, default_value_t = 4)]
        max_width: i64,
        #[arg(long, default_value_t = 5)]
        max_height: i64,
    },
    /// The determinant identity, block reduction, the m''' facts and the triangulation.
    VerifyDetid {
        /// Every admissible sequence up to this length is checked.
        #[arg(long, default_value_t = 4)]
        max_m: usize,
        /// Number of seeded random sequences of length max-m + 1.
        #[arg(long, default_value_t = 25)]
        samples: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
        /// Extra strictly increasing sequence to check, e.g. "(3)"; repeatable.
        #[arg(long, value_parser = parse_include)]
        include: Vec<Vec<i64>>,
    },
    /// The q-binomial lemma with seeded random rational parameters.
    VerifyLemma {
        #[arg(long, default_value_t = 8)]
        max_n: i64,
        /// Random parameter vectors per (n, r).
        #[arg(long, default_value_t = 10)]
        vectors: usize,
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
    /// List admissible sequences, Dyck paths or tilings.
    Enumerate {
        #[arg(value_enum)]
        what: Enumerable,
        /// Sequence length, or Dyck semilength.
        #[arg(long, default_value_t = 3)]
        length: usize,
        /// Region JSON file, for tilings.
        #[arg(long)]
        region: Option<PathBuf>,
    },
    /// Draw a region, optionally with one of its tilings, as SVG.
    Render {
        /// Region JSON file.
        region: PathBuf,
        /// Index of the tiling to draw.
        #[arg(long)]
        tiling: Option<usize>,
    },
    /// Every acceptance criterion with its default bounds.
    Selftest {
        #[arg(long, default_value_t = DEFAULT_SEED)]
        seed: u64,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Enumerable {
    Admissible,
    Dyck,
    Tilings,
}

fn parse_include(s: &str) -> std::result::Result<Vec<i64>, String> {
    parse_sequence(s).map_err(|e| e.to_string())
}

fn check_bound<T: PartialOrd + std::fmt::Display>(name: &str, v: T, lo: T, hi: T) -> Result<()> {
    if v < lo || v > hi {
        bail!("--{name} must lie in {lo}..={hi}, got {v}");
    }
    Ok(())
}

fn read_region(path: &Path) -> Result<Region> {
    let text = fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    serde_json::from_str(&text).with_context(|| format!("parsing region {}", path.display()))
}

fn emit(output: &Output, text: &str) -> Result<()> {
    match &output.out {
        Some(p) => fs::write(p, text).with_context(|| format!("writing {}", p.display())),
        None => {
            print!("{text}");
            Ok(())
        }
    }
}

fn finish(output: &Output, mut report: Report) -> Result<ExitCode> {
    if output.no_timing {
        report.strip_timing();
    }
    let text = match output.format {
        Format::Json => report.to_json() + "\n",
        Format::Text => report.to_text(),
    };
    emit(output, &text)?;
    if report.passed() {
        return Ok(ExitCode::SUCCESS);
    }
    for r in report.failures() {
        eprintln!("counterexample: {}", serde_json::to_string(r)?);
    }
    Ok(ExitCode::from(1))
}

fn run(cli: Cli) -> Result<ExitCode> {
    let out = &cli.output;
    match cli.command {
        Command::VerifyHalf { max_width, max_height, d_max } => {
            check_bound("max-width", max_width, 1, MAX_REGION_SIDE)?;
            check_bound("max-height", max_height, 1, MAX_REGION_SIDE)?;
            check_bound("d-max", d_max, 0, 6)?;
            let c_max = max_width + max_height - 1;
            let mut report = Report::new(DEFAULT_SEED);
            report.extend(checks::gf_closed_sweep(c_max.min(6)));
            report.extend(checks::lgv_sweep(3, c_max.min(6)));
            report.extend(checks::half_factor_sweep(3, c_max.min(5), d_max));
            report.extend(checks::half_tiling_sweep(max_width, max_height, 4));
            finish(out, report)
        }
        Command::VerifyQuarter { max_width, max_height } => {
            check_bound("max-width", max_width, 1, MAX_REGION_SIDE)?;
            check_bound("max-height", max_height, 1, MAX_REGION_SIDE)?;
            let mut report = Report::new(DEFAULT_SEED);
            report.extend(checks::quarter_sweep(3, 9, 2, 1, 6));
            report.extend(checks::quarter_tiling_sweep(max_width, max_height));
            finish(out, report)
        }
        Command::VerifyDetid { max_m, samples, seed, include } => {
            check_bound("max-m", max_m, 1, MPPP_MAX - 1)?;
            check_bound("samples", samples, 0, 1000)?;
            let mut report = Report::new(seed);
            report.extend(checks::theorem_sweep(max_m, samples, seed, &include)?);
            report.extend(checks::block_sweep(max_m)?);
            report.extend(checks::apparatus_sweep(max_m)?);
            report.extend(checks::triangulation_sweep(max_m)?);
            finish(out, report)
        }
        Command::VerifyLemma { max_n, vectors, seed } => {
            check_bound("max-n", max_n, 1, MAX_LEMMA_N)?;
            check_bound("vectors", vectors, 0, 100)?;
            let mut report = Report::new(seed);
            report.extend(checks::lemma_sweep(max_n, vectors, seed));
            finish(out, report)
        }
        Command::Enumerate { what, length, region } => {
            let items: Vec<String> = match what {
                Enumerable::Admissible => {
                    check_bound("length", length, 0, ADMISSIBLE_MAX)?;
                    enumerate_admissible(length)?.iter().map(ToString::to_string).collect()
                }
                Enumerable::Dyck => {
                    check_bound("length", length, 0, ADMISSIBLE_MAX + 1)?;
                    enumerate_dyck(length).iter().map(ToString::to_string).collect()
                }
                Enumerable::Tilings => {
                    let path = region.context("--region is required for tilings")?;
                    let r = read_region(&path)?;
                    let tilings = enumerate_tilings(&r)?;
                    if out.format == Format::Json {
                        emit(out, &(serde_json::to_string_pretty(&tilings)? + "\n"))?;
                        return Ok(ExitCode::SUCCESS);
                    }
                    tilings
                        .iter()
                        .map(|t| format!("{:?} {}", t.vertical_labels, tiling_weight(t, r.weight_mode)))
                        .collect()
                }
            };
            let text = match out.format {
                Format::Json => serde_json::to_string_pretty(&items)? + "\n",
                Format::Text => items.iter().map(|s| format!("{s}\n")).collect(),
            };
            emit(out, &text)?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Render { region, tiling } => {
            let r = read_region(&region)?;
            let chosen = match tiling {
                None => None,
                Some(k) => {
                    let all = enumerate_tilings(&r)?;
                    let n = all.len();
                    Some(all.into_iter().nth(k).with_context(|| format!("tiling {k} requested, region has {n}"))?)
                }
            };
            emit(out, &render_svg(&r, chosen.as_ref()))?;
            Ok(ExitCode::SUCCESS)
        }
        Command::Selftest { seed } => {
            let mut report = Report::new(seed);
            for (i, name) in CRITERIA.iter().enumerate() {
                let recs: Vec<CheckRecord> = checks::criterion(i + 1, seed)?;
                let ok = recs.iter().all(CheckRecord::passed);
                eprintln!("criterion {:2} {} {name}", i + 1, if ok { "PASS" } else { "FAIL" });
                report.extend(recs);
            }
            finish(out, report)
        }
    }
}

fn main() -> ExitCode {
    match run(Cli::parse()) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(2)
        }
    }
}

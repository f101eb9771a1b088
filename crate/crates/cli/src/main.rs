//! `tring` — exact computations with graded trinomial algebras.
//!
//! Exit codes: 0 success, 1 parse/IO error, 2 validation failure,
//! 3 inadmissible downgrade data, 4 enumeration guardrail exceeded.

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::Value;
use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use tring::coxring::{self, CoxPresentation, DowngradeData};
use tring::sweep::{self, SweepBounds};
use tring::{batch, TripleData};
use tring_cli::{input, report};

const EXIT_OK: i32 = 0;
const EXIT_PARSE: i32 = 1;
const EXIT_INVALID: i32 = 2;
const EXIT_INADMISSIBLE: i32 = 3;
const EXIT_GUARDRAIL: i32 = 4;

const ENUMERATION_LIMIT: u128 = 1_000_000;

#[derive(Parser)]
#[command(
    name = "tring",
    version,
    about = "Exact computations with complexity-one graded trinomial algebras"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Validate a defining datum and report its graded presentation
    Analyze {
        /// JSON document with keys A, n, L
        path: PathBuf,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Build the downgraded presentation for explicit data or the surface recipe
    Cox {
        /// JSON document with keys A, n, L
        path: PathBuf,
        /// Derive the downgrade rows by the surface recipe
        #[arg(long, conflicts_with_all = ["d", "dprime"])]
        auto_surface: bool,
        /// Matrix file (JSON array of rows) for the rows over the T columns
        #[arg(long, requires = "dprime")]
        d: Option<PathBuf>,
        /// Matrix file (JSON array of rows) for the rows over the S columns
        #[arg(long, requires = "d")]
        dprime: Option<PathBuf>,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Stream analysis reports for every defining datum within bounds
    Enumerate {
        /// Number of blocks minus one
        #[arg(long)]
        r: usize,
        /// Largest block size
        #[arg(long = "max-n")]
        max_n: usize,
        /// Largest exponent entry
        #[arg(long = "max-l")]
        max_l: u64,
        /// Skip non-sincere data
        #[arg(long)]
        sincere_only: bool,
        /// Write the stream to a file instead of stdout
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() {
    std::process::exit(run());
}

fn run() -> i32 {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            use clap::error::ErrorKind;
            let _ = e.print();
            return match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => EXIT_OK,
                _ => EXIT_PARSE,
            };
        }
    };
    match cli.cmd {
        Cmd::Analyze { path, format } => cmd_analyze(&path, format),
        Cmd::Cox {
            path,
            auto_surface,
            d,
            dprime,
            format,
        } => cmd_cox(&path, auto_surface, d.as_deref(), dprime.as_deref(), format),
        Cmd::Enumerate {
            r,
            max_n,
            max_l,
            sincere_only,
            out,
        } => cmd_enumerate(r, max_n, max_l, sincere_only, out.as_deref()),
    }
}

fn read_triple(path: &Path) -> Result<TripleData, i32> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_PARSE
    })?;
    input::parse_triple(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_PARSE
    })
}

fn print_json<T: serde::Serialize>(value: &T) {
    println!(
        "{}",
        serde_json::to_string_pretty(value).expect("reports serialize")
    );
}

fn cmd_analyze(path: &Path, format: Format) -> i32 {
    let triple = match read_triple(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    match report::analyze(&triple) {
        Err(violations) => {
            match format {
                Format::Json => print_json(&report::invalid_report(&violations)),
                Format::Text => print!("{}", report::invalid_text(&violations)),
            }
            EXIT_INVALID
        }
        Ok(analysis) => {
            match format {
                Format::Json => print_json(&report::analysis_report(&analysis)),
                Format::Text => print!("{}", report::analysis_text(&analysis)),
            }
            EXIT_OK
        }
    }
}

fn read_matrix(path: &Path) -> Result<tring::IntMatrix, i32> {
    let text = fs::read_to_string(path).map_err(|e| {
        eprintln!("error: cannot read {}: {e}", path.display());
        EXIT_PARSE
    })?;
    input::parse_matrix(&text).map_err(|e| {
        eprintln!("error: {}: {e}", path.display());
        EXIT_PARSE
    })
}

fn cmd_cox(
    path: &Path,
    auto_surface: bool,
    d: Option<&Path>,
    dprime: Option<&Path>,
    format: Format,
) -> i32 {
    let triple = match read_triple(path) {
        Ok(t) => t,
        Err(code) => return code,
    };
    let analysis = match report::analyze(&triple) {
        Ok(a) => a,
        Err(violations) => {
            match format {
                Format::Json => print_json(&report::invalid_report(&violations)),
                Format::Text => print!("{}", report::invalid_text(&violations)),
            }
            return EXIT_INVALID;
        }
    };
    let base = analysis.presentation;

    let data = if auto_surface {
        coxring::surface_recipe(&base)
    } else {
        let (Some(d_path), Some(dprime_path)) = (d, dprime) else {
            eprintln!("error: pass either --auto-surface or both --d and --dprime");
            return EXIT_PARSE;
        };
        let d = match read_matrix(d_path) {
            Ok(m) => m,
            Err(code) => return code,
        };
        let dprime = match read_matrix(dprime_path) {
            Ok(m) => m,
            Err(code) => return code,
        };
        if d.rows() != dprime.rows() {
            eprintln!(
                "error: --d has {} rows but --dprime has {}",
                d.rows(),
                dprime.rows()
            );
            return EXIT_PARSE;
        }
        if d.cols() != triple.total_vars() {
            eprintln!(
                "error: --d must have {} columns (one per T variable), found {}",
                triple.total_vars(),
                d.cols()
            );
            return EXIT_PARSE;
        }
        DowngradeData::new(d, dprime)
    };

    let block = coxring::assemble_block(&base, &data);
    match CoxPresentation::build(base.clone(), data.clone()) {
        Ok(cox) => {
            let rep = report::cox_report(&cox);
            match format {
                Format::Json => print_json(&rep),
                Format::Text => print!("{}", report::cox_text(&rep, cox.block_matrix())),
            }
            EXIT_OK
        }
        Err(admissibility) => {
            let rep = report::inadmissible_report(&base, &data, &admissibility, &block);
            match format {
                Format::Json => print_json(&rep),
                Format::Text => print!("{}", report::cox_text(&rep, &block)),
            }
            EXIT_INADMISSIBLE
        }
    }
}

fn cmd_enumerate(
    r: usize,
    max_n: usize,
    max_l: u64,
    sincere_only: bool,
    out: Option<&Path>,
) -> i32 {
    if r < 1 || max_n < 1 || max_l < 1 {
        eprintln!("error: --r, --max-n and --max-l must all be at least 1");
        return EXIT_PARSE;
    }
    let bounds = SweepBounds {
        r,
        max_block_size: max_n,
        max_exponent: max_l,
    };
    let count = sweep::candidate_count(&bounds);
    if count > ENUMERATION_LIMIT {
        eprintln!("error: {count} candidates exceed the enumeration limit {ENUMERATION_LIMIT}");
        return EXIT_GUARDRAIL;
    }

    let mut writer: BufWriter<Box<dyn Write>> = match out {
        Some(path) => match fs::File::create(path) {
            Ok(f) => BufWriter::new(Box::new(f)),
            Err(e) => {
                eprintln!("error: cannot create {}: {e}", path.display());
                return EXIT_PARSE;
            }
        },
        None => BufWriter::new(Box::new(io::stdout())),
    };

    let total = count as u64;
    let mut emitted = 0u64;
    let mut sincere = 0u64;
    let mut factorial = 0u64;
    let mut not_factorial = 0u64;
    const CHUNK: u64 = 2048;

    let mut start = 0u64;
    while start < total {
        let end = (start + CHUNK).min(total);
        let indices: Vec<u64> = (start..end).collect();
        // candidates are evaluated concurrently; the order-preserving map
        // keeps the stream in canonical enumeration order
        let lines: Vec<Option<(String, Option<bool>)>> = batch::map(&indices, |&i| {
            let triple = sweep::nth_candidate(&bounds, i as u128);
            if sincere_only && !triple.is_sincere() {
                return None;
            }
            let line = report::enumerate_line(i, &triple);
            let verdict = match &line.report.factorial {
                Value::Bool(b) => Some(*b),
                _ => None,
            };
            Some((
                serde_json::to_string(&line).expect("lines serialize"),
                verdict,
            ))
        });
        for (line, verdict) in lines.into_iter().flatten() {
            emitted += 1;
            match verdict {
                Some(true) => {
                    sincere += 1;
                    factorial += 1;
                }
                Some(false) => {
                    sincere += 1;
                    not_factorial += 1;
                }
                None => {}
            }
            if let Err(e) = writeln!(writer, "{line}") {
                eprintln!("error: write failed: {e}");
                return EXIT_PARSE;
            }
        }
        start = end;
    }

    let summary = report::SummaryLine {
        summary: report::EnumerateSummary {
            candidates: total,
            emitted,
            sincere,
            factorial,
            not_factorial,
        },
    };
    let summary_line = serde_json::to_string(&summary).expect("summary serializes");
    if let Err(e) = writeln!(writer, "{summary_line}") {
        eprintln!("error: write failed: {e}");
        return EXIT_PARSE;
    }
    if let Err(e) = writer.flush() {
        eprintln!("error: flush failed: {e}");
        return EXIT_PARSE;
    }
    EXIT_OK
}

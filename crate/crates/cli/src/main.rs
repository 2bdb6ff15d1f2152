use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use tvartop_core::document::to_canonical_json;
use tvartop_core::Error;

mod commands;

#[derive(Parser, Debug)]
#[command(name = "tvartop", version, about = "Topology of complexity-one T-varieties from divisorial fans")]
struct Cli {
    #[command(subcommand)]
    command: Command,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    format: Format,

    /// Highest degree of the Chow ring to compute (default: rank + 2).
    #[arg(long, global = true)]
    max_degree: Option<usize>,

    /// Count only marked points with non-trivial coefficients in N_D.
    #[arg(long = "strict-ND", global = true)]
    strict_nd: bool,

    /// Omit the timing field so output is byte-reproducible.
    #[arg(long, global = true)]
    no_timing: bool,
}

#[derive(Subcommand, Debug, Clone)]
enum Command {
    /// Check the divisorial fan axioms.
    Validate { path: PathBuf },
    /// Class polynomials, Betti numbers and their consistency.
    Invariants { path: PathBuf },
    /// Chow ring presentation, Hilbert function and shellability.
    Chow { path: PathBuf },
    /// Fundamental group.
    Pi1 { path: PathBuf },
    /// Toric bouquet data of a polyhedral complex.
    Bouquet { path: PathBuf },
    /// Convert a complete fan of rank n+1 to a divisorial fan of rank n.
    Downgrade { path: PathBuf },
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
enum Format {
    Text,
    Json,
}

pub struct Options {
    pub max_degree: Option<usize>,
    pub strict_nd: bool,
}

/// What a command produced before rendering.
pub struct Outcome {
    pub results: Value,
    pub text: Vec<String>,
    pub warnings: Vec<String>,
    pub exit: u8,
}

#[derive(Serialize)]
struct Report {
    command: String,
    input_sha256: String,
    results: Value,
    warnings: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    timing_ms: Option<u64>,
}

fn exit_code(e: &Error) -> u8 {
    match e {
        Error::Parse(_) => 2,
        Error::BudgetExceeded(_) | Error::SearchBudgetExceeded(_) => 3,
        _ => 1,
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let (name, path) = match &cli.command {
        Command::Validate { path } => ("validate", path),
        Command::Invariants { path } => ("invariants", path),
        Command::Chow { path } => ("chow", path),
        Command::Pi1 { path } => ("pi1", path),
        Command::Bouquet { path } => ("bouquet", path),
        Command::Downgrade { path } => ("downgrade", path),
    };
    let bytes = match std::fs::read(path) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", path.display());
            return ExitCode::from(2);
        }
    };
    let Ok(text) = String::from_utf8(bytes.clone()) else {
        eprintln!("error: {} is not UTF-8", path.display());
        return ExitCode::from(2);
    };
    let opts = Options { max_degree: cli.max_degree, strict_nd: cli.strict_nd };
    let start = Instant::now();

    if let Command::Downgrade { .. } = cli.command {
        return match commands::downgrade(&text) {
            Ok(doc) => {
                print!("{doc}");
                ExitCode::SUCCESS
            }
            Err(e) => {
                eprintln!("error [{}]: {e}", e.kind());
                ExitCode::from(exit_code(&e))
            }
        };
    }

    let run = match &cli.command {
        Command::Validate { .. } => commands::validate(&text),
        Command::Invariants { .. } => commands::invariants(&text),
        Command::Chow { .. } => commands::chow(&text, &opts),
        Command::Pi1 { .. } => commands::pi1(&text, &opts),
        Command::Bouquet { .. } => commands::bouquet(&text),
        Command::Downgrade { .. } => unreachable!(),
    };
    let outcome = run.unwrap_or_else(|e| Outcome {
        results: serde_json::json!({ "error": { "kind": e.kind(), "message": e.to_string() } }),
        text: vec![format!("error [{}]: {e}", e.kind())],
        warnings: vec![],
        exit: exit_code(&e),
    });
    let timing_ms = (!cli.no_timing).then(|| start.elapsed().as_millis() as u64);

    match cli.format {
        Format::Json => {
            let report = Report {
                command: name.to_string(),
                input_sha256: hex::encode(Sha256::digest(&bytes)),
                results: outcome.results,
                warnings: outcome.warnings,
                timing_ms,
            };
            print!("{}", to_canonical_json(&report));
        }
        Format::Text => {
            for line in &outcome.text {
                println!("{line}");
            }
            for w in &outcome.warnings {
                println!("warning: {w}");
            }
            if let Some(ms) = timing_ms {
                println!("time: {ms} ms");
            }
        }
    }
    ExitCode::from(outcome.exit)
}

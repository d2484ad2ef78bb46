//! Command-line front end: JSON input, JSON or plain-text reports, and the
//! verification suite.

pub mod check;
pub mod input;
pub mod report;

use std::path::PathBuf;

use clap::{Args, Parser, Subcommand};
use multgen_core::catalog::{builtin, shipped};
use multgen_core::Error;
use thiserror::Error as ThisError;

pub use check::{run_check, Summary};
pub use input::{DeclaredDocument, InputDocument};
pub use report::{analyze_document, render_pretty, ReportDocument};

#[derive(Debug, ThisError)]
pub enum CliError {
    #[error("parse error at line {line}, column {column}: {message}")]
    Parse { line: usize, column: usize, message: String },
    #[error("bad input shape: {0}")]
    Shape(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Core(#[from] Error),
}

impl CliError {
    /// 0 success, 1 unreadable input, 2 not the algebra of an algebraic
    /// group (including bases that are not Lie algebras), 3 internal
    /// theorem violation.
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Core(Error::TheoremViolation(_)) => 3,
            CliError::Core(
                Error::InputNotAlgebraic { .. }
                | Error::NotClosed { .. }
                | Error::Jacobi(..)
                | Error::DependentBasis,
            ) => 2,
            _ => 1,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "multgen", version, about = "Lie algebra of the subgroup generated by semisimple elements")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Decompose an algebra and report its multiplicative part.
    Analyze(AnalyzeArgs),
    /// Run golden and randomized invariant checks.
    Check(CheckArgs),
    /// List builtin algebras.
    Catalog,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    /// Input JSON file.
    #[arg(env = "MULTGEN_INPUT", required_unless_present = "builtin", conflicts_with = "builtin")]
    pub file: Option<PathBuf>,
    /// Builtin name, see `multgen catalog`.
    #[arg(long, env = "MULTGEN_BUILTIN")]
    pub builtin: Option<String>,
    /// Plain-text report instead of JSON.
    #[arg(long, env = "MULTGEN_PRETTY")]
    pub pretty: bool,
    /// Write the report here instead of stdout.
    #[arg(long, env = "MULTGEN_OUT")]
    pub out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct CheckArgs {
    /// Include the shipped catalog (default when --random is absent).
    #[arg(long, env = "MULTGEN_ALL")]
    pub all: bool,
    /// Number of random algebraic inputs.
    #[arg(long, env = "MULTGEN_RANDOM")]
    pub random: Option<u64>,
    /// First random seed.
    #[arg(long, env = "MULTGEN_SEED", default_value_t = 0)]
    pub seed: u64,
}

fn load(args: &AnalyzeArgs) -> Result<InputDocument, CliError> {
    match (&args.builtin, &args.file) {
        (Some(name), _) => {
            let entry = builtin(name)?;
            Ok(InputDocument::from_algebra(Some(entry.name), &entry.g))
        }
        (None, Some(path)) => InputDocument::read(path),
        (None, None) => Err(CliError::Io("no input given".into())),
    }
}

pub fn analyze(args: &AnalyzeArgs) -> Result<String, CliError> {
    let report = analyze_document(load(args)?)?;
    let mut text = if args.pretty { render_pretty(&report)? } else { report.to_json() };
    if !text.ends_with('\n') {
        text.push('\n');
    }
    Ok(text)
}

pub fn catalog_listing() -> String {
    let mut out = String::new();
    for e in shipped() {
        let m = e.expected.map(|x| x.m.to_string()).unwrap_or_else(|| "?".into());
        out.push_str(&format!("{:<24} dim {:>2}  gl_{:<2} m-dim {m}\n", e.name, e.g.dim(), e.g.size()));
    }
    out.push_str("families: sl(n), gm(n), ga(n), upper-triangular(n), parabolic(sl_n; a,b,...), heisenberg-torus(a,b)\n");
    out
}

/// Run a parsed command. Returns the process exit code.
pub fn run(cli: Cli) -> i32 {
    match cli.command {
        Command::Analyze(args) => match analyze(&args) {
            Ok(text) => match &args.out {
                Some(path) => match std::fs::write(path, text) {
                    Ok(()) => 0,
                    Err(e) => {
                        eprintln!("error: {}: {e}", path.display());
                        1
                    }
                },
                None => {
                    print!("{text}");
                    0
                }
            },
            Err(e) => {
                eprintln!("error: {e}");
                e.exit_code()
            }
        },
        Command::Check(args) => {
            let builtins = args.all || args.random.is_none();
            let summary = run_check(builtins, args.random.unwrap_or(0), args.seed);
            print!("{}", check::render_summary(&summary));
            if summary.ok() {
                0
            } else {
                1
            }
        }
        Command::Catalog => {
            print!("{}", catalog_listing());
            0
        }
    }
}

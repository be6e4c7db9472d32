//! Command-line front end for `amalgam-core`.
//!
//! Every command prints one JSON document on standard output. Exit codes:
//! 0 when all checks passed, 2 when a construction ran but a check failed
//! (or a word could not be separated), 1 on any error.

pub mod commands;
pub mod dsl;
pub mod env;
pub mod error;
pub mod json;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

pub use error::CliError;

#[derive(Parser, Debug)]
#[command(name = "amalgam", version, about = "Separation certificates for amalgamated free products")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalFlags,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Args, Debug, Clone)]
pub struct GlobalFlags {
    /// Largest group any construction may build.
    #[arg(long, global = true, default_value_t = 5000)]
    pub max_order: usize,
    /// Node budget for catalog homomorphism search.
    #[arg(long, global = true, default_value_t = 1_000_000)]
    pub budget: u64,
    /// Largest catalog group used by homomorphism search.
    #[arg(long, global = true, default_value_t = 24)]
    pub catalog_max: usize,
    /// Largest group whose subgroup lattice may be enumerated.
    #[arg(long, global = true, default_value_t = 256)]
    pub lattice_cap: usize,
    /// Coset transversal strategy.
    #[arg(long, global = true, value_enum, default_value_t = Transversal::MinIndex)]
    pub transversal: Transversal,
    /// Skip associativity verification of constructed tables.
    #[arg(long, global = true)]
    pub unsafe_skip_associativity: bool,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Transversal {
    MinIndex,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Theorem {
    NotPerfect,
    Cyclic,
    Central,
    Double,
    AbelianFactor,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeriesArg {
    Derived,
    LowerCentral,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Normal form of a declared word.
    NormalForm {
        spec: String,
        #[arg(long)]
        word: String,
    },
    /// Whether two declared words are equal in their amalgam.
    Equal {
        spec: String,
        #[arg(long)]
        left: String,
        #[arg(long)]
        right: String,
    },
    /// Derived or lower central series of a finite group.
    DerivedSeries {
        spec: String,
        #[arg(long)]
        group: String,
        #[arg(long, value_enum, default_value_t = SeriesArg::Derived)]
        kind: SeriesArg,
    },
    /// Abelian invariants of G/[G,G].
    Abelianize {
        spec: String,
        #[arg(long)]
        group: String,
    },
    /// Smith normal form of an integer matrix literal such as [[2,4],[6,8]].
    Snf {
        #[arg(long)]
        matrix: String,
    },
    /// Frattini subgroup of a finite group.
    Frattini {
        spec: String,
        #[arg(long)]
        group: String,
    },
    /// Runs one quotient construction and emits its certificate.
    Certify {
        spec: String,
        #[arg(long, value_enum)]
        theorem: Theorem,
        #[arg(long)]
        amalgam: Option<String>,
    },
    /// Finds a homomorphism onto a solvable group under which a word survives.
    Witness {
        spec: String,
        #[arg(long)]
        word: String,
    },
    /// Compares word reduction against the rewriting oracle.
    OracleCheck {
        spec: String,
        #[arg(long)]
        amalgam: Option<String>,
        #[arg(long, default_value_t = 5)]
        length: usize,
        #[arg(long)]
        word: Option<String>,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::NormalForm { .. } => "normal-form",
            Command::Equal { .. } => "equal",
            Command::DerivedSeries { .. } => "derived-series",
            Command::Abelianize { .. } => "abelianize",
            Command::Snf { .. } => "snf",
            Command::Frattini { .. } => "frattini",
            Command::Certify { .. } => "certify",
            Command::Witness { .. } => "witness",
            Command::OracleCheck { .. } => "oracle-check",
        }
    }
}

/// Result of a command: status `passed` (exit 0) or `checks-failed` (exit 2)
/// plus the command-specific payload.
#[derive(Debug)]
pub struct Report {
    pub passed: bool,
    pub result: Value,
}

/// What the process prints and returns.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Output {
    pub code: i32,
    pub stdout: String,
}

pub fn error_json(command: Option<&str>, e: &CliError) -> Value {
    let mut err = json!({ "kind": e.kind(), "message": e.to_string() });
    if let Some(p) = e.pos() {
        err["line"] = json!(p.line);
        err["col"] = json!(p.col);
    }
    if let CliError::Resolution { name, .. } = e {
        err["name"] = json!(name);
    }
    json!({
        "schema": 1,
        "command": command,
        "status": "error",
        "error": err,
    })
}

/// Parses arguments (the first is the program name) and runs the command.
pub fn run<I, T>(args: I) -> Output
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind;
            if matches!(e.kind(), ErrorKind::DisplayHelp | ErrorKind::DisplayVersion) {
                return Output {
                    code: 0,
                    stdout: e.to_string(),
                };
            }
            let err = CliError::Usage(e.to_string().trim_end().to_string());
            return Output {
                code: 1,
                stdout: json::render(&error_json(None, &err)),
            };
        }
    };
    let name = cli.command.name();
    match commands::execute(&cli) {
        Ok(r) => {
            let status = if r.passed { "passed" } else { "checks-failed" };
            let doc = json!({
                "schema": 1,
                "command": name,
                "status": status,
                "result": r.result,
            });
            Output {
                code: if r.passed { 0 } else { 2 },
                stdout: json::render(&doc),
            }
        }
        Err(e) => Output {
            code: 1,
            stdout: json::render(&error_json(Some(name), &e)),
        },
    }
}

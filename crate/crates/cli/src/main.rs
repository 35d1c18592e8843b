mod bench;
mod report;

use std::io::{self, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use domset::{parse_instance, verify_recurrences, CapacitatedInstance, Rational, RecurrenceReport, Scalar, Verdict};
use num_rational::BigRational;
use serde::Serialize;
use thiserror::Error;

use report::Problem;

const WORKERS_ENV: &str = "DOMSET_WORKERS";
/// Clap reports usage errors with 2, which here means bad input.
const USAGE_EXIT: u8 = 1;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{path}: {message}")]
    Input { path: String, message: String },
    #[error("{0}")]
    Argument(String),
    #[error("verification failed: {0}")]
    Verification(String),
    #[error("cannot write output: {0}")]
    Output(String),
}

impl CliError {
    pub fn io(path: &Path, e: io::Error) -> Self {
        CliError::Input {
            path: path.display().to_string(),
            message: e.to_string(),
        }
    }

    /// Core errors reaching the CLI are caused by the input, except broken
    /// contracts which mean a solver bug.
    pub fn from_core(e: domset::Error) -> Self {
        match e {
            domset::Error::Contract(m) => CliError::Verification(m),
            other => CliError::Argument(other.to_string()),
        }
    }

    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input { .. } | CliError::Argument(_) | CliError::Output(_) => 2,
            CliError::Verification(_) => 3,
        }
    }
}

#[derive(Debug, Parser)]
#[command(name = "domset", version, about = "Capacitated domination and irredundance solvers")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ApproxProblem {
    Cds,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Solve an instance exactly.
    Solve {
        problem: Problem,
        file: PathBuf,
        /// Evaluate subset levels across the worker pool (cds only).
        #[arg(long)]
        parallel: bool,
    },
    /// Approximate a capacitated dominating set, enumerating subsets up to ⌊cn⌋.
    Approx {
        problem: ApproxProblem,
        file: PathBuf,
        /// Fraction in (0, 1/3), as `p/q` or a decimal.
        #[arg(long)]
        c: String,
    },
    /// Solve by exhaustive search (at most 16 vertices).
    Oracle { problem: Problem, file: PathBuf },
    /// Check the branching inequalities of the largest-irredundant-set search.
    VerifyRecurrences {
        #[arg(long, default_value = "1.40202")]
        alpha: String,
        /// Use f64 instead of exact rationals.
        #[arg(long)]
        float: bool,
    },
    /// Run every problem on every `.cds`/`.graph` file in a directory.
    Bench {
        dir: PathBuf,
        /// Write a seeded G(n, p) corpus into the directory first.
        #[arg(long)]
        seed: Option<u64>,
        #[arg(long, value_delimiter = ',', default_values = ["cds", "ir-max", "ir-min"])]
        problems: Vec<Problem>,
    },
}

pub fn load_instance(path: &Path) -> Result<(String, CapacitatedInstance), CliError> {
    let text = std::fs::read_to_string(path).map_err(|e| CliError::io(path, e))?;
    let inst = parse_instance(&text).map_err(|e| CliError::Input {
        path: path.display().to_string(),
        message: e.to_string(),
    })?;
    let name = path
        .file_stem()
        .map_or_else(|| path.display().to_string(), |s| s.to_string_lossy().into_owned());
    Ok((name, inst))
}

#[derive(Serialize)]
struct CaseLine {
    case: String,
    margin: f64,
}

#[derive(Serialize)]
struct RecurrenceSummary {
    alpha: f64,
    exact: bool,
    cases: usize,
    all_pass: bool,
    min_margin: f64,
    binding: String,
    failures: Vec<CaseLine>,
    inconclusive: Vec<CaseLine>,
}

fn summarize<T: Scalar>(r: &RecurrenceReport<T>) -> RecurrenceSummary {
    let lines = |v: Verdict| {
        r.with_verdict(v)
            .map(|o| CaseLine {
                case: o.case.to_string(),
                margin: o.margin.to_f64_lossy(),
            })
            .collect()
    };
    RecurrenceSummary {
        alpha: r.alpha.to_f64_lossy(),
        exact: T::EXACT,
        cases: r.outcomes.len(),
        all_pass: r.all_pass(),
        min_margin: r.min_margin().to_f64_lossy(),
        binding: r.binding_case().to_string(),
        failures: lines(Verdict::Fail),
        inconclusive: lines(Verdict::Inconclusive),
    }
}

fn recurrences(alpha: &str, float: bool) -> Result<String, CliError> {
    let bad = || CliError::Argument(format!("cannot parse alpha {alpha:?}"));
    let summary = if float {
        let a: f64 = alpha.trim().parse().map_err(|_| bad())?;
        summarize(&verify_recurrences(a).map_err(CliError::from_core)?)
    } else {
        let a = BigRational::parse_decimal(alpha).ok_or_else(bad)?;
        summarize(&verify_recurrences(a).map_err(CliError::from_core)?)
    };
    Ok(serde_json::to_string(&summary).expect("summary serializes"))
}

fn configure_workers() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(WORKERS_ENV) else {
        return Ok(());
    };
    let workers: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&w| w > 0)
        .ok_or_else(|| CliError::Argument(format!("{WORKERS_ENV} must be a positive integer, got {raw:?}")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(workers)
        .build_global()
        .map_err(|e| CliError::Argument(e.to_string()))
}

fn run(cli: Cli) -> Result<(), CliError> {
    configure_workers()?;
    let stdout = io::stdout();
    let mut out = stdout.lock();
    let line = match cli.command {
        Command::Solve {
            problem,
            file,
            parallel,
        } => {
            let (name, inst) = load_instance(&file)?;
            report::solve(problem, &name, &inst, parallel)?.to_json()
        }
        Command::Approx {
            problem: ApproxProblem::Cds,
            file,
            c,
        } => {
            let c = Rational::parse_decimal(&c).ok_or_else(|| CliError::Argument(format!("cannot parse c {c:?}")))?;
            let (name, inst) = load_instance(&file)?;
            report::approx(&name, &inst, c)?.to_json()
        }
        Command::Oracle { problem, file } => {
            let (name, inst) = load_instance(&file)?;
            report::oracle(problem, &name, &inst)?.to_json()
        }
        Command::VerifyRecurrences { alpha, float } => recurrences(&alpha, float)?,
        Command::Bench { dir, seed, problems } => {
            if let Some(seed) = seed {
                bench::generate_corpus(&dir, seed)?;
            }
            bench::run(&dir, &problems, &mut out)?;
            return Ok(());
        }
    };
    writeln!(out, "{line}").map_err(|e| CliError::Output(e.to_string()))
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() {
                ExitCode::from(USAGE_EXIT)
            } else {
                ExitCode::SUCCESS
            };
        }
    };
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("domset: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

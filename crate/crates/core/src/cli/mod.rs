//! The `civar` command line: argument parsing, file IO and report output.

pub mod render;
pub mod report;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

use crate::error::Error;
use crate::groebner::GbBudget;
pub use report::{execute, Command, JobConfig, Outcome};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

#[derive(Parser, Debug)]
#[command(name = "civar", version, about = "Support varieties over graded complete intersections")]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
    #[command(flatten)]
    job: JobArgs,
}

#[derive(Args, Debug)]
struct JobArgs {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Resolution length (starting window N for varieties).
    #[arg(long, global = true)]
    steps: Option<usize>,
    /// Largest operator degree in the annihilator window.
    #[arg(long, global = true)]
    degree_cap: Option<usize>,
    /// Largest window the stabilization guard may reach.
    #[arg(long, global = true, default_value_t = 20)]
    max_steps: usize,
    /// S-pair budget per Gröbner basis.
    #[arg(long, global = true, default_value_t = 50_000)]
    max_pairs: usize,
    /// Degree budget per Gröbner basis.
    #[arg(long, global = true, default_value_t = 40)]
    max_degree: u32,
    /// Fail with exit code 3 when a theorem check does not hold.
    #[arg(long, global = true)]
    verify: bool,
    /// Seed for the idempotent search.
    #[arg(long, global = true, default_value_t = 0xC15)]
    seed: u64,
    /// Random endomorphisms tried per summand.
    #[arg(long, global = true, default_value_t = 64)]
    attempts: usize,
    /// Write the produced module file here.
    #[arg(long, global = true)]
    out: Option<PathBuf>,
}

#[derive(Subcommand, Debug)]
enum Cmd {
    /// Check a ring file and optionally a module file.
    Validate { ring: PathBuf, module: Option<PathBuf> },
    /// Minimal free resolution.
    Resolve { ring: PathBuf, module: PathBuf },
    /// Eisenbud operators on the resolution.
    Operators { ring: PathBuf, module: PathBuf },
    /// Support variety with the stabilization guard.
    Variety { ring: PathBuf, module: PathBuf },
    /// The module K cut out by a cohomology element.
    Cut {
        ring: PathBuf,
        module: PathBuf,
        #[arg(long)]
        eta: String,
    },
    /// An MCM module with variety V(eta_1, .., eta_t).
    Realize {
        ring: PathBuf,
        #[arg(long)]
        eta: Vec<String>,
    },
    /// Indecomposable summands of a finite-length module.
    Decompose { ring: PathBuf, module: PathBuf },
    /// Split a module along a disjoint decomposition of its variety.
    CheckCarlson {
        ring: PathBuf,
        module: PathBuf,
        #[arg(long)]
        a1: String,
        #[arg(long)]
        a2: String,
    },
}

fn read(path: &PathBuf) -> Result<String, Error> {
    std::fs::read_to_string(path).map_err(|e| Error::input("io", format!("cannot read {}: {e}", path.display())))
}

fn emit(report: &serde_json::Map<String, serde_json::Value>, format: Format) -> String {
    match format {
        Format::Text => render::to_text(report),
        Format::Json => render::to_json(report),
    }
}

/// Runs the CLI on `args` (including the program name) and returns the
/// text for stdout and the exit code.
pub fn run<I, T>(args: I) -> (String, i32)
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            use clap::error::ErrorKind as K;
            if matches!(e.kind(), K::DisplayHelp | K::DisplayVersion | K::DisplayHelpOnMissingArgumentOrSubcommand) {
                return (e.to_string(), 0);
            }
            let err = Error::input("usage", e.to_string().trim().to_string());
            let mut report = serde_json::Map::new();
            report.insert("status".into(), "error".into());
            report.insert("error".into(), report::error_value(&err));
            return (render::to_text(&report), 1);
        }
    };
    let j = &cli.job;
    let cfg = JobConfig {
        steps: j.steps,
        degree_cap: j.degree_cap,
        max_steps: j.max_steps,
        budget: GbBudget { max_pairs: j.max_pairs, max_degree: j.max_degree },
        verify: j.verify,
        seed: j.seed,
        attempts: j.attempts,
    };
    let (cmd, ring, module) = match cli.cmd {
        Cmd::Validate { ring, module } => (Command::Validate, ring, module),
        Cmd::Resolve { ring, module } => (Command::Resolve, ring, Some(module)),
        Cmd::Operators { ring, module } => (Command::Operators, ring, Some(module)),
        Cmd::Variety { ring, module } => (Command::Variety, ring, Some(module)),
        Cmd::Cut { ring, module, eta } => (Command::Cut { eta }, ring, Some(module)),
        Cmd::Realize { ring, eta } => (Command::Realize { etas: eta }, ring, None),
        Cmd::Decompose { ring, module } => (Command::Decompose, ring, Some(module)),
        Cmd::CheckCarlson { ring, module, a1, a2 } => (Command::CheckCarlson { a1, a2 }, ring, Some(module)),
    };
    let files = read(&ring).and_then(|r| Ok((r, module.as_ref().map(read).transpose()?)));
    let mut outcome = match files {
        Ok((r, m)) => execute(&cmd, &r, m.as_deref(), &cfg),
        Err(e) => {
            let mut report = serde_json::Map::new();
            report.insert("command".into(), cmd.name().into());
            report.insert("status".into(), "error".into());
            report.insert("error".into(), report::error_value(&e));
            Outcome { report, error: Some(e), module: None }
        }
    };
    if let (Some(path), Some(text)) = (&j.out, &outcome.module) {
        if let Err(e) = std::fs::write(path, text) {
            let e = Error::input("io", format!("cannot write {}: {e}", path.display()));
            outcome.report.insert("status".into(), "error".into());
            outcome.report.insert("error".into(), report::error_value(&e));
            outcome.error = Some(e);
        }
    }
    (emit(&outcome.report, j.format), outcome.exit_code())
}

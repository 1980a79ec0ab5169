//! Exact verifier for the co-split structure on the classical matrix
//! algebras.
//!
//! `verify sl --size M` checks the canonical cobracket on `sl_M`;
//! `verify classical --family B|C|D --rank L` checks a split classical
//! subalgebra with its restricted cobracket; `suite` runs every built-in
//! target. The `COSPLIT_MAX_SIZE` environment variable (default 8) caps the
//! ambient matrix size. Exit code 0 means every check passed, 1 means a
//! check failed or a computation could not complete, 2 means the invocation
//! itself was rejected.

mod report;

use clap::{Args, Parser, Subcommand, ValueEnum};
use cosplit::restriction::Family;
use cosplit::Error;
use report::{
    render_suite_text, render_target_text, run_classical, run_sl, run_suite, TargetReport,
    TopLevelTarget, SCHEMA,
};
use std::io::Write;
use std::process::ExitCode;

const MAX_SIZE_ENV: &str = "COSPLIT_MAX_SIZE";
const DEFAULT_MAX_SIZE: usize = 8;

#[derive(Parser)]
#[command(
    name = "cosplit",
    version,
    about = "Exact co-split Lie algebra verifier"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Verify a single target
    Verify {
        #[command(subcommand)]
        target: VerifyTarget,
    },
    /// Verify every built-in target within the size cap
    Suite {
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Subcommand)]
enum VerifyTarget {
    /// The special linear algebra with its canonical cobracket
    Sl {
        /// Matrix size m of sl_m (at least 2)
        #[arg(long)]
        size: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
    /// A split classical subalgebra with the restricted cobracket
    Classical {
        /// Family letter
        #[arg(long, value_enum, ignore_case = true)]
        family: FamilyArg,
        /// Rank within the family
        #[arg(long)]
        rank: usize,
        #[command(flatten)]
        out: OutputOpts,
    },
}

#[derive(Clone, Copy, ValueEnum)]
#[value(rename_all = "UPPER")]
enum FamilyArg {
    B,
    C,
    D,
}

impl From<FamilyArg> for Family {
    fn from(f: FamilyArg) -> Family {
        match f {
            FamilyArg::B => Family::B,
            FamilyArg::C => Family::C,
            FamilyArg::D => Family::D,
        }
    }
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Args, Clone, Copy)]
struct OutputOpts {
    /// Output format
    #[arg(long, value_enum, default_value = "text")]
    format: Format,
    /// Omit timing so repeated runs are byte-identical
    #[arg(long)]
    no_timing: bool,
}

enum CliError {
    /// The invocation asked for something outside the supported range.
    Usage(String),
    /// A computation failed while verifying a legitimate target.
    Run(Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::InvalidSlSize { .. } | Error::InvalidRank { .. } => {
                CliError::Usage(e.to_string())
            }
            other => CliError::Run(other),
        }
    }
}

fn resolve_cap() -> Result<usize, CliError> {
    match std::env::var(MAX_SIZE_ENV) {
        Ok(s) => s
            .trim()
            .parse::<usize>()
            .map_err(|_| CliError::Usage(format!("invalid {MAX_SIZE_ENV} value: {s:?}"))),
        Err(std::env::VarError::NotPresent) => Ok(DEFAULT_MAX_SIZE),
        Err(e) => Err(CliError::Usage(format!("cannot read {MAX_SIZE_ENV}: {e}"))),
    }
}

/// Prints to stdout, staying quiet when the reader has gone away.
fn print_out(s: &str) {
    let mut stdout = std::io::stdout().lock();
    let _ = stdout.write_all(s.as_bytes());
    let _ = stdout.flush();
}

fn emit_target(report: &TargetReport, out: OutputOpts) {
    match out.format {
        Format::Text => print_out(&render_target_text(report)),
        Format::Json => {
            let top = TopLevelTarget {
                schema: SCHEMA,
                report,
            };
            let mut s = serde_json::to_string_pretty(&top).expect("report serialization");
            s.push('\n');
            print_out(&s);
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    let cap = resolve_cap()?;
    match cli.command {
        Command::Verify {
            target: VerifyTarget::Sl { size, out },
        } => {
            if size > cap {
                return Err(CliError::Usage(format!(
                    "size {size} exceeds the {MAX_SIZE_ENV} cap of {cap}"
                )));
            }
            let report = run_sl(size, !out.no_timing)?;
            emit_target(&report, out);
            Ok(report.passed)
        }
        Command::Verify {
            target: VerifyTarget::Classical { family, rank, out },
        } => {
            let family = Family::from(family);
            let ambient = family.ambient_size(rank);
            if ambient > cap {
                return Err(CliError::Usage(format!(
                    "{}{rank} needs ambient size {ambient}, above the {MAX_SIZE_ENV} cap of {cap}",
                    family.letter()
                )));
            }
            let report = run_classical(family, rank, !out.no_timing)?;
            emit_target(&report, out);
            Ok(report.passed)
        }
        Command::Suite { out } => {
            let suite = run_suite(cap, !out.no_timing)?;
            match out.format {
                Format::Text => print_out(&render_suite_text(&suite)),
                Format::Json => {
                    let mut s = serde_json::to_string_pretty(&suite).expect("report serialization");
                    s.push('\n');
                    print_out(&s);
                }
            }
            Ok(suite.passed)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(CliError::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(CliError::Run(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

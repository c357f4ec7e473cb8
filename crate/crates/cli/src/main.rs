//! `straub`: compute, inspect and verify the generating polynomials of
//! `(2n+1, 2n+3)`-core partitions with distinct parts.
//!
//! Exit status: 0 when every check passes, 1 on a verification failure,
//! 2 on usage or I/O errors.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use straub_core::engine::{PolyCache, CACHE_DIR_ENV};
use straub_core::Error;

use commands::Context;
use report::Format;

#[derive(Debug, Parser)]
#[command(
    name = "straub",
    version,
    about = "Exact enumeration and moments of (2n+1,2n+3)-cores with distinct parts"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,

    /// Directory for cached S_n files; created if absent.
    #[arg(long, global = true, env = CACHE_DIR_ENV)]
    cache: Option<PathBuf>,

    /// Write output to this file instead of stdout.
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    /// Worker threads (default: all cores).
    #[arg(long, global = true, value_parser = clap::value_parser!(u16).range(1..))]
    jobs: Option<u16>,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Check s(n) = 4^n through the integer recurrences.
    Count {
        #[arg(long, default_value_t = 12)]
        max_n: u64,
    },
    /// Print S_n(q) in the straub-poly v1 text format.
    Poly {
        #[arg(long)]
        n: u64,
    },
    /// Size distribution of S_n as (size, multiplicity) rows.
    Dist {
        #[arg(long)]
        n: u64,
    },
    /// Exact mean and central moments for n = 0..=max_n.
    Moments {
        #[arg(long, default_value_t = 6)]
        max_n: u64,
        /// Only this order (1 = mean).
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=7))]
        k: Option<u32>,
    },
    /// Fit the order-k moment by a degree-3k polynomial in n.
    Fit {
        #[arg(long, value_parser = clap::value_parser!(u32).range(1..=7))]
        k: u32,
        /// Defaults to min(3k + 3, 21).
        #[arg(long)]
        max_n: Option<u64>,
    },
    /// Coefficient of variation and scaled moment limits.
    Limits {
        #[arg(long, default_value_t = 21)]
        max_n: u64,
    },
    /// Compare the recurrence with both brute-force enumerations.
    Oracle {
        #[arg(long)]
        n: u64,
    },
    /// Run the full verification suite.
    Verify {
        #[arg(long, default_value_t = 12)]
        max_n: u64,
    },
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Core(Error),
    Io(std::io::Error),
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::Core(e)
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Usage(_) | CliError::Io(_) => 2,
            CliError::Core(Error::Io(_) | Error::CacheCorrupt { .. } | Error::Parse { .. }) => 2,
            CliError::Core(_) => 1,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Usage(msg) => write!(f, "{msg}"),
            CliError::Core(e) => write!(f, "{e}"),
            CliError::Io(e) => write!(f, "{e}"),
        }
    }
}

fn run(cli: Cli) -> Result<bool, CliError> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs.into())
            .build_global()
            .map_err(|e| CliError::Usage(e.to_string()))?;
    }
    let cache = cli.cache.as_ref().map(PolyCache::open).transpose()?;
    let ctx = Context { cache };
    let report = match cli.command {
        Command::Count { max_n } => commands::count(max_n),
        Command::Poly { n } => commands::poly(&ctx, n)?,
        Command::Dist { n } => commands::dist(&ctx, n)?,
        Command::Moments { max_n, k } => commands::moments(&ctx, max_n, k)?,
        Command::Fit { k, max_n } => {
            let max_n = max_n.unwrap_or((3 * k as u64 + 3).min(21));
            commands::fit(&ctx, k, max_n)?
        }
        Command::Limits { max_n } => commands::limits(&ctx, max_n)?,
        Command::Oracle { n } => commands::oracle(&ctx, n)?,
        Command::Verify { max_n } => commands::verify(&ctx, max_n)?,
    };
    report
        .emit(cli.format, cli.out.as_deref())
        .map_err(CliError::Io)?;
    Ok(report.passed())
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(true) => ExitCode::SUCCESS,
        Ok(false) => ExitCode::from(1),
        Err(e) => {
            eprintln!("straub: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

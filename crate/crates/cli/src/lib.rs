//! oddsing: exact computation of odd singular vectors in Verma and Kac
//! modules of gl(m|n) and osp Lie superalgebras.
//!
//! Exit codes: 0 success, 1 mathematical precondition violated, 2 usage
//! error, 3 internal consistency failure.

pub mod commands;
pub mod parse;
pub mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use render::Format;

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum AlgKind {
    Gl,
    Osp,
}

#[derive(Clone, Copy, PartialEq, Eq, Debug, ValueEnum)]
pub enum FamilyArg {
    /// osp(2m|2n)
    Even,
    /// osp(2m+1|2n)
    Odd,
}

#[derive(Args, Debug)]
pub struct AlgebraFlags {
    /// Algebra family
    #[arg(long, value_enum)]
    pub alg: AlgKind,
    /// osp variant (ignored for gl)
    #[arg(long, value_enum)]
    pub family: Option<FamilyArg>,
    /// Ranks m,n: gl(m|n), osp(2m|2n) or osp(2m+1|2n)
    #[arg(long, value_parser = parse::parse_ranks)]
    pub ranks: (usize, usize),
}

#[derive(Args, Debug)]
pub struct OutputFlags {
    /// Output format
    #[arg(long, value_enum, default_value = "plain")]
    pub format: Format,
    /// Write the output document to a file instead of stdout
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Parser, Debug)]
#[command(
    name = "oddsing",
    version,
    about = "Exact odd singular vectors in Verma and Kac modules of gl(m|n) and osp"
)]
pub struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Subcommand, Debug)]
pub enum Cmd {
    /// Print the closed-formula singular vector S_{-beta} v+ (symbolic
    /// lambda entries like a2,a1,-a2-1 are allowed for gl)
    Singular {
        #[command(flatten)]
        alg: AlgebraFlags,
        /// Odd root, e.g. d2-e1
        #[arg(long)]
        beta: String,
        /// Highest weight in display order a_m,...,a_1,b_1,...,b_n
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Print the Shapovalov element theta_beta with Cartan-polynomial
    /// coefficients
    Shapovalov {
        #[command(flatten)]
        alg: AlgebraFlags,
        /// Odd root, e.g. d2-e1
        #[arg(long)]
        beta: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Exact null-space oracle at weight lambda - beta with formula
    /// comparison
    Verify {
        #[command(flatten)]
        alg: AlgebraFlags,
        /// Odd root, e.g. d2-e1
        #[arg(long)]
        beta: String,
        /// Numeric highest weight (exact rationals)
        #[arg(long)]
        lambda: String,
        /// Also report the Kac-module verdict (gl only)
        #[arg(long)]
        kac: bool,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Kac module verdict: reduction scalar and descent/uniqueness
    KacCheck {
        #[command(flatten)]
        alg: AlgebraFlags,
        /// Odd root, e.g. d2-e1
        #[arg(long)]
        beta: String,
        /// Numeric dominant integral highest weight
        #[arg(long)]
        lambda: String,
        #[command(flatten)]
        out: OutputFlags,
    },
    /// Deterministic oracle sweep over roots and sampled atypical weights
    Sweep {
        /// Algebra family
        #[arg(long, value_enum)]
        alg: AlgKind,
        /// osp variant (ignored for gl)
        #[arg(long, value_enum)]
        family: Option<FamilyArg>,
        /// Upper rank bounds m,n (inclusive)
        #[arg(long, value_parser = parse::parse_ranks)]
        max_ranks: (usize, usize),
        /// Atypical weights sampled per root
        #[arg(long, default_value_t = 3)]
        samples: usize,
        /// RNG seed
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[command(flatten)]
        out: OutputFlags,
    },
}

#[derive(Debug)]
pub enum CliError {
    /// A mathematical precondition was violated (exit 1).
    Math(oddsing_core::Error),
    /// Malformed flags (exit 2).
    Usage(String),
    /// Internal consistency failure (exit 3).
    Internal(String),
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Math(e) => match e {
                oddsing_core::Error::InternalConsistency(_)
                | oddsing_core::Error::ClosureFailure { .. } => 3,
                _ => 1,
            },
            CliError::Usage(_) => 2,
            CliError::Internal(_) => 3,
        }
    }
}

impl std::fmt::Display for CliError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            CliError::Math(e) => write!(f, "{e}"),
            CliError::Usage(msg) => write!(f, "usage error: {msg}"),
            CliError::Internal(msg) => write!(f, "internal error: {msg}"),
        }
    }
}

pub fn run(cli: Cli) -> Result<(), CliError> {
    match cli.cmd {
        Cmd::Singular {
            alg,
            beta,
            lambda,
            out,
        } => commands::cmd_singular(&alg, &beta, &lambda, &out),
        Cmd::Shapovalov { alg, beta, out } => commands::cmd_shapovalov(&alg, &beta, &out),
        Cmd::Verify {
            alg,
            beta,
            lambda,
            kac,
            out,
        } => commands::cmd_verify(&alg, &beta, &lambda, kac, &out),
        Cmd::KacCheck {
            alg,
            beta,
            lambda,
            out,
        } => commands::cmd_kac_check(&alg, &beta, &lambda, &out),
        Cmd::Sweep {
            alg,
            family,
            max_ranks,
            samples,
            seed,
            out,
        } => commands::cmd_sweep(alg, family, max_ranks, samples, seed, &out),
    }
}

pub fn main_entry() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

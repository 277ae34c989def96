//! `pcmtie`: tie projections, manipulation cost and pair scans for pairwise
//! comparison matrices.
//!
//! Exit codes: 0 success, 2 parse error, 3 validation error, 4 bad arguments.

mod commands;
mod error;
mod input;
mod output;

use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use pcmtie::DEFAULT_DELTA;

use crate::input::Scale;
use crate::output::Format;

#[derive(Debug, Parser)]
#[command(name = "pcmtie", version, about = "Closest tie-equating approximations of pairwise comparison matrices")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    #[command(flatten)]
    pub opts: GlobalOpts,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Scale of CSV input (JSON files declare their own)
    #[arg(long, value_enum, default_value_t = Scale::Multiplicative, global = true)]
    pub scale: Scale,

    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub output: Format,

    /// CSV input starts with a header row of alternative names
    #[arg(long, global = true)]
    pub names: bool,

    /// Bound on |m_ij * m_ji - 1| for multiplicative input
    #[arg(long, default_value_t = 1e-8, global = true)]
    pub tol_reciprocity: f64,

    /// Bound on |a_ij + a_ji| for additive input
    #[arg(long, default_value_t = 1e-9, global = true)]
    pub tol_antisymmetry: f64,

    /// Weights closer than this are reported as tied
    #[arg(long, default_value_t = 1e-9, global = true)]
    pub tol_tie: f64,
}

#[derive(Debug, Args)]
pub struct PairArg {
    /// Two distinct alternatives, 1-based
    #[arg(long, num_args = 2, value_names = ["I", "J"], required = true)]
    pub pair: Vec<usize>,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Check reciprocity (multiplicative) or antisymmetry (additive)
    Validate { input: PathBuf },
    /// Geometric-mean (multiplicative) or row-mean (additive) weights and ranking
    Weights {
        /// Scale weights to sum to one
        #[arg(long)]
        normalize: bool,
        input: PathBuf,
    },
    /// Closest matrix under which the pair is tied
    Project {
        #[command(flatten)]
        pair: PairArg,
        input: PathBuf,
    },
    /// Projection plus a small shift making `winner` lead the pair
    Tip {
        #[command(flatten)]
        pair: PairArg,
        #[arg(long)]
        winner: usize,
        #[arg(long, default_value_t = DEFAULT_DELTA, allow_hyphen_values = true)]
        delta: f64,
        input: PathBuf,
    },
    /// Difference matrix and Ease of Manipulation Index for the pair
    Emi {
        #[command(flatten)]
        pair: PairArg,
        input: PathBuf,
    },
    /// EMI and distance for every pair, easiest first
    Scan { input: PathBuf },
    /// Convert between multiplicative and additive scales
    Convert {
        #[arg(long, value_enum)]
        to: Scale,
        input: PathBuf,
    },
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return match e.kind() {
                clap::error::ErrorKind::DisplayHelp | clap::error::ErrorKind::DisplayVersion => {
                    ExitCode::SUCCESS
                }
                _ => ExitCode::from(4),
            };
        }
    };
    match commands::run(&cli) {
        Ok((text, code)) => {
            let mut stdout = std::io::stdout().lock();
            let _ = stdout.write_all(text.as_bytes());
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code() as u8)
        }
    }
}

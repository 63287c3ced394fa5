//! `ybknot`: link invariants of braid closures from Yang–Baxter operators.
//!
//! Exit codes: 0 success, 2 bad input, 3 algebra or enhancement failure,
//! 4 internal invariant violation or oracle disagreement.

mod commands;
mod setup;

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "ybknot", version, about = "Alexander polynomials of braid closures via enhanced Yang-Baxter operators")]
pub struct Cli {
    #[command(flatten)]
    pub global: GlobalOpts,
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Args)]
pub struct GlobalOpts {
    /// Algebra JSON file with a `mu` map, or `builtin:<dual|split|involutive>`.
    #[arg(long, global = true, default_value = "builtin:dual")]
    pub algebra: String,
    #[arg(long, global = true, value_enum, default_value_t = OutputFormat::Text)]
    pub output_format: OutputFormat,
    /// Substitute rationals for the parameters, e.g. `--specialize x=4 y=9`.
    #[arg(long, global = true, num_args = 1..=2, value_name = "VAR=RAT")]
    pub specialize: Vec<String>,
    /// A square root of x; required when x has no rational square root.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub sqrt_x: Option<String>,
    /// A square root of y; required when y has no rational square root.
    #[arg(long, global = true, allow_hyphen_values = true)]
    pub sqrt_y: Option<String>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OutputFormat {
    Text,
    Json,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Modified Markov trace and Alexander polynomial of a braid closure.
    Invariant {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
    /// Run every algebra, operator and enhancement check.
    Verify,
    /// Alexander polynomial from the skein and Burau oracles.
    Oracle {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
    },
    /// Check the skein relation at one letter of a braid.
    SkeinCheck {
        #[arg(long, allow_hyphen_values = true)]
        braid: String,
        /// 1-based index of the letter to switch and smooth.
        #[arg(long)]
        position: usize,
    },
    /// Compare pipeline and oracles on the built-in fixture braids.
    Fixtures {
        #[arg(long, hide = true)]
        inject_fault: bool,
    },
}

/// A reportable failure with its exit code.
#[derive(Debug)]
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl Failure {
    pub fn new(code: u8, message: impl Into<String>) -> Self {
        Failure { code, message: message.into() }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match commands::run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

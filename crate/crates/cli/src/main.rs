mod commands;
mod config;

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::CommonArgs;

/// Repulsion and reach of stationary isotropic determinantal point processes.
///
/// Exit codes: 0 ok, 2 invalid kernel spec, 3 unsupported operation or
/// divergent moment, 4 numerical failure, 64 usage error.
#[derive(Parser, Debug)]
#[command(name = "dpp-reach", version)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Validate a kernel spec and report the existence bound
    Check(CommonArgs),
    /// Total repulsion mass and ball-ratio curve over --R-grid
    Eta(CommonArgs),
    /// Reach R*, the nearest-neighbour threshold and the comparison between them
    Reach(CommonArgs),
    /// Laguerre-Gauss rate curve over --R-grid, plus finite-n rates for --n-list
    Rate(CommonArgs),
    /// Summary table for the example specs (or for the given spec)
    Table(CommonArgs),
    /// Radial moments E|X|^k for the orders in --k
    Moments(CommonArgs),
    /// Monte Carlo radii of the repulsion vector
    Sample(CommonArgs),
}

/// A failure with its exit status.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    InvalidSpec(String),
    Unsupported(String),
    Numeric(String),
}

impl Failure {
    fn code(&self) -> u8 {
        match self {
            Failure::Usage(_) => 64,
            Failure::InvalidSpec(_) => 2,
            Failure::Unsupported(_) => 3,
            Failure::Numeric(_) => 4,
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::InvalidSpec(m) | Failure::Unsupported(m) | Failure::Numeric(m) => m,
        }
    }
}

impl From<dpp_reach::Error> for Failure {
    fn from(e: dpp_reach::Error) -> Self {
        use dpp_reach::Error as E;
        let msg = e.to_string();
        match e {
            E::Domain(_) | E::InfeasibleDistances { .. } => Failure::Usage(msg),
            E::InvalidSpec(_) => Failure::InvalidSpec(msg),
            E::Unsupported { .. } | E::MomentDivergence { .. } => Failure::Unsupported(msg),
            E::NotConverged { .. } | E::InfiniteMass | E::Numeric(_) => Failure::Numeric(msg),
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { 64 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    match commands::run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message());
            ExitCode::from(f.code())
        }
    }
}

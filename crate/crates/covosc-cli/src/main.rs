//! `covosc` — figure-data and table generator for the covariant-oscillator
//! hadron model.
//!
//! Exit codes: 0 on success, 2 on usage/config errors, 3 on
//! numerical-accuracy errors (inadequate grids, failed validation checks).

use clap::{Parser, Subcommand};
use thiserror::Error;

mod commands;
mod config;

use config::CommandArgs;

#[derive(Debug, Error)]
pub enum CliError {
    #[error("{0}")]
    Usage(String),
    #[error("{0}")]
    Accuracy(String),
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Accuracy(_) => 3,
        }
    }
}

impl From<covosc::Error> for CliError {
    fn from(err: covosc::Error) -> Self {
        use covosc::Error::*;
        match err {
            InsufficientGrid { .. }
            | AxisTooNarrow { .. }
            | IndefiniteKernel { .. }
            | EigensolverFailure { .. } => CliError::Accuracy(err.to_string()),
            _ => CliError::Usage(err.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "covosc",
    version,
    about = "Covariant-oscillator hadron model: squeeze grids, entropy tables, \
             spectra, parton densities, and the velocity-temperature curve"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Sample |psi_eta|^2 on a (z, t) grid, with the squeeze-ellipse record
    SqueezeGrid(CommandArgs),
    /// Tabulate the closed-form (and optionally numeric) entropy over a rapidity sweep
    EntropyTable(CommandArgs),
    /// Dump the eigenvalue spectrum of the reduced density kernel
    Spectrum(CommandArgs),
    /// Longitudinal parton density at a given boost
    Parton(CommandArgs),
    /// Velocity-squared versus temperature table
    TempCurve(CommandArgs),
    /// Run the numerical validation suite
    Validate(CommandArgs),
}

fn run(cli: Cli) -> Result<(), CliError> {
    let (args, command): (&CommandArgs, fn(&config::RunConfig) -> Result<(), CliError>) =
        match &cli.command {
            Command::SqueezeGrid(a) => (a, commands::squeeze_grid),
            Command::EntropyTable(a) => (a, commands::entropy_table),
            Command::Spectrum(a) => (a, commands::spectrum),
            Command::Parton(a) => (a, commands::parton),
            Command::TempCurve(a) => (a, commands::temp_curve),
            Command::Validate(a) => (a, commands::validate),
        };
    let resolved = config::resolve(args)?;
    command(&resolved)
}

fn main() {
    let cli = Cli::parse();
    if let Err(err) = run(cli) {
        eprintln!("error: {err}");
        std::process::exit(err.exit_code());
    }
}

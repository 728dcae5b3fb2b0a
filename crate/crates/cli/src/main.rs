//! Command-line surface for the Dirichlet-series laboratory.
//!
//! Exit codes: 0 success, 1 numeric failure (diagnostic JSON on stderr),
//! 2 usage error, 3 I/O error.

mod construct;
mod manifest;
mod output;
mod report;
mod supnorm;

use clap::{Parser, Subcommand};

#[derive(Parser)]
#[command(
    name = "bohrstrip",
    version,
    about = "Convergence strips of Dirichlet series: constructions, bounds, and verification reports",
    propagate_version = true
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build the prime-block series and write coefficient artifacts.
    Construct(construct::ConstructArgs),
    /// Sample the sup norm of a ±1 homogeneous polynomial on the polytorus.
    Supnorm(supnorm::SupnormArgs),
    /// Emit CSV verification reports.
    #[command(subcommand)]
    Report(report::ReportCommand),
}

/// Failure category carrying its process exit code.
pub enum CliError {
    Usage(String),
    Numeric(bohrstrip::Error),
    Io(std::io::Error),
}

impl CliError {
    fn exit(self) -> ! {
        match self {
            CliError::Usage(msg) => {
                eprintln!("error: {msg}");
                std::process::exit(2);
            }
            CliError::Numeric(err) => {
                let diagnostic = serde_json::json!({
                    "kind": numeric_kind(&err),
                    "error": err.to_string(),
                });
                eprintln!("{diagnostic}");
                std::process::exit(1);
            }
            CliError::Io(err) => {
                eprintln!("i/o error: {err}");
                std::process::exit(3);
            }
        }
    }
}

fn numeric_kind(err: &bohrstrip::Error) -> &'static str {
    use bohrstrip::Error::*;
    match err {
        QuadratureFailure { .. } => "quadrature-failure",
        AccelerationFailure { .. } => "acceleration-failure",
        SingularFactor(_) => "singular-factor",
        Overflow(_) => "overflow",
        ResourceLimit(_) => "resource-limit",
        InvalidArgument(_) => "invalid-argument",
        Io(_) => "io",
        Serde(_) => "serialization",
    }
}

impl From<bohrstrip::Error> for CliError {
    fn from(err: bohrstrip::Error) -> Self {
        match err {
            bohrstrip::Error::InvalidArgument(msg) => CliError::Usage(msg),
            bohrstrip::Error::Io(io) => CliError::Io(io),
            other => CliError::Numeric(other),
        }
    }
}

impl From<std::io::Error> for CliError {
    fn from(err: std::io::Error) -> Self {
        CliError::Io(err)
    }
}

fn main() {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Construct(args) => construct::run(args),
        Command::Supnorm(args) => supnorm::run(args),
        Command::Report(cmd) => report::run(cmd),
    };
    if let Err(err) = result {
        err.exit();
    }
}

//! Command-line front end: dataset generation, training, evaluation,
//! convex hulls and the benchmark harness.
//!
//! Exit codes: 0 success, 1 usage or validation error, 2 runtime failure,
//! 3 training did not converge.

mod bench;
mod commands;
mod truth;

use std::process::ExitCode;

use clap::error::ErrorKind;
use clap::{Parser, Subcommand};

use poincare_linear::Error;

/// Outcome classes that map onto the stable exit-code contract.
pub enum Failure {
    /// The request itself is ill-formed: bad flag values, incompatible
    /// dimensions, wrong label arity.
    Usage(String),
    /// The request is valid but execution failed: I/O, parsing, sampling.
    Runtime(String),
    /// Training finished without reaching convergence.
    NonConverged(String),
}

impl Failure {
    fn exit_code(&self) -> ExitCode {
        match self {
            Failure::Usage(_) => ExitCode::from(1),
            Failure::Runtime(_) => ExitCode::from(2),
            Failure::NonConverged(_) => ExitCode::from(3),
        }
    }

    fn message(&self) -> &str {
        match self {
            Failure::Usage(m) | Failure::Runtime(m) | Failure::NonConverged(m) => m,
        }
    }
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::UnsatisfiableConfig { .. }
            | Error::Parse { .. }
            | Error::Io(_)
            | Error::Json(_) => Failure::Runtime(e.to_string()),
            _ => Failure::Usage(e.to_string()),
        }
    }
}

#[derive(Parser)]
#[command(
    name = "poincare-linear",
    about = "Linear classifiers on the Poincare ball",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Generate a margin-separated synthetic dataset plus its ground truth.
    Generate(commands::GenerateArgs),
    /// Train a classifier and serialize the model.
    Train(commands::TrainArgs),
    /// Evaluate a serialized model on a dataset.
    Evaluate(commands::EvaluateArgs),
    /// Compute the convex hull of a 2-D dataset or of one class.
    Hull(commands::HullArgs),
    /// Run a reproducible benchmark suite.
    Benchmark(bench::BenchmarkArgs),
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = match e.kind() {
                ErrorKind::DisplayHelp | ErrorKind::DisplayVersion => {
                    print!("{e}");
                    return ExitCode::SUCCESS;
                }
                _ => 1,
            };
            eprint!("{e}");
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Generate(args) => commands::generate(&args),
        Command::Train(args) => commands::train(&args),
        Command::Evaluate(args) => commands::evaluate(&args),
        Command::Hull(args) => commands::hull(&args),
        Command::Benchmark(args) => bench::run(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(failure) => {
            eprintln!("error: {}", failure.message());
            failure.exit_code()
        }
    }
}

//! `cluster-cone`: tables, cones and verification runs for finite-type
//! cluster algebras.
//!
//! Exit codes: 0 success, 1 verification failure or computation error,
//! 2 invalid configuration.

mod config;
mod output;
mod verify;

use std::io::Write;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

use config::{RunConfig, UsageError};
use verify::Check;

#[derive(Parser, Debug)]
#[command(name = "cluster-cone", version, about = "Exact Gröbner cones of finite-type cluster algebras")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List the variables in coordinate order.
    Variables(RunConfig),
    /// Print the compatibility degree matrix of the cluster variables.
    Compat(RunConfig),
    /// List exchange relations with their degree vectors.
    Relations {
        #[command(flatten)]
        config: RunConfig,
        #[arg(long)]
        primitive_only: bool,
    },
    /// Lineality basis, rays and facet inequalities of the Gröbner cone.
    Cone(RunConfig),
    /// Run a verification suite.
    Verify {
        #[command(flatten)]
        config: RunConfig,
        #[arg(long, value_enum, default_value = "all")]
        check: Check,
        /// Largest monomial degree in the derivation sweep.
        #[arg(long, default_value_t = 3)]
        max_degree: u32,
    },
}

enum Failure {
    Usage(UsageError),
    Verification,
    Computation(String),
}

impl From<UsageError> for Failure {
    fn from(e: UsageError) -> Self {
        Failure::Usage(e)
    }
}

impl From<cluster_cone::Error> for Failure {
    fn from(e: cluster_cone::Error) -> Self {
        Failure::Computation(e.to_string())
    }
}

fn emit(config: &RunConfig, text: &str) -> Result<(), Failure> {
    match &config.out {
        Some(path) => std::fs::write(path, text)
            .map_err(|e| Failure::Computation(format!("{}: {e}", path.display()))),
        None => {
            let mut stdout = std::io::stdout().lock();
            stdout
                .write_all(text.as_bytes())
                .map_err(|e| Failure::Computation(e.to_string()))
        }
    }
}

fn run(cli: Cli) -> Result<(), Failure> {
    match cli.command {
        Command::Variables(config) => {
            let model = config.build()?;
            emit(&config, &output::variables(&config, &model)?)
        }
        Command::Compat(config) => {
            let model = config.build()?;
            emit(&config, &output::compat(&config, &model)?)
        }
        Command::Relations {
            config,
            primitive_only,
        } => {
            let model = config.build()?;
            emit(&config, &output::relations(&config, &model, primitive_only)?)
        }
        Command::Cone(config) => {
            let model = config.build()?;
            emit(&config, &output::cone(&config, &model)?)
        }
        Command::Verify {
            config,
            check,
            max_degree,
        } => {
            let outcome = verify::run(&config, check, max_degree)?;
            emit(&config, &outcome.text)?;
            if outcome.passed {
                Ok(())
            } else {
                Err(Failure::Verification)
            }
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Verification) => ExitCode::from(1),
        Err(Failure::Computation(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Usage(e)) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};

mod commands;
mod config;

use config::{CommandName, Settings};

/// Bicomplex Fourier and Paley-Wiener toolkit.
///
/// Options may also come from a JSON file given with --config; options on the
/// command line take precedence.
#[derive(Parser)]
#[command(name = "bcpw", version)]
struct Cli {
    /// JSON run configuration (keys as the long options, plus "command")
    #[arg(long, global = true)]
    config: Option<PathBuf>,

    #[command(subcommand)]
    command: Option<Command>,
}

#[derive(Subcommand)]
enum Command {
    /// Print the idempotent components of a bicomplex number
    Decompose(Settings),
    /// Fourier transform of a density at real or bicomplex points
    Transform(Settings),
    /// Half-plane extension of a half-line density
    Extend(Settings),
    /// Recover a half-line density from its extension along a horizontal line
    Recover(Settings),
    /// Band-limited synthesis of a density on (-A, A)
    Band(Settings),
    /// Cauchy integral of boundary values
    Cauchy(Settings),
    /// Run verification suites and write a CSV report
    Verify(Settings),
}

impl Command {
    fn split(self) -> (CommandName, Settings) {
        match self {
            Command::Decompose(s) => (CommandName::Decompose, s),
            Command::Transform(s) => (CommandName::Transform, s),
            Command::Extend(s) => (CommandName::Extend, s),
            Command::Recover(s) => (CommandName::Recover, s),
            Command::Band(s) => (CommandName::Band, s),
            Command::Cauchy(s) => (CommandName::Cauchy, s),
            Command::Verify(s) => (CommandName::Verify, s),
        }
    }
}

/// Why a run did not succeed.
pub enum Failure {
    /// Bad configuration or input; exit status 2.
    Config(String),
    /// A verification check failed; exit status 1.
    Check(String),
}

impl From<String> for Failure {
    fn from(s: String) -> Self {
        Failure::Config(s)
    }
}

fn resolve(cli: Cli) -> Result<(CommandName, Settings), Failure> {
    let (file_command, file_settings) = match &cli.config {
        Some(path) => config::read_file(path)?,
        None => (None, Settings::default()),
    };
    let (command, flags) = match cli.command {
        Some(c) => c.split(),
        None => match file_command {
            Some(c) => (c, Settings::default()),
            None => return Err(Failure::Config("no command given (use a subcommand or \"command\" in --config)".into())),
        },
    };
    let settings = flags.overlay(file_settings);
    settings.validate()?;
    Ok((command, settings))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let outcome = resolve(cli).and_then(|(command, settings)| commands::run(command, &settings));
    match outcome {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Check(msg)) => {
            eprintln!("bcpw: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Config(msg)) => {
            eprintln!("bcpw: {msg}");
            ExitCode::from(2)
        }
    }
}

//! `malcev`: verify identities, build derived structures and search for
//! O-operators from JSON files or built-in fixtures.
//!
//! Exit codes: 0 when every check passes, 1 when a mathematical check fails or
//! a construction is refused on mathematical grounds, 2 on usage or input
//! errors.

mod build;
mod load;
mod report;
mod verify;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use malcev_core::Error;

use load::Loader;
use report::Report;

#[derive(Parser, Debug)]
#[command(name = "malcev", version, about = "Exact checks and constructions for Malcev and pre-Malcev algebras")]
pub struct Cli {
    /// Also evaluate every identity with the independent oracle and compare.
    #[arg(long, global = true)]
    oracle: bool,
    /// Write a machine-readable report to this path.
    #[arg(long, global = true, value_name = "PATH")]
    json: Option<PathBuf>,
    /// Refuse inputs of larger dimension.
    #[arg(long, global = true, default_value_t = 64, value_name = "N")]
    max_dim: usize,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Check identities of a given structure.
    #[command(subcommand)]
    Verify(verify::Verify),
    /// Construct a derived structure.
    #[command(subcommand)]
    Build(build::Build),
    /// Exhaustive searches.
    #[command(subcommand)]
    Search(build::Search),
}

/// Arguments shared by commands that write an object.
#[derive(Args, Debug)]
pub struct Output {
    /// Output file; without it the object is printed.
    #[arg(short = 'o', long = "output", value_name = "PATH")]
    path: Option<PathBuf>,
}

#[derive(Debug)]
pub enum CliError {
    Usage(String),
    Math(String),
}

impl CliError {
    fn code(&self) -> i32 {
        match self {
            CliError::Usage(_) => 2,
            CliError::Math(_) => 1,
        }
    }

    fn message(&self) -> &str {
        match self {
            CliError::Usage(m) | CliError::Math(m) => m,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        match e {
            Error::Refused(_) | Error::Singular | Error::NotInvertibleOverRing { .. } => CliError::Math(e.to_string()),
            _ => CliError::Usage(e.to_string()),
        }
    }
}

pub struct Ctx {
    pub load: Loader,
    pub oracle: bool,
}

fn run(cli: Cli) -> Result<Report, CliError> {
    let ctx = Ctx { load: Loader { max_dim: cli.max_dim }, oracle: cli.oracle };
    match cli.command {
        Command::Verify(v) => verify::run(&ctx, v),
        Command::Build(b) => build::run(&ctx, b),
        Command::Search(s) => build::search(&ctx, s),
    }
}

fn main() -> ExitCode {
    let argv: Vec<String> = std::env::args().skip(1).collect();
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let json = cli.json.clone();
    let (machine, code) = match run(cli) {
        Ok(report) => {
            print!("{}", report.human());
            (report.machine(&argv), report.exit_code())
        }
        Err(e) => {
            eprintln!("error: {}", e.message());
            (report::error_report(&argv, e.message(), e.code()), e.code())
        }
    };
    if let Some(path) = json {
        if let Err(e) = std::fs::write(&path, machine) {
            eprintln!("error: cannot write {}: {e}", path.display());
            return ExitCode::from(2);
        }
    }
    ExitCode::from(code as u8)
}

#[cfg(test)]
mod tests {
    use super::*;
    use clap::CommandFactory;

    #[test]
    fn cli_definition_is_consistent() {
        Cli::command().debug_assert();
    }

    #[test]
    fn error_classes() {
        assert_eq!(CliError::from(Error::Singular).code(), 1);
        assert_eq!(CliError::from(Error::Refused("x".into())).code(), 1);
        assert_eq!(CliError::from(Error::Shape("x".into())).code(), 2);
    }
}

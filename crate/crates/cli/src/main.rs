//! `hyperdual` command-line front end.
//!
//! Exit codes: 0 success, 1 input error, 2 internal disagreement, 3 size
//! guard exceeded.

mod commands;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use hyperdual::DEFAULT_MAX_SPACE;

use commands::CliError;

#[derive(Parser, Debug)]
#[command(
    name = "hyperdual",
    version,
    about = "Associated primes of powers of Alexander duals of hypergraph edge ideals"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Associated primes of the dual square, with structural summary.
    Analyze(AnalyzeArgs),
    /// Build a hypergraph from one of the families.
    Construct(ConstructArgs),
    /// Associated primes of a dual power (or any monomial ideal) by colon scan.
    Oracle(OracleArgs),
    /// Cross-check every computation route on a seeded random corpus.
    Difftest(DifftestArgs),
    /// Write a Macaulay2 script for external cross-validation.
    Export(ExportArgs),
}

#[derive(Args, Debug, Clone)]
pub struct IoArgs {
    /// Input JSON file (`-` for stdin).
    #[arg(long)]
    pub input: Option<PathBuf>,
    /// Output file; stdout when omitted.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug, Clone)]
pub struct GuardArgs {
    /// Raise or lower the cap on exhaustive scan sizes.
    #[arg(long, value_name = "INT")]
    pub max_space: Option<u128>,
}

impl GuardArgs {
    /// The effective cap, warning on stderr when it differs from the default.
    pub fn limit(&self) -> u128 {
        match self.max_space {
            Some(limit) if limit != DEFAULT_MAX_SPACE => {
                eprintln!(
                    "WARNING: size guard changed from {DEFAULT_MAX_SPACE} to {limit}; \
                     exhaustive scans may take very long or exhaust memory"
                );
                limit
            }
            _ => DEFAULT_MAX_SPACE,
        }
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    /// The chain-of-triangles 3-uniform family on n vertices.
    T2,
    /// Every m-subset of n vertices.
    Complete,
}

#[derive(Args, Debug, Clone)]
pub struct FamilyArgs {
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long)]
    pub m: Option<usize>,
}

#[derive(Args, Debug)]
pub struct AnalyzeArgs {
    #[command(flatten)]
    pub io: IoArgs,
    #[command(flatten)]
    pub guard: GuardArgs,
}

#[derive(Args, Debug)]
pub struct ConstructArgs {
    #[command(flatten)]
    pub family: FamilyArgs,
    /// Height of the target prime for the connected construction.
    #[arg(long)]
    pub q: Option<usize>,
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct OracleArgs {
    #[command(flatten)]
    pub io: IoArgs,
    /// Power of the Alexander dual (1, 2 or 3); ignored for ideal input.
    #[arg(long, default_value_t = 2)]
    pub power: u32,
    /// Exponent box for the colon scan; defaults to the power (hypergraph
    /// input) or the largest generator exponent (ideal input).
    #[arg(long)]
    pub expbound: Option<u32>,
    #[command(flatten)]
    pub guard: GuardArgs,
}

#[derive(Args, Debug)]
pub struct DifftestArgs {
    /// Audit this hypergraph file instead of a random corpus.
    #[arg(long)]
    pub input: Option<PathBuf>,
    #[arg(long)]
    pub output: Option<PathBuf>,
    /// Audit one family member instead of a random corpus.
    #[arg(long, value_enum)]
    pub family: Option<Family>,
    /// Largest vertex count (corpus) or exact vertex count (family).
    #[arg(long, default_value_t = 7)]
    pub n: usize,
    /// Uniformities to draw from; repeat the flag for several.
    #[arg(long)]
    pub m: Vec<usize>,
    /// Largest edge count per corpus instance.
    #[arg(long, default_value_t = 8)]
    pub edges: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[arg(long, default_value_t = 200)]
    pub trials: usize,
    #[command(flatten)]
    pub guard: GuardArgs,
}

#[derive(Args, Debug)]
pub struct ExportArgs {
    #[command(flatten)]
    pub io: IoArgs,
    /// Power of the dual whose associated primes the script requests.
    #[arg(long, default_value_t = 2)]
    pub power: u32,
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { 1 } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let result = match cli.command {
        Command::Analyze(args) => commands::analyze(&args),
        Command::Construct(args) => commands::construct(&args),
        Command::Oracle(args) => commands::oracle(&args),
        Command::Difftest(args) => commands::difftest(&args),
        Command::Export(args) => commands::export(&args),
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

impl CliError {
    fn exit_code(&self) -> u8 {
        match self {
            CliError::Input(_) => 1,
            CliError::Disagreement(_) => 2,
            CliError::Library(e) => match e {
                hyperdual::Error::Inconsistency(_) => 2,
                hyperdual::Error::GuardExceeded { .. } => 3,
                _ => 1,
            },
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use hyperdual::Error;

    #[test]
    fn exit_codes() {
        assert_eq!(CliError::Input("x".into()).exit_code(), 1);
        assert_eq!(CliError::Disagreement("x".into()).exit_code(), 2);
        assert_eq!(
            CliError::Library(Error::Inconsistency("x".into())).exit_code(),
            2
        );
        let guard = Error::GuardExceeded {
            what: "scan",
            size: 2,
            limit: 1,
        };
        assert_eq!(CliError::Library(guard).exit_code(), 3);
        assert_eq!(CliError::Library(Error::EmptyIdeal).exit_code(), 1);
    }

    #[test]
    fn parser_is_well_formed() {
        use clap::CommandFactory;
        Cli::command().debug_assert();
    }
}

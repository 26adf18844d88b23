use std::io::Read;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use pseudofree_cli::{run, Command};

/// Exact Chern numbers of pseudo-free circle actions.
///
/// Reads one JSON document (from --input or standard input), writes one JSON
/// document to standard output. Exit codes: 0 computed or check passed,
/// 1 check failed, 2 invalid input or violated precondition.
#[derive(Parser)]
#[command(name = "pseudofree", version)]
struct Cli {
    /// Read the input document from this file instead of standard input.
    #[arg(long, global = true, value_name = "PATH")]
    input: Option<PathBuf>,

    #[command(subcommand)]
    command: CliCommand,
}

#[derive(Subcommand)]
enum CliCommand {
    /// Chern number mod Z of local data {"n", "orbits"}.
    Euler,
    /// Quotient of local data by a cyclic subgroup of order r.
    Quotient {
        /// Order of the cyclic subgroup; must be coprime to every orbit order.
        #[arg(long)]
        r: i64,
    },
    /// Equivariant stabilization of local data (appends a weight-1 slot).
    Stabilize,
    /// Chern number of a linear sphere action {"weights"}; includes the
    /// exceptional-orbit local data when the action is pseudo-free.
    Sphere,
    /// Single-orbit lens model of type (p; q) with its predicted value.
    Lens {
        /// Isotropy order, at least 2.
        #[arg(long)]
        p: i64,
        /// Slice weight, a unit mod p.
        #[arg(long)]
        q: i64,
    },
    /// Weighted-projective characteristic numbers for {"weights"}.
    Kawasaki,
    /// Suspension of fixed-point data {"points"} to local data at a prime p.
    Suspend {
        /// Prime exceeding the magnitude of every point weight.
        #[arg(long)]
        p: i64,
    },
    /// Fixed-point data of the projective-space action with {"params"}.
    Cpn,
    /// Run one named arithmetic check against the input document.
    Check {
        /// One of: min-orbits, gcd-partner, localization, weinstein,
        /// sphere-conjecture, symplectic, liang.
        #[arg(long)]
        name: String,
    },
    /// Monte Carlo cross-check of the sphere Chern number for {"weights"}.
    VerifyMc {
        /// Total sample count across all chunks.
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// Seed for the deterministic counter-based streams.
        #[arg(long, default_value_t = 0)]
        seed: u64,
        /// Number of independent streams; the result does not depend on it
        /// beyond the chunking of sample counts.
        #[arg(long, default_value_t = 16)]
        chunks: u64,
    },
}

fn command_of(cli: &CliCommand) -> Command {
    match cli {
        CliCommand::Euler => Command::Euler,
        CliCommand::Quotient { r } => Command::Quotient { r: *r },
        CliCommand::Stabilize => Command::Stabilize,
        CliCommand::Sphere => Command::Sphere,
        CliCommand::Lens { p, q } => Command::Lens { p: *p, q: *q },
        CliCommand::Kawasaki => Command::Kawasaki,
        CliCommand::Suspend { p } => Command::Suspend { p: *p },
        CliCommand::Cpn => Command::Cpn,
        CliCommand::Check { name } => Command::Check { name: name.clone() },
        CliCommand::VerifyMc {
            samples,
            seed,
            chunks,
        } => Command::VerifyMc {
            samples: *samples,
            seed: *seed,
            chunks: *chunks,
        },
    }
}

fn read_input(path: &Option<PathBuf>) -> std::io::Result<Vec<u8>> {
    match path {
        Some(p) => std::fs::read(p),
        None => {
            let mut buf = Vec::new();
            std::io::stdin().read_to_end(&mut buf)?;
            Ok(buf)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let command = command_of(&cli.command);
    let input = if command.reads_input() {
        match read_input(&cli.input) {
            Ok(bytes) => bytes,
            Err(e) => {
                println!("{{\"error\":\"cannot read input: {e}\",\"violations\":[]}}");
                return ExitCode::from(2);
            }
        }
    } else {
        Vec::new()
    };
    let (code, body) = run(&command, &input);
    println!("{body}");
    ExitCode::from(code as u8)
}

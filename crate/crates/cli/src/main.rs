//! `orbitope` command-line front end.
//!
//! Exit codes: 0 success, 1 domain error (a mathematical precondition
//! failed or the request is unsupported), 2 usage error (bad flags, vectors
//! or group specifications), 3 cross-check disagreement.

mod commands;
mod plot;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use orbitope::Error;

/// Exact moment polyhedra of holomorphic coadjoint orbits.
#[derive(Debug, Parser)]
#[command(name = "orbitope", version, about, propagate_version = true)]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Text, global = true)]
    pub format: Format,

    /// Write the output to this file instead of stdout.
    #[arg(long, global = true)]
    pub out: Option<PathBuf>,
}

/// Output format of every verb.
#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    /// Human-readable text.
    Text,
    /// Machine-readable JSON.
    Json,
}

/// Group and orbit parameter shared by most verbs.
#[derive(Debug, Args)]
pub struct OrbitArgs {
    /// Group specification, e.g. `sp:n=2`, `su:p=2,q=2`, `su:n=2,q=1`, `so_star:n=3`.
    #[arg(long)]
    pub group: String,

    /// Orbit parameter Λ as comma-separated rationals, e.g. `3,1` or `5/2,-1/2`.
    #[arg(long, allow_hyphen_values = true)]
    pub lambda: String,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Compute the inequalities of the moment polyhedron.
    Ineqs {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Use the explicit per-family inequality lists instead of the pair assembly.
        #[arg(long)]
        closed_form: bool,
        /// Assemble from all dominant pairs rather than well-covering pairs only.
        #[arg(long, conflicts_with = "closed_form")]
        relaxed: bool,
        /// Annotate each text row with where it comes from.
        #[arg(long)]
        provenance: bool,
    },
    /// Test whether μ lies in the assembled polyhedron.
    Member {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// The point μ, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Test whether μ lies in the polyhedron using the independent Horn oracle.
    Oracle {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// The point μ, comma-separated rationals.
        #[arg(long, allow_hyphen_values = true)]
        mu: String,
    },
    /// Compare assembly and oracle on a half-integer grid around Λ.
    Check {
        #[command(flatten)]
        orbit: OrbitArgs,
        /// Grid radius R: offsets range over ½ℤ ∩ [−R, R] in every coordinate.
        #[arg(long, default_value_t = 4)]
        radius: u32,
    },
    /// List the dominant indivisible admissible one-parameter subgroups.
    Adm {
        /// Group specification.
        #[arg(long)]
        group: String,
        /// Compute by scanning root subsets instead of using the explicit lists.
        #[arg(long)]
        enumerate: bool,
    },
    /// List the Horn index triples T_r^n.
    Horn {
        /// Ambient size n.
        #[arg(long)]
        n: usize,
        /// Subset size r (1 ≤ r < n).
        #[arg(long)]
        r: usize,
    },
    /// List the well-covering pairs at level 0 with their inequality templates.
    Pairs {
        /// Group specification.
        #[arg(long)]
        group: String,
        /// Restrict to one admissible subgroup, e.g. `1,-1`; default: all of them.
        #[arg(long, allow_hyphen_values = true)]
        subgroup: Option<String>,
        /// List all dominant pairs rather than well-covering pairs only.
        #[arg(long)]
        relaxed: bool,
    },
    /// Draw a rank-2 polyhedron (Sp(4,R) or SU(2,1)) as SVG.
    Plot {
        #[command(flatten)]
        orbit: OrbitArgs,
    },
}

/// What a verb produced.
pub struct Outcome {
    /// The rendered output.
    pub body: String,
    /// True when a cross-check found disagreements.
    pub disagreement: bool,
}

impl Outcome {
    fn ok(body: String) -> Self {
        Self { body, disagreement: false }
    }
}

fn configure_threads() -> anyhow::Result<()> {
    if let Ok(value) = std::env::var("ORBITOPE_THREADS") {
        let n: usize = value
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("ORBITOPE_THREADS must be a positive integer, got {value:?}")))?;
        if n == 0 {
            return Err(Error::Parse("ORBITOPE_THREADS must be at least 1".into()).into());
        }
        rayon::ThreadPoolBuilder::new().num_threads(n).build_global()?;
    }
    Ok(())
}

fn exit_code_for(err: &anyhow::Error) -> u8 {
    match err.downcast_ref::<Error>() {
        Some(Error::Parse(_)) | Some(Error::DimensionMismatch { .. }) => 2,
        Some(_) => 1,
        None if err.downcast_ref::<std::io::Error>().is_some() => 1,
        None => 2,
    }
}

fn run(cli: &Cli) -> anyhow::Result<Outcome> {
    configure_threads()?;
    let outcome = commands::dispatch(&cli.command, cli.format)?;
    let mut body = outcome.body.clone();
    if !body.ends_with('\n') {
        body.push('\n');
    }
    match &cli.out {
        Some(path) => std::fs::write(path, body)?,
        None => print!("{body}"),
    }
    Ok(outcome)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(outcome) if outcome.disagreement => ExitCode::from(3),
        Ok(_) => ExitCode::SUCCESS,
        Err(err) => {
            let code = exit_code_for(&err);
            eprintln!("error: {err:#}");
            if code == 2 {
                eprintln!("run `orbitope --help` for usage");
            }
            ExitCode::from(code)
        }
    }
}

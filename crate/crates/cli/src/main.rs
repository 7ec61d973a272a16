//! `frattkit`: classify isometries, build and check ping-pong certificates,
//! and run the finite-group Frattini engine from the command line.
//!
//! Exit codes: 0 success, 1 a check failed or a relation was found, 2 bad
//! input, 3 a search ran out of its limits or budget.

mod commands;
mod report;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser)]
#[command(name = "frattkit", version, about = "Exact ping-pong certificates and Frattini subgroups")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Identity, elliptic, parabolic or loxodromic.
    Classify(ElementArgs),
    /// Attracting and repelling fixed points of a loxodromic.
    FixedPoints(ElementArgs),
    /// Fixed points of loxodromic products of the generators.
    LimitSample {
        #[command(flatten)]
        backend: BackendArgs,
        /// A generator (repeatable).
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long, default_value_t = 2)]
        radius: usize,
    },
    /// Build a ping-pong certificate for y_i = b_i x_i a_i.
    PingpongConstruct {
        #[command(flatten)]
        backend: BackendArgs,
        #[arg(long)]
        f: String,
        #[arg(long)]
        g: String,
        /// An isometry x_i (repeatable).
        #[arg(long = "x")]
        x: Vec<String>,
        /// Maximum exponent and maximum neighbourhood level, as `E,D`.
        #[arg(long, default_value = "64,12")]
        limits: String,
        /// Write the certificate here instead of standard output.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Re-check a certificate file from scratch.
    PingpongVerify {
        certificate: PathBuf,
        /// Also evaluate reduced words up to this length at f+ and look for
        /// relations among the y_i.
        #[arg(long, default_value_t = 0)]
        words: usize,
    },
    /// Look for a relation among the generators by enumerating reduced words.
    FreeCheck {
        #[command(flatten)]
        backend: BackendArgs,
        #[arg(long = "gen", required = true)]
        gens: Vec<String>,
        #[arg(long, default_value_t = 6)]
        max_length: usize,
    },
    /// Frattini subgroup, Frattini quotient and related data of a finite group.
    Frattini(GroupArgs),
    /// Invariable generation by a set of elements, or the normal-maximals criterion.
    Invgen {
        #[command(flatten)]
        group: GroupArgs,
        /// An element, by label or index (repeatable).
        #[arg(long = "element")]
        elements: Vec<String>,
        /// Use every element of the group.
        #[arg(long, conflicts_with = "elements")]
        all: bool,
        /// Compare "every generating set is invariable" with "all maximal
        /// subgroups are normal".
        #[arg(long)]
        criterion: bool,
        #[arg(long, default_value_t = frattkit::frattini::DEFAULT_BUDGET)]
        budget: usize,
    },
    /// Run the Frattini checks on every catalog group, plus seeded
    /// relabellings of each table.
    CatalogTest {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Random relabellings per group.
        #[arg(long, default_value_t = 2)]
        relabellings: usize,
    },
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum BackendKind {
    Mobius,
    Tree,
}

#[derive(Args)]
struct BackendArgs {
    #[arg(long, value_enum)]
    backend: Option<BackendKind>,
    /// Use the hyperbolic plane (the default).
    #[arg(long, conflicts_with = "tree")]
    mobius: bool,
    /// Use the Bass–Serre tree of a free product, e.g. "orders: 2 3".
    #[arg(long)]
    tree: Option<String>,
}

#[derive(Args)]
struct ElementArgs {
    /// A matrix "p q r s" with det > 0.
    #[arg(long, conflicts_with_all = ["tree", "word"])]
    mobius: Option<String>,
    /// Free product orders, e.g. "orders: 2 3"; needs --word.
    #[arg(long, requires = "word")]
    tree: Option<String>,
    /// A word such as "g1 g2^2".
    #[arg(long, requires = "tree")]
    word: Option<String>,
}

#[derive(Args)]
#[group(required = true, multiple = false)]
struct GroupArgs {
    /// Cayley table file: the order, then the rows.
    #[arg(long)]
    cayley: Option<PathBuf>,
    /// Permutation generators, one per line in cycle notation.
    #[arg(long)]
    perm: Option<PathBuf>,
    /// A catalog group such as "Q8" or "Z/4".
    #[arg(long)]
    catalog: Option<String>,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let args: Vec<String> = std::iter::once("frattkit".to_string())
        .chain(std::env::args().skip(1))
        .collect();
    match commands::run(cli.command, &args) {
        Ok((text, code)) => {
            print!("{text}");
            ExitCode::from(code)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(e.exit_code())
        }
    }
}

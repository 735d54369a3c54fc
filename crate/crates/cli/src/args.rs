use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(
    name = "vcw",
    version,
    about = "Independence dimension, convex orders and type counting for finite set systems"
)]
pub struct Cli {
    /// Set-system JSON; standard input when absent.
    #[arg(long, global = true)]
    pub input: Option<PathBuf>,

    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    pub format: Format,

    /// Search cap for `iddim` and `ladder`.
    #[arg(long, global = true, default_value_t = 8)]
    pub cap: usize,

    /// Seed for randomized generators.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Drop members whose mask repeats an earlier member.
    #[arg(long, global = true)]
    pub dedupe: bool,

    #[command(subcommand)]
    pub verb: Verb,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Table,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum OrderMode {
    Laminar,
    Id1,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Mode {
    Independent,
    Nested,
}

#[derive(Debug, Subcommand)]
pub enum Verb {
    /// Independence dimension with a lexicographically least witness.
    Iddim,
    /// Check that every pair of members leaves some cell empty.
    Certify,
    /// Synthesize an order making every member convex.
    Order {
        #[arg(long, value_enum)]
        mode: OrderMode,
    },
    /// Count convex components of each member under a given order.
    Verify {
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        allow_complement: bool,
    },
    /// Distinct traces and their count.
    Types,
    /// Log-log fit of type counts over member prefixes.
    Density {
        #[arg(long, value_delimiter = ',', required = true)]
        schedule: Vec<usize>,
    },
    /// Longest ladder up to `--cap`.
    Ladder,
    /// Rank-1 type reconstruction report.
    Udtfs1 {
        /// Print the reconstruction trace of one element.
        #[arg(long)]
        element: Option<String>,
    },
    /// Evaluate a boolean combination of members.
    Combo {
        #[arg(long)]
        expr: String,
        /// Also count components under this order.
        #[arg(long)]
        order: Option<PathBuf>,
    },
    /// The n-th leftward ray of a member.
    Ray {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        order: PathBuf,
        #[arg(long)]
        set: String,
    },
    /// Generate a family in the interchange format.
    Gen(GenArgs),
}

#[derive(Debug, Args)]
pub struct GenArgs {
    /// Write to this file instead of standard output.
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    #[command(subcommand)]
    pub kind: GenKind,
}

#[derive(Debug, Subcommand)]
pub enum GenKind {
    /// Initial segments of a chain.
    Linear {
        #[arg(long)]
        m: usize,
        #[arg(long, value_delimiter = ',')]
        cuts: Vec<usize>,
    },
    /// Lower orthants in a grid.
    Grid {
        #[arg(long)]
        n: usize,
        #[arg(long)]
        m: usize,
        /// Corners as `b0,b1;b0,b1;...`.
        #[arg(long, conflicts_with = "count")]
        corners: Option<String>,
        /// Draw this many generic corners from `--seed`.
        #[arg(long)]
        count: Option<usize>,
    },
    /// Arcs of a cyclic order.
    Cyclic {
        #[arg(long)]
        m: usize,
        /// Endpoint pairs as `b:c,b:c,...`.
        #[arg(long, value_delimiter = ',')]
        arcs: Vec<String>,
    },
    /// Bit predicates, independent or nested.
    Predicates {
        #[arg(long)]
        k: usize,
        #[arg(long, value_enum)]
        mode: Mode,
        #[arg(long)]
        m: usize,
    },
    /// Random laminar family with complemented members.
    RandomId1 {
        #[arg(long)]
        depth: usize,
        #[arg(long, default_value_t = 0)]
        flips: usize,
        #[arg(long)]
        points: Option<usize>,
        #[arg(long)]
        max_members: Option<usize>,
    },
    /// Strict-dominance lower sets of an m by m grid.
    ReductOrder {
        #[arg(long)]
        m: usize,
    },
}

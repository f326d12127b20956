use std::path::PathBuf;

use clap::{Parser, Subcommand};

use crate::report::OutputFormat;

const DEFAULT_BOUND: &str = "10000";

#[derive(Debug, Parser)]
#[command(
    name = "ncloop",
    version,
    about = "Explore the abelian loop a • b = N(|a − b|) on 1 and the odd primes"
)]
pub struct Cli {
    /// Output format.
    #[arg(
        long,
        value_enum,
        global = true,
        env = "NCLOOP_FORMAT",
        default_value = "text"
    )]
    pub format: OutputFormat,

    /// Worker threads for the searches [default: available parallelism].
    #[arg(long, global = true, env = "NCLOOP_THREADS")]
    pub threads: Option<usize>,

    /// Directory for cached sieve segments.
    #[arg(long, global = true, env = "NCLOOP_CACHE_DIR")]
    pub cache_dir: Option<PathBuf>,

    /// Omit `elapsed_ms` from JSON reports.
    #[arg(long, global = true)]
    pub no_timing: bool,

    /// Emit figures as TikZ instead of DOT.
    #[arg(long, global = true)]
    pub tikz: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// a • b
    Dot { a: u64, b: u64 },
    /// N(x), the least element of S above x
    Next { x: u64 },
    /// Check closure, commutativity, identity and self-inverse
    Axioms {
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
        /// Check this many random pairs instead of all pairs.
        #[arg(long)]
        sample: Option<u64>,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Smallest triple (a, b, c) with (a • b) • c ≠ a • (b • c)
    AssocWitness {
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
        /// Also consider triples with repeated elements.
        #[arg(long)]
        allow_repeats: bool,
    },
    /// Smallest a ≥ s with a • s = a
    Absorb {
        #[arg(long)]
        s: u64,
        #[arg(long)]
        limit: u64,
    },
    /// Smallest odd prime preceded by at least --min-run non-primes
    Gap {
        #[arg(long)]
        min_run: u64,
        #[arg(long)]
        limit: u64,
    },
    /// Arithmetic progression of odd primes as an equal-edge chain
    ApChain {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long)]
        min_start: Option<u64>,
    },
    /// Lexicographically smallest equal-edge path
    Path {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long)]
        edge: Option<u64>,
        #[arg(long)]
        include_one: bool,
    },
    /// Verify that no three distinct elements have equal pairwise products
    Triangles {
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Verify equal-or-adjacent products for twin primes
    TwinAdjacency {
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
    },
    /// Verify N(t), N(t+2) equal or adjacent for even t ≤ --t-max
    Lemma {
        #[arg(long)]
        t_max: u64,
    },
    /// Verify N(t) < 2t for 2 ≤ t ≤ --t-max
    Bertrand {
        #[arg(long)]
        t_max: u64,
    },
    /// All pairs a > b with a • b = x
    Fiber {
        #[arg(long)]
        x: u64,
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long)]
        include_one: bool,
    },
    /// Equal-edge 4-cycles
    Quartets {
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long)]
        edge: Option<u64>,
        #[arg(long)]
        no_one: bool,
    },
    /// Equal-edge n-cycles
    Cycles {
        #[arg(long)]
        n: usize,
        #[arg(long, env = "NCLOOP_BOUND", default_value = DEFAULT_BOUND)]
        bound: u64,
        #[arg(long)]
        no_one: bool,
    },
    /// Render the chain or cycles of a JSON report as a figure
    EmitDot {
        #[arg(long)]
        input: PathBuf,
    },
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Dot { .. } => "dot",
            Command::Next { .. } => "next",
            Command::Axioms { .. } => "axioms",
            Command::AssocWitness { .. } => "assoc-witness",
            Command::Absorb { .. } => "absorb",
            Command::Gap { .. } => "gap",
            Command::ApChain { .. } => "ap-chain",
            Command::Path { .. } => "path",
            Command::Triangles { .. } => "triangles",
            Command::TwinAdjacency { .. } => "twin-adjacency",
            Command::Lemma { .. } => "lemma",
            Command::Bertrand { .. } => "bertrand",
            Command::Fiber { .. } => "fiber",
            Command::Quartets { .. } => "quartets",
            Command::Cycles { .. } => "cycles",
            Command::EmitDot { .. } => "emit-dot",
        }
    }

    /// Whether the result is a chain or cycle list that has a figure form.
    pub fn has_figure(&self) -> bool {
        matches!(
            self,
            Command::ApChain { .. }
                | Command::Path { .. }
                | Command::Quartets { .. }
                | Command::Cycles { .. }
                | Command::EmitDot { .. }
        )
    }
}

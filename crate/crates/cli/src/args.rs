use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "boolspec", version, about = "Exact Fourier analysis of Boolean functions on F2^n")]
pub struct Cli {
    #[command(subcommand)]
    pub command: Command,

    /// Emit JSON (the default for analyze, exhaust and search).
    #[arg(long, global = true, conflicts_with = "csv")]
    pub json: bool,

    /// Emit CSV instead of JSON.
    #[arg(long, global = true)]
    pub csv: bool,

    /// Recompute the energy by all three routines and report disagreements.
    #[arg(long, global = true)]
    pub paranoid: bool,

    /// Seed for every random choice.
    #[arg(long, global = true, default_value_t = 0)]
    pub seed: u64,

    /// Largest accepted dimension (also read from BOOLSPEC_MAX_N).
    #[arg(long, global = true)]
    pub max_n: Option<u32>,

    /// Leave wall time out of the report so output is byte-reproducible.
    #[arg(long, global = true)]
    pub reproducible: bool,
}

#[derive(Debug, Subcommand)]
pub enum Command {
    /// Analyze one function from a point-set or truth-table file.
    Analyze(AnalyzeArgs),
    /// Write a generated point set.
    Generate(GenerateArgs),
    /// Check the support inequalities on every function of n <= 4 variables.
    Exhaust(ExhaustArgs),
    /// Search for sets on which the energy bound is tight.
    Search(SearchArgs),
    /// One analysis row per instance of a family over a range of n.
    Sweep(SweepArgs),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum InputFormat {
    Points,
    Table,
}

#[derive(Debug, Args)]
pub struct AnalyzeArgs {
    #[arg(long)]
    pub input: PathBuf,

    /// Input format; defaults to `table` for .tt/.table files, else `points`.
    #[arg(long, value_enum)]
    pub format: Option<InputFormat>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Kind {
    CoordinateSubspace,
    AffineSubspace,
    HammingBall,
    Random,
    Sidon,
}

#[derive(Debug, Clone, Args)]
pub struct GeneratorArgs {
    #[arg(long, value_enum, default_value = "random")]
    pub kind: Kind,

    #[arg(long)]
    pub n: u32,

    /// Codimension for coordinate subspaces.
    #[arg(long, default_value_t = 1)]
    pub k: u32,

    /// Comma-separated basis vectors (binary strings or 0x-hex).
    #[arg(long, value_delimiter = ',')]
    pub basis: Vec<String>,

    #[arg(long)]
    pub shift: Option<String>,

    #[arg(long)]
    pub center: Option<String>,

    #[arg(long, default_value_t = 1)]
    pub radius: u32,

    /// Inclusion probability for random sets.
    #[arg(long, default_value_t = 0.5)]
    pub p: f64,

    /// Target size for Sidon sets.
    #[arg(long, default_value_t = 2)]
    pub m: usize,
}

#[derive(Debug, Args)]
pub struct GenerateArgs {
    #[command(flatten)]
    pub generator: GeneratorArgs,

    /// Write to a file instead of standard output.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct ExhaustArgs {
    #[arg(long)]
    pub n: u32,

    /// Check this many seeded random tables instead of all of them.
    #[arg(long)]
    pub sample: Option<u64>,

    /// Also compare the naive and representation energies on every table.
    #[arg(long)]
    pub cross_check: bool,

    /// Worker threads (defaults to all cores).
    #[arg(long)]
    pub workers: Option<usize>,

    /// Directory for truth-table files of violations, equality cases and
    /// minimizers.
    #[arg(long)]
    pub tables_out: Option<PathBuf>,
}

#[derive(Debug, Args)]
pub struct SearchArgs {
    #[command(flatten)]
    pub initial: GeneratorArgs,

    #[arg(long, default_value_t = 10)]
    pub restarts: usize,

    #[arg(long, default_value_t = 500)]
    pub iters: usize,

    /// Plain hill climbing instead of annealing.
    #[arg(long)]
    pub no_anneal: bool,

    #[arg(long, default_value_t = 1.0)]
    pub temperature: f64,

    /// Geometric cooling factor per iteration.
    #[arg(long, default_value_t = 0.99)]
    pub cooling: f64,

    #[arg(long, default_value_t = boolspec::search::DEFAULT_RECOMPUTE_INTERVAL)]
    pub recompute_interval: usize,

    /// Trace CSV destination.
    #[arg(long)]
    pub trace_out: Option<PathBuf>,

    /// Best set destination, in the point-set format.
    #[arg(long)]
    pub best_out: Option<PathBuf>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Family {
    Ball,
    Random,
    Sidon,
    Subspace,
}

#[derive(Debug, Args)]
pub struct SweepArgs {
    /// Families to sweep; may be repeated.
    #[arg(long, value_enum, required = true)]
    pub family: Vec<Family>,

    /// Inclusive range `a..b`.
    #[arg(long)]
    pub n_range: String,

    /// Subspace codimension.
    #[arg(long, default_value_t = 1)]
    pub k: u32,

    /// Sidon size; defaults to ceil(2^(n/2)).
    #[arg(long)]
    pub m: Option<usize>,

    #[arg(long, default_value_t = 1)]
    pub radius: u32,

    #[arg(long, default_value_t = 0.5)]
    pub p: f64,
}

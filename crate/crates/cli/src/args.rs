use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Debug, Parser)]
#[command(name = "graphkit", version, about = "Graph center, graph bottleneck and shortest paths for all flows")]
pub struct Cli {
    /// Output format.
    #[arg(long, value_enum, default_value_t = Format::Json, global = true)]
    pub format: Format,

    /// Worker thread ceiling (defaults to available parallelism).
    #[arg(long, env = "GRAPHKIT_THREADS", global = true)]
    pub threads: Option<usize>,

    /// Wrap the result in a run report with digest, timing and counters.
    #[arg(long, global = true)]
    pub report: bool,

    #[command(subcommand)]
    pub command: Command,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Json,
    Tsv,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum EdgeLayout {
    /// Decide from the first edge line (3 fields: unit, 4 fields: full).
    Auto,
    /// `u v cost cap`
    Full,
    /// `u v cap`
    Unit,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum ModeArg {
    Out,
    In,
    Both,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PredicateArg {
    Closure,
    Scc,
}

#[derive(Debug, Clone, Args)]
pub struct Input {
    /// Edge-list file.
    #[arg(long)]
    pub input: PathBuf,

    /// Edge line layout.
    #[arg(long, value_enum, default_value_t = EdgeLayout::Auto)]
    pub edges: EdgeLayout,
}

#[derive(Debug, Clone, Args)]
pub struct CenterArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, value_enum, default_value_t = ModeArg::Out)]
    pub mode: ModeArg,
    /// Minimize the total distance instead of the maximum.
    #[arg(long)]
    pub average: bool,
}

#[derive(Debug, Clone, Args)]
pub struct GbArgs {
    #[command(flatten)]
    pub input: Input,
    #[arg(long, value_enum, default_value_t = PredicateArg::Scc)]
    pub predicate: PredicateArg,
}

#[derive(Debug, Clone, Args)]
pub struct ApspafArgs {
    #[command(flatten)]
    pub input: Input,
    /// Write the frontier matrix here instead of stdout.
    #[arg(long)]
    pub output: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct QueryArgs {
    #[command(flatten)]
    pub input: Input,
    /// Source vertex (1-based).
    #[arg(long)]
    pub from: usize,
    /// Target vertex (1-based).
    #[arg(long)]
    pub to: usize,
    /// Flow demand (decimal).
    #[arg(long)]
    pub flow: String,
}

#[derive(Debug, Clone, Args)]
pub struct BenchArgs {
    /// Vertex counts.
    #[arg(long, value_delimiter = ',', default_values_t = [8usize, 16, 32])]
    pub sizes: Vec<usize>,
    /// Random seeds; one run per (algorithm, size, seed).
    #[arg(long, value_delimiter = ',', default_values_t = [1u64, 2, 3])]
    pub seeds: Vec<u64>,
    /// Base seed mixed into every generated graph.
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// Distinct capacities for the all-flows runs.
    #[arg(long, default_value_t = 4)]
    pub capacities: u64,
}

#[derive(Debug, Clone, Subcommand)]
pub enum Command {
    /// 1-center by binary search (or average-distance center).
    Center(CenterArgs),
    /// Graph bottleneck value.
    Gb(GbArgs),
    /// All-pairs shortest distances.
    Apsp(Input),
    /// All-pairs bottleneck values.
    Apbp(Input),
    /// All-pairs shortest paths for all flows.
    Apspaf(ApspafArgs),
    /// Shortest distance from one vertex to another carrying a given flow.
    Query(QueryArgs),
    /// Brute-force reference versions of the solvers.
    #[command(subcommand)]
    Oracle(OracleCommand),
    /// Operation-counter scaling runs.
    Bench(BenchArgs),
}

#[derive(Debug, Clone, Subcommand)]
pub enum OracleCommand {
    /// Center from per-vertex eccentricities.
    Center(CenterArgs),
    /// Bottleneck value by direct path search.
    Gb(Input),
    /// Shortest distances by BFS or Dijkstra.
    Apsp(Input),
    /// Bottleneck values by direct path search.
    Apbp(Input),
    /// Distance/flow frontiers by path enumeration and dominance filtering.
    Apspaf(ApspafArgs),
}

//! `cws`: enumerate graphs, search for CWS codes, verify code files, and
//! tabulate bounds.

mod commands;

use std::path::PathBuf;

use anyhow::{Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};

#[derive(Parser, Debug)]
#[command(name = "cws", version, about = "Codeword stabilized quantum code search")]
struct Cli {
    /// Worker threads (default: all cores).
    #[arg(long, global = true)]
    jobs: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// List isomorphism or LC-isomorphism class representatives.
    Enumerate(EnumerateArgs),
    /// Search graphs for the largest standard-form codes.
    Search(SearchArgs),
    /// Check a code file against an error set.
    Verify(VerifyArgs),
    /// Tabulate LP and Singleton bounds next to the reference table.
    Bounds(BoundsArgs),
    /// Histogram of clique-graph orders and annihilator dimensions.
    ClusterHist(ClusterArgs),
    /// Compare two GA crossovers on the clique-graph order fitness.
    GaCompare(GaCompareArgs),
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum RelationArg {
    Iso,
    Lc,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum ModeArg {
    Exhaustive,
    Random,
    Screened,
    Ga,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SolverArg {
    Exact,
    Pls,
}

#[derive(Args, Debug)]
pub struct ErrorSetArgs {
    #[arg(long)]
    pub n: usize,
    /// Distance for symmetric error sets.
    #[arg(long)]
    pub d: Option<usize>,
    /// `symmetric`, `symmetric:<max weight>`, or `ad:<t>:<id|xz|yz|per-qubit list>`.
    #[arg(long, default_value = "symmetric")]
    pub error_set: String,
}

#[derive(Args, Debug, Clone)]
pub struct GaArgs {
    #[arg(long, default_value_t = 20)]
    pub ga_population: usize,
    #[arg(long, default_value_t = 100)]
    pub ga_generations: usize,
    #[arg(long, default_value_t = 0.9)]
    pub ga_crossover_prob: f64,
    #[arg(long, default_value_t = 0.1)]
    pub ga_mutation_prob: f64,
    #[arg(long, default_value_t = 10)]
    pub ga_tournament: usize,
    #[arg(long, default_value_t = 2)]
    pub ga_elitism: usize,
    /// single-point, two-point, uniform, random or spectral.
    #[arg(long, default_value = "spectral")]
    pub ga_crossover: String,
    /// Exchange probability for uniform crossover.
    #[arg(long, default_value_t = 0.5)]
    pub ga_exchange_prob: f64,
}

#[derive(Args, Debug)]
pub struct EnumerateArgs {
    #[arg(long)]
    pub n: usize,
    #[arg(long, value_enum, default_value = "lc")]
    pub relation: RelationArg,
    /// Writes `<out>.g6` and `<out>.csv`; prints graph6 lines otherwise.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct SearchArgs {
    #[command(flatten)]
    pub errors: ErrorSetArgs,
    #[arg(long, value_enum, default_value = "exhaustive")]
    pub mode: ModeArg,
    /// Class relation for exhaustive mode; defaults to LC for symmetric sets, iso otherwise.
    #[arg(long, value_enum)]
    pub relation: Option<RelationArg>,
    /// Graphs drawn in random and screened modes.
    #[arg(long, default_value_t = 1000)]
    pub samples: usize,
    /// Smallest clique-graph order kept in screened mode.
    #[arg(long, default_value_t = 1)]
    pub min_order: usize,
    /// GA instances in ga mode.
    #[arg(long, default_value_t = 10)]
    pub ga_instances: usize,
    #[command(flatten)]
    pub ga: GaArgs,
    #[arg(long, value_enum, default_value = "exact")]
    pub solver: SolverArg,
    #[arg(long, default_value_t = 100)]
    pub attempts: usize,
    #[arg(long, default_value_t = 1000)]
    pub selections: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON-lines report: one line per graph, then a summary line.
    #[arg(long)]
    pub out: Option<PathBuf>,
    /// JSON-lines clique cache, reused across runs.
    #[arg(long)]
    pub cache: Option<PathBuf>,
    /// Directory receiving one code file per optimal graph.
    #[arg(long)]
    pub codes_dir: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct VerifyArgs {
    /// Code file: header line, then one codeword per line.
    pub file: PathBuf,
    /// Defaults to the `# errorset-spec` comment in the file, if present.
    #[arg(long)]
    pub error_set: Option<String>,
    #[arg(long)]
    pub d: Option<usize>,
    /// Also run the statevector detection check.
    #[arg(long)]
    pub oracle: bool,
}

#[derive(Args, Debug)]
pub struct BoundsArgs {
    #[arg(long, default_value_t = 1)]
    pub n_min: usize,
    #[arg(long, default_value_t = 12)]
    pub n_max: usize,
    #[arg(long, default_value_t = 2)]
    pub d_min: usize,
    #[arg(long, default_value_t = 4)]
    pub d_max: usize,
    /// Add the purity constraints.
    #[arg(long)]
    pub pure: bool,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct ClusterArgs {
    #[command(flatten)]
    pub errors: ErrorSetArgs,
    /// Enumerate classes under this relation instead of sampling.
    #[arg(long, value_enum)]
    pub relation: Option<RelationArg>,
    #[arg(long, default_value_t = 10_000)]
    pub samples: usize,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    #[arg(long)]
    pub out: Option<PathBuf>,
}

#[derive(Args, Debug)]
pub struct GaCompareArgs {
    #[command(flatten)]
    pub errors: ErrorSetArgs,
    #[arg(long, default_value_t = 20)]
    pub instances: usize,
    #[arg(long, default_value = "spectral")]
    pub treatment: String,
    #[arg(long, default_value = "random")]
    pub baseline: String,
    #[command(flatten)]
    pub ga: GaArgs,
    #[arg(long, default_value_t = 0)]
    pub seed: u64,
    /// JSON-lines output: one line per GA instance, then the comparison.
    #[arg(long)]
    pub out: Option<PathBuf>,
}

fn main() {
    let cli = Cli::parse();
    match run(cli) {
        Ok(0) => {}
        Ok(code) => std::process::exit(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            std::process::exit(2);
        }
    }
}

fn run(cli: Cli) -> Result<i32> {
    if let Some(jobs) = cli.jobs {
        rayon::ThreadPoolBuilder::new()
            .num_threads(jobs)
            .build_global()
            .context("configuring the worker pool")?;
    }
    match cli.command {
        Command::Enumerate(a) => commands::enumerate(a),
        Command::Search(a) => commands::search(a),
        Command::Verify(a) => commands::verify(a),
        Command::Bounds(a) => commands::bounds(a),
        Command::ClusterHist(a) => commands::cluster_hist(a),
        Command::GaCompare(a) => commands::ga_compare(a),
    }
}

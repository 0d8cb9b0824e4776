//! `cascadia`: run competitive cascade simulations and analyses from the
//! command line. Data goes to stdout, or to files under `--out-dir` together
//! with a `manifest.json` that can be replayed.

mod commands;
mod manifest;
mod values;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand};
use serde::{Deserialize, Serialize};

use values::{GraphSource, PlayerSpec, SeedArg, Sizes};

#[derive(Debug, Parser)]
#[command(
    name = "cascadia",
    version,
    about = "Competitive influence cascades on graphs"
)]
struct Cli {
    /// Worker threads; defaults to all available cores. Results do not depend on it.
    #[arg(long, global = true, env = "CASCADIA_THREADS")]
    threads: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Run independent cascades on one graph and emit per-trial counts.
    Simulate(SimulateArgs),
    /// Product-vs-budget sweep over graph sizes, with a linear fit per player.
    Sweep(SweepArgs),
    /// Mean payoffs for every pair of strategies, plus equilibrium detection.
    GameMatrix(GameMatrixArgs),
    /// Closed-form first-step probabilities on dense graphs against their bounds.
    Bounds(BoundsArgs),
    /// Size, average degree and diameter of a graph.
    GraphStats(GraphStatsArgs),
    /// Re-run the command recorded in a manifest.
    Replay(ReplayArgs),
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SimulateArgs {
    /// ngon:N, tree:N, dense:N or edgelist:PATH
    #[arg(long)]
    pub graph: GraphSource,
    /// Renumber edge-list ids densely in order of appearance.
    #[arg(long)]
    #[serde(default)]
    pub remap: bool,
    /// budget=B,score=S; repeat once per player.
    #[arg(long = "player", required = true)]
    pub players: Vec<PlayerSpec>,
    /// Seed selection strategy; give one for all players or one per player.
    #[arg(long = "strategy", default_value = "random")]
    pub strategies: Vec<String>,
    /// Propagation probability assumed by degree-discount.
    #[arg(long, default_value_t = cascadia::strategies::DEFAULT_DEGREE_DISCOUNT_P)]
    pub dd_p: f64,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    /// Master seed, or "random".
    #[arg(long, default_value_t = SeedArg::default())]
    pub seed: SeedArg,
    /// Maximum timesteps per cascade; defaults to 100 x nodes.
    #[arg(long)]
    pub step_cap: Option<usize>,
    #[arg(long)]
    #[serde(skip)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct SweepArgs {
    /// ngon, tree or dense
    #[arg(long)]
    pub topology: cascadia::experiments::Topology,
    /// start:stop:step (inclusive) or a comma-separated list.
    #[arg(long, default_value = "1000:9000:1000")]
    pub sizes: Sizes,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = SeedArg::default())]
    pub seed: SeedArg,
    #[arg(long)]
    pub step_cap: Option<usize>,
    #[arg(long)]
    #[serde(skip)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct GameMatrixArgs {
    #[arg(long, required_unless_present = "analyze_only")]
    pub graph: Option<GraphSource>,
    #[arg(long)]
    #[serde(default)]
    pub remap: bool,
    /// Exactly two: budget=B,score=S
    #[arg(long = "player")]
    #[serde(default)]
    pub players: Vec<PlayerSpec>,
    /// Comma-separated strategy names shared by both players.
    #[arg(
        long,
        value_delimiter = ',',
        default_value = "single-discount,degree-discount,highest-degree"
    )]
    pub strategies: Vec<String>,
    #[arg(long, default_value_t = cascadia::strategies::DEFAULT_DEGREE_DISCOUNT_P)]
    pub dd_p: f64,
    #[arg(long, default_value_t = 10)]
    pub trials: usize,
    #[arg(long, default_value_t = SeedArg::default())]
    pub seed: SeedArg,
    /// Stored matrix JSON to analyze instead of simulating.
    #[arg(long, requires = "analyze_only")]
    #[serde(default)]
    pub matrix_file: Option<PathBuf>,
    #[arg(long, requires = "matrix_file")]
    #[serde(default)]
    pub analyze_only: bool,
    #[arg(long)]
    #[serde(skip)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct BoundsArgs {
    /// First player's budget as a fraction of the graph.
    #[arg(long)]
    pub c: f64,
    /// Budget ratio of the second player to the first.
    #[arg(long)]
    pub m: f64,
    #[arg(long)]
    pub p1: f64,
    #[arg(long)]
    pub p2: f64,
    /// Comma-separated graph sizes.
    #[arg(long = "n", value_delimiter = ',', required = true)]
    pub sizes: Vec<usize>,
}

#[derive(Debug, Clone, Args, Serialize, Deserialize)]
pub struct GraphStatsArgs {
    #[arg(long)]
    pub graph: GraphSource,
    #[arg(long)]
    #[serde(default)]
    pub remap: bool,
    /// Compute the diameter from every node instead of a sample.
    #[arg(long)]
    #[serde(default)]
    pub exact: bool,
    #[arg(long)]
    #[serde(skip)]
    pub out_dir: Option<PathBuf>,
}

#[derive(Debug, Clone, Args)]
pub struct ReplayArgs {
    /// manifest.json written by an earlier run.
    pub manifest: PathBuf,
    /// Where to write the reproduced files.
    #[arg(long)]
    pub out_dir: PathBuf,
}

/// Exit status classes: 2 for bad input, 1 for file system failures.
#[derive(Debug)]
pub enum Failure {
    Usage(String),
    Io(String),
}

impl From<cascadia::Error> for Failure {
    fn from(e: cascadia::Error) -> Self {
        use cascadia::Error as E;
        match e {
            E::Io(_) | E::Csv(_) | E::Json(_) | E::Parse { .. } => Failure::Io(e.to_string()),
            other => Failure::Usage(other.to_string()),
        }
    }
}

impl From<std::io::Error> for Failure {
    fn from(e: std::io::Error) -> Self {
        Failure::Io(e.to_string())
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let mut pool = rayon::ThreadPoolBuilder::new();
    if let Some(n) = cli.threads {
        if n == 0 {
            eprintln!("error: --threads must be at least 1");
            return ExitCode::from(2);
        }
        pool = pool.num_threads(n);
    }
    let pool = match pool.build() {
        Ok(p) => p,
        Err(e) => {
            eprintln!("error: cannot start worker threads: {e}");
            return ExitCode::from(1);
        }
    };
    let threads = pool.current_num_threads();
    match pool.install(|| commands::dispatch(cli.command, threads)) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Usage(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
        Err(Failure::Io(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
    }
}

use std::fs::{self, File};
use std::io::{self, BufWriter, Write};
use std::path::Path;

use cascadia::analysis::{
    dense_first_step_probability, dense_probability_bounds, find_dominant_strategy_equilibrium,
    find_pure_nash, Competitor, DenseNetworkConfig, GameMatrix,
};
use cascadia::experiments::{
    run_game_matrix, run_product_vs_budget, run_simulation, write_aggregate_csv, write_trials_csv,
    ExperimentConfig,
};
use cascadia::graph::compute_metrics;
use cascadia::{Player, StrategyKind};
use serde::Serialize;

use crate::manifest::RunManifest;
use crate::values::SeedArg;
use crate::{
    BoundsArgs, Command, Failure, GameMatrixArgs, GraphStatsArgs, ReplayArgs, SimulateArgs,
    SweepArgs,
};

const TRIALS_CSV: &str = "trials.csv";
const AGGREGATE_CSV: &str = "aggregate.csv";
const FITS_JSON: &str = "fits.json";
const MATRIX_JSON: &str = "matrix.json";
const EQUILIBRIA_JSON: &str = "equilibria.json";
const METRICS_JSON: &str = "metrics.json";

pub fn dispatch(command: Command, threads: usize) -> Result<(), Failure> {
    match command {
        Command::Simulate(a) => simulate(a, threads),
        Command::Sweep(a) => sweep(a, threads),
        Command::GameMatrix(a) => game_matrix(a, threads),
        Command::Bounds(a) => bounds(&a),
        Command::GraphStats(a) => graph_stats(a, threads),
        Command::Replay(a) => replay(a, threads),
    }
}

fn create(dir: &Path, name: &str) -> Result<BufWriter<File>, Failure> {
    let path = dir.join(name);
    File::create(&path)
        .map(BufWriter::new)
        .map_err(|e| Failure::Io(format!("{}: {e}", path.display())))
}

fn prepare_dir(dir: &Path) -> Result<(), Failure> {
    fs::create_dir_all(dir).map_err(|e| Failure::Io(format!("{}: {e}", dir.display())))
}

fn write_json<T: Serialize>(mut w: impl Write, value: &T) -> Result<(), Failure> {
    serde_json::to_writer_pretty(&mut w, value).expect("output serializes");
    writeln!(w)?;
    w.flush()?;
    Ok(())
}

fn strategy_kinds(names: &[String], dd_p: f64) -> Result<Vec<StrategyKind>, Failure> {
    names
        .iter()
        .map(|n| StrategyKind::parse_with(n.trim(), dd_p).map_err(Failure::from))
        .collect()
}

fn simulate(mut a: SimulateArgs, threads: usize) -> Result<(), Failure> {
    let seed = a.seed.resolve();
    a.seed = SeedArg::Fixed(seed);
    let players: Vec<Player> = a.players.iter().map(|p| p.0).collect();
    let mut kinds = strategy_kinds(&a.strategies, a.dd_p)?;
    if kinds.len() == 1 {
        kinds = vec![kinds[0]; players.len()];
    } else if kinds.len() != players.len() {
        return Err(Failure::Usage(format!(
            "got {} strategies for {} players; give one for all or one per player",
            kinds.len(),
            players.len()
        )));
    }
    let g = a.graph.load(a.remap)?;
    let rows = run_simulation(&g, &players, &kinds, a.trials, seed, a.step_cap)?;
    match &a.out_dir {
        None => write_trials_csv(io::stdout().lock(), &rows)?,
        Some(dir) => {
            prepare_dir(dir)?;
            write_trials_csv(create(dir, TRIALS_CSV)?, &rows)?;
            RunManifest::new("simulate", Some(seed), threads, &a, &[TRIALS_CSV]).write(dir)?;
            eprintln!(
                "wrote {} rows to {}",
                rows.len(),
                dir.join(TRIALS_CSV).display()
            );
        }
    }
    Ok(())
}

fn sweep(mut a: SweepArgs, threads: usize) -> Result<(), Failure> {
    let seed = a.seed.resolve();
    a.seed = SeedArg::Fixed(seed);
    let cfg = ExperimentConfig {
        master_seed: seed,
        trials_per_point: a.trials,
        sizes: a.sizes.0.clone(),
        topology: a.topology,
        step_cap: a.step_cap,
    };
    let result = run_product_vs_budget(&cfg)?;
    let fits = match result.fits() {
        Ok(f) => f,
        Err(e) => {
            eprintln!("warning: no linear fit: {e}");
            Vec::new()
        }
    };
    match &a.out_dir {
        None => {
            write_aggregate_csv(io::stdout().lock(), &result.points)?;
            write_json(io::stderr().lock(), &fits)?;
        }
        Some(dir) => {
            prepare_dir(dir)?;
            write_trials_csv(create(dir, TRIALS_CSV)?, &result.trials)?;
            write_aggregate_csv(create(dir, AGGREGATE_CSV)?, &result.points)?;
            write_json(create(dir, FITS_JSON)?, &fits)?;
            RunManifest::new(
                "sweep",
                Some(seed),
                threads,
                &a,
                &[TRIALS_CSV, AGGREGATE_CSV, FITS_JSON],
            )
            .write(dir)?;
            for fit in &fits {
                eprintln!(
                    "{}: slope {:.4}, intercept {:.2}, r^2 {:.4}",
                    fit.player, fit.fit.slope, fit.fit.intercept, fit.fit.r_squared
                );
            }
        }
    }
    Ok(())
}

#[derive(Serialize)]
struct Profile<'a> {
    row: usize,
    col: usize,
    row_strategy: &'a str,
    col_strategy: &'a str,
}

#[derive(Serialize)]
struct Equilibria<'a> {
    dominant_strategy_equilibrium: Option<Profile<'a>>,
    pure_nash: Vec<Profile<'a>>,
}

#[derive(Serialize)]
struct GameReport<'a> {
    matrix: &'a GameMatrix,
    #[serde(flatten)]
    equilibria: Equilibria<'a>,
}

fn equilibria(m: &GameMatrix) -> Equilibria<'_> {
    let profile = |(row, col): (usize, usize)| Profile {
        row,
        col,
        row_strategy: &m.row_strategies[row],
        col_strategy: &m.col_strategies[col],
    };
    Equilibria {
        dominant_strategy_equilibrium: find_dominant_strategy_equilibrium(m).map(profile),
        pure_nash: find_pure_nash(m).into_iter().map(profile).collect(),
    }
}

fn game_matrix(mut a: GameMatrixArgs, threads: usize) -> Result<(), Failure> {
    let mut seed = None;
    let matrix = if a.analyze_only {
        let path = a
            .matrix_file
            .as_deref()
            .expect("clap requires --matrix-file");
        GameMatrix::load(path).map_err(|e| match Failure::from(e) {
            Failure::Io(msg) | Failure::Usage(msg) => {
                Failure::Io(format!("{}: {msg}", path.display()))
            }
        })?
    } else {
        let graph = a.graph.as_ref().expect("clap requires --graph");
        let [p1, p2] = a.players[..] else {
            return Err(Failure::Usage(format!(
                "game-matrix needs exactly two --player specs, got {}",
                a.players.len()
            )));
        };
        let kinds = strategy_kinds(&a.strategies, a.dd_p)?;
        let s = a.seed.resolve();
        a.seed = SeedArg::Fixed(s);
        seed = Some(s);
        let g = graph.load(a.remap)?;
        run_game_matrix(&g, [p1.0, p2.0], &kinds, a.trials, s)?
    };
    let report = GameReport {
        matrix: &matrix,
        equilibria: equilibria(&matrix),
    };
    write_json(io::stdout().lock(), &report)?;
    if let Some(dir) = &a.out_dir {
        prepare_dir(dir)?;
        let mut outputs = vec![EQUILIBRIA_JSON];
        if !a.analyze_only {
            let mut w = create(dir, MATRIX_JSON)?;
            writeln!(w, "{}", matrix.to_json())?;
            w.flush()?;
            outputs.insert(0, MATRIX_JSON);
        }
        write_json(create(dir, EQUILIBRIA_JSON)?, &report.equilibria)?;
        RunManifest::new("game-matrix", seed, threads, &a, &outputs).write(dir)?;
    }
    Ok(())
}

fn bounds(a: &BoundsArgs) -> Result<(), Failure> {
    // Validates (m + 1) c <= 1 and the scores before any row is printed.
    let players = [(Competitor::First, "1"), (Competitor::Second, "2")];
    let mut limits = Vec::new();
    for (who, _) in players {
        limits.push(dense_probability_bounds(a.c, a.m, a.p1, a.p2, who)?);
    }
    if a.sizes.is_empty() {
        return Err(Failure::Usage("--n needs at least one size".into()));
    }
    let mut out = io::stdout().lock();
    writeln!(
        out,
        "{:>8} {:>6} {:>14} {:>14} {:>14}  status",
        "n", "player", "lower", "closed_form", "upper"
    )?;
    let mut violations = 0;
    for &n in &a.sizes {
        let cfg = DenseNetworkConfig::proportional(n, a.c, a.m, a.p1, a.p2)?;
        for ((who, label), limit) in players.iter().zip(&limits) {
            let x = dense_first_step_probability(&cfg, *who)?;
            let status = if limit.contains(x) {
                "ok"
            } else {
                violations += 1;
                "VIOLATION"
            };
            writeln!(
                out,
                "{n:>8} {label:>6} {:>14.10} {x:>14.10} {:>14.10}  {status}",
                limit.lower, limit.upper
            )?;
        }
    }
    out.flush()?;
    if violations > 0 {
        eprintln!("{violations} value(s) fall outside their bounds");
    }
    Ok(())
}

fn graph_stats(a: GraphStatsArgs, threads: usize) -> Result<(), Failure> {
    let g = a.graph.load(a.remap)?;
    let metrics = compute_metrics(&g, a.exact)?;
    write_json(io::stdout().lock(), &metrics)?;
    if let Some(dir) = &a.out_dir {
        prepare_dir(dir)?;
        write_json(create(dir, METRICS_JSON)?, &metrics)?;
        RunManifest::new("graph-stats", None, threads, &a, &[METRICS_JSON]).write(dir)?;
    }
    Ok(())
}

fn replay(r: ReplayArgs, threads: usize) -> Result<(), Failure> {
    let manifest = RunManifest::read(&r.manifest)?;
    let out_dir = Some(r.out_dir);
    match manifest.subcommand.as_str() {
        "simulate" => simulate(
            SimulateArgs {
                out_dir,
                ..manifest.parameters()?
            },
            threads,
        ),
        "sweep" => sweep(
            SweepArgs {
                out_dir,
                ..manifest.parameters()?
            },
            threads,
        ),
        "game-matrix" => game_matrix(
            GameMatrixArgs {
                out_dir,
                ..manifest.parameters()?
            },
            threads,
        ),
        "graph-stats" => graph_stats(
            GraphStatsArgs {
                out_dir,
                ..manifest.parameters()?
            },
            threads,
        ),
        other => Err(Failure::Usage(format!(
            "manifest names unknown subcommand {other:?}"
        ))),
    }
}

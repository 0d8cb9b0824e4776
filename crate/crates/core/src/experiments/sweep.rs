use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use super::{run_trial, SeedSource, SIMULATE, SWEEP};
use crate::analysis::{fit_linear, RegressionFit};
use crate::cascade::{
    default_step_cap, AsymmetricWeightedCascade, CascadeOutcome, Player, Termination,
};
use crate::error::{Error, Result};
use crate::graph::{generate_balanced_binary_tree, generate_dense, generate_ngon, Graph};
use crate::rng::stream;
use crate::strategies::StrategyKind;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Topology {
    Ngon,
    Tree,
    Dense,
}

impl Topology {
    pub const ALL: [Topology; 3] = [Topology::Ngon, Topology::Tree, Topology::Dense];

    pub fn generate(self, n: usize) -> Result<Graph> {
        match self {
            Topology::Ngon => generate_ngon(n),
            Topology::Tree => generate_balanced_binary_tree(n),
            Topology::Dense => generate_dense(n),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Topology::Ngon => "ngon",
            Topology::Tree => "tree",
            Topology::Dense => "dense",
        }
    }
}

impl fmt::Display for Topology {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Topology {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Topology::ALL
            .into_iter()
            .find(|t| t.name() == s)
            .ok_or_else(|| {
                Error::invalid(format!("unknown topology {s:?}; valid: ngon, tree, dense"))
            })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ExperimentConfig {
    pub master_seed: u64,
    pub trials_per_point: usize,
    pub sizes: Vec<usize>,
    pub topology: Topology,
    /// Defaults to `100 * size` when unset.
    pub step_cap: Option<usize>,
}

impl ExperimentConfig {
    pub fn validate(&self) -> Result<()> {
        if self.trials_per_point == 0 {
            return Err(Error::invalid("trials per point must be at least 1"));
        }
        if self.sizes.is_empty() {
            return Err(Error::invalid("no graph sizes given"));
        }
        if let Some(&bad) = self.sizes.iter().find(|&&s| s == 0) {
            return Err(Error::invalid(format!("graph size {bad} is not positive")));
        }
        Ok(())
    }
}

/// One player's result in one trial.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct TrialRecord {
    pub size: usize,
    pub trial: usize,
    pub player: String,
    pub influenced: usize,
    pub timesteps: usize,
    pub terminated_by: Termination,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub size: usize,
    pub player: String,
    pub mean_influenced: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PlayerFit {
    pub player: String,
    #[serde(flatten)]
    pub fit: RegressionFit,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepResult {
    pub trials: Vec<TrialRecord>,
    pub points: Vec<SweepPoint>,
}

pub const PRODUCT: &str = "product";
pub const BUDGET: &str = "budget";

impl SweepResult {
    /// Mean for `player` at each size, in sweep order.
    pub fn series(&self, player: &str) -> Vec<(usize, f64)> {
        self.points
            .iter()
            .filter(|p| p.player == player)
            .map(|p| (p.size, p.mean_influenced))
            .collect()
    }

    pub fn mean(&self, size: usize, player: &str) -> Option<f64> {
        self.points
            .iter()
            .find(|p| p.size == size && p.player == player)
            .map(|p| p.mean_influenced)
    }

    /// Least-squares fit of mean influenced count against size, per player.
    pub fn fits(&self) -> Result<Vec<PlayerFit>> {
        [PRODUCT, BUDGET]
            .into_iter()
            .map(|player| {
                let pts: Vec<(f64, f64)> = self
                    .series(player)
                    .into_iter()
                    .map(|(s, m)| (s as f64, m))
                    .collect();
                Ok(PlayerFit {
                    player: player.to_string(),
                    fit: fit_linear(&pts)?,
                })
            })
            .collect()
    }
}

/// The product player (budget `n/50`, score 1.0) and the budget player
/// (budget `n/10`, score 0.2), budgets rounded down.
pub fn product_vs_budget_players(size: usize) -> [Player; 2] {
    [
        Player {
            budget: size / 50,
            product_score: 1.0,
        },
        Player {
            budget: size / 10,
            product_score: 0.2,
        },
    ]
}

/// Product-vs-budget sweep: for each size, builds the topology, runs
/// `trials_per_point` cascades from independent uniformly random seed sets
/// and averages each player's final count.
pub fn run_product_vs_budget(cfg: &ExperimentConfig) -> Result<SweepResult> {
    cfg.validate()?;
    let labels = [PRODUCT, BUDGET];
    let mut trials = Vec::new();
    let mut points = Vec::new();
    let sources = [
        SeedSource::Draw(StrategyKind::Random),
        SeedSource::Draw(StrategyKind::Random),
    ];
    for &size in &cfg.sizes {
        let g = cfg.topology.generate(size)?;
        let players = product_vs_budget_players(size);
        let cap = cfg.step_cap.unwrap_or_else(|| default_step_cap(&g));
        let outcomes = (0..cfg.trials_per_point)
            .into_par_iter()
            .map(|t| {
                let mut rng = stream(cfg.master_seed, &[SWEEP, size as u64, t as u64]);
                run_trial(
                    &g,
                    &players,
                    &sources,
                    &AsymmetricWeightedCascade,
                    cap,
                    &mut rng,
                )
            })
            .collect::<Result<Vec<_>>>()?;
        for (i, label) in labels.iter().enumerate() {
            let total: usize = outcomes.iter().map(|o| o.counts[i]).sum();
            points.push(SweepPoint {
                size,
                player: label.to_string(),
                mean_influenced: total as f64 / outcomes.len() as f64,
            });
        }
        trials.extend(records(size, &outcomes, |i| labels[i].to_string()));
    }
    Ok(SweepResult { trials, points })
}

fn records(
    size: usize,
    outcomes: &[CascadeOutcome],
    label: impl Fn(usize) -> String,
) -> Vec<TrialRecord> {
    let mut rows = Vec::with_capacity(outcomes.len() * 2);
    for (trial, o) in outcomes.iter().enumerate() {
        for (i, &influenced) in o.counts.iter().enumerate() {
            rows.push(TrialRecord {
                size,
                trial,
                player: label(i),
                influenced,
                timesteps: o.timesteps,
                terminated_by: o.terminated_by,
            });
        }
    }
    rows
}

/// Independent cascades on a fixed graph; players are labeled `1..=n`.
pub fn run_simulation(
    g: &Graph,
    players: &[Player],
    strategies: &[StrategyKind],
    trials: usize,
    master_seed: u64,
    step_cap: Option<usize>,
) -> Result<Vec<TrialRecord>> {
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    if strategies.len() != players.len() {
        return Err(Error::invalid(format!(
            "{} strategies for {} players",
            strategies.len(),
            players.len()
        )));
    }
    let sources = strategies
        .iter()
        .zip(players)
        .map(|(&k, p)| SeedSource::prepare(k, g, p.budget))
        .collect::<Result<Vec<_>>>()?;
    let cap = step_cap.unwrap_or_else(|| default_step_cap(g));
    let outcomes = (0..trials)
        .into_par_iter()
        .map(|t| {
            let mut rng = stream(master_seed, &[SIMULATE, t as u64]);
            run_trial(
                g,
                players,
                &sources,
                &AsymmetricWeightedCascade,
                cap,
                &mut rng,
            )
        })
        .collect::<Result<Vec<_>>>()?;
    Ok(records(g.node_count(), &outcomes, |i| (i + 1).to_string()))
}

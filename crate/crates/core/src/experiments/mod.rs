//! Reproducible Monte Carlo experiments.
//!
//! Each trial draws from its own stream `rng::stream(master_seed, key)` where
//! the key names the experiment, the point and the trial index. Trials run in
//! parallel on the current rayon pool and are aggregated in a fixed order, so
//! output is identical for any thread count.

mod game;
mod output;
mod reduction;
mod sweep;

pub use game::run_game_matrix;
pub use output::{write_aggregate_csv, write_trials_csv};
pub use reduction::{
    build_reduction_instance, exhaustive_reduction_oracle, verify_reduction, ReductionInstance,
    ReductionVerdict, MAX_EXHAUSTIVE_NODES,
};
pub use sweep::{
    product_vs_budget_players, run_product_vs_budget, run_simulation, ExperimentConfig, PlayerFit,
    SweepPoint, SweepResult, Topology, TrialRecord, BUDGET, PRODUCT,
};

use rand::Rng;

use crate::cascade::{resolve_seed_overlaps, run_cascade, CascadeOutcome, NodeFunction, Player};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::strategies::{select_seeds, StrategyKind};

// Stream key tags, one per experiment kind.
const SWEEP: u64 = 1;
const SIMULATE: u64 = 2;
const GAME: u64 = 3;

/// Seed sets for one trial: a precomputed set for deterministic strategies,
/// a fresh draw otherwise.
pub(crate) enum SeedSource {
    Fixed(Vec<NodeId>),
    Draw(StrategyKind),
}

impl SeedSource {
    pub(crate) fn prepare(kind: StrategyKind, g: &Graph, budget: usize) -> Result<Self> {
        if kind.is_deterministic() {
            let mut unused = crate::rng::stream(0, &[]);
            Ok(SeedSource::Fixed(select_seeds(
                kind,
                g,
                budget,
                &mut unused,
            )?))
        } else {
            kind.validate()?;
            Ok(SeedSource::Draw(kind))
        }
    }

    fn seeds<R: Rng + ?Sized>(&self, g: &Graph, budget: usize, rng: &mut R) -> Result<Vec<NodeId>> {
        match self {
            SeedSource::Fixed(s) => Ok(s.clone()),
            SeedSource::Draw(kind) => select_seeds(*kind, g, budget, rng),
        }
    }
}

/// Selects seeds for every player (in player order), resolves overlaps and
/// runs one cascade, all from `rng`.
pub(crate) fn run_trial<F, R>(
    g: &Graph,
    players: &[Player],
    sources: &[SeedSource],
    node_fn: &F,
    step_cap: usize,
    rng: &mut R,
) -> Result<CascadeOutcome>
where
    F: NodeFunction + ?Sized,
    R: Rng + ?Sized,
{
    if sources.len() != players.len() {
        return Err(Error::invalid(format!(
            "{} strategies for {} players",
            sources.len(),
            players.len()
        )));
    }
    let seeds = players
        .iter()
        .zip(sources)
        .map(|(p, s)| s.seeds(g, p.budget, rng))
        .collect::<Result<Vec<_>>>()?;
    let assignment = resolve_seed_overlaps(g, seeds, players, rng)?;
    run_cascade(g, &assignment, players, node_fn, rng, step_cap)
}

use rayon::prelude::*;

use super::{run_trial, SeedSource, GAME};
use crate::analysis::GameMatrix;
use crate::cascade::{default_step_cap, validate_players, AsymmetricWeightedCascade, Player};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::rng::stream;
use crate::strategies::StrategyKind;

/// Plays every strategy profile: both players pick from `strategies`, and
/// cell `(a, b)` holds each player's mean final count over `trials` cascades
/// where player 1 uses strategy `a` and player 2 strategy `b`.
pub fn run_game_matrix(
    g: &Graph,
    players: [Player; 2],
    strategies: &[StrategyKind],
    trials: usize,
    master_seed: u64,
) -> Result<GameMatrix> {
    validate_players(&players)?;
    if strategies.is_empty() {
        return Err(Error::invalid("at least one strategy is required"));
    }
    if trials == 0 {
        return Err(Error::invalid("trials must be at least 1"));
    }
    let sources = players
        .iter()
        .map(|p| {
            strategies
                .iter()
                .map(|&k| SeedSource::prepare(k, g, p.budget))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    let cap = default_step_cap(g);
    let k = strategies.len();

    let jobs: Vec<(usize, usize, usize)> = (0..k)
        .flat_map(|a| (0..k).flat_map(move |b| (0..trials).map(move |t| (a, b, t))))
        .collect();
    let outcomes = jobs
        .par_iter()
        .map(|&(a, b, t)| {
            let mut rng = stream(master_seed, &[GAME, a as u64, b as u64, t as u64]);
            let profile = [clone_source(&sources[0][a]), clone_source(&sources[1][b])];
            run_trial(
                g,
                &players,
                &profile,
                &AsymmetricWeightedCascade,
                cap,
                &mut rng,
            )
        })
        .collect::<Result<Vec<_>>>()?;

    let cells = outcomes
        .chunks(trials)
        .map(|cell| {
            let mean =
                |i: usize| cell.iter().map(|o| o.counts[i]).sum::<usize>() as f64 / trials as f64;
            [mean(0), mean(1)]
        })
        .collect::<Vec<_>>()
        .chunks(k)
        .map(<[_]>::to_vec)
        .collect();
    let names: Vec<String> = strategies.iter().map(|s| s.name().to_string()).collect();
    GameMatrix::new(names.clone(), names, cells)
}

fn clone_source(s: &SeedSource) -> SeedSource {
    match s {
        SeedSource::Fixed(v) => SeedSource::Fixed(v.clone()),
        SeedSource::Draw(k) => SeedSource::Draw(*k),
    }
}

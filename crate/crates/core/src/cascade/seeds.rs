use rand::Rng;
use serde::{Deserialize, Serialize};

use super::{validate_players, Player};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Chosen seed sets and the disjoint initial influenced sets they resolve to.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SeedAssignment {
    /// `S_i`, as selected by each player.
    pub seeds: Vec<Vec<NodeId>>,
    /// `A_i^0`, sorted; pairwise disjoint and covering the union of `seeds`.
    pub initial: Vec<Vec<NodeId>>,
}

impl SeedAssignment {
    /// An assignment whose seed sets are already disjoint; no sampling needed.
    pub fn disjoint(seeds: Vec<Vec<NodeId>>) -> Result<Self> {
        let mut initial = seeds.clone();
        initial.iter_mut().for_each(|s| s.sort_unstable());
        let assignment = SeedAssignment { seeds, initial };
        let mut all: Vec<NodeId> = assignment.initial.concat();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::invalid("seed sets are not disjoint"));
        }
        Ok(assignment)
    }

    pub fn player_count(&self) -> usize {
        self.initial.len()
    }
}

/// Probability that each contender wins a contested seed: `p_i / sum(p_j)`.
/// `None` when every score is zero.
pub fn overlap_distribution(scores: &[f64]) -> Option<Vec<f64>> {
    let total: f64 = scores.iter().sum();
    (total > 0.0).then(|| scores.iter().map(|p| p / total).collect())
}

/// Index picked by uniform `u` in `[0, 1)` under `probs` (which sum to 1).
/// Rounding slack at the top end goes to the last index with positive mass.
fn sample_index(probs: &[f64], u: f64) -> usize {
    let mut acc = 0.0;
    for (i, &p) in probs.iter().enumerate() {
        acc += p;
        if p > 0.0 && u < acc {
            return i;
        }
    }
    probs.iter().rposition(|&p| p > 0.0).unwrap_or(0)
}

/// Resolves overlapping seed sets into disjoint initial sets.
///
/// A node chosen by a single player goes to that player. A node chosen by
/// several players is drawn once, player `i` winning with probability
/// `p_i / sum(p_j)` over the contenders. Contested nodes are drawn in
/// increasing node id order so the result is a function of the RNG state.
pub fn resolve_seed_overlaps<R: Rng + ?Sized>(
    g: &Graph,
    seeds: Vec<Vec<NodeId>>,
    players: &[Player],
    rng: &mut R,
) -> Result<SeedAssignment> {
    validate_players(players)?;
    if seeds.len() != players.len() {
        return Err(Error::invalid(format!(
            "{} seed sets for {} players",
            seeds.len(),
            players.len()
        )));
    }

    let mut claims: Vec<(NodeId, usize)> = Vec::new();
    for (i, set) in seeds.iter().enumerate() {
        if set.len() > players[i].budget {
            return Err(Error::BudgetExceeded {
                player: i + 1,
                budget: players[i].budget,
                requested: set.len(),
            });
        }
        let start = claims.len();
        for &v in set {
            if v >= g.node_count() {
                return Err(Error::invalid(format!(
                    "seed node {v} out of range for {} nodes",
                    g.node_count()
                )));
            }
            claims.push((v, i));
        }
        let mine = &mut claims[start..];
        mine.sort_unstable();
        if mine.windows(2).any(|w| w[0].0 == w[1].0) {
            return Err(Error::invalid(format!(
                "player {} lists a seed node twice",
                i + 1
            )));
        }
    }
    claims.sort_unstable();

    let mut initial = vec![Vec::new(); players.len()];
    for group in claims.chunk_by(|a, b| a.0 == b.0) {
        let node = group[0].0;
        let winner = if group.len() == 1 {
            group[0].1
        } else {
            let scores: Vec<f64> = group
                .iter()
                .map(|&(_, i)| players[i].product_score)
                .collect();
            let probs =
                overlap_distribution(&scores).ok_or(Error::UndefinedDistribution { node })?;
            group[sample_index(&probs, rng.random::<f64>())].1
        };
        initial[winner].push(node);
    }

    Ok(SeedAssignment { seeds, initial })
}

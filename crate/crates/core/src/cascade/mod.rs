//! The asymmetric weighted cascade process.
//!
//! A run starts from per-player seed sets. Nodes claimed by several players
//! are assigned to one of them with probability proportional to product
//! score ([`resolve_seed_overlaps`]). Each timestep every uninfluenced node
//! with at least one influenced neighbor draws its outcome from a
//! [`NodeFunction`]; all draws for a step are made against the state at the
//! start of that step and committed together. Ownership is permanent.

mod node_fn;
mod run;
mod seeds;
mod state;

pub use node_fn::{
    node_activation_distribution, AsymmetricWeightedCascade, NeighborThreshold, NodeFunction,
    NodeOutcomeDistribution, NodeView,
};
pub use run::{cascade_step, default_step_cap, run_cascade, CascadeOutcome, Termination};
pub use seeds::{overlap_distribution, resolve_seed_overlaps, SeedAssignment};
pub use state::CascadeState;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A competing company: how many seeds it may pick and how attractive its
/// product is.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Player {
    pub budget: usize,
    pub product_score: f64,
}

impl Player {
    pub fn new(budget: usize, product_score: f64) -> Result<Self> {
        let p = Player {
            budget,
            product_score,
        };
        p.validate()?;
        Ok(p)
    }

    pub fn validate(&self) -> Result<()> {
        if !(0.0..=1.0).contains(&self.product_score) {
            return Err(Error::invalid(format!(
                "product score {} outside [0, 1]",
                self.product_score
            )));
        }
        Ok(())
    }
}

pub(crate) fn validate_players(players: &[Player]) -> Result<()> {
    if players.is_empty() {
        return Err(Error::invalid("at least one player is required"));
    }
    if players.len() > u16::MAX as usize {
        return Err(Error::invalid("too many players"));
    }
    players.iter().try_for_each(Player::validate)
}

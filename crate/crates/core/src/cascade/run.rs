use std::fmt;

use rand::Rng;
use serde::{Deserialize, Serialize};

use super::node_fn::pick;
use super::{CascadeState, NodeFunction, NodeView, Player, SeedAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Termination {
    AllInfluenced,
    /// No uninfluenced node has a positive chance of activating.
    FrontierEmpty,
    StepCap,
}

impl Termination {
    pub fn as_str(self) -> &'static str {
        match self {
            Termination::AllInfluenced => "all-influenced",
            Termination::FrontierEmpty => "frontier-empty",
            Termination::StepCap => "step-cap",
        }
    }
}

impl fmt::Display for Termination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CascadeOutcome {
    /// Final `|A_i|` per player.
    pub counts: Vec<usize>,
    /// Propagation steps taken (seeding is timestep 0).
    pub timesteps: usize,
    pub terminated_by: Termination,
}

/// `100 * |V|`.
pub fn default_step_cap(g: &Graph) -> usize {
    100 * g.node_count().max(1)
}

/// Samples every frontier node against the current state and commits the
/// activations as one new timestep. Returns `None`, leaving the state
/// untouched, when no frontier node can activate.
fn advance<F, R>(
    g: &Graph,
    state: &mut CascadeState,
    players: &[Player],
    node_fn: &F,
    rng: &mut R,
    scratch: &mut Vec<f64>,
    activations: &mut Vec<(NodeId, usize)>,
) -> Option<usize>
where
    F: NodeFunction + ?Sized,
    R: Rng + ?Sized,
{
    activations.clear();
    let mut live = 0usize;
    for v in g.nodes() {
        if state.is_influenced(v) || state.influenced_neighbors(v) == 0 {
            continue;
        }
        scratch.clear();
        scratch.resize(players.len(), 0.0);
        let view = NodeView {
            graph: g,
            state,
            players,
            node: v,
        };
        node_fn.activation_probabilities(&view, scratch);
        if scratch.iter().all(|&q| q <= 0.0) {
            continue;
        }
        live += 1;
        if let Some(i) = pick(scratch, rng.random::<f64>()) {
            activations.push((v, i));
        }
    }
    if live == 0 {
        return None;
    }
    state.commit(g, activations);
    Some(activations.len())
}

fn check_state(g: &Graph, state: &CascadeState, players: &[Player]) -> Result<()> {
    if state.node_count() != g.node_count() {
        return Err(Error::invalid("state and graph disagree on node count"));
    }
    if state.player_count() != players.len() {
        return Err(Error::invalid("state and player list disagree"));
    }
    Ok(())
}

/// One synchronous timestep: every frontier node draws from `node_fn`
/// against the current sets, then all activations are committed at once.
/// Returns the number of newly influenced nodes. With nothing able to
/// activate only the timestep counter moves.
pub fn cascade_step<F, R>(
    g: &Graph,
    state: &mut CascadeState,
    players: &[Player],
    node_fn: &F,
    rng: &mut R,
) -> Result<usize>
where
    F: NodeFunction + ?Sized,
    R: Rng + ?Sized,
{
    check_state(g, state, players)?;
    node_fn.check_players(players)?;
    let mut scratch = Vec::with_capacity(players.len());
    let mut activations = Vec::new();
    match advance(
        g,
        state,
        players,
        node_fn,
        rng,
        &mut scratch,
        &mut activations,
    ) {
        Some(n) => Ok(n),
        None => {
            state.skip_timestep();
            Ok(0)
        }
    }
}

/// Runs steps until every node is influenced, no node can activate any more,
/// or `step_cap` steps have been taken.
pub fn run_cascade<F, R>(
    g: &Graph,
    assignment: &SeedAssignment,
    players: &[Player],
    node_fn: &F,
    rng: &mut R,
    step_cap: usize,
) -> Result<CascadeOutcome>
where
    F: NodeFunction + ?Sized,
    R: Rng + ?Sized,
{
    node_fn.check_players(players)?;
    if assignment.player_count() != players.len() {
        return Err(Error::invalid("seed assignment and player list disagree"));
    }
    let mut state = CascadeState::new(g, assignment)?;
    let mut scratch = Vec::with_capacity(players.len());
    let mut activations = Vec::new();
    let terminated_by = loop {
        if state.uninfluenced_count() == 0 {
            break Termination::AllInfluenced;
        }
        if state.timestep() >= step_cap {
            break Termination::StepCap;
        }
        let stepped = advance(
            g,
            &mut state,
            players,
            node_fn,
            rng,
            &mut scratch,
            &mut activations,
        );
        if stepped.is_none() {
            break Termination::FrontierEmpty;
        }
    };
    Ok(CascadeOutcome {
        counts: state.influenced_counts().to_vec(),
        timesteps: state.timestep(),
        terminated_by,
    })
}

use super::{validate_players, CascadeState, Player};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

/// Outcome law for one uninfluenced node at one timestep.
///
/// `activation[i]` is the probability that player `i` (0-based) claims the
/// node; the remaining mass is the probability of staying uninfluenced.
#[derive(Debug, Clone, PartialEq)]
pub struct NodeOutcomeDistribution {
    pub activation: Vec<f64>,
}

impl NodeOutcomeDistribution {
    pub fn stay_uninfluenced(players: usize) -> Self {
        NodeOutcomeDistribution {
            activation: vec![0.0; players],
        }
    }

    /// `q_0 = 1 - sum(q_i)`, clamped at 0 to absorb rounding.
    pub fn stay(&self) -> f64 {
        (1.0 - self.activation.iter().sum::<f64>()).max(0.0)
    }

    /// All `q_i >= 0` and `sum(q_i) <= 1` within `tol`.
    pub fn is_normalized(&self, tol: f64) -> bool {
        self.activation.iter().all(|&q| q >= 0.0 && q.is_finite())
            && self.activation.iter().sum::<f64>() <= 1.0 + tol
    }

    /// Outcome for a uniform draw `u` in `[0, 1)`: the winning player, or
    /// `None` to stay uninfluenced.
    pub fn sample(&self, u: f64) -> Option<usize> {
        pick(&self.activation, u)
    }
}

pub(super) fn pick(activation: &[f64], u: f64) -> Option<usize> {
    let mut acc = 0.0;
    for (i, &q) in activation.iter().enumerate() {
        acc += q;
        if q > 0.0 && u < acc {
            return Some(i);
        }
    }
    None
}

/// Everything a node function may look at when scoring node `node`.
#[derive(Clone, Copy)]
pub struct NodeView<'a> {
    pub graph: &'a Graph,
    pub state: &'a CascadeState,
    pub players: &'a [Player],
    pub node: NodeId,
}

impl NodeView<'_> {
    pub fn degree(&self) -> usize {
        self.graph.degree(self.node)
    }

    /// `e_i`: neighbors of the node currently owned by each player.
    pub fn neighbor_counts(&self) -> &[u32] {
        self.state.neighbor_counts(self.node)
    }
}

/// Rule that turns the cascade history around a node into that node's
/// outcome distribution for the next timestep.
///
/// The engine consults it only for uninfluenced nodes with at least one
/// influenced neighbor; every other uninfluenced node stays put.
pub trait NodeFunction: Sync {
    /// Rejects player configurations the rule is not defined for.
    fn check_players(&self, players: &[Player]) -> Result<()> {
        validate_players(players)
    }

    /// Writes `q_i` for every player into `out` (zeroed by the caller, one
    /// slot per player).
    fn activation_probabilities(&self, view: &NodeView<'_>, out: &mut [f64]);

    fn distribution(&self, view: &NodeView<'_>) -> NodeOutcomeDistribution {
        let mut d = NodeOutcomeDistribution::stay_uninfluenced(view.players.len());
        self.activation_probabilities(view, &mut d.activation);
        d
    }
}

/// The default rule. With `C'` the players owning at least one neighbor of
/// `v`, `e_i` their neighbor counts and `E = sum(e_i)`:
///
/// ```text
/// q_i = p_i / sum_{C'} p_j  *  e_i / E  *  (1 - (1 - 1/deg(v))^E)
/// ```
///
/// A single adjacent player is handled by the same expression. If every
/// adjacent player has product score 0 the node stays uninfluenced.
#[derive(Debug, Clone, Copy, Default)]
pub struct AsymmetricWeightedCascade;

impl NodeFunction for AsymmetricWeightedCascade {
    fn activation_probabilities(&self, view: &NodeView<'_>, out: &mut [f64]) {
        let degree = view.degree();
        let counts = view.neighbor_counts();
        let total: u32 = counts.iter().sum();
        if degree == 0 || total == 0 {
            return;
        }
        let score_total: f64 = counts
            .iter()
            .zip(view.players)
            .filter(|(&e, _)| e > 0)
            .map(|(_, p)| p.product_score)
            .sum();
        if score_total <= 0.0 {
            return;
        }
        // 1 - (1 - 1/d)^E without cancellation for large d.
        let reach = -(f64::from(total) * (-1.0 / degree as f64).ln_1p()).exp_m1();
        for ((q, &e), player) in out.iter_mut().zip(counts).zip(view.players) {
            if e > 0 {
                *q = player.product_score / score_total * (f64::from(e) / f64::from(total)) * reach;
            }
        }
    }
}

/// Deterministic single-player rule: a node is claimed with certainty iff it
/// neighbors one of the player's initial seeds, and never otherwise.
#[derive(Debug, Clone, Copy, Default)]
pub struct NeighborThreshold;

impl NodeFunction for NeighborThreshold {
    fn check_players(&self, players: &[Player]) -> Result<()> {
        validate_players(players)?;
        if players.len() != 1 {
            return Err(Error::InvalidConfiguration(format!(
                "the neighbor-threshold rule takes exactly one player, got {}",
                players.len()
            )));
        }
        Ok(())
    }

    fn activation_probabilities(&self, view: &NodeView<'_>, out: &mut [f64]) {
        let seeded = view
            .graph
            .neighbors(view.node)
            .any(|u| view.state.activated_at(u) == Some(0));
        if seeded {
            out[0] = 1.0;
        }
    }
}

/// Activation distribution of uninfluenced node `v` under the default rule.
pub fn node_activation_distribution(
    g: &Graph,
    state: &CascadeState,
    v: NodeId,
    players: &[Player],
) -> Result<NodeOutcomeDistribution> {
    if v >= g.node_count() || state.node_count() != g.node_count() {
        return Err(Error::invalid(format!("node {v} not in the graph")));
    }
    if players.len() != state.player_count() {
        return Err(Error::invalid("player list does not match the state"));
    }
    if state.is_influenced(v) {
        return Err(Error::ContractViolation(format!(
            "node {v} is already influenced"
        )));
    }
    let view = NodeView {
        graph: g,
        state,
        players,
        node: v,
    };
    Ok(AsymmetricWeightedCascade.distribution(&view))
}

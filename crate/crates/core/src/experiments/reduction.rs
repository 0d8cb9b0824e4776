//! Checker for the single-player threshold instance built from a graph and a
//! budget `k`: one player with score 1 and budget `k` under the
//! [`NeighborThreshold`] rule. A seed set influences every node exactly when
//! it dominates the graph.

use crate::cascade::{run_cascade, NeighborThreshold, Player, SeedAssignment};
use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};
use crate::rng::stream;

pub const MAX_EXHAUSTIVE_NODES: usize = 12;

#[derive(Debug, Clone)]
pub struct ReductionInstance<'g> {
    pub graph: &'g Graph,
    pub player: Player,
    pub node_fn: NeighborThreshold,
}

impl ReductionInstance<'_> {
    pub fn budget(&self) -> usize {
        self.player.budget
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReductionVerdict {
    pub influenced: usize,
    pub is_yes_witness: bool,
}

pub fn build_reduction_instance(g: &Graph, k: usize) -> ReductionInstance<'_> {
    ReductionInstance {
        graph: g,
        player: Player {
            budget: k,
            product_score: 1.0,
        },
        node_fn: NeighborThreshold,
    }
}

/// Runs the instance once from `seed`. Every activation probability is 0 or
/// 1, so one run gives the exact count.
pub fn verify_reduction(inst: &ReductionInstance<'_>, seed: &[NodeId]) -> Result<ReductionVerdict> {
    if seed.len() > inst.budget() {
        return Err(Error::BudgetExceeded {
            player: 1,
            budget: inst.budget(),
            requested: seed.len(),
        });
    }
    let assignment = SeedAssignment::disjoint(vec![seed.to_vec()])?;
    let n = inst.graph.node_count();
    let outcome = run_cascade(
        inst.graph,
        &assignment,
        &[inst.player],
        &inst.node_fn,
        &mut stream(0, &[]),
        n + 1,
    )?;
    let influenced = outcome.counts[0];
    Ok(ReductionVerdict {
        influenced,
        is_yes_witness: influenced == n,
    })
}

/// Whether some seed set of size at most `k` influences the whole graph,
/// found by trying every subset.
pub fn exhaustive_reduction_oracle(g: &Graph, k: usize) -> Result<bool> {
    let n = g.node_count();
    if n > MAX_EXHAUSTIVE_NODES {
        return Err(Error::GraphTooLarge {
            nodes: n,
            limit: MAX_EXHAUSTIVE_NODES,
        });
    }
    let inst = build_reduction_instance(g, k);
    for mask in 0u32..(1 << n) {
        if mask.count_ones() as usize > k {
            continue;
        }
        let seed: Vec<NodeId> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if verify_reduction(&inst, &seed)?.is_yes_witness {
            return Ok(true);
        }
    }
    Ok(false)
}

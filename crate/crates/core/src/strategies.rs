//! Seed-selection heuristics.
//!
//! The degree-based heuristics are deterministic: every tie is broken in
//! favor of the lowest node id. They ignore what the opponent picks; overlap
//! is settled later by the engine.

use std::fmt;
use std::str::FromStr;

use rand::seq::index;
use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::graph::{Graph, NodeId};

pub const DEFAULT_DEGREE_DISCOUNT_P: f64 = 0.01;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "kebab-case")]
pub enum StrategyKind {
    /// Uniform sample without replacement.
    Random,
    /// The `k` nodes of largest degree.
    HighestDegree,
    /// Greedy on degree, each pick lowering its unselected neighbors'
    /// effective degree by one.
    SingleDiscount,
    /// Greedy on `d_v - 2 t_v - (d_v - t_v) t_v p`, `t_v` being the number of
    /// already-selected neighbors of `v`.
    DegreeDiscount { p: f64 },
}

impl StrategyKind {
    pub fn degree_discount(p: f64) -> Result<Self> {
        let s = StrategyKind::DegreeDiscount { p };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<()> {
        match *self {
            StrategyKind::DegreeDiscount { p } if !(p > 0.0 && p < 1.0) => Err(Error::invalid(
                format!("degree-discount p must lie in (0, 1), got {p}"),
            )),
            _ => Ok(()),
        }
    }

    pub fn is_deterministic(&self) -> bool {
        !matches!(self, StrategyKind::Random)
    }

    pub fn name(&self) -> &'static str {
        match self {
            StrategyKind::Random => "random",
            StrategyKind::HighestDegree => "highest-degree",
            StrategyKind::SingleDiscount => "single-discount",
            StrategyKind::DegreeDiscount { .. } => "degree-discount",
        }
    }

    /// Parses a CLI name; `degree-discount` takes `dd_p` as its parameter.
    pub fn parse_with(name: &str, dd_p: f64) -> Result<Self> {
        let kind = match name {
            "random" => StrategyKind::Random,
            "highest-degree" => StrategyKind::HighestDegree,
            "single-discount" => StrategyKind::SingleDiscount,
            "degree-discount" => StrategyKind::DegreeDiscount { p: dd_p },
            other => {
                return Err(Error::invalid(format!(
                    "unknown strategy {other:?}; expected one of random, highest-degree, \
                     single-discount, degree-discount"
                )))
            }
        };
        kind.validate()?;
        Ok(kind)
    }
}

impl fmt::Display for StrategyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for StrategyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse_with(s, DEFAULT_DEGREE_DISCOUNT_P)
    }
}

/// Picks `min(budget, |V|)` distinct seed nodes. Only [`StrategyKind::Random`]
/// draws from `rng`.
pub fn select_seeds<R: Rng + ?Sized>(
    kind: StrategyKind,
    g: &Graph,
    budget: usize,
    rng: &mut R,
) -> Result<Vec<NodeId>> {
    kind.validate()?;
    let k = budget.min(g.node_count());
    Ok(match kind {
        StrategyKind::Random => index::sample(rng, g.node_count(), k).into_vec(),
        StrategyKind::HighestDegree => highest_degree(g, k),
        StrategyKind::SingleDiscount => single_discount(g, k),
        StrategyKind::DegreeDiscount { p } => degree_discount(g, k, p),
    })
}

fn highest_degree(g: &Graph, k: usize) -> Vec<NodeId> {
    let mut order: Vec<NodeId> = g.nodes().collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));
    order.truncate(k);
    order
}

/// Index of the largest score among unselected nodes, lowest id on ties.
fn argmax<T: PartialOrd + Copy>(score: &[T], selected: &[bool]) -> Option<NodeId> {
    let mut best: Option<NodeId> = None;
    for v in 0..score.len() {
        if selected[v] {
            continue;
        }
        if best.is_none_or(|b| score[v] > score[b]) {
            best = Some(v);
        }
    }
    best
}

fn single_discount(g: &Graph, k: usize) -> Vec<NodeId> {
    let mut effective: Vec<i64> = g.nodes().map(|v| g.degree(v) as i64).collect();
    let mut selected = vec![false; g.node_count()];
    let mut picks = Vec::with_capacity(k);
    while picks.len() < k {
        let Some(u) = argmax(&effective, &selected) else {
            break;
        };
        selected[u] = true;
        picks.push(u);
        for v in g.neighbors(u) {
            if !selected[v] {
                effective[v] -= 1;
            }
        }
    }
    picks
}

fn degree_discount(g: &Graph, k: usize, p: f64) -> Vec<NodeId> {
    let degree: Vec<f64> = g.nodes().map(|v| g.degree(v) as f64).collect();
    let mut score = degree.clone();
    let mut chosen_neighbors = vec![0.0f64; g.node_count()];
    let mut selected = vec![false; g.node_count()];
    let mut picks = Vec::with_capacity(k);
    while picks.len() < k {
        let Some(u) = argmax(&score, &selected) else {
            break;
        };
        selected[u] = true;
        picks.push(u);
        for v in g.neighbors(u) {
            if selected[v] {
                continue;
            }
            chosen_neighbors[v] += 1.0;
            let (d, t) = (degree[v], chosen_neighbors[v]);
            score[v] = d - 2.0 * t - (d - t) * t * p;
        }
    }
    picks
}

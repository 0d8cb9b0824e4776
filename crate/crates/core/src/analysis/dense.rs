//! First-step influence probabilities on the complete graph.
//!
//! With disjoint seed sets of sizes `b1` and `b2` on `K_n`, every
//! uninfluenced node sees all `b1 + b2` seeds among its `n - 1` neighbors, so
//! its probability of joining player 1 at step one is
//!
//! ```text
//! p1 / (p1 + p2) * b1 / (b1 + b2) * (1 - (1 - 1/(n - 1))^(b1 + b2))
//! ```
//!
//! With budgets proportional to `n` (`b1 = c n`, `b2 = m c n`) the last factor
//! lies between `1 - e^-((m+1)c)` and `1 - 4^-((m+1)c)` for every `n`, which
//! bounds the probability independently of the graph size.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Competitor {
    First,
    Second,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DenseNetworkConfig {
    pub n: usize,
    pub b1: f64,
    pub b2: f64,
    pub p1: f64,
    pub p2: f64,
}

impl DenseNetworkConfig {
    /// Budgets `b1 = c n` and `b2 = m c n`.
    pub fn proportional(n: usize, c: f64, m: f64, p1: f64, p2: f64) -> Result<Self> {
        if !(c > 0.0 && c < 1.0) {
            return Err(Error::invalid(format!("c must lie in (0, 1), got {c}")));
        }
        if !(m > 1.0 && m.is_finite()) {
            return Err(Error::invalid(format!("m must exceed 1, got {m}")));
        }
        Self::with_budgets(n, c * n as f64, m * c * n as f64, p1, p2)
    }

    pub fn with_budgets(n: usize, b1: f64, b2: f64, p1: f64, p2: f64) -> Result<Self> {
        let cfg = DenseNetworkConfig { n, b1, b2, p1, p2 };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n < 2 {
            return Err(Error::invalid("the dense network needs n >= 2"));
        }
        for (name, p) in [("p1", self.p1), ("p2", self.p2)] {
            if !(0.0..=1.0).contains(&p) {
                return Err(Error::invalid(format!("{name} = {p} outside [0, 1]")));
            }
        }
        if self.p1 + self.p2 <= 0.0 {
            return Err(Error::invalid("product scores are both zero"));
        }
        if !(self.b1 > 0.0 && self.b2 > 0.0) {
            return Err(Error::invalid("budgets must be positive"));
        }
        if self.b1 + self.b2 > self.n as f64 {
            return Err(Error::InvalidConfiguration(format!(
                "budgets {} + {} exceed the {} nodes",
                self.b1, self.b2, self.n
            )));
        }
        Ok(())
    }

    fn score_factor(&self, who: Competitor) -> f64 {
        let p = match who {
            Competitor::First => self.p1,
            Competitor::Second => self.p2,
        };
        p / (self.p1 + self.p2)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ProbabilityBounds {
    pub lower: f64,
    pub upper: f64,
}

impl ProbabilityBounds {
    pub fn contains(&self, x: f64) -> bool {
        self.lower <= x && x <= self.upper
    }
}

/// Exact probability that a given uninfluenced node joins `who` at the first
/// step, assuming disjoint seed sets.
pub fn dense_first_step_probability(cfg: &DenseNetworkConfig, who: Competitor) -> Result<f64> {
    cfg.validate()?;
    let seeds = cfg.b1 + cfg.b2;
    let share = match who {
        Competitor::First => cfg.b1,
        Competitor::Second => cfg.b2,
    } / seeds;
    let reach = -(seeds * (-1.0 / (cfg.n - 1) as f64).ln_1p()).exp_m1();
    Ok(cfg.score_factor(who) * share * reach)
}

/// Size-independent bounds for proportional budgets `b1 = c n`, `b2 = m c n`.
/// Requires `(m + 1) c <= 1`.
pub fn dense_probability_bounds(
    c: f64,
    m: f64,
    p1: f64,
    p2: f64,
    who: Competitor,
) -> Result<ProbabilityBounds> {
    if !(c > 0.0 && c < 1.0) || !(m > 1.0 && m.is_finite()) {
        return Err(Error::invalid(format!(
            "need 0 < c < 1 and m > 1, got c={c}, m={m}"
        )));
    }
    if (m + 1.0) * c > 1.0 {
        return Err(Error::InvalidConfiguration(format!(
            "(m + 1) c = {} exceeds 1: the seeds do not fit in the graph",
            (m + 1.0) * c
        )));
    }
    // Score checks are shared with the exact formula.
    let probe = DenseNetworkConfig {
        n: 2,
        b1: 0.5,
        b2: 0.5,
        p1,
        p2,
    };
    probe.validate()?;
    let share = match who {
        Competitor::First => 1.0 / (m + 1.0),
        Competitor::Second => m / (m + 1.0),
    };
    let scale = probe.score_factor(who) * share;
    let exponent = (m + 1.0) * c;
    Ok(ProbabilityBounds {
        lower: scale * -(-exponent).exp_m1(),
        upper: scale * (1.0 - 4f64.powf(-exponent)),
    })
}

/// `(b1 + x) / (b1 + b2 + 2x) > b1 / (b1 + b2)`: after equal gains `x` the
/// smaller player's share of influenced nodes grows.
pub fn momentum_inequality_check(b1: f64, b2: f64, x: f64) -> Result<bool> {
    check_momentum_args(b1, b2, x)?;
    Ok((b1 + x) / (b1 + b2 + 2.0 * x) > b1 / (b1 + b2))
}

/// `(b2 + x) / (b1 + b2 + 2x) < b2 / (b1 + b2)`: the larger player's share
/// shrinks.
pub fn momentum_inequality_check_second(b1: f64, b2: f64, x: f64) -> Result<bool> {
    check_momentum_args(b1, b2, x)?;
    Ok((b2 + x) / (b1 + b2 + 2.0 * x) < b2 / (b1 + b2))
}

fn check_momentum_args(b1: f64, b2: f64, x: f64) -> Result<()> {
    if !(b1 > 0.0 && b2 > b1 && x > 0.0 && b2.is_finite() && x.is_finite()) {
        return Err(Error::invalid(format!(
            "need b2 > b1 > 0 and x > 0, got b1={b1}, b2={b2}, x={x}"
        )));
    }
    Ok(())
}

//! Closed-form results and post-processing of experiment output.

mod dense;
mod equilibrium;
mod regression;

pub use dense::{
    dense_first_step_probability, dense_probability_bounds, momentum_inequality_check,
    momentum_inequality_check_second, Competitor, DenseNetworkConfig, ProbabilityBounds,
};
pub use equilibrium::{find_dominant_strategy_equilibrium, find_pure_nash, GameMatrix};
pub use regression::{fit_linear, RegressionFit};

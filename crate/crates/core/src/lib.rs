//! Asymmetric weighted cascade model for competitive influence maximization.
//!
//! The crate is organised around the pieces of a competitive diffusion
//! experiment:
//!
//! * [`graph`]: immutable undirected graphs, the three synthetic topologies
//!   (cycle, complete binary tree, complete graph), an edge-list loader and
//!   structural metrics.
//! * [`cascade`]: players, seed-overlap resolution, the per-node activation
//!   distribution and synchronous cascade execution with a pluggable node
//!   function.
//! * [`strategies`]: seed-selection heuristics (random, highest degree,
//!   single discount, degree discount).
//! * [`analysis`]: closed-form dense-network probabilities and bounds, least
//!   squares fits and equilibrium detection on payoff matrices.
//! * [`experiments`]: reproducible Monte Carlo harnesses (product-vs-budget
//!   sweep, strategy game matrix) and the dominating-set reduction checker.
//!
//! All randomness flows through [`rng::stream`], which derives an
//! independent ChaCha stream from a master seed and a key, so results do not
//! depend on how work is scheduled across threads.
//!
//! ```
//! use cascadia::graph::generate_dense;
//! use cascadia::rng::stream;
//! use cascadia::{
//!     resolve_seed_overlaps, run_cascade, select_seeds, AsymmetricWeightedCascade, Player,
//!     StrategyKind,
//! };
//!
//! let g = generate_dense(200)?;
//! let players = [Player::new(4, 1.0)?, Player::new(20, 0.2)?];
//! let mut rng = stream(42, &[0]);
//! let seeds = players
//!     .iter()
//!     .map(|p| select_seeds(StrategyKind::Random, &g, p.budget, &mut rng))
//!     .collect::<Result<Vec<_>, _>>()?;
//! let assignment = resolve_seed_overlaps(&g, seeds, &players, &mut rng)?;
//! let outcome = run_cascade(&g, &assignment, &players, &AsymmetricWeightedCascade, &mut rng, 20_000)?;
//! assert_eq!(outcome.counts.iter().sum::<usize>(), 200);
//! # Ok::<(), cascadia::Error>(())
//! ```

pub mod analysis;
pub mod cascade;
pub mod error;
pub mod experiments;
pub mod graph;
pub mod rng;
pub mod strategies;

pub use analysis::{
    dense_first_step_probability, dense_probability_bounds, find_dominant_strategy_equilibrium,
    find_pure_nash, fit_linear, momentum_inequality_check, Competitor, DenseNetworkConfig,
    GameMatrix, ProbabilityBounds, RegressionFit,
};
pub use cascade::{
    cascade_step, default_step_cap, node_activation_distribution, resolve_seed_overlaps,
    run_cascade, AsymmetricWeightedCascade, CascadeOutcome, CascadeState, NeighborThreshold,
    NodeFunction, NodeOutcomeDistribution, NodeView, Player, SeedAssignment, Termination,
};
pub use error::{Error, Result};
pub use graph::{Graph, GraphMetrics, NodeId};
pub use strategies::{select_seeds, StrategyKind};

//! Behavior-driven steady-state evolutionary search.
//!
//! The library ranks solutions by *behavior domination*: a solution exerts a
//! suppressing effect on every less fit solution, growing with the fitness
//! gap and shrinking with the distance between their behaviors. Selecting
//! survivors from the non-dominated fronts of that relation keeps the local
//! optima of the behavior space alive as stepping stones, without the
//! long-range deletion artifacts that plague other novelty/fitness hybrids.
//!
//! Alongside the domination-based selectors (`bdma2`, `bdma2a`) the crate
//! implements six reference strategies behind one replacement interface
//! (fitness, novelty, LSNF, NSGA-NF, NSLC, MAP-Elites), three benchmark
//! domains (four peaks, ETF claws, focused Ackley), global-novelty and
//! bin-score metrics, and the statistics used to compare runs.
//!
//! Everything numeric is generic over [`scalar::Real`] (`f32` or `f64`);
//! the `*64` aliases at the crate root fix the default precision used by
//! the CLI harness.

pub mod distance;
pub mod domains;
pub mod error;
pub mod evolution;
pub mod individual;
pub mod metrics;
pub mod population;
pub mod ranking;
pub mod scalar;
pub mod stats;

pub use error::{CoreError, Result};
pub use scalar::Real;

/// Double-precision instantiations used by the harness.
pub type Genome64 = individual::Genome<f64>;
pub type Behavior64 = individual::BehaviorVector<f64>;
pub type Individual64 = individual::EvaluatedIndividual<f64>;
pub type Population64 = population::Population<f64>;
pub type Archive64 = population::NoveltyArchive<f64>;
pub type Strategy64 = ranking::RankingStrategy<f64>;
pub type Domain64 = domains::Domain<f64>;
pub type RunConfig64 = evolution::RunConfig<f64>;
pub type RunLog64 = metrics::RunLog<f64>;

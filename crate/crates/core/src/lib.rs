//! Firefly algorithm for multimodal minimization, standard PSO and
//! real-coded GA baselines, a catalog of benchmark functions, and a seeded
//! trial harness reporting mean evaluations and success rates.
//!
//! Everything minimizes. A run is a pure function of objective, config and
//! seed; see [`rng`] for the random stream definition.

pub mod baselines;
pub mod bench;
pub mod error;
pub mod firefly;
pub mod objective;
pub mod objectives;
pub mod rng;
pub mod run;
pub mod space;

pub use baselines::{GaConfig, PsoConfig};
pub use bench::{run_trials, AlgorithmConfig, StoppingRule, SummaryRow, TrialOutcome, TrialPlan};
pub use error::{Error, Result};
pub use firefly::FaConfig;
pub use objective::Objective;
pub use objectives::BenchmarkCatalog;
pub use rng::{FixedDraws, RandomSource, SeededRng};
pub use run::{Algorithm, Budget, RunRecord, TracePoint};
pub use space::SearchSpace;

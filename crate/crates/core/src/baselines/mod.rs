//! Comparison algorithms run under the same evaluation and record contract as
//! the firefly algorithm.

pub mod ga;
pub mod pso;

pub use ga::{ga_run, ga_run_observed, ga_step, GaConfig, GaPopulation};
pub use pso::{pso_run, pso_run_observed, pso_step, pso_velocity_update, PsoConfig, PsoState};

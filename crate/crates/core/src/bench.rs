//! Repeated seeded trials and their summary statistics.
//!
//! Conventions used by [`summarize`]:
//! * success is decided per run against the objective's known optimum and
//!   reported as a fraction of all runs;
//! * mean and standard deviation of evaluation counts are taken over the
//!   successful runs only, the deviation with divisor `k - 1` (zero when
//!   `k = 1`); with no successes both are absent.

use rayon::prelude::*;

use crate::baselines::{ga_run, pso_run, GaConfig, PsoConfig};
use crate::error::{Error, Result};
use crate::firefly::{fa_run, FaConfig};
use crate::objective::Objective;
use crate::objectives::BenchmarkCatalog;
use crate::rng::SeededRng;
use crate::run::{Algorithm, Budget, RunRecord, TracePoint};

pub const DEFAULT_WINDOW: usize = 10;
pub const DEFAULT_TOLERANCE: f64 = 1e-5;
/// Cap for objective/algorithm pairs without a reference mean.
pub const FALLBACK_EVALUATION_CAP: u64 = 500_000;

/// Stop once the best-so-far has improved by no more than `tolerance` over
/// the last `window` generations.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StoppingRule {
    pub window: usize,
    pub tolerance: f64,
}

impl Default for StoppingRule {
    fn default() -> Self {
        Self { window: DEFAULT_WINDOW, tolerance: DEFAULT_TOLERANCE }
    }
}

impl StoppingRule {
    pub fn validate(&self) -> Result<()> {
        if self.window == 0 {
            return Err(Error::InvalidConfig("stopping window must be at least 1".into()));
        }
        if self.tolerance.is_nan() || self.tolerance <= 0.0 {
            return Err(Error::InvalidConfig(format!("stopping tolerance must be positive, got {}", self.tolerance)));
        }
        Ok(())
    }

    /// `trace` holds one entry per generation, initialization first.
    pub fn should_stop(&self, trace: &[TracePoint]) -> bool {
        if trace.len() <= self.window {
            return false;
        }
        let latest = trace[trace.len() - 1].best_value;
        let earlier = trace[trace.len() - 1 - self.window].best_value;
        if earlier == latest {
            // covers +inf == +inf
            return true;
        }
        earlier - latest <= self.tolerance
    }
}

/// The stopping rule plus the evaluation cap.
pub fn stopping_rule(trace: &[TracePoint], rule: &StoppingRule, evaluation_cap: Option<u64>) -> bool {
    let capped = match (trace.last(), evaluation_cap) {
        (Some(last), Some(cap)) => last.evaluations >= cap,
        _ => false,
    };
    capped || rule.should_stop(trace)
}

/// Whether the run ended within the objective's success band.
pub fn is_success(record: &RunRecord, objective: &Objective) -> Result<bool> {
    objective.is_near_optimum(record.best_value).ok_or_else(|| Error::NoKnownOptimum(objective.name().to_owned()))
}

/// Ten times the reference mean evaluation count for the pair, or
/// [`FALLBACK_EVALUATION_CAP`] when there is none.
pub fn default_evaluation_cap(objective: &str, algorithm: Algorithm) -> u64 {
    // (GA, PSO, FA) mean evaluations
    let means: Option<(u64, u64, u64)> = match objective {
        "michalewicz" => Some((89_325, 6_922, 3_752)),
        "rosenbrock" => Some((55_723, 32_756, 7_792)),
        "dejong" => Some((25_412, 17_040, 7_217)),
        "schwefel" => Some((227_329, 14_522, 9_902)),
        "ackley" => Some((32_720, 23_407, 5_293)),
        "rastrigin" => Some((110_523, 79_491, 15_573)),
        "easom" => Some((19_239, 17_273, 7_925)),
        "griewank" => Some((70_925, 55_970, 12_592)),
        "shubert" => Some((54_077, 23_992, 12_577)),
        "yang" => Some((27_923, 14_116, 7_390)),
        _ => None,
    };
    match (means, algorithm) {
        (Some((ga, _, _)), Algorithm::Ga) => 10 * ga,
        (Some((_, pso, _)), Algorithm::Pso) => 10 * pso,
        (Some((_, _, fa)), Algorithm::Fa) => 10 * fa,
        (None, _) => FALLBACK_EVALUATION_CAP,
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum AlgorithmConfig {
    Fa(FaConfig),
    Pso(PsoConfig),
    Ga(GaConfig),
}

impl AlgorithmConfig {
    pub fn default_for(algorithm: Algorithm) -> Self {
        match algorithm {
            Algorithm::Fa => Self::Fa(FaConfig::default()),
            Algorithm::Pso => Self::Pso(PsoConfig::default()),
            Algorithm::Ga => Self::Ga(GaConfig::default()),
        }
    }

    pub fn algorithm(&self) -> Algorithm {
        match self {
            Self::Fa(_) => Algorithm::Fa,
            Self::Pso(_) => Algorithm::Pso,
            Self::Ga(_) => Algorithm::Ga,
        }
    }

    pub fn budget(&self) -> &Budget {
        match self {
            Self::Fa(c) => &c.budget,
            Self::Pso(c) => &c.budget,
            Self::Ga(c) => &c.budget,
        }
    }

    pub fn budget_mut(&mut self) -> &mut Budget {
        match self {
            Self::Fa(c) => &mut c.budget,
            Self::Pso(c) => &mut c.budget,
            Self::Ga(c) => &mut c.budget,
        }
    }

    pub fn population(&self) -> usize {
        match self {
            Self::Fa(c) => c.n,
            Self::Pso(c) => c.n,
            Self::Ga(c) => c.n,
        }
    }

    pub fn validate(&self) -> Result<()> {
        match self {
            Self::Fa(c) => c.validate(),
            Self::Pso(c) => c.validate(),
            Self::Ga(c) => c.validate(),
        }
    }

    /// One run from a fresh [`SeededRng`] seeded with `seed`.
    pub fn run(&self, objective: &Objective, seed: u64) -> Result<RunRecord> {
        let mut rng = SeededRng::new(seed);
        match self {
            Self::Fa(c) => fa_run(objective, c, &mut rng, seed),
            Self::Pso(c) => pso_run(objective, c, &mut rng, seed),
            Self::Ga(c) => ga_run(objective, c, &mut rng, seed),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialPlan {
    pub algorithm: AlgorithmConfig,
    pub objective: String,
    /// Overrides the catalog's default dimension.
    pub dim: Option<usize>,
    pub runs: usize,
    pub base_seed: u64,
    /// Stopping-rule tolerance on best-value improvement.
    pub tolerance: f64,
    /// Stopping-rule window in generations.
    pub window: usize,
    pub success_tolerance: f64,
    /// `None` picks [`default_evaluation_cap`].
    pub evaluation_cap: Option<u64>,
}

impl TrialPlan {
    pub fn new(algorithm: AlgorithmConfig, objective: impl Into<String>) -> Self {
        Self {
            algorithm,
            objective: objective.into(),
            dim: None,
            runs: 100,
            base_seed: 0,
            tolerance: DEFAULT_TOLERANCE,
            window: DEFAULT_WINDOW,
            success_tolerance: crate::objective::DEFAULT_SUCCESS_TOLERANCE,
            evaluation_cap: None,
        }
    }

    pub fn validate(&self) -> Result<()> {
        if self.runs == 0 {
            return Err(Error::InvalidConfig("runs must be at least 1".into()));
        }
        StoppingRule { window: self.window, tolerance: self.tolerance }.validate()?;
        if self.evaluation_cap == Some(0) {
            return Err(Error::InvalidConfig("evaluation cap must be positive".into()));
        }
        self.algorithm.validate()
    }

    pub fn objective(&self, catalog: &BenchmarkCatalog) -> Result<Objective> {
        catalog.objective(&self.objective, self.dim)?.with_success_tolerance(self.success_tolerance)
    }

    pub fn evaluation_cap(&self) -> u64 {
        self.evaluation_cap.unwrap_or_else(|| default_evaluation_cap(&self.objective, self.algorithm.algorithm()))
    }

    /// The algorithm config with this plan's stopping rule and cap applied.
    /// A tighter cap already on the config is kept.
    pub fn effective_algorithm(&self) -> AlgorithmConfig {
        let mut algo = self.algorithm.clone();
        let cap = self.evaluation_cap();
        let budget = algo.budget_mut();
        budget.stopping = Some(StoppingRule { window: self.window, tolerance: self.tolerance });
        budget.max_evaluations = Some(budget.max_evaluations.map_or(cap, |c| c.min(cap)));
        algo
    }

    pub fn seed(&self, index: usize) -> u64 {
        self.base_seed.wrapping_add(index as u64)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct SummaryRow {
    pub algorithm: Algorithm,
    pub objective: String,
    pub dim: usize,
    pub runs: usize,
    pub successes: usize,
    pub success_rate: f64,
    pub mean_evaluations: Option<f64>,
    pub std_evaluations: Option<f64>,
}

#[derive(Debug, Clone, PartialEq)]
pub struct TrialOutcome {
    pub summary: SummaryRow,
    /// Ordered by seed index.
    pub records: Vec<RunRecord>,
}

/// Runs every trial of `plan`, in parallel across trials.
pub fn run_trials(plan: &TrialPlan) -> Result<TrialOutcome> {
    run_trials_with(plan, &BenchmarkCatalog::standard())
}

pub fn run_trials_with(plan: &TrialPlan, catalog: &BenchmarkCatalog) -> Result<TrialOutcome> {
    plan.validate()?;
    let objective = plan.objective(catalog)?;
    run_trials_on(plan, &objective)
}

/// As [`run_trials`] against an explicit objective; `plan.objective` and
/// `plan.dim` are ignored.
pub fn run_trials_on(plan: &TrialPlan, objective: &Objective) -> Result<TrialOutcome> {
    plan.validate()?;
    let algo = plan.effective_algorithm();
    let records =
        (0..plan.runs).into_par_iter().map(|k| algo.run(objective, plan.seed(k))).collect::<Result<Vec<_>>>()?;
    let summary = summarize(&records, algo.algorithm(), objective.name(), objective.dim());
    Ok(TrialOutcome { summary, records })
}

pub fn summarize(records: &[RunRecord], algorithm: Algorithm, objective: &str, dim: usize) -> SummaryRow {
    let counts: Vec<f64> = records.iter().filter(|r| r.success).map(|r| r.evaluations_used as f64).collect();
    let successes = counts.len();
    let (mean, std) = if counts.is_empty() {
        (None, None)
    } else {
        let k = counts.len() as f64;
        let mean = counts.iter().sum::<f64>() / k;
        let std = if counts.len() > 1 {
            (counts.iter().map(|c| (c - mean).powi(2)).sum::<f64>() / (k - 1.0)).sqrt()
        } else {
            0.0
        };
        (Some(mean), Some(std))
    };
    SummaryRow {
        algorithm,
        objective: objective.to_owned(),
        dim,
        runs: records.len(),
        successes,
        success_rate: if records.is_empty() { 0.0 } else { successes as f64 / records.len() as f64 },
        mean_evaluations: mean,
        std_evaluations: std,
    }
}

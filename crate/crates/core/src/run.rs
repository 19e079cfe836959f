//! Run bookkeeping shared by every algorithm: counted evaluation, budgets,
//! best-so-far traces and the final [`RunRecord`].

use std::fmt;
use std::str::FromStr;

use crate::bench::StoppingRule;
use crate::error::Error;
use crate::objective::Objective;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Algorithm {
    Fa,
    Pso,
    Ga,
}

impl Algorithm {
    pub const ALL: [Algorithm; 3] = [Algorithm::Fa, Algorithm::Pso, Algorithm::Ga];

    pub fn as_str(self) -> &'static str {
        match self {
            Algorithm::Fa => "FA",
            Algorithm::Pso => "PSO",
            Algorithm::Ga => "GA",
        }
    }
}

impl fmt::Display for Algorithm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for Algorithm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "fa" | "firefly" => Ok(Algorithm::Fa),
            "pso" => Ok(Algorithm::Pso),
            "ga" => Ok(Algorithm::Ga),
            other => Err(Error::InvalidConfig(format!("unknown algorithm `{other}`; expected one of fa, pso, ga"))),
        }
    }
}

/// Best-so-far value after `evaluations` objective calls.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TracePoint {
    pub evaluations: u64,
    pub best_value: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct RunRecord {
    pub algorithm: Algorithm,
    pub objective_name: String,
    pub seed: u64,
    pub evaluations_used: u64,
    pub best_value: f64,
    pub best_point: Vec<f64>,
    pub success: bool,
    /// One entry after initialization and one per completed generation.
    pub trace: Vec<TracePoint>,
}

impl RunRecord {
    /// Number of generations after initialization.
    pub fn generations(&self) -> usize {
        self.trace.len().saturating_sub(1)
    }
}

/// Counts objective calls and tracks the best point seen.
pub struct Evaluator<'a> {
    objective: &'a Objective,
    cap: Option<u64>,
    evaluations: u64,
    best_value: f64,
    best_point: Vec<f64>,
    trace: Vec<TracePoint>,
}

impl<'a> Evaluator<'a> {
    pub fn new(objective: &'a Objective, cap: Option<u64>) -> Self {
        Self { objective, cap, evaluations: 0, best_value: f64::INFINITY, best_point: Vec::new(), trace: Vec::new() }
    }

    pub fn objective(&self) -> &'a Objective {
        self.objective
    }

    /// Evaluates `x`, charging exactly one evaluation. Non-finite results
    /// come back as `+inf`.
    pub fn count_eval(&mut self, x: &[f64]) -> f64 {
        self.evaluations += 1;
        let raw = self.objective.eval(x);
        let value = if raw.is_finite() { raw } else { f64::INFINITY };
        if value < self.best_value || self.best_point.is_empty() {
            self.best_value = value;
            self.best_point.clear();
            self.best_point.extend_from_slice(x);
        }
        value
    }

    pub fn evaluations(&self) -> u64 {
        self.evaluations
    }

    pub fn best_value(&self) -> f64 {
        self.best_value
    }

    pub fn best_point(&self) -> &[f64] {
        &self.best_point
    }

    pub fn exhausted(&self) -> bool {
        self.cap.is_some_and(|cap| self.evaluations >= cap)
    }

    /// Evaluations left before the cap, `u64::MAX` when uncapped.
    pub fn remaining(&self) -> u64 {
        self.cap.map_or(u64::MAX, |cap| cap.saturating_sub(self.evaluations))
    }

    pub fn trace(&self) -> &[TracePoint] {
        &self.trace
    }

    /// Closes a generation by appending the current best to the trace.
    pub fn mark_generation(&mut self) {
        self.trace.push(TracePoint { evaluations: self.evaluations, best_value: self.best_value });
    }

    pub fn finish(self, algorithm: Algorithm, seed: u64) -> RunRecord {
        let success = self.objective.is_near_optimum(self.best_value).unwrap_or(false);
        RunRecord {
            algorithm,
            objective_name: self.objective.name().to_owned(),
            seed,
            evaluations_used: self.evaluations,
            best_value: self.best_value,
            best_point: self.best_point,
            success,
            trace: self.trace,
        }
    }
}

/// When a run ends: whichever of the limits trips first.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Budget {
    pub max_generations: Option<usize>,
    pub max_evaluations: Option<u64>,
    pub stopping: Option<StoppingRule>,
}

impl Default for Budget {
    fn default() -> Self {
        Self { max_generations: Some(1000), max_evaluations: Some(500_000), stopping: Some(StoppingRule::default()) }
    }
}

impl Budget {
    /// Exactly `generations` generations, no other limit.
    pub fn generations(generations: usize) -> Self {
        Self { max_generations: Some(generations), max_evaluations: None, stopping: None }
    }

    pub fn with_max_evaluations(mut self, cap: u64) -> Self {
        self.max_evaluations = Some(cap);
        self
    }

    pub fn with_stopping(mut self, rule: Option<StoppingRule>) -> Self {
        self.stopping = rule;
        self
    }

    pub fn validate(&self) -> Result<(), Error> {
        if self.max_generations.is_none() && self.max_evaluations.is_none() && self.stopping.is_none() {
            return Err(Error::InvalidConfig("run budget has no limit".into()));
        }
        if let Some(rule) = &self.stopping {
            rule.validate()?;
        }
        Ok(())
    }

    pub(crate) fn done(&self, generation: usize, evaluator: &Evaluator<'_>) -> bool {
        self.max_generations.is_some_and(|max| generation >= max)
            || evaluator.exhausted()
            || self.stopping.is_some_and(|rule| rule.should_stop(evaluator.trace()))
    }
}

/// Population state handed to observers after initialization (generation 0)
/// and after every generation.
#[derive(Debug, Clone, Copy)]
pub struct Snapshot<'s> {
    pub generation: usize,
    pub positions: &'s [Vec<f64>],
    pub values: &'s [f64],
}

pub type Observer<'o> = &'o mut dyn FnMut(&Snapshot<'_>);

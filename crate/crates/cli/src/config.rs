//! Flat `key = value` configuration.
//!
//! A config file holds one assignment per line; `#` starts a comment and
//! blank lines are ignored. Keys carry a section prefix (`fa.gamma = 0.5`).
//! Layers apply in order: built-in defaults, then the file, then `--set`
//! pairs and the dedicated flags.

use std::fs;
use std::path::Path;
use std::str::FromStr;

use firefly_core::bench::StoppingRule;
use firefly_core::{Algorithm, AlgorithmConfig, BenchmarkCatalog, Budget, FaConfig, GaConfig, PsoConfig, TrialPlan};

use crate::error::CliError;

/// Every accepted key, with a short description.
pub const KEYS: &[(&str, &str)] = &[
    ("run.algorithm", "fa, pso or ga (run and trace)"),
    ("run.objective", "catalog function name (run and trace)"),
    ("run.dim", "dimension, or `default` for the catalog's"),
    ("run.seed", "seed for run and trace"),
    ("run.stopping", "true to stop on stalled progress (run only)"),
    ("run.window", "stall window in generations"),
    ("run.tolerance", "stall tolerance on best-value improvement"),
    ("bench.algorithms", "comma list of algorithms"),
    ("bench.objectives", "comma list of name or name:dim"),
    ("bench.runs", "trials per cell"),
    ("bench.seed", "seed of the first trial"),
    ("bench.tolerance", "stall tolerance"),
    ("bench.window", "stall window in generations"),
    ("bench.success_tolerance", "success band around the known optimum"),
    ("bench.evaluation_cap", "evaluations per run, or `auto`"),
    ("trace.generations", "generations to record"),
    ("fa.n", "population size"),
    ("fa.alpha", "randomization weight"),
    ("fa.beta0", "attractiveness at zero distance"),
    ("fa.gamma", "light absorption coefficient"),
    ("fa.m", "distance exponent"),
    ("fa.attractiveness", "gaussian or rational"),
    ("fa.noise", "uniform or normal"),
    ("fa.scale_alpha_per_dim", "scale noise by the box extent"),
    ("fa.alpha_decay", "per-generation multiplier on alpha"),
    ("fa.max_generations", "generation limit, or `none`"),
    ("fa.max_evaluations", "evaluation limit, or `none`"),
    ("pso.n", "swarm size"),
    ("pso.alpha", "pull toward the global best"),
    ("pso.beta", "pull toward the personal best"),
    ("pso.theta", "inertia weight, or `none`"),
    ("pso.v_max", "speed cap as a fraction of the extent, or `none`"),
    ("pso.max_generations", "generation limit, or `none`"),
    ("pso.max_evaluations", "evaluation limit, or `none`"),
    ("ga.n", "population size"),
    ("ga.p_m", "per-gene mutation probability"),
    ("ga.p_c", "crossover probability"),
    ("ga.elitism", "carry the best individual over"),
    ("ga.mutation_scale", "mutation std as a fraction of the extent"),
    ("ga.max_generations", "generation limit, or `none`"),
    ("ga.max_evaluations", "evaluation limit, or `none`"),
];

#[derive(Debug, Clone, PartialEq)]
pub struct Settings {
    pub algorithm: Algorithm,
    pub objective: String,
    pub dim: Option<usize>,
    pub seed: u64,
    pub stopping: bool,
    pub window: usize,
    pub tolerance: f64,
    pub bench_algorithms: Vec<Algorithm>,
    pub bench_objectives: Vec<(String, Option<usize>)>,
    pub runs: usize,
    pub base_seed: u64,
    pub bench_tolerance: f64,
    pub bench_window: usize,
    pub success_tolerance: f64,
    pub evaluation_cap: Option<u64>,
    pub trace_generations: usize,
    pub fa: FaConfig,
    pub pso: PsoConfig,
    pub ga: GaConfig,
}

impl Default for Settings {
    fn default() -> Self {
        let plan = TrialPlan::new(AlgorithmConfig::default_for(Algorithm::Fa), "");
        let rule = StoppingRule::default();
        let catalog = BenchmarkCatalog::standard();
        Self {
            algorithm: Algorithm::Fa,
            objective: "michalewicz".into(),
            dim: None,
            seed: 0,
            stopping: true,
            window: rule.window,
            tolerance: rule.tolerance,
            bench_algorithms: Algorithm::ALL.to_vec(),
            bench_objectives: catalog.names().map(|n| (n.to_string(), None)).collect(),
            runs: plan.runs,
            base_seed: plan.base_seed,
            bench_tolerance: plan.tolerance,
            bench_window: plan.window,
            success_tolerance: plan.success_tolerance,
            evaluation_cap: None,
            trace_generations: 10,
            fa: FaConfig::default(),
            pso: PsoConfig::default(),
            ga: GaConfig::default(),
        }
    }
}

fn bad(key: &str, value: &str, why: impl std::fmt::Display) -> CliError {
    CliError::Config(format!("bad value `{value}` for `{key}`: {why}"))
}

fn parse<T: FromStr>(key: &str, value: &str) -> Result<T, CliError>
where
    T::Err: std::fmt::Display,
{
    value.parse().map_err(|e| bad(key, value, e))
}

fn parse_optional<T: FromStr>(key: &str, value: &str) -> Result<Option<T>, CliError>
where
    T::Err: std::fmt::Display,
{
    match value {
        "none" | "off" => Ok(None),
        v => parse(key, v).map(Some),
    }
}

fn set_budget(budget: &mut Budget, field: &str, key: &str, value: &str) -> Result<(), CliError> {
    match field {
        "max_generations" => budget.max_generations = parse_optional(key, value)?,
        _ => budget.max_evaluations = parse_optional(key, value)?,
    }
    Ok(())
}

impl Settings {
    /// Applies one assignment. Unknown keys fail with the list of valid keys.
    pub fn set(&mut self, key: &str, value: &str) -> Result<(), CliError> {
        let value = value.trim();
        match key {
            "run.algorithm" => self.algorithm = parse(key, value)?,
            "run.objective" => self.objective = value.to_string(),
            "run.dim" => self.dim = if value == "default" { None } else { Some(parse(key, value)?) },
            "run.seed" => self.seed = parse(key, value)?,
            "run.stopping" => self.stopping = parse(key, value)?,
            "run.window" => self.window = parse(key, value)?,
            "run.tolerance" => self.tolerance = parse(key, value)?,
            "bench.algorithms" => {
                self.bench_algorithms = split_list(value).map(|a| parse(key, a)).collect::<Result<_, _>>()?
            }
            "bench.objectives" => {
                self.bench_objectives = split_list(value).map(|o| parse_cell(key, o)).collect::<Result<_, _>>()?
            }
            "bench.runs" => self.runs = parse(key, value)?,
            "bench.seed" => self.base_seed = parse(key, value)?,
            "bench.tolerance" => self.bench_tolerance = parse(key, value)?,
            "bench.window" => self.bench_window = parse(key, value)?,
            "bench.success_tolerance" => self.success_tolerance = parse(key, value)?,
            "bench.evaluation_cap" => {
                self.evaluation_cap = if value == "auto" { None } else { Some(parse(key, value)?) }
            }
            "trace.generations" => self.trace_generations = parse(key, value)?,
            "fa.n" => self.fa.n = parse(key, value)?,
            "fa.alpha" => self.fa.alpha = parse(key, value)?,
            "fa.beta0" => self.fa.beta0 = parse(key, value)?,
            "fa.gamma" => self.fa.gamma = parse(key, value)?,
            "fa.m" => self.fa.m_exponent = parse(key, value)?,
            "fa.attractiveness" => self.fa.attractiveness = parse(key, value)?,
            "fa.noise" => self.fa.noise = parse(key, value)?,
            "fa.scale_alpha_per_dim" => self.fa.scale_alpha_per_dim = parse(key, value)?,
            "fa.alpha_decay" => self.fa.alpha_decay = parse(key, value)?,
            "fa.max_generations" | "fa.max_evaluations" => set_budget(&mut self.fa.budget, &key[3..], key, value)?,
            "pso.n" => self.pso.n = parse(key, value)?,
            "pso.alpha" => self.pso.alpha = parse(key, value)?,
            "pso.beta" => self.pso.beta = parse(key, value)?,
            "pso.theta" => self.pso.theta = parse_optional(key, value)?,
            "pso.v_max" => self.pso.v_max = parse_optional(key, value)?,
            "pso.max_generations" | "pso.max_evaluations" => set_budget(&mut self.pso.budget, &key[4..], key, value)?,
            "ga.n" => self.ga.n = parse(key, value)?,
            "ga.p_m" => self.ga.p_m = parse(key, value)?,
            "ga.p_c" => self.ga.p_c = parse(key, value)?,
            "ga.elitism" => self.ga.elitism = parse(key, value)?,
            "ga.mutation_scale" => self.ga.mutation_scale = parse(key, value)?,
            "ga.max_generations" | "ga.max_evaluations" => set_budget(&mut self.ga.budget, &key[3..], key, value)?,
            _ => return Err(unknown_key(key)),
        }
        Ok(())
    }

    /// Applies a `KEY=VALUE` pair as given on the command line.
    pub fn set_pair(&mut self, pair: &str) -> Result<(), CliError> {
        let (key, value) =
            pair.split_once('=').ok_or_else(|| CliError::Config(format!("expected KEY=VALUE, got `{pair}`")))?;
        self.set(key.trim(), value)
    }

    /// Applies every assignment in a config file's text.
    pub fn apply_text(&mut self, text: &str, origin: &str) -> Result<(), CliError> {
        for (n, raw) in text.lines().enumerate() {
            let line = raw.split('#').next().unwrap_or("").trim();
            if line.is_empty() {
                continue;
            }
            self.set_pair(line).map_err(|e| CliError::Config(format!("{origin}:{}: {e}", n + 1)))?;
        }
        Ok(())
    }

    pub fn apply_file(&mut self, path: &Path) -> Result<(), CliError> {
        let text = fs::read_to_string(path).map_err(|source| CliError::Io { path: path.to_path_buf(), source })?;
        self.apply_text(&text, &path.display().to_string())
    }

    /// Configuration of `algorithm` as set by the `fa.`, `pso.` or `ga.` keys.
    pub fn algorithm_config(&self, algorithm: Algorithm) -> AlgorithmConfig {
        match algorithm {
            Algorithm::Fa => AlgorithmConfig::Fa(self.fa.clone()),
            Algorithm::Pso => AlgorithmConfig::Pso(self.pso.clone()),
            Algorithm::Ga => AlgorithmConfig::Ga(self.ga.clone()),
        }
    }

    /// Configuration used by `run`: the algorithm's own limits, with the
    /// `run.` stall rule switched on or off.
    pub fn run_config(&self) -> AlgorithmConfig {
        let mut cfg = self.algorithm_config(self.algorithm);
        cfg.budget_mut().stopping =
            self.stopping.then_some(StoppingRule { window: self.window, tolerance: self.tolerance });
        cfg
    }

    /// Configuration used by `trace`: exactly `trace.generations` generations.
    pub fn trace_config(&self) -> AlgorithmConfig {
        let mut cfg = self.algorithm_config(self.algorithm);
        *cfg.budget_mut() = Budget::generations(self.trace_generations);
        cfg
    }

    /// One trial plan per (objective, algorithm) cell, objectives outermost.
    pub fn bench_plans(&self) -> Vec<TrialPlan> {
        let mut plans = Vec::new();
        for (objective, dim) in &self.bench_objectives {
            for &alg in &self.bench_algorithms {
                let mut plan = TrialPlan::new(self.algorithm_config(alg), objective.as_str());
                plan.dim = *dim;
                plan.runs = self.runs;
                plan.base_seed = self.base_seed;
                plan.tolerance = self.bench_tolerance;
                plan.window = self.bench_window;
                plan.success_tolerance = self.success_tolerance;
                plan.evaluation_cap = self.evaluation_cap;
                plans.push(plan);
            }
        }
        plans
    }
}

fn split_list(value: &str) -> impl Iterator<Item = &str> {
    value.split(',').map(str::trim).filter(|s| !s.is_empty())
}

fn parse_cell(key: &str, item: &str) -> Result<(String, Option<usize>), CliError> {
    match item.split_once(':') {
        Some((name, dim)) => Ok((name.trim().to_string(), Some(parse(key, dim.trim())?))),
        None => Ok((item.to_string(), None)),
    }
}

fn unknown_key(key: &str) -> CliError {
    let valid: Vec<&str> = KEYS.iter().map(|(k, _)| *k).collect();
    CliError::Config(format!("unknown key `{key}`; valid keys are: {}", valid.join(", ")))
}

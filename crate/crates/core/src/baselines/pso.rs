//! Standard particle swarm optimization.
//!
//! `v <- theta v + alpha e1 * (g - x) + beta e2 * (p - x)`, `x <- x + v`, with
//! `e1`, `e2` fresh uniform vectors and `theta = 1` unless inertia is set.
//! All particles see the global best from the start of the generation.

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::RandomSource;
use crate::run::{Algorithm, Budget, Evaluator, Observer, RunRecord, Snapshot};
use crate::space::SearchSpace;

#[derive(Debug, Clone, PartialEq)]
pub struct PsoConfig {
    pub n: usize,
    /// Pull toward the global best.
    pub alpha: f64,
    /// Pull toward the particle's own best.
    pub beta: f64,
    /// Constant inertia weight; `None` is the plain update.
    pub theta: Option<f64>,
    /// Speed cap per axis as a fraction of the axis extent.
    pub v_max: Option<f64>,
    pub budget: Budget,
}

impl Default for PsoConfig {
    fn default() -> Self {
        Self { n: 40, alpha: 2.0, beta: 2.0, theta: None, v_max: Some(0.5), budget: Budget::default() }
    }
}

impl PsoConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n < 2 {
            return bad(format!("pso.n must be at least 2, got {}", self.n));
        }
        if !(self.alpha > 0.0 && self.beta > 0.0) {
            return bad(format!("pso.alpha and pso.beta must be positive, got {} and {}", self.alpha, self.beta));
        }
        if let Some(theta) = self.theta {
            if !(theta > 0.0 && theta <= 1.0) {
                return bad(format!("pso.theta must lie in (0, 1], got {theta}"));
            }
        }
        if let Some(v) = self.v_max {
            if !(v > 0.0 && v.is_finite()) {
                return bad(format!("pso.v_max must be positive, got {v}"));
            }
        }
        self.budget.validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct PsoState {
    pub positions: Vec<Vec<f64>>,
    pub velocities: Vec<Vec<f64>>,
    /// Objective value at each current position.
    pub values: Vec<f64>,
    pub personal_best_points: Vec<Vec<f64>>,
    pub personal_best_values: Vec<f64>,
    pub global_best_point: Vec<f64>,
    pub global_best_value: f64,
    pub generation: usize,
}

impl PsoState {
    /// Particles at `positions` with zero velocity, one evaluation each.
    pub fn from_positions(positions: Vec<Vec<f64>>, evaluator: &mut Evaluator<'_>) -> Self {
        let values: Vec<f64> = positions.iter().map(|p| evaluator.count_eval(p)).collect();
        let dim = positions.first().map_or(0, Vec::len);
        let mut state = Self {
            velocities: vec![vec![0.0; dim]; positions.len()],
            personal_best_points: positions.clone(),
            personal_best_values: values.clone(),
            positions,
            values,
            global_best_point: Vec::new(),
            global_best_value: f64::INFINITY,
            generation: 0,
        };
        state.refresh_global_best();
        state
    }

    pub fn uniform<R: RandomSource + ?Sized>(n: usize, evaluator: &mut Evaluator<'_>, rng: &mut R) -> Self {
        let space = evaluator.objective().space();
        let positions = (0..n).map(|_| space.uniform_point(rng)).collect();
        Self::from_positions(positions, evaluator)
    }

    fn refresh_global_best(&mut self) {
        let mut best = 0;
        for (i, &v) in self.personal_best_values.iter().enumerate() {
            if v < self.personal_best_values[best] {
                best = i;
            }
        }
        if self.global_best_point.is_empty() || self.personal_best_values[best] < self.global_best_value {
            self.global_best_value = self.personal_best_values[best];
            self.global_best_point = self.personal_best_points[best].clone();
        }
    }
}

/// New velocity for particle `i`. Draws `e1` for every axis, then `e2`.
pub fn pso_velocity_update<R: RandomSource + ?Sized>(
    state: &PsoState,
    i: usize,
    cfg: &PsoConfig,
    space: &SearchSpace,
    rng: &mut R,
) -> Vec<f64> {
    let x = &state.positions[i];
    let dim = x.len();
    let e1: Vec<f64> = (0..dim).map(|_| rng.uniform()).collect();
    let e2: Vec<f64> = (0..dim).map(|_| rng.uniform()).collect();
    let theta = cfg.theta.unwrap_or(1.0);
    (0..dim)
        .map(|k| {
            let v = theta * state.velocities[i][k]
                + cfg.alpha * e1[k] * (state.global_best_point[k] - x[k])
                + cfg.beta * e2[k] * (state.personal_best_points[i][k] - x[k]);
            match cfg.v_max {
                Some(frac) => {
                    let cap = frac * space.extent(k);
                    v.clamp(-cap, cap)
                }
                None => v,
            }
        })
        .collect()
}

/// One generation: move and evaluate each particle in index order, then
/// refresh the global best. Particles beyond the evaluation cap stay put.
pub fn pso_step<R: RandomSource + ?Sized>(
    state: &mut PsoState,
    evaluator: &mut Evaluator<'_>,
    cfg: &PsoConfig,
    rng: &mut R,
) {
    let space = evaluator.objective().space();
    for i in 0..state.positions.len() {
        if evaluator.exhausted() {
            break;
        }
        let v = pso_velocity_update(state, i, cfg, space, rng);
        let mut x: Vec<f64> = state.positions[i].iter().zip(&v).map(|(x, v)| x + v).collect();
        space.clamp_in_place(&mut x);
        let f = evaluator.count_eval(&x);
        if f < state.personal_best_values[i] {
            state.personal_best_values[i] = f;
            state.personal_best_points[i].clone_from(&x);
        }
        state.velocities[i] = v;
        state.positions[i] = x;
        state.values[i] = f;
    }
    state.refresh_global_best();
    state.generation += 1;
}

pub fn pso_run<R: RandomSource + ?Sized>(
    objective: &Objective,
    cfg: &PsoConfig,
    rng: &mut R,
    seed: u64,
) -> Result<RunRecord> {
    pso_run_observed(objective, cfg, rng, seed, &mut |_| {})
}

pub fn pso_run_observed<R: RandomSource + ?Sized>(
    objective: &Objective,
    cfg: &PsoConfig,
    rng: &mut R,
    seed: u64,
    observer: Observer<'_>,
) -> Result<RunRecord> {
    cfg.validate()?;
    let mut evaluator = Evaluator::new(objective, cfg.budget.max_evaluations);
    let mut state = PsoState::uniform(cfg.n, &mut evaluator, rng);
    evaluator.mark_generation();
    observer(&Snapshot { generation: 0, positions: &state.positions, values: &state.values });
    while !cfg.budget.done(state.generation, &evaluator) {
        pso_step(&mut state, &mut evaluator, cfg, rng);
        evaluator.mark_generation();
        observer(&Snapshot { generation: state.generation, positions: &state.positions, values: &state.values });
    }
    Ok(evaluator.finish(Algorithm::Pso, seed))
}

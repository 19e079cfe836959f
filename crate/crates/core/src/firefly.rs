//! Firefly algorithm.
//!
//! Brightness is `I = -f`, so brighter means lower objective. The population
//! is kept ranked, brightest first, at every generation boundary. Each
//! generation sweeps `i = 0..n` and, for every earlier firefly `j < i` that is
//! brighter, moves `i` toward `j` and re-evaluates it on the spot; later
//! comparisons in the same sweep see the updated brightness. The firefly that
//! is brightest after the sweep has nobody to follow and takes a random walk
//! instead. Then the population is re-ranked.
//!
//! Ranking is what makes the `j < i` scan reach every brighter firefly. Left
//! unsorted, the population drifts into ascending brightness and stops moving.

use std::str::FromStr;

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::RandomSource;
use crate::run::{Algorithm, Budget, Evaluator, Observer, RunRecord, Snapshot};
use crate::space::SearchSpace;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AttractivenessForm {
    /// `beta0 * exp(-gamma * r^m)`
    Gaussian,
    /// `beta0 / (1 + gamma * r^2)`
    Rational,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum NoiseKind {
    /// `alpha * (u - 1/2)` with `u ~ U[0, 1)`
    UniformCentered,
    /// `alpha * z` with `z ~ N(0, 1)`
    Normal,
}

impl FromStr for AttractivenessForm {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "gaussian" => Ok(Self::Gaussian),
            "rational" => Ok(Self::Rational),
            other => Err(Error::InvalidConfig(format!(
                "unknown attractiveness form `{other}`; expected gaussian or rational"
            ))),
        }
    }
}

impl FromStr for NoiseKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "uniform" | "uniform_centered" => Ok(Self::UniformCentered),
            "normal" => Ok(Self::Normal),
            other => Err(Error::InvalidConfig(format!("unknown noise kind `{other}`; expected uniform or normal"))),
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct FaConfig {
    pub n: usize,
    /// Randomization weight.
    pub alpha: f64,
    /// Attractiveness at zero distance.
    pub beta0: f64,
    /// Light absorption coefficient. Zero gives constant attractiveness.
    pub gamma: f64,
    /// Distance exponent of the Gaussian form.
    pub m_exponent: f64,
    pub attractiveness: AttractivenessForm,
    pub noise: NoiseKind,
    /// Multiply the noise on axis `k` by the box extent `S_k`.
    pub scale_alpha_per_dim: bool,
    /// Per-generation multiplier on `alpha`; `1.0` keeps it constant.
    pub alpha_decay: f64,
    pub budget: Budget,
}

impl Default for FaConfig {
    fn default() -> Self {
        Self {
            n: 40,
            alpha: 0.2,
            beta0: 1.0,
            gamma: 1.0,
            m_exponent: 2.0,
            attractiveness: AttractivenessForm::Gaussian,
            noise: NoiseKind::UniformCentered,
            scale_alpha_per_dim: true,
            alpha_decay: 1.0,
            budget: Budget::default(),
        }
    }
}

impl FaConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n < 2 {
            return bad(format!("fa.n must be at least 2, got {}", self.n));
        }
        if !(0.0..=1.0).contains(&self.alpha) {
            return bad(format!("fa.alpha must lie in [0, 1], got {}", self.alpha));
        }
        if !(self.beta0 > 0.0 && self.beta0.is_finite()) {
            return bad(format!("fa.beta0 must be positive, got {}", self.beta0));
        }
        if self.gamma.is_nan() || self.gamma < 0.0 {
            return bad(format!("fa.gamma must be nonnegative, got {}", self.gamma));
        }
        if !(self.m_exponent >= 1.0 && self.m_exponent.is_finite()) {
            return bad(format!("fa.m must be at least 1, got {}", self.m_exponent));
        }
        if !(self.alpha_decay > 0.0 && self.alpha_decay <= 1.0) {
            return bad(format!("fa.alpha_decay must lie in (0, 1], got {}", self.alpha_decay));
        }
        self.budget.validate()
    }

    /// Sets `gamma = length^(-m)`, so attractiveness drops to `beta0 / e` at
    /// distance `length`.
    pub fn with_characteristic_length(mut self, length: f64) -> Self {
        self.gamma = length.powf(-self.m_exponent);
        self
    }

    /// Randomization weight in effect at `generation` (0-based).
    pub fn alpha_at(&self, generation: usize) -> f64 {
        if self.alpha_decay == 1.0 {
            self.alpha
        } else {
            self.alpha * self.alpha_decay.powi(generation.min(i32::MAX as usize) as i32)
        }
    }
}

/// Euclidean distance.
pub fn distance(xi: &[f64], xj: &[f64]) -> Result<f64> {
    if xi.len() != xj.len() {
        return Err(Error::DimensionMismatch { expected: xi.len(), actual: xj.len() });
    }
    Ok(squared_distance(xi, xj).sqrt())
}

fn squared_distance(xi: &[f64], xj: &[f64]) -> f64 {
    xi.iter().zip(xj).map(|(a, b)| (a - b) * (a - b)).sum()
}

/// Attractiveness of a firefly seen from distance `r`.
pub fn attractiveness(r: f64, cfg: &FaConfig) -> f64 {
    attractiveness_from_sq(r * r, r, cfg)
}

// r^2 is passed separately so the common m = 2 case avoids a sqrt round trip
fn attractiveness_from_sq(r_sq: f64, r: f64, cfg: &FaConfig) -> f64 {
    if cfg.gamma == 0.0 {
        return cfg.beta0;
    }
    match cfg.attractiveness {
        AttractivenessForm::Gaussian => {
            let r_m = if cfg.m_exponent == 2.0 { r_sq } else { r.powf(cfg.m_exponent) };
            cfg.beta0 * (-cfg.gamma * r_m).exp()
        }
        AttractivenessForm::Rational => cfg.beta0 / (1.0 + cfg.gamma * r_sq),
    }
}

/// Characteristic distance `gamma^(-1/m)` over which the Gaussian form falls
/// from `beta0` to `beta0 / e`.
pub fn characteristic_distance(cfg: &FaConfig) -> f64 {
    cfg.gamma.powf(-1.0 / cfg.m_exponent)
}

/// Root-mean-square distance between two independent uniform points of the
/// box, `sqrt(sum S_k^2 / 6)`. A natural characteristic length for `gamma`.
pub fn rms_pair_distance(space: &SearchSpace) -> f64 {
    (space.extents().map(|s| s * s).sum::<f64>() / 6.0).sqrt()
}

/// Moves `xi` toward the brighter `xj`:
/// `xi + beta(r) (xj - xi) + noise`, clamped into the box.
pub fn move_firefly<R: RandomSource + ?Sized>(
    xi: &[f64],
    xj: &[f64],
    cfg: &FaConfig,
    space: &SearchSpace,
    rng: &mut R,
) -> Vec<f64> {
    displace(xi, Some(xj), cfg.alpha, cfg, space, rng)
}

/// `xi + noise`, clamped into the box.
pub fn random_walk<R: RandomSource + ?Sized>(xi: &[f64], cfg: &FaConfig, space: &SearchSpace, rng: &mut R) -> Vec<f64> {
    displace(xi, None, cfg.alpha, cfg, space, rng)
}

fn displace<R: RandomSource + ?Sized>(
    xi: &[f64],
    toward: Option<&[f64]>,
    alpha: f64,
    cfg: &FaConfig,
    space: &SearchSpace,
    rng: &mut R,
) -> Vec<f64> {
    let mut out = xi.to_vec();
    if let Some(xj) = toward {
        let r_sq = squared_distance(xi, xj);
        let beta = attractiveness_from_sq(r_sq, r_sq.sqrt(), cfg);
        for (x, (a, b)) in out.iter_mut().zip(xi.iter().zip(xj)) {
            *x = a + beta * (b - a);
        }
    }
    // one draw per axis (two under normal noise), in axis order
    for (k, x) in out.iter_mut().enumerate() {
        let draw = match cfg.noise {
            NoiseKind::UniformCentered => rng.uniform() - 0.5,
            NoiseKind::Normal => rng.normal(),
        };
        let scale = if cfg.scale_alpha_per_dim { alpha * space.extent(k) } else { alpha };
        *x += scale * draw;
    }
    space.clamp_in_place(&mut out);
    out
}

/// Population between generations.
#[derive(Debug, Clone, PartialEq)]
pub struct FireflyState {
    pub positions: Vec<Vec<f64>>,
    /// `-f(position)` per firefly.
    pub intensities: Vec<f64>,
    pub best_point: Vec<f64>,
    pub best_value: f64,
    /// Completed generations.
    pub generation: usize,
}

impl FireflyState {
    /// Evaluates the given positions, one evaluation each, and ranks them.
    pub fn from_positions(positions: Vec<Vec<f64>>, evaluator: &mut Evaluator<'_>) -> Self {
        let intensities = positions.iter().map(|p| -evaluator.count_eval(p)).collect();
        let mut state = Self {
            positions,
            intensities,
            best_point: evaluator.best_point().to_vec(),
            best_value: evaluator.best_value(),
            generation: 0,
        };
        state.rank();
        state
    }

    /// Stable sort, brightest first.
    pub fn rank(&mut self) {
        let mut order: Vec<usize> = (0..self.positions.len()).collect();
        order.sort_by(|&a, &b| self.intensities[b].total_cmp(&self.intensities[a]));
        self.positions = order.iter().map(|&i| std::mem::take(&mut self.positions[i])).collect();
        self.intensities = order.iter().map(|&i| self.intensities[i]).collect();
    }

    pub fn uniform<R: RandomSource + ?Sized>(n: usize, evaluator: &mut Evaluator<'_>, rng: &mut R) -> Self {
        let space = evaluator.objective().space();
        let positions = (0..n).map(|_| space.uniform_point(rng)).collect();
        Self::from_positions(positions, evaluator)
    }

    /// Objective values, `-intensity`.
    pub fn values(&self) -> Vec<f64> {
        self.intensities.iter().map(|i| -i).collect()
    }

    /// Index of the brightest firefly; ties go to the lowest index.
    pub fn brightest(&self) -> usize {
        let mut best = 0;
        for (i, &v) in self.intensities.iter().enumerate() {
            if v > self.intensities[best] {
                best = i;
            }
        }
        best
    }
}

/// One generation. Stops early, leaving the rest of the sweep undone, if the
/// evaluator's cap is reached.
pub fn fa_step<R: RandomSource + ?Sized>(
    state: &mut FireflyState,
    evaluator: &mut Evaluator<'_>,
    cfg: &FaConfig,
    rng: &mut R,
) {
    let space = evaluator.objective().space();
    let alpha = cfg.alpha_at(state.generation);
    let n = state.positions.len();

    'sweep: for i in 0..n {
        for j in 0..i {
            if state.intensities[j] > state.intensities[i] {
                if evaluator.exhausted() {
                    break 'sweep;
                }
                let moved = displace(&state.positions[i], Some(&state.positions[j]), alpha, cfg, space, rng);
                state.intensities[i] = -evaluator.count_eval(&moved);
                state.positions[i] = moved;
            }
        }
    }

    if !evaluator.exhausted() {
        let b = state.brightest();
        let walked = displace(&state.positions[b], None, alpha, cfg, space, rng);
        state.intensities[b] = -evaluator.count_eval(&walked);
        state.positions[b] = walked;
    }

    state.rank();
    state.best_value = evaluator.best_value();
    state.best_point.clear();
    state.best_point.extend_from_slice(evaluator.best_point());
    state.generation += 1;
}

pub fn fa_run<R: RandomSource + ?Sized>(
    objective: &Objective,
    cfg: &FaConfig,
    rng: &mut R,
    seed: u64,
) -> Result<RunRecord> {
    fa_run_observed(objective, cfg, rng, seed, &mut |_| {})
}

/// As [`fa_run`], reporting the population after initialization and after
/// every generation.
pub fn fa_run_observed<R: RandomSource + ?Sized>(
    objective: &Objective,
    cfg: &FaConfig,
    rng: &mut R,
    seed: u64,
    observer: Observer<'_>,
) -> Result<RunRecord> {
    cfg.validate()?;
    let mut evaluator = Evaluator::new(objective, cfg.budget.max_evaluations);
    let mut state = FireflyState::uniform(cfg.n, &mut evaluator, rng);
    evaluator.mark_generation();
    notify(observer, &state);
    while !cfg.budget.done(state.generation, &evaluator) {
        fa_step(&mut state, &mut evaluator, cfg, rng);
        evaluator.mark_generation();
        notify(observer, &state);
    }
    Ok(evaluator.finish(Algorithm::Fa, seed))
}

fn notify(observer: Observer<'_>, state: &FireflyState) {
    let values = state.values();
    observer(&Snapshot { generation: state.generation, positions: &state.positions, values: &values });
}

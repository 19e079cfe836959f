use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::space::SearchSpace;

pub type EvalFn = dyn Fn(&[f64]) -> f64 + Send + Sync;

/// Default band on `|f - known_best_value|` for counting a run as a success.
pub const DEFAULT_SUCCESS_TOLERANCE: f64 = 1e-3;

/// A function to minimize over a box, with optional knowledge of its optimum.
///
/// Maximization problems are brought in through [`Objective::maximize`],
/// which negates at this boundary so every algorithm only ever minimizes.
#[derive(Clone)]
pub struct Objective {
    name: String,
    space: SearchSpace,
    eval: Arc<EvalFn>,
    known_best_value: Option<f64>,
    known_best_points: Vec<Vec<f64>>,
    success_tolerance: f64,
}

impl Objective {
    pub fn new<F>(name: impl Into<String>, space: SearchSpace, eval: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self {
            name: name.into(),
            space,
            eval: Arc::new(eval),
            known_best_value: None,
            known_best_points: Vec::new(),
            success_tolerance: DEFAULT_SUCCESS_TOLERANCE,
        }
    }

    /// Wraps a function to be maximized; the stored objective is `-f`.
    pub fn maximize<F>(name: impl Into<String>, space: SearchSpace, eval: F) -> Self
    where
        F: Fn(&[f64]) -> f64 + Send + Sync + 'static,
    {
        Self::new(name, space, move |x: &[f64]| -eval(x))
    }

    pub fn with_known_best_value(mut self, value: f64) -> Self {
        self.known_best_value = Some(value);
        self
    }

    /// Records optimum locations; each must lie inside the space.
    pub fn with_known_best_points(mut self, points: Vec<Vec<f64>>) -> Result<Self> {
        for p in &points {
            self.space.check_dim(p)?;
            if !self.space.contains(p) {
                return Err(Error::InvalidSpace(format!(
                    "known optimum {p:?} of `{}` lies outside the search space",
                    self.name
                )));
            }
        }
        self.known_best_points = points;
        Ok(self)
    }

    pub fn with_success_tolerance(mut self, tolerance: f64) -> Result<Self> {
        if !(tolerance > 0.0 && tolerance.is_finite()) {
            return Err(Error::InvalidConfig(format!("success tolerance must be positive, got {tolerance}")));
        }
        self.success_tolerance = tolerance;
        Ok(self)
    }

    pub fn name(&self) -> &str {
        &self.name
    }

    pub fn space(&self) -> &SearchSpace {
        &self.space
    }

    pub fn dim(&self) -> usize {
        self.space.dim()
    }

    pub fn known_best_value(&self) -> Option<f64> {
        self.known_best_value
    }

    pub fn known_best_points(&self) -> &[Vec<f64>] {
        &self.known_best_points
    }

    pub fn success_tolerance(&self) -> f64 {
        self.success_tolerance
    }

    /// Raw evaluation, uncounted. Algorithms go through
    /// [`Evaluator::count_eval`](crate::run::Evaluator::count_eval) instead.
    pub fn eval(&self, x: &[f64]) -> f64 {
        (self.eval)(x)
    }

    /// `Some(true)` if `value` is within the success band of the known optimum.
    pub fn is_near_optimum(&self, value: f64) -> Option<bool> {
        self.known_best_value.map(|best| (value - best).abs() <= self.success_tolerance)
    }
}

impl fmt::Debug for Objective {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Objective")
            .field("name", &self.name)
            .field("space", &self.space)
            .field("known_best_value", &self.known_best_value)
            .field("known_best_points", &self.known_best_points.len())
            .field("success_tolerance", &self.success_tolerance)
            .finish()
    }
}

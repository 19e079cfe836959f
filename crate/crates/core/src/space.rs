use crate::error::{Error, Result};
use crate::rng::RandomSource;

/// Axis-aligned box `[lower[k], upper[k]]` in `dim` dimensions.
#[derive(Debug, Clone, PartialEq)]
pub struct SearchSpace {
    lower: Vec<f64>,
    upper: Vec<f64>,
}

impl SearchSpace {
    pub fn new(lower: Vec<f64>, upper: Vec<f64>) -> Result<Self> {
        if lower.is_empty() {
            return Err(Error::InvalidSpace("dimension must be at least 1".into()));
        }
        if lower.len() != upper.len() {
            return Err(Error::DimensionMismatch { expected: lower.len(), actual: upper.len() });
        }
        for (k, (lo, hi)) in lower.iter().zip(&upper).enumerate() {
            if !(lo.is_finite() && hi.is_finite() && lo < hi) {
                return Err(Error::InvalidSpace(format!(
                    "bounds for dimension {k} must be finite with lower < upper, got [{lo}, {hi}]"
                )));
            }
        }
        Ok(Self { lower, upper })
    }

    /// The same interval `[lower, upper]` on every axis.
    pub fn cube(dim: usize, lower: f64, upper: f64) -> Result<Self> {
        Self::new(vec![lower; dim], vec![upper; dim])
    }

    pub fn dim(&self) -> usize {
        self.lower.len()
    }

    pub fn lower(&self) -> &[f64] {
        &self.lower
    }

    pub fn upper(&self) -> &[f64] {
        &self.upper
    }

    /// Scale of axis `k`, `upper[k] - lower[k]`.
    pub fn extent(&self, k: usize) -> f64 {
        self.upper[k] - self.lower[k]
    }

    pub fn extents(&self) -> impl Iterator<Item = f64> + '_ {
        self.lower.iter().zip(&self.upper).map(|(lo, hi)| hi - lo)
    }

    pub fn contains(&self, point: &[f64]) -> bool {
        point.len() == self.dim()
            && point.iter().zip(self.lower.iter().zip(&self.upper)).all(|(x, (lo, hi))| (*lo..=*hi).contains(x))
    }

    /// Draws each coordinate uniformly from `[lower[k], upper[k])`.
    pub fn uniform_point<R: RandomSource + ?Sized>(&self, rng: &mut R) -> Vec<f64> {
        self.lower
            .iter()
            .zip(&self.upper)
            .map(|(lo, hi)| {
                let x = lo + (hi - lo) * rng.uniform();
                // lo + (hi - lo) * u can round up to hi for u close to 1
                if x < *hi {
                    x
                } else {
                    *lo
                }
            })
            .collect()
    }

    /// Projects `point` coordinate-wise onto the box.
    pub fn clamp(&self, point: &[f64]) -> Result<Vec<f64>> {
        self.check_dim(point)?;
        let mut out = point.to_vec();
        self.clamp_in_place(&mut out);
        Ok(out)
    }

    pub(crate) fn clamp_in_place(&self, point: &mut [f64]) {
        for (x, (lo, hi)) in point.iter_mut().zip(self.lower.iter().zip(&self.upper)) {
            // NaN coordinates collapse onto the lower bound
            *x = if x.is_nan() { *lo } else { x.clamp(*lo, *hi) };
        }
    }

    pub fn check_dim(&self, point: &[f64]) -> Result<()> {
        if point.len() == self.dim() {
            Ok(())
        } else {
            Err(Error::DimensionMismatch { expected: self.dim(), actual: point.len() })
        }
    }
}

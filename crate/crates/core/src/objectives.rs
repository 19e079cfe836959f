//! Benchmark functions and their catalog.
//!
//! Forms and domains follow the usual literature definitions:
//!
//! | name        | f(x)                                                             | domain             | minimum            |
//! |-------------|------------------------------------------------------------------|--------------------|--------------------|
//! | michalewicz | `-sum sin(x_i) sin(i x_i^2 / pi)^(2m)`, m = 10                   | `[0, pi]^d`        | per-axis, computed |
//! | yang        | `[exp(-sum (x_i/a)^(2m)) - 2 exp(-sum x_i^2)] prod cos^2 x_i`    | `[-20, 20]^d`      | -1 at 0            |
//! | rosenbrock  | `sum 100 (x_{i+1} - x_i^2)^2 + (1 - x_i)^2`                      | `[-5, 5]^d`        | 0 at 1             |
//! | dejong      | `sum x_i^2`                                                      | `[-5.12, 5.12]^d`  | 0 at 0             |
//! | schwefel    | `418.9829 d - sum x_i sin(sqrt|x_i|)`                            | `[-500, 500]^d`    | ~1.27e-5 d at 420.9687 |
//! | ackley      | `-20 exp(-0.2 sqrt(mean x_i^2)) - exp(mean cos 2 pi x_i) + 20 + e` | `[-32.768, 32.768]^d` | 0 at 0       |
//! | rastrigin   | `10 d + sum x_i^2 - 10 cos 2 pi x_i`                             | `[-5.12, 5.12]^d`  | 0 at 0             |
//! | easom       | `-cos x_1 cos x_2 exp(-(x_1 - pi)^2 - (x_2 - pi)^2)`             | `[-100, 100]^2`    | -1 at (pi, pi)     |
//! | griewank    | `1 + sum x_i^2 / 4000 - prod cos(x_i / sqrt i)`                  | `[-600, 600]^d`    | 0 at 0             |
//! | shubert     | `prod_k sum_{i=1..5} i cos((i + 1) x_k + i)`                     | `[-10, 10]^2`      | -186.7309, 18 points |
//!
//! Easom and Shubert are two-dimensional by definition. Schwefel keeps the
//! customary constant 418.9829, so its minimum is a small positive number
//! rather than zero; the catalog stores the exact value at the optimum.

use std::f64::consts::{E, PI};

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::space::SearchSpace;

pub const MICHALEWICZ_M: u32 = 10;
pub const YANG_A: f64 = 15.0;
pub const YANG_M: u32 = 5;

const SCHWEFEL_CONSTANT: f64 = 418.9829;
/// Maximizer of `x sin(sqrt|x|)` on `[-500, 500]`.
pub const SCHWEFEL_ARGMIN: f64 = 420.968_746_359_982;

/// One-dimensional Shubert factor extrema on `[-10, 10]`.
const SHUBERT_FACTOR_ARGMAX: [f64; 3] = [-7.083_506_407_651_56, -0.800_321_100_471_973, 5.482_864_206_707_613];
const SHUBERT_FACTOR_ARGMIN: [f64; 3] = [-7.708_313_735_499_347, -1.425_128_428_319_761, 4.858_056_878_859_826];

pub fn michalewicz(x: &[f64], m: u32) -> f64 {
    -x.iter().enumerate().map(|(i, &xi)| michalewicz_term(i + 1, xi, m)).sum::<f64>()
}

/// `sin(x) sin(i x^2 / pi)^(2m)` for 1-based coordinate index `i`.
fn michalewicz_term(i: usize, x: f64, m: u32) -> f64 {
    x.sin() * (i as f64 * x * x / PI).sin().powi(2 * m as i32)
}

pub fn yang(x: &[f64], a: f64, m: u32) -> f64 {
    let envelope = (-x.iter().map(|xi| (xi / a).powi(2 * m as i32)).sum::<f64>()).exp();
    let well = 2.0 * (-x.iter().map(|xi| xi * xi).sum::<f64>()).exp();
    let waves: f64 = x.iter().map(|xi| xi.cos().powi(2)).product();
    (envelope - well) * waves
}

pub fn rosenbrock(x: &[f64]) -> f64 {
    x.windows(2).map(|w| 100.0 * (w[1] - w[0] * w[0]).powi(2) + (1.0 - w[0]).powi(2)).sum()
}

pub fn dejong(x: &[f64]) -> f64 {
    x.iter().map(|xi| xi * xi).sum()
}

pub fn schwefel(x: &[f64]) -> f64 {
    SCHWEFEL_CONSTANT * x.len() as f64 - x.iter().map(|xi| xi * xi.abs().sqrt().sin()).sum::<f64>()
}

pub fn ackley(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let radial = (-0.2 * (x.iter().map(|xi| xi * xi).sum::<f64>() / d).sqrt()).exp();
    let waves = (x.iter().map(|xi| (2.0 * PI * xi).cos()).sum::<f64>() / d).exp();
    // grouped so both brackets vanish exactly at the origin
    20.0 * (1.0 - radial) + (E - waves)
}

pub fn rastrigin(x: &[f64]) -> f64 {
    10.0 * x.len() as f64 + x.iter().map(|xi| xi * xi - 10.0 * (2.0 * PI * xi).cos()).sum::<f64>()
}

pub fn easom(x: &[f64]) -> f64 {
    let (a, b) = (x[0], x[1]);
    -a.cos() * b.cos() * (-(a - PI).powi(2) - (b - PI).powi(2)).exp()
}

pub fn griewank(x: &[f64]) -> f64 {
    let sum: f64 = x.iter().map(|xi| xi * xi).sum::<f64>() / 4000.0;
    let prod: f64 = x.iter().enumerate().map(|(i, xi)| (xi / ((i + 1) as f64).sqrt()).cos()).product();
    1.0 + sum - prod
}

pub fn shubert(x: &[f64]) -> f64 {
    x.iter().map(|&xk| shubert_factor(xk)).product()
}

fn shubert_factor(x: f64) -> f64 {
    (1..=5).map(|i| i as f64 * ((i + 1) as f64 * x + i as f64).cos()).sum()
}

/// Evaluates one of the named functions (default parameters) at `x`.
pub fn standard_suite(name: &str, x: &[f64]) -> Result<f64> {
    let catalog = BenchmarkCatalog::standard();
    let entry = catalog.entry(name)?;
    if let Some(fixed) = entry.fixed_dim {
        if x.len() != fixed {
            return Err(Error::DimensionMismatch { expected: fixed, actual: x.len() });
        }
    }
    if x.is_empty() {
        return Err(Error::DimensionMismatch { expected: 1, actual: 0 });
    }
    Ok((entry.eval)(x))
}

/// Static description of one catalog function.
#[derive(Debug, Clone, Copy)]
pub struct CatalogEntry {
    pub name: &'static str,
    /// Every axis shares the same interval.
    pub lower: f64,
    pub upper: f64,
    pub default_dim: usize,
    pub fixed_dim: Option<usize>,
    pub eval: fn(&[f64]) -> f64,
    optimum: fn(usize) -> (f64, Vec<Vec<f64>>),
}

impl CatalogEntry {
    pub fn space(&self, dim: usize) -> Result<SearchSpace> {
        SearchSpace::cube(dim, self.lower, self.upper)
    }

    /// Known minimum value and the points attaining it, in `dim` dimensions.
    pub fn optimum(&self, dim: usize) -> (f64, Vec<Vec<f64>>) {
        (self.optimum)(dim)
    }
}

#[derive(Debug, Clone)]
pub struct BenchmarkCatalog {
    entries: Vec<CatalogEntry>,
}

impl Default for BenchmarkCatalog {
    fn default() -> Self {
        Self::standard()
    }
}

impl BenchmarkCatalog {
    pub fn standard() -> Self {
        let entries = vec![
            CatalogEntry {
                name: "michalewicz",
                lower: 0.0,
                upper: PI,
                default_dim: 16,
                fixed_dim: None,
                eval: |x| michalewicz(x, MICHALEWICZ_M),
                optimum: michalewicz_optimum,
            },
            CatalogEntry {
                name: "yang",
                lower: -20.0,
                upper: 20.0,
                default_dim: 16,
                fixed_dim: None,
                eval: |x| yang(x, YANG_A, YANG_M),
                optimum: |d| (-1.0, vec![vec![0.0; d]]),
            },
            CatalogEntry {
                name: "rosenbrock",
                lower: -5.0,
                upper: 5.0,
                default_dim: 16,
                fixed_dim: None,
                eval: rosenbrock,
                optimum: |d| (0.0, vec![vec![1.0; d]]),
            },
            CatalogEntry {
                name: "dejong",
                lower: -5.12,
                upper: 5.12,
                default_dim: 256,
                fixed_dim: None,
                eval: dejong,
                optimum: |d| (0.0, vec![vec![0.0; d]]),
            },
            CatalogEntry {
                name: "schwefel",
                lower: -500.0,
                upper: 500.0,
                default_dim: 128,
                fixed_dim: None,
                eval: schwefel,
                optimum: |d| {
                    let point = vec![SCHWEFEL_ARGMIN; d];
                    (schwefel(&point), vec![point])
                },
            },
            CatalogEntry {
                name: "ackley",
                lower: -32.768,
                upper: 32.768,
                default_dim: 128,
                fixed_dim: None,
                eval: ackley,
                optimum: |d| (0.0, vec![vec![0.0; d]]),
            },
            CatalogEntry {
                name: "rastrigin",
                lower: -5.12,
                upper: 5.12,
                default_dim: 16,
                fixed_dim: None,
                eval: rastrigin,
                optimum: |d| (0.0, vec![vec![0.0; d]]),
            },
            CatalogEntry {
                name: "easom",
                lower: -100.0,
                upper: 100.0,
                default_dim: 2,
                fixed_dim: Some(2),
                eval: easom,
                optimum: |_| (-1.0, vec![vec![PI, PI]]),
            },
            CatalogEntry {
                name: "griewank",
                lower: -600.0,
                upper: 600.0,
                default_dim: 16,
                fixed_dim: None,
                eval: griewank,
                optimum: |d| (0.0, vec![vec![0.0; d]]),
            },
            CatalogEntry {
                name: "shubert",
                lower: -10.0,
                upper: 10.0,
                default_dim: 2,
                fixed_dim: Some(2),
                eval: shubert,
                optimum: |_| shubert_optimum(),
            },
        ];
        Self { entries }
    }

    pub fn names(&self) -> impl Iterator<Item = &'static str> + '_ {
        self.entries.iter().map(|e| e.name)
    }

    pub fn entries(&self) -> &[CatalogEntry] {
        &self.entries
    }

    pub fn entry(&self, name: &str) -> Result<&CatalogEntry> {
        let key = name.trim().to_ascii_lowercase();
        self.entries.iter().find(|e| e.name == key).ok_or_else(|| Error::UnknownObjective {
            name: name.to_owned(),
            available: self.names().collect::<Vec<_>>().join(", "),
        })
    }

    pub fn default_dim(&self, name: &str) -> Result<usize> {
        self.entry(name).map(|e| e.default_dim)
    }

    /// Builds the objective `name` in `dim` dimensions (its default when `None`).
    pub fn objective(&self, name: &str, dim: Option<usize>) -> Result<Objective> {
        let entry = *self.entry(name)?;
        let dim = dim.unwrap_or(entry.default_dim);
        if let Some(fixed) = entry.fixed_dim {
            if dim != fixed {
                return Err(Error::InvalidConfig(format!(
                    "{} is defined only in {fixed} dimensions, got {dim}",
                    entry.name
                )));
            }
        }
        let space = entry.space(dim)?;
        let (best_value, best_points) = entry.optimum(dim);
        Objective::new(entry.name, space, entry.eval)
            .with_known_best_value(best_value)
            .with_known_best_points(best_points)
    }
}

fn michalewicz_optimum(dim: usize) -> (f64, Vec<Vec<f64>>) {
    let point: Vec<f64> = (1..=dim).map(|i| michalewicz_axis_argmax(i, MICHALEWICZ_M)).collect();
    (michalewicz(&point, MICHALEWICZ_M), vec![point])
}

/// The function is separable, so each axis is maximized on its own: a grid
/// with at least 50 samples per oscillation of `sin(i x^2 / pi)`, then golden
/// section inside the winning grid cell pair.
fn michalewicz_axis_argmax(i: usize, m: u32) -> f64 {
    let term = |x: f64| michalewicz_term(i, x, m);
    let samples = (100 * i).max(2000);
    let step = PI / samples as f64;
    let best = (0..=samples).map(|k| k as f64 * step).max_by(|a, b| term(*a).total_cmp(&term(*b))).unwrap_or(0.0);
    let (mut lo, mut hi) = ((best - step).max(0.0), (best + step).min(PI));
    let ratio = (5f64.sqrt() - 1.0) / 2.0;
    let mut c = hi - ratio * (hi - lo);
    let mut d = lo + ratio * (hi - lo);
    while hi - lo > 1e-13 {
        if term(c) > term(d) {
            hi = d;
        } else {
            lo = c;
        }
        c = hi - ratio * (hi - lo);
        d = lo + ratio * (hi - lo);
    }
    0.5 * (lo + hi)
}

fn shubert_optimum() -> (f64, Vec<Vec<f64>>) {
    let mut points = Vec::with_capacity(18);
    for &hi in &SHUBERT_FACTOR_ARGMAX {
        for &lo in &SHUBERT_FACTOR_ARGMIN {
            points.push(vec![hi, lo]);
            points.push(vec![lo, hi]);
        }
    }
    let value = shubert(&points[0]);
    (value, points)
}

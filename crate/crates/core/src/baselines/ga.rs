//! Real-coded generational GA.
//!
//! Binary tournament selection, whole-arithmetic crossover with probability
//! `p_c` (`c1 = l a + (1 - l) b`, `c2 = (1 - l) a + l b`, `l ~ U[0, 1)`),
//! per-gene Gaussian mutation with probability `p_m` and standard deviation
//! `mutation_scale * S_k`, then clamping. Offspring replace the parents
//! outright unless elitism is on.

use crate::error::{Error, Result};
use crate::objective::Objective;
use crate::rng::RandomSource;
use crate::run::{Algorithm, Budget, Evaluator, Observer, RunRecord, Snapshot};

#[derive(Debug, Clone, PartialEq)]
pub struct GaConfig {
    pub n: usize,
    pub p_m: f64,
    pub p_c: f64,
    pub elitism: bool,
    /// Mutation standard deviation as a fraction of the axis extent.
    pub mutation_scale: f64,
    pub budget: Budget,
}

impl Default for GaConfig {
    fn default() -> Self {
        Self { n: 40, p_m: 0.05, p_c: 0.95, elitism: false, mutation_scale: 0.1, budget: Budget::default() }
    }
}

impl GaConfig {
    pub fn validate(&self) -> Result<()> {
        let bad = |msg: String| Err(Error::InvalidConfig(msg));
        if self.n < 2 {
            return bad(format!("ga.n must be at least 2, got {}", self.n));
        }
        if !(0.0..=1.0).contains(&self.p_m) || !(0.0..=1.0).contains(&self.p_c) {
            return bad(format!("ga.p_m and ga.p_c must lie in [0, 1], got {} and {}", self.p_m, self.p_c));
        }
        if !(self.mutation_scale >= 0.0 && self.mutation_scale.is_finite()) {
            return bad(format!("ga.mutation_scale must be nonnegative, got {}", self.mutation_scale));
        }
        self.budget.validate()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GaPopulation {
    pub individuals: Vec<Vec<f64>>,
    pub values: Vec<f64>,
    pub generation: usize,
}

impl GaPopulation {
    pub fn from_individuals(individuals: Vec<Vec<f64>>, evaluator: &mut Evaluator<'_>) -> Self {
        let values = individuals.iter().map(|p| evaluator.count_eval(p)).collect();
        Self { individuals, values, generation: 0 }
    }

    pub fn uniform<R: RandomSource + ?Sized>(n: usize, evaluator: &mut Evaluator<'_>, rng: &mut R) -> Self {
        let space = evaluator.objective().space();
        let individuals = (0..n).map(|_| space.uniform_point(rng)).collect();
        Self::from_individuals(individuals, evaluator)
    }

    fn best_index(&self) -> usize {
        let mut best = 0;
        for (i, &v) in self.values.iter().enumerate() {
            if v < self.values[best] {
                best = i;
            }
        }
        best
    }

    fn tournament<R: RandomSource + ?Sized>(&self, rng: &mut R) -> usize {
        let a = rng.index(self.values.len());
        let b = rng.index(self.values.len());
        if self.values[b] < self.values[a] {
            b
        } else {
            a
        }
    }
}

/// Breeds and evaluates the next generation. If the cap is hit part-way,
/// the unevaluated slots keep their parents.
pub fn ga_step<R: RandomSource + ?Sized>(
    population: &mut GaPopulation,
    evaluator: &mut Evaluator<'_>,
    cfg: &GaConfig,
    rng: &mut R,
) {
    let space = evaluator.objective().space();
    let n = population.individuals.len();
    let mut offspring: Vec<Vec<f64>> = Vec::with_capacity(n + 1);
    while offspring.len() < n {
        let a = &population.individuals[population.tournament(rng)];
        let b = &population.individuals[population.tournament(rng)];
        let (mut c1, mut c2) = if rng.uniform() < cfg.p_c {
            let l = rng.uniform();
            let blend =
                |p: &[f64], q: &[f64]| -> Vec<f64> { p.iter().zip(q).map(|(x, y)| l * x + (1.0 - l) * y).collect() };
            (blend(a, b), blend(b, a))
        } else {
            (a.clone(), b.clone())
        };
        for child in [&mut c1, &mut c2] {
            for (k, gene) in child.iter_mut().enumerate() {
                if rng.uniform() < cfg.p_m {
                    *gene += cfg.mutation_scale * space.extent(k) * rng.normal();
                }
            }
            space.clamp_in_place(child);
        }
        offspring.push(c1);
        offspring.push(c2);
    }
    offspring.truncate(n);

    let elite = cfg.elitism.then(|| {
        let b = population.best_index();
        (population.individuals[b].clone(), population.values[b])
    });

    for (slot, child) in offspring.into_iter().enumerate() {
        if evaluator.exhausted() {
            break;
        }
        population.values[slot] = evaluator.count_eval(&child);
        population.individuals[slot] = child;
    }

    if let Some((point, value)) = elite {
        let best = population.values[population.best_index()];
        if value < best {
            let mut worst = 0;
            for (i, &v) in population.values.iter().enumerate() {
                if v > population.values[worst] {
                    worst = i;
                }
            }
            population.individuals[worst] = point;
            population.values[worst] = value;
        }
    }
    population.generation += 1;
}

pub fn ga_run<R: RandomSource + ?Sized>(
    objective: &Objective,
    cfg: &GaConfig,
    rng: &mut R,
    seed: u64,
) -> Result<RunRecord> {
    ga_run_observed(objective, cfg, rng, seed, &mut |_| {})
}

pub fn ga_run_observed<R: RandomSource + ?Sized>(
    objective: &Objective,
    cfg: &GaConfig,
    rng: &mut R,
    seed: u64,
    observer: Observer<'_>,
) -> Result<RunRecord> {
    cfg.validate()?;
    let mut evaluator = Evaluator::new(objective, cfg.budget.max_evaluations);
    let mut population = GaPopulation::uniform(cfg.n, &mut evaluator, rng);
    evaluator.mark_generation();
    observer(&Snapshot { generation: 0, positions: &population.individuals, values: &population.values });
    while !cfg.budget.done(population.generation, &evaluator) {
        ga_step(&mut population, &mut evaluator, cfg, rng);
        evaluator.mark_generation();
        observer(&Snapshot {
            generation: population.generation,
            positions: &population.individuals,
            values: &population.values,
        });
    }
    Ok(evaluator.finish(Algorithm::Ga, seed))
}

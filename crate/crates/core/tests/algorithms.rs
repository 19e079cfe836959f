use std::sync::atomic::{AtomicU64, Ordering};
use std::sync::Arc;

use firefly_core::baselines::{ga_run, ga_run_observed, pso_run, pso_run_observed, pso_step, PsoState};
use firefly_core::firefly::{
    attractiveness, fa_run, fa_run_observed, fa_step, move_firefly, random_walk, AttractivenessForm, FireflyState,
};
use firefly_core::run::{Evaluator, Snapshot};
use firefly_core::{
    AlgorithmConfig, BenchmarkCatalog, Budget, FaConfig, FixedDraws, GaConfig, Objective, PsoConfig, SearchSpace,
    SeededRng,
};
use proptest::prelude::*;

fn sphere(dim: usize) -> Objective {
    Objective::new("sphere", SearchSpace::cube(dim, -5.0, 5.0).unwrap(), |x: &[f64]| x.iter().map(|v| v * v).sum())
        .with_known_best_value(0.0)
}

#[test]
fn fa_step_hand_trace_three_fireflies() {
    let obj = sphere(1);
    let cfg = FaConfig { n: 3, alpha: 0.0, ..FaConfig::default() };
    let mut ev = Evaluator::new(&obj, None);
    let mut state = FireflyState::from_positions(vec![vec![2.0], vec![0.5], vec![-1.5]], &mut ev);
    assert_eq!(state.positions, vec![vec![0.5], vec![-1.5], vec![2.0]]);

    let mut draws = FixedDraws::constant(0.5, 4);
    fa_step(&mut state, &mut ev, &cfg, &mut draws);

    // -1.5 moves toward 0.5 (r = 2); 2.0 moves toward 0.5 (r = 1.5), then
    // toward the moved -1.5, which is now brighter than it
    let x1 = -1.5 + (-4.0f64).exp() * (0.5 - -1.5);
    let x2a = 2.0 + (-2.25f64).exp() * (0.5 - 2.0);
    let r2 = (x2a - x1) * (x2a - x1);
    let x2 = x2a + (-r2).exp() * (x1 - x2a);
    assert!((x1 - -1.463_368_722_2).abs() < 1e-9);
    assert!((x2 - 1.841_841_648_7).abs() < 1e-9);

    assert_eq!(state.positions, vec![vec![0.5], vec![x1], vec![x2]]);
    assert_eq!(state.values(), vec![0.25, x1 * x1, x2 * x2]);
    assert_eq!(draws.remaining(), 0);
    assert_eq!(ev.evaluations(), 3 + 3 + 1);
    assert_eq!(state.best_value, 0.25);
    assert_eq!(state.generation, 1);
}

#[test]
fn pso_step_hand_trace_two_particles() {
    let obj = sphere(1);
    let cfg = PsoConfig { n: 2, v_max: Some(0.1), ..PsoConfig::default() };
    let mut ev = Evaluator::new(&obj, None);
    let mut state = PsoState::from_positions(vec![vec![1.0], vec![-0.5]], &mut ev);
    assert_eq!(state.global_best_point, vec![-0.5]);
    let mut draws = FixedDraws::constant(0.5, 8);

    // particle 0: v = 2(0.5)(-0.5 - 1) + 2(0.5)(1 - 1) = -1.5, capped at -1
    // particle 1 sits on both bests: v = 0
    pso_step(&mut state, &mut ev, &cfg, &mut draws);
    assert_eq!(state.velocities, vec![vec![-1.0], vec![0.0]]);
    assert_eq!(state.positions, vec![vec![0.0], vec![-0.5]]);
    assert_eq!(state.personal_best_values, vec![0.0, 0.25]);
    assert_eq!(state.global_best_point, vec![0.0]);
    assert_eq!(state.global_best_value, 0.0);

    // particle 0 keeps its velocity (g* = p0 = x0); particle 1:
    // v = 2(0.5)(0 - -0.5) + 2(0.5)(-0.5 - -0.5) = 0.5
    pso_step(&mut state, &mut ev, &cfg, &mut draws);
    assert_eq!(state.velocities, vec![vec![-1.0], vec![0.5]]);
    assert_eq!(state.positions, vec![vec![-1.0], vec![0.0]]);
    assert_eq!(state.values, vec![1.0, 0.0]);
    assert_eq!(state.personal_best_points, vec![vec![0.0], vec![0.0]]);
    assert_eq!(state.global_best_value, 0.0);
    assert_eq!(draws.remaining(), 0);
    assert_eq!(ev.evaluations(), 6);
}

#[test]
fn exponential_and_rational_forms_agree_to_second_order() {
    for gamma in [1e-3, 0.1, 0.5, 1.0, 2.0, 10.0] {
        let gauss = FaConfig { gamma, ..FaConfig::default() };
        let rational = FaConfig { gamma, attractiveness: AttractivenessForm::Rational, ..FaConfig::default() };
        for k in 0..=200 {
            let t = k as f64 / 200.0; // gamma r^2
            let r = (t / gamma).sqrt();
            let gap = (attractiveness(r, &gauss) - attractiveness(r, &rational)).abs();
            let bound = gamma * gamma * r.powi(4);
            assert!(gap <= bound + 1e-15, "gamma {gamma} r {r}: {gap} > {bound}");
        }
    }
}

#[test]
fn huge_gamma_move_is_pure_noise() {
    let space = SearchSpace::cube(3, -5.0, 5.0).unwrap();
    let cfg = FaConfig { gamma: 1e12, ..FaConfig::default() };
    let mut rng = SeededRng::new(3);
    for _ in 0..200 {
        let xi = space.uniform_point(&mut rng);
        let xj = space.uniform_point(&mut rng);
        let r = xi.iter().zip(&xj).map(|(a, b)| (a - b) * (a - b)).sum::<f64>().sqrt();
        assert!(attractiveness(r, &cfg) < 1e-300);
        let moved = move_firefly(&xi, &xj, &cfg, &space, &mut SeededRng::new(99));
        let walked = random_walk(&xi, &cfg, &space, &mut SeededRng::new(99));
        assert_eq!(moved, walked);
    }
}

#[test]
fn zero_gamma_gives_constant_attractiveness() {
    let cfg = FaConfig { gamma: 0.0, beta0: 0.7, ..FaConfig::default() };
    let rational = FaConfig { attractiveness: AttractivenessForm::Rational, ..cfg.clone() };
    for r in [0.0, 1e-9, 0.5, 1.0, 17.0, 1e6, f64::MAX] {
        assert_eq!(attractiveness(r, &cfg), 0.7);
        assert_eq!(attractiveness(r, &rational), 0.7);
    }
    // a vanishing gamma approaches the same constant
    let tiny = FaConfig { gamma: 1e-15, beta0: 0.7, ..FaConfig::default() };
    assert!((attractiveness(10.0, &tiny) - 0.7).abs() < 1e-12);
}

#[test]
fn zero_gamma_pair_collapses_onto_the_brighter() {
    let obj = sphere(2);
    let cfg = FaConfig { n: 2, alpha: 0.0, gamma: 0.0, ..FaConfig::default() };
    let mut ev = Evaluator::new(&obj, None);
    let mut state = FireflyState::from_positions(vec![vec![3.0, -4.0], vec![1.0, 0.5]], &mut ev);
    let mut rng = SeededRng::new(0);
    for _ in 0..3 {
        fa_step(&mut state, &mut ev, &cfg, &mut rng);
    }
    for p in &state.positions {
        assert!((p[0] - 1.0).abs() < 1e-12 && (p[1] - 0.5).abs() < 1e-12, "{p:?}");
    }
}

fn counted(counter: Arc<AtomicU64>) -> Objective {
    Objective::new("counted", SearchSpace::cube(3, -5.0, 5.0).unwrap(), move |x: &[f64]| {
        counter.fetch_add(1, Ordering::Relaxed);
        x.iter().map(|v| v * v).sum()
    })
    .with_known_best_value(0.0)
}

#[test]
fn evaluation_counts_match_a_call_counter() {
    let small = Budget::default().with_max_evaluations(3_001);
    let configs = [
        AlgorithmConfig::Fa(FaConfig { n: 15, budget: small, ..FaConfig::default() }),
        AlgorithmConfig::Pso(PsoConfig { n: 15, budget: small, ..PsoConfig::default() }),
        AlgorithmConfig::Ga(GaConfig { n: 15, budget: small, ..GaConfig::default() }),
        AlgorithmConfig::Fa(FaConfig { n: 7, budget: Budget::generations(12), ..FaConfig::default() }),
        AlgorithmConfig::Ga(GaConfig { n: 9, budget: Budget::generations(12), ..GaConfig::default() }),
    ];
    for cfg in configs {
        for seed in 0..5 {
            let counter = Arc::new(AtomicU64::new(0));
            let obj = counted(counter.clone());
            let record = cfg.run(&obj, seed).unwrap();
            assert_eq!(record.evaluations_used, counter.load(Ordering::Relaxed), "{cfg:?}");
            assert!(record.evaluations_used <= 3_001);
        }
    }
}

#[test]
fn same_seed_same_record() {
    let catalog = BenchmarkCatalog::standard();
    for name in ["ackley", "michalewicz", "shubert"] {
        let obj = catalog.objective(name, Some(if name == "shubert" { 2 } else { 4 })).unwrap();
        let budget = Budget::generations(30);
        let fa = FaConfig { budget, ..FaConfig::default() };
        let pso = PsoConfig { budget, ..PsoConfig::default() };
        let ga = GaConfig { budget, ..GaConfig::default() };
        for seed in [0, 1, u64::MAX] {
            assert_eq!(
                fa_run(&obj, &fa, &mut SeededRng::new(seed), seed).unwrap(),
                fa_run(&obj, &fa, &mut SeededRng::new(seed), seed).unwrap()
            );
            assert_eq!(
                pso_run(&obj, &pso, &mut SeededRng::new(seed), seed).unwrap(),
                pso_run(&obj, &pso, &mut SeededRng::new(seed), seed).unwrap()
            );
            assert_eq!(
                ga_run(&obj, &ga, &mut SeededRng::new(seed), seed).unwrap(),
                ga_run(&obj, &ga, &mut SeededRng::new(seed), seed).unwrap()
            );
        }
    }
}

#[test]
fn baselines_solve_the_2d_sphere_within_20k_evaluations() {
    let obj = BenchmarkCatalog::standard().objective("dejong", Some(2)).unwrap();
    let budget = Budget { max_generations: None, max_evaluations: Some(20_000), stopping: None };
    let pso = AlgorithmConfig::Pso(PsoConfig { budget, ..PsoConfig::default() });
    let ga = AlgorithmConfig::Ga(GaConfig { budget, ..GaConfig::default() });
    for cfg in [pso, ga] {
        let hits = (0..100).filter(|&seed| cfg.run(&obj, seed).unwrap().success).count();
        assert!(hits >= 95, "{:?}: {hits}/100", cfg.algorithm());
    }
}

struct Checks {
    space: SearchSpace,
    snapshots: usize,
    outside: Vec<Vec<f64>>,
}

impl Checks {
    fn new(space: &SearchSpace) -> Self {
        Self { space: space.clone(), snapshots: 0, outside: Vec::new() }
    }

    fn see(&mut self, s: &Snapshot<'_>) {
        self.snapshots += 1;
        for p in s.positions {
            if !self.space.contains(p) {
                self.outside.push(p.clone());
            }
        }
    }
}

fn assert_monotone(record: &firefly_core::RunRecord) {
    for w in record.trace.windows(2) {
        assert!(w[1].best_value <= w[0].best_value, "trace rose: {w:?}");
        assert!(w[1].evaluations >= w[0].evaluations);
    }
    assert_eq!(record.trace.last().unwrap().best_value, record.best_value);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn traces_fall_and_agents_stay_in_the_box(seed in any::<u64>(), which in 0usize..4, dim in 1usize..5) {
        let catalog = BenchmarkCatalog::standard();
        let name = ["rastrigin", "schwefel", "michalewicz", "rosenbrock"][which];
        let obj = catalog.objective(name, Some(dim.max(2))).unwrap();
        let budget = Budget::generations(15);

        let mut checks = Checks::new(obj.space());
        let cfg = FaConfig { n: 12, budget, ..FaConfig::default() };
        let r = fa_run_observed(&obj, &cfg, &mut SeededRng::new(seed), seed, &mut |s| checks.see(s)).unwrap();
        prop_assert!(checks.outside.is_empty(), "FA left the box: {:?}", checks.outside);
        prop_assert_eq!(checks.snapshots, 16);
        assert_monotone(&r);

        let mut checks = Checks::new(obj.space());
        let cfg = PsoConfig { n: 12, v_max: None, budget, ..PsoConfig::default() };
        let r = pso_run_observed(&obj, &cfg, &mut SeededRng::new(seed), seed, &mut |s| checks.see(s)).unwrap();
        prop_assert!(checks.outside.is_empty(), "PSO left the box: {:?}", checks.outside);
        assert_monotone(&r);

        let mut checks = Checks::new(obj.space());
        let cfg = GaConfig { n: 13, mutation_scale: 2.0, budget, ..GaConfig::default() };
        let r = ga_run_observed(&obj, &cfg, &mut SeededRng::new(seed), seed, &mut |s| checks.see(s)).unwrap();
        prop_assert!(checks.outside.is_empty(), "GA left the box: {:?}", checks.outside);
        assert_monotone(&r);
    }

    #[test]
    fn attractiveness_peaks_at_zero_and_falls(beta0 in 0.01f64..10.0, gamma in 1e-3f64..10.0, r in 1e-3f64..3.0, dr in 1e-3f64..1.0) {
        for form in [AttractivenessForm::Gaussian, AttractivenessForm::Rational] {
            let cfg = FaConfig { beta0, gamma, attractiveness: form, ..FaConfig::default() };
            prop_assert_eq!(attractiveness(0.0, &cfg), beta0);
            prop_assert!(attractiveness(r + dr, &cfg) < attractiveness(r, &cfg));
        }
    }
}

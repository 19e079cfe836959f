use std::f64::consts::PI;

#[path = "support/oracles.rs"]
mod oracles;

use firefly_core::objectives::{self, SCHWEFEL_ARGMIN};
use firefly_core::{BenchmarkCatalog, RandomSource, SeededRng};
use oracles::{close, refine, ORACLES};

#[test]
fn every_function_matches_its_oracle_on_random_points() {
    let catalog = BenchmarkCatalog::standard();
    let mut rng = SeededRng::new(2024);
    for (name, oracle) in ORACLES {
        let entry = catalog.entry(name).unwrap();
        for k in 0..1000 {
            let dim = entry.fixed_dim.unwrap_or([2, 3, 5, 16][k % 4]);
            let space = entry.space(dim).unwrap();
            let x = space.uniform_point(&mut rng);
            let got = objectives::standard_suite(name, &x).unwrap();
            let want = oracle(&x);
            assert!(close(got, want, 1e-12), "{name} at {x:?}: {got} vs oracle {want}");
        }
    }
}

#[test]
fn analytic_optima_are_exact() {
    for d in [1, 2, 7, 16] {
        let zero = vec![0.0; d];
        assert_eq!(objectives::dejong(&zero), 0.0);
        assert_eq!(objectives::ackley(&zero), 0.0);
        assert_eq!(objectives::rastrigin(&zero), 0.0);
        assert_eq!(objectives::griewank(&zero), 0.0);
        assert_eq!(objectives::yang(&zero, 15.0, 5), -1.0);
        if d >= 2 {
            assert_eq!(objectives::rosenbrock(&vec![1.0; d]), 0.0);
        }
    }
    assert_eq!(objectives::easom(&[PI, PI]), -1.0);
}

#[test]
fn catalog_optima_agree_with_the_functions() {
    let catalog = BenchmarkCatalog::standard();
    for entry in catalog.entries() {
        let dims: Vec<usize> = match entry.fixed_dim {
            Some(d) => vec![d],
            None => vec![2, 5, 16],
        };
        for d in dims {
            let obj = catalog.objective(entry.name, Some(d)).unwrap();
            let best = obj.known_best_value().unwrap();
            assert!(!obj.known_best_points().is_empty(), "{} d={d}", entry.name);
            for p in obj.known_best_points() {
                let v = obj.eval(p);
                assert!((v - best).abs() <= 1e-6, "{} d={d}: f(x*)={v}, stored {best}", entry.name);
            }
        }
    }
}

#[test]
fn even_functions_are_sign_symmetric() {
    let mut rng = SeededRng::new(7);
    let catalog = BenchmarkCatalog::standard();
    for name in ["dejong", "ackley", "rastrigin", "griewank", "yang"] {
        let space = catalog.entry(name).unwrap().space(6).unwrap();
        for _ in 0..200 {
            let x = space.uniform_point(&mut rng);
            let neg: Vec<f64> = x.iter().map(|v| -v).collect();
            let a = objectives::standard_suite(name, &x).unwrap();
            let b = objectives::standard_suite(name, &neg).unwrap();
            assert_eq!(a, b, "{name}");
        }
    }
}

#[test]
fn michalewicz_is_a_sum_of_axis_terms() {
    // a zero coordinate contributes nothing, so f(x) = sum_k f(x_k e_k)
    let mut rng = SeededRng::new(11);
    for _ in 0..200 {
        let x: Vec<f64> = (0..8).map(|_| PI * rng.uniform()).collect();
        let split: f64 = (0..8)
            .map(|k| {
                let mut e = vec![0.0; 8];
                e[k] = x[k];
                objectives::michalewicz(&e, 10)
            })
            .sum();
        assert!(close(objectives::michalewicz(&x, 10), split, 1e-12));
    }
}

#[test]
fn michalewicz_2d_grid_search_finds_the_catalog_optimum() {
    let f = |x: &[f64]| objectives::michalewicz(x, 10);
    let steps = 629;
    let h = PI / (steps - 1) as f64;
    let mut best = (vec![0.0, 0.0], f64::INFINITY);
    for a in 0..steps {
        for b in 0..steps {
            let x = [a as f64 * h, b as f64 * h];
            let v = f(&x);
            if v < best.1 {
                best = (x.to_vec(), v);
            }
        }
    }
    let (x, v) = refine(f, &best.0, h, 1e-12);
    let obj = BenchmarkCatalog::standard().objective("michalewicz", Some(2)).unwrap();
    let star = &obj.known_best_points()[0];
    assert!((x[0] - star[0]).abs() < 1e-3 && (x[1] - star[1]).abs() < 1e-3, "{x:?} vs {star:?}");
    assert!((v - obj.known_best_value().unwrap()).abs() < 1e-9);
    assert!((v + 1.8013).abs() < 1e-4);
}

#[test]
fn yang_2d_grid_has_a_single_minimum_at_the_origin() {
    let f = |x: &[f64]| objectives::yang(x, 15.0, 5);
    let mut best = (0i32, 0i32, f64::INFINITY);
    let mut runner_up_far = f64::INFINITY;
    for a in -400..=400 {
        for b in -400..=400 {
            let v = f(&[a as f64 * 0.05, b as f64 * 0.05]);
            if v < best.2 {
                best = (a, b, v);
            }
            if a.abs().max(b.abs()) > 1 {
                runner_up_far = runner_up_far.min(v);
            }
        }
    }
    assert_eq!((best.0, best.1), (0, 0));
    assert_eq!(best.2, -1.0);
    assert!(runner_up_far > -1.0 + 1e-3, "competing grid value {runner_up_far}");
}

#[test]
fn schwefel_argmin_matches_refinement() {
    let g = |x: &[f64]| -x[0] * x[0].abs().sqrt().sin();
    // coarse scan over the whole axis, then refine
    let mut start = -500.0;
    let mut low = f64::INFINITY;
    for k in 0..=10_000 {
        let x = -500.0 + k as f64 * 0.1;
        let v = g(&[x]);
        if v < low {
            low = v;
            start = x;
        }
    }
    let (x, _) = refine(g, &[start], 0.1, 1e-11);
    assert!((x[0] - SCHWEFEL_ARGMIN).abs() < 1e-6, "{}", x[0]);
    let obj = BenchmarkCatalog::standard().objective("schwefel", Some(3)).unwrap();
    assert!((objectives::schwefel(&[x[0]; 3]) - obj.known_best_value().unwrap()).abs() < 1e-9);
}

#[test]
fn shubert_has_eighteen_global_minima() {
    let f = objectives::shubert;
    let n = 1001;
    let h = 20.0 / (n - 1) as f64;
    let grid: Vec<Vec<f64>> =
        (0..n).map(|a| (0..n).map(|b| f(&[-10.0 + a as f64 * h, -10.0 + b as f64 * h])).collect()).collect();

    let mut minima: Vec<(Vec<f64>, f64)> = Vec::new();
    for a in 1..n - 1 {
        for b in 1..n - 1 {
            let v = grid[a][b];
            if v > -150.0 {
                continue;
            }
            let local = (a - 1..=a + 1).all(|i| (b - 1..=b + 1).all(|j| grid[i][j] >= v));
            if !local {
                continue;
            }
            let (x, fx) = refine(f, &[-10.0 + a as f64 * h, -10.0 + b as f64 * h], h, 1e-12);
            if !minima.iter().any(|(y, _)| (y[0] - x[0]).abs() < 1e-4 && (y[1] - x[1]).abs() < 1e-4) {
                minima.push((x, fx));
            }
        }
    }
    let global = minima.iter().map(|m| m.1).fold(f64::INFINITY, f64::min);
    assert!((global + 186.7309).abs() < 1e-4, "{global}");
    let at_global: Vec<&Vec<f64>> = minima.iter().filter(|m| m.1 - global < 1e-6).map(|m| &m.0).collect();
    assert_eq!(at_global.len(), 18);

    let obj = BenchmarkCatalog::standard().objective("shubert", None).unwrap();
    assert!((obj.known_best_value().unwrap() - global).abs() < 1e-8);
    assert_eq!(obj.known_best_points().len(), 18);
    for x in at_global {
        assert!(
            obj.known_best_points().iter().any(|p| (p[0] - x[0]).abs() < 1e-5 && (p[1] - x[1]).abs() < 1e-5),
            "refined minimum {x:?} missing from catalog"
        );
    }
}

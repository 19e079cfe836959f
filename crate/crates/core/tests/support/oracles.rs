#![allow(dead_code)]

use std::f64::consts::{E, PI};

// Textbook forms, written out with plain loops.

pub fn michalewicz_oracle(x: &[f64]) -> f64 {
    let mut s = 0.0;
    for (i, &xi) in x.iter().enumerate() {
        let inner = ((i + 1) as f64) * xi * xi / PI;
        s += xi.sin() * inner.sin().powf(20.0);
    }
    -s
}

pub fn yang_oracle(x: &[f64]) -> f64 {
    let mut s_env = 0.0;
    let mut s_sq = 0.0;
    let mut prod = 1.0;
    for &xi in x {
        s_env += (xi / 15.0).powf(10.0);
        s_sq += xi * xi;
        prod *= xi.cos() * xi.cos();
    }
    ((-s_env).exp() - 2.0 * (-s_sq).exp()) * prod
}

pub fn rosenbrock_oracle(x: &[f64]) -> f64 {
    let mut s = 0.0;
    for i in 0..x.len() - 1 {
        let a = x[i + 1] - x[i] * x[i];
        let b = 1.0 - x[i];
        s += 100.0 * a * a + b * b;
    }
    s
}

pub fn dejong_oracle(x: &[f64]) -> f64 {
    let mut s = 0.0;
    for &xi in x {
        s += xi * xi;
    }
    s
}

pub fn schwefel_oracle(x: &[f64]) -> f64 {
    let mut s = 0.0;
    for &xi in x {
        s += xi * xi.abs().sqrt().sin();
    }
    418.9829 * x.len() as f64 - s
}

pub fn ackley_oracle(x: &[f64]) -> f64 {
    let d = x.len() as f64;
    let mut sq = 0.0;
    let mut cs = 0.0;
    for &xi in x {
        sq += xi * xi;
        cs += (2.0 * PI * xi).cos();
    }
    -20.0 * (-0.2 * (sq / d).sqrt()).exp() - (cs / d).exp() + 20.0 + E
}

pub fn rastrigin_oracle(x: &[f64]) -> f64 {
    let mut s = 10.0 * x.len() as f64;
    for &xi in x {
        s += xi * xi - 10.0 * (2.0 * PI * xi).cos();
    }
    s
}

pub fn easom_oracle(x: &[f64]) -> f64 {
    let d1 = x[0] - PI;
    let d2 = x[1] - PI;
    -x[0].cos() * x[1].cos() * (-(d1 * d1 + d2 * d2)).exp()
}

pub fn griewank_oracle(x: &[f64]) -> f64 {
    let mut s = 0.0;
    let mut p = 1.0;
    for (i, &xi) in x.iter().enumerate() {
        s += xi * xi;
        p *= (xi / ((i + 1) as f64).sqrt()).cos();
    }
    1.0 + s / 4000.0 - p
}

pub fn shubert_oracle(x: &[f64]) -> f64 {
    let mut p = 1.0;
    for &xk in x {
        let mut s = 0.0;
        for i in 1..=5 {
            let i = i as f64;
            s += i * ((i + 1.0) * xk + i).cos();
        }
        p *= s;
    }
    p
}

pub type Oracle = fn(&[f64]) -> f64;

pub const ORACLES: [(&str, Oracle); 10] = [
    ("michalewicz", michalewicz_oracle),
    ("yang", yang_oracle),
    ("rosenbrock", rosenbrock_oracle),
    ("dejong", dejong_oracle),
    ("schwefel", schwefel_oracle),
    ("ackley", ackley_oracle),
    ("rastrigin", rastrigin_oracle),
    ("easom", easom_oracle),
    ("griewank", griewank_oracle),
    ("shubert", shubert_oracle),
];

pub fn close(a: f64, b: f64, rel: f64) -> bool {
    (a - b).abs() <= rel * b.abs().max(1.0)
}

/// Compass search: shrink the step until it is below `tol`.
pub fn refine(f: impl Fn(&[f64]) -> f64, start: &[f64], step: f64, tol: f64) -> (Vec<f64>, f64) {
    let mut x = start.to_vec();
    let mut fx = f(&x);
    let mut h = step;
    while h > tol {
        let mut improved = false;
        for k in 0..x.len() {
            for s in [h, -h] {
                let mut y = x.clone();
                y[k] += s;
                let fy = f(&y);
                if fy < fx {
                    x = y;
                    fx = fy;
                    improved = true;
                }
            }
        }
        if !improved {
            h *= 0.5;
        }
    }
    (x, fx)
}

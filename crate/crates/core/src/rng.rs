//! Random sources.
//!
//! Every stochastic decision in the crate goes through [`RandomSource`], so a
//! run is a pure function of its seed. [`SeededRng`] is the production stream:
//!
//! * generator: xoshiro256++ with its 256-bit state expanded from the 64-bit
//!   seed by SplitMix64 (the reference `seed_from_u64` construction);
//! * uniform: `(next_u64 >> 11) * 2^-53`, giving 53-bit floats in `[0, 1)`;
//! * normal: Box-Muller on two consecutive uniforms `u1, u2`,
//!   `sqrt(-2 ln(1 - u1)) * cos(2 pi u2)`, with no caching of the sine branch.
//!
//! The identifier of this scheme is [`STREAM_VERSION`]; any change to the
//! draw order or the transforms above must bump it.

use rand_core::{RngCore, SeedableRng};
use rand_xoshiro::Xoshiro256PlusPlus;
use std::f64::consts::PI;

pub const STREAM_VERSION: &str = "xoshiro256++/splitmix64/bm-v1";

pub trait RandomSource {
    /// Uniform draw in `[0, 1)`.
    fn uniform(&mut self) -> f64;

    /// Standard normal draw, consuming two uniforms.
    fn normal(&mut self) -> f64 {
        let u1 = self.uniform();
        let u2 = self.uniform();
        (-2.0 * (1.0 - u1).ln()).sqrt() * (2.0 * PI * u2).cos()
    }

    /// Uniform index in `0..n`. `n` must be nonzero.
    fn index(&mut self, n: usize) -> usize {
        debug_assert!(n > 0);
        ((self.uniform() * n as f64) as usize).min(n - 1)
    }
}

impl<R: RandomSource + ?Sized> RandomSource for &mut R {
    fn uniform(&mut self) -> f64 {
        (**self).uniform()
    }

    fn normal(&mut self) -> f64 {
        (**self).normal()
    }

    fn index(&mut self, n: usize) -> usize {
        (**self).index(n)
    }
}

#[derive(Debug, Clone)]
pub struct SeededRng {
    seed: u64,
    inner: Xoshiro256PlusPlus,
}

impl SeededRng {
    pub fn new(seed: u64) -> Self {
        Self { seed, inner: Xoshiro256PlusPlus::seed_from_u64(seed) }
    }

    pub fn seed(&self) -> u64 {
        self.seed
    }

    pub fn next_u64(&mut self) -> u64 {
        self.inner.next_u64()
    }
}

impl RandomSource for SeededRng {
    fn uniform(&mut self) -> f64 {
        (self.inner.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

/// Replays a fixed list of uniform draws, for hand-checkable traces.
///
/// Panics when the list runs out, which in a test means the code under test
/// consumed more randomness than the trace accounts for.
#[derive(Debug, Clone)]
pub struct FixedDraws {
    draws: Vec<f64>,
    next: usize,
}

impl FixedDraws {
    pub fn new(draws: impl Into<Vec<f64>>) -> Self {
        Self { draws: draws.into(), next: 0 }
    }

    /// The same value forever.
    pub fn constant(value: f64, count: usize) -> Self {
        Self::new(vec![value; count])
    }

    pub fn consumed(&self) -> usize {
        self.next
    }

    pub fn remaining(&self) -> usize {
        self.draws.len() - self.next
    }
}

impl RandomSource for FixedDraws {
    fn uniform(&mut self) -> f64 {
        let value =
            *self.draws.get(self.next).unwrap_or_else(|| panic!("FixedDraws exhausted after {} draws", self.next));
        self.next += 1;
        value
    }
}

//! Seeded random TFN generation for the randomized witnesses and tests.
//!
//! Values are mixed from two pools: real-valued components in
//! `[-10⁶, 10⁶]` and an integer-valued pool whose arithmetic stays exact, so
//! equality checks on that pool are meaningful without tolerances.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::number::Tfn;
use crate::order::{classify_sign, SignClass};
use crate::vector::TfnVector;

/// Largest component magnitude drawn by [`TfnSampler`].
pub const MAGNITUDE: f64 = 1e6;

/// Which pool a sample came from.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pool {
    Integer,
    Real,
}

/// Deterministic TFN generator.
#[derive(Debug, Clone)]
pub struct TfnSampler {
    rng: ChaCha8Rng,
    integer_share: f64,
}

impl TfnSampler {
    /// A sampler drawing a quarter of its values from the integer pool.
    pub fn new(seed: u64) -> Self {
        TfnSampler { rng: ChaCha8Rng::seed_from_u64(seed), integer_share: 0.25 }
    }

    pub fn with_integer_share(mut self, share: f64) -> Self {
        self.integer_share = share.clamp(0.0, 1.0);
        self
    }

    pub fn rng(&mut self) -> &mut ChaCha8Rng {
        &mut self.rng
    }

    pub fn pool(&mut self) -> Pool {
        if self.rng.random_bool(self.integer_share) {
            Pool::Integer
        } else {
            Pool::Real
        }
    }

    /// A TFN from the requested pool. Degenerate ramps and crisp values
    /// appear with non-negligible probability.
    pub fn tfn_in(&mut self, pool: Pool) -> Tfn {
        let (b, left, right) = match pool {
            Pool::Integer => {
                let m = MAGNITUDE as i64;
                let b = self.rng.random_range(-m..=m);
                let left = self.integer_ramp(m + b);
                let right = self.integer_ramp(m - b);
                (b as f64, left as f64, right as f64)
            }
            Pool::Real => {
                let b = self.rng.random_range(-MAGNITUDE..=MAGNITUDE);
                let left = self.real_ramp(MAGNITUDE + b);
                let right = self.real_ramp(MAGNITUDE - b);
                (b, left, right)
            }
        };
        let a = (b - left).max(-MAGNITUDE);
        let c = (b + right).min(MAGNITUDE);
        Tfn::new(a.min(b), b, c.max(b)).expect("sampled components are ordered")
    }

    fn integer_ramp(&mut self, room: i64) -> i64 {
        if self.rng.random_bool(0.15) {
            0
        } else {
            self.rng.random_range(0..=room.min(1000))
        }
    }

    fn real_ramp(&mut self, room: f64) -> f64 {
        if self.rng.random_bool(0.15) {
            0.0
        } else {
            self.rng.random_range(0.0..=room.min(1000.0))
        }
    }

    pub fn tfn(&mut self) -> Tfn {
        let pool = self.pool();
        self.tfn_in(pool)
    }

    /// A vector of `n` TFNs, all from one pool.
    pub fn vector(&mut self, n: usize) -> (Pool, TfnVector) {
        let pool = self.pool();
        let xs = (0..n).map(|_| self.tfn_in(pool)).collect();
        (pool, TfnVector::new(xs).expect("n >= 1"))
    }

    /// An OT-positive or zero perturbation whose nonzero parts are at least 1
    /// in magnitude, so adding it is never absorbed by rounding.
    pub fn nonnegative_shift(&mut self, pool: Pool) -> Tfn {
        if self.rng.random_bool(0.2) {
            return Tfn::ZERO;
        }
        let draw = |rng: &mut ChaCha8Rng| match pool {
            Pool::Integer => rng.random_range(1..=100i32) as f64,
            Pool::Real => rng.random_range(1.0..=100.0),
        };
        let peak_moves = self.rng.random_bool(0.5);
        let b = if peak_moves { draw(&mut self.rng) } else { 0.0 };
        let c = b + if peak_moves && self.rng.random_bool(0.3) { 0.0 } else { draw(&mut self.rng) };
        let a = if self.rng.random_bool(0.3) { b } else { b - draw(&mut self.rng) };
        let shift = Tfn::new(a, b, c).expect("shift components are ordered");
        debug_assert_eq!(classify_sign(&shift), SignClass::Positive);
        shift
    }

    /// A pair `U ≤_{OTⁿ} V` where `V` is `U` translated by nonnegative
    /// shifts. Pairs broken by rounding are redrawn.
    pub fn dominated_pair(&mut self, n: usize) -> (TfnVector, TfnVector) {
        loop {
            let (pool, u) = self.vector(n);
            let shifted: Option<Vec<Tfn>> = u
                .components()
                .iter()
                .map(|x| x.checked_add(&self.nonnegative_shift(pool)).ok())
                .collect();
            if let Some(v) = shifted {
                let v = TfnVector::new(v).expect("n >= 1");
                if u.leq_otn(&v).unwrap_or(false) {
                    return (u, v);
                }
            }
        }
    }
}

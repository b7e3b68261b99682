//! Seeded instance generators.
//!
//! Every case draws from its own ChaCha8 stream whose 256-bit key is the
//! little-endian concatenation of `(seed, check id, case index, 0)`. Cases are
//! therefore independent of evaluation order, and ChaCha8 output is
//! specified bit-for-bit, so a given seed reproduces across platforms.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::gaussian::{make_state, pure_state, SingleModeCM};

pub fn case_rng(seed: u64, check_id: u64, case: u64) -> ChaCha8Rng {
    let mut key = [0u8; 32];
    key[..8].copy_from_slice(&seed.to_le_bytes());
    key[8..16].copy_from_slice(&check_id.to_le_bytes());
    key[16..24].copy_from_slice(&case.to_le_bytes());
    ChaCha8Rng::from_seed(key)
}

/// Replayable record of one generated instance.
pub type Params = BTreeMap<String, f64>;

/// Uniform on `(−π, π]`.
pub fn phase(rng: &mut impl Rng) -> f64 {
    -rng.random_range(-PI..PI)
}

/// Uniform on the open interval `(0, π)`.
pub fn angle(rng: &mut impl Rng) -> f64 {
    loop {
        let t = rng.random_range(0.0..PI);
        if t > 0.0 {
            return t;
        }
    }
}

/// Parameters of a generated single-mode state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StateDraw {
    pub b_mag: f64,
    pub b_arg: f64,
    /// Diagonal inflation over the pure value; zero for pure draws.
    pub excess: f64,
}

impl StateDraw {
    /// `|b|` uniform on `[0, 1]`, `arg b` uniform on `(−π, π]`.
    pub fn pure(rng: &mut impl Rng) -> Self {
        Self {
            b_mag: rng.random_range(0.0..=1.0),
            b_arg: phase(rng),
            excess: 0.0,
        }
    }

    /// A pure draw with `a` raised by `u`, `u` uniform on `(0, 0.5]`.
    pub fn mixed(rng: &mut impl Rng) -> Self {
        let mut d = Self::pure(rng);
        d.excess = 0.5 - rng.random_range(0.0..0.5);
        d
    }

    pub fn state(&self) -> SingleModeCM {
        if self.excess == 0.0 {
            pure_state(self.b_mag, self.b_arg)
        } else {
            let a = pure_state(self.b_mag, self.b_arg).a() + self.excess;
            make_state(a, self.b_mag, self.b_arg).expect("inflated pure state is physical")
        }
    }

    pub fn record(&self, prefix: &str, params: &mut Params) {
        params.insert(format!("{prefix}.b_mag"), self.b_mag);
        params.insert(format!("{prefix}.b_arg"), self.b_arg);
        if self.excess != 0.0 {
            params.insert(format!("{prefix}.excess"), self.excess);
        }
    }
}

/// Real symmetric 2×2 matrix `[[a, b], [b, a]]` with `a, b` uniform on `[−1, 1]`.
pub fn equal_diagonal(rng: &mut impl Rng) -> (f64, f64) {
    (rng.random_range(-1.0..=1.0), rng.random_range(-1.0..=1.0))
}

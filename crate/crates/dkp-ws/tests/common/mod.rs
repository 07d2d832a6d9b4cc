#![allow(dead_code)]

pub mod dd;

use rand_chacha::rand_core::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// Deterministic generator for randomized suites; every test seeds its
/// own stream so order and filtering never shift another test's draws.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Relative distance, guarded for small references.
pub fn rel_err(got: f64, want: f64) -> f64 {
    (got - want).abs() / want.abs().max(1e-300)
}

pub fn rel_err_c(got: num_complex::Complex64, want: num_complex::Complex64) -> f64 {
    (got - want).norm() / want.norm().max(1e-300)
}

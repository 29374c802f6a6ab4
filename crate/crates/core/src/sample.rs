//! Seeded random rational inputs for property sampling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::octonion::Octonion;
use crate::operators::{Vector16, DIM};
use crate::rational::Rational;

pub type SampleRng = ChaCha8Rng;

pub fn rng(seed: u64) -> SampleRng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// A small rational `n/d` with `|n| <= 5`, `1 <= d <= 4`.
pub fn rational<R: Rng>(rng: &mut R) -> Rational {
    Rational::new(rng.gen_range(-5..=5), rng.gen_range(1..=4))
}

pub fn octonion<R: Rng>(rng: &mut R) -> Octonion {
    Octonion { coeffs: std::array::from_fn(|_| rational(rng)) }
}

pub fn vector<R: Rng>(rng: &mut R) -> Vector16 {
    let c: Vec<Rational> = (0..DIM).map(|_| rational(rng)).collect();
    Vector16::from_coords(&c)
}

/// A vector with integer entries in `-2..=2`; cheaper for the heavy sweeps.
pub fn small_vector<R: Rng>(rng: &mut R) -> Vector16 {
    let c: Vec<Rational> = (0..DIM).map(|_| Rational::from(rng.gen_range(-2i64..=2))).collect();
    Vector16::from_coords(&c)
}

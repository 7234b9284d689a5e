use num_complex::Complex64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::{Distribution, Normal};

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::polar::{matrix_abs, polar_decompose};

/// SplitMix64 finalizer over seed + index. Derives independent per-item
/// seeds from one base seed so that parallel work needs no shared RNG state.
pub fn mix_seed(seed: u64, index: u64) -> u64 {
    let mut z = seed
        .wrapping_add(index.wrapping_mul(0x9e37_79b9_7f4a_7c15))
        .wrapping_add(0x9e37_79b9_7f4a_7c15);
    z = (z ^ (z >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    z ^ (z >> 31)
}

/// Ginibre matrix: entries independent complex Gaussians with E|z|² = 1
/// (real and imaginary parts N(0, 1/2)). Same seed, same matrix, on every
/// platform.
pub fn random_ginibre(n: usize, seed: u64) -> Result<ComplexMatrix> {
    if n == 0 {
        return Err(Error::ZeroOrder);
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let normal = Normal::new(0.0, std::f64::consts::FRAC_1_SQRT_2)
        .expect("constant standard deviation is valid");
    let entries = (0..n * n)
        .map(|_| {
            let re = normal.sample(&mut rng);
            let im = normal.sample(&mut rng);
            Complex64::new(re, im)
        })
        .collect();
    ComplexMatrix::new(n, entries)
}

/// Haar-like unitary: the polar factor of a Ginibre draw.
pub fn random_unitary(n: usize, seed: u64) -> Result<ComplexMatrix> {
    Ok(polar_decompose(&random_ginibre(n, seed)?)?.unitary)
}

/// Random positive semidefinite matrix: |G| for a Ginibre G.
pub fn random_psd(n: usize, seed: u64) -> Result<ComplexMatrix> {
    matrix_abs(&random_ginibre(n, seed)?)
}

/// Random contraction: a random unitary scaled by u drawn uniformly from
/// [0, 1], so the operator norm is exactly u.
pub fn random_contraction(n: usize, seed: u64) -> Result<ComplexMatrix> {
    let u = random_unitary(n, mix_seed(seed, 0))?;
    let mut rng = ChaCha8Rng::seed_from_u64(mix_seed(seed, 1));
    let scale: f64 = rng.random_range(0.0..=1.0);
    Ok(u.scale(scale))
}

/// Weight parameter drawn log-uniformly from [1e-2, 1e2], exercising both
/// branches of the weighted inequalities away from the balanced point.
pub fn log_uniform_t(seed: u64) -> f64 {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let exponent: f64 = rng.random_range(-2.0..=2.0);
    10f64.powf(exponent)
}

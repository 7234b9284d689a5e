//! Shared fixtures for the kernel benchmarks.

use cpbound_core::{random_ginibre, ComplexMatrix};

/// Seeded test matrix of the given order; panics only on order 0, which the
/// benchmarks never request.
pub fn fixture(n: usize, seed: u64) -> ComplexMatrix {
    random_ginibre(n, seed).expect("benchmark orders are positive")
}

/// Hermitian fixture: G + G* for a seeded Ginibre G.
pub fn hermitian_fixture(n: usize, seed: u64) -> ComplexMatrix {
    let g = fixture(n, seed);
    &g + &g.adjoint()
}

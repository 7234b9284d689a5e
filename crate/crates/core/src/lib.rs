//! Numerical toolkit for operator absolute values, polar decompositions, and
//! Schatten norms of complex matrices, together with certifiers for the
//! trace inequalities behind the sharp Frobenius comparison
//! ‖A + B‖_F ≤ √((1+√2)/2) · ‖|A| + |B|‖_F and a seeded multistart search
//! for the extremal constants c_p.
//!
//! Everything is deterministic: randomness flows only through explicit
//! seeds, parallel search results are independent of worker count, and every
//! inequality check is reported with its measured slack instead of a bare
//! boolean.

mod certify;
mod chain;
mod eigen;
mod error;
mod matrix;
mod nelder_mead;
mod norms;
mod polar;
mod random;
mod report;
mod search;
mod svd;

pub use certify::{
    am_gm_step, canonical_pair, canonical_ratio, cauchy_schwarz_step, lemma1_certify,
    lemma2_certify, optimal_t, sharp_constant, theorem_certify, Lemma1Certificate, TheoremReport,
};
pub use chain::{proof_chain_certify, ProofChainTrace};
pub use eigen::{hermitian_eigen, HermitianEigen};
pub use error::{Error, Result};
pub use matrix::ComplexMatrix;
pub use nelder_mead::{NelderMead, NmOutcome};
pub use norms::{
    is_contraction, is_psd, operator_norm, schatten_norm, singular_values, trace_inner,
};
pub use polar::{matrix_abs, polar_decompose, PolarFactors};
pub use random::{
    log_uniform_t, mix_seed, random_contraction, random_ginibre, random_psd, random_unitary,
};
pub use report::{CertReport, CERT_ABS_TOL, CERT_REL_TOL};
pub use search::{
    alpha_sweep, estimate_cp, multistart_search, multistart_search_with_workers, ratio_p,
    AlphaSweep, Family, SearchConfig, SearchResult, StartRecord, SweepRow,
};

pub use num_complex::Complex64;

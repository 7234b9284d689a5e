use num_complex::Complex64;

use crate::eigen::hermitian_eigen;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::svd::{sigma_and_right, svd_jacobi};

/// Polar decomposition A = unitary · psd.
///
/// `psd` is the operator absolute value (A*A)^(1/2); `unitary` is a full
/// unitary even when A is singular, with the kernel part completed
/// deterministically. `singular_values` are the eigenvalues of `psd`,
/// descending.
#[derive(Debug, Clone)]
pub struct PolarFactors {
    pub unitary: ComplexMatrix,
    pub psd: ComplexMatrix,
    pub singular_values: Vec<f64>,
}

/// V·diag(σ)·V* for a unitary V and nonnegative σ.
fn assemble_psd(sigma: &[f64], v: &ComplexMatrix) -> Result<ComplexMatrix> {
    let n = v.order();
    let mut vs = v.clone();
    for j in 0..n {
        for i in 0..n {
            vs[(i, j)] *= sigma[j];
        }
    }
    let raw = &vs * &v.adjoint();
    // The product is Hermitian up to roundoff; write it exactly so downstream
    // Hermitian preconditions hold by construction.
    ComplexMatrix::from_fn(n, |i, j| {
        let z = (raw[(i, j)] + raw[(j, i)].conj()) * 0.5;
        if i == j {
            Complex64::new(z.re, 0.0)
        } else {
            z
        }
    })
}

/// Polar decomposition through a one-sided Jacobi SVD: A = (U_L·V*)·(V·Σ·V*).
///
/// Working on the columns of A rather than on A*A keeps small singular
/// values at relative accuracy, which the certifiers need for near-equality
/// slack measurements on rank-deficient inputs. For A = 0 the unitary factor
/// is the identity.
pub fn polar_decompose(a: &ComplexMatrix) -> Result<PolarFactors> {
    let svd = svd_jacobi(a)?;
    let unitary = &svd.left * &svd.right.adjoint();
    let psd = assemble_psd(&svd.singular_values, &svd.right)?;
    Ok(PolarFactors {
        unitary,
        psd,
        singular_values: svd.singular_values,
    })
}

/// Operator absolute value used in norm ratios: the psd polar factor, without
/// paying for the unitary.
pub(crate) fn abs_via_svd(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let (sigma, v) = sigma_and_right(a)?;
    assemble_psd(&sigma, &v)
}

/// Operator absolute value (A*A)^(1/2) through the Gram matrix.
///
/// Eigenvalues of A*A in [-ε, 0) with ε = 1e-12·(1 + λ_max) are clamped to
/// zero before the square root; anything below -ε is a real failure of the
/// eigensolver and is reported, not patched. Squaring A costs about half the
/// digits on the smallest singular values, so expect absolute (not relative)
/// accuracy near the kernel; `polar_decompose` provides the sharper route.
pub fn matrix_abs(a: &ComplexMatrix) -> Result<ComplexMatrix> {
    let gram = &a.adjoint() * a;
    let eig = hermitian_eigen(&gram)?;
    let lambda_max = eig.values.first().copied().unwrap_or(0.0).max(0.0);
    let floor = 1e-12 * (1.0 + lambda_max);
    let mut sigma = Vec::with_capacity(eig.values.len());
    for &lambda in &eig.values {
        if lambda < -floor {
            return Err(Error::EigenvalueBelowFloor {
                value: lambda,
                floor,
            });
        }
        sigma.push(lambda.max(0.0).sqrt());
    }
    assemble_psd(&sigma, &eig.vectors)
}

use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Full singular value decomposition A = left · diag(σ) · right*, all factors
/// square, σ non-increasing, left and right unitary.
#[derive(Debug, Clone)]
pub(crate) struct Svd {
    pub left: ComplexMatrix,
    pub singular_values: Vec<f64>,
    pub right: ComplexMatrix,
}

const MAX_SWEEPS: usize = 60;
const ORTHO_TOL: f64 = 1e-13;

/// One-sided Jacobi: right-rotates column pairs of W (initially A) until all
/// columns are pairwise orthogonal, accumulating the rotations in V so that
/// W = A·V throughout. Column norms of the final W are the singular values.
///
/// Works on columns of A directly rather than on A*A, so small singular
/// values keep relative accuracy instead of being squared into roundoff.
fn orthogonalize_columns(a: &ComplexMatrix) -> Result<(ComplexMatrix, ComplexMatrix)> {
    let n = a.order();
    let mut w = a.clone();
    let mut v = ComplexMatrix::identity(n)?;
    if n == 1 {
        return Ok((w, v));
    }

    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n - 1 {
            for q in p + 1..n {
                let mut app = 0.0;
                let mut aqq = 0.0;
                let mut g = Complex64::ZERO;
                for i in 0..n {
                    let wip = w[(i, p)];
                    let wiq = w[(i, q)];
                    app += wip.norm_sqr();
                    aqq += wiq.norm_sqr();
                    g += wip.conj() * wiq;
                }
                let bound = ORTHO_TOL * (app * aqq).sqrt();
                if g.norm() <= bound {
                    continue;
                }
                rotated = true;
                // The implicit 2x2 column Gram block [[app, g], [g*, aqq]] is
                // Hermitian; the eigen rotation diagonalizes it.
                let (c, s, phase) = super::eigen::rotation_for(app, aqq, g);
                super::eigen::rotate_columns(&mut w, p, q, c, s, phase);
                super::eigen::rotate_columns(&mut v, p, q, c, s, phase);
            }
        }
        if !rotated {
            return Ok((w, v));
        }
    }

    // Residual for the error: worst remaining relative inner product.
    let mut worst: f64 = 0.0;
    for p in 0..n - 1 {
        for q in p + 1..n {
            let mut app = 0.0;
            let mut aqq = 0.0;
            let mut g = Complex64::ZERO;
            for i in 0..n {
                app += w[(i, p)].norm_sqr();
                aqq += w[(i, q)].norm_sqr();
                g += w[(i, p)].conj() * w[(i, q)];
            }
            if app > 0.0 && aqq > 0.0 {
                worst = worst.max(g.norm() / (app * aqq).sqrt());
            }
        }
    }
    Err(Error::NoConvergence {
        algorithm: "one-sided Jacobi",
        sweeps: MAX_SWEEPS,
        residual: worst,
    })
}

/// Column norms sorted descending together with the matching column
/// permutation applied to (W, V).
fn sort_by_column_norm(
    w: &ComplexMatrix,
    v: &ComplexMatrix,
) -> Result<(Vec<f64>, ComplexMatrix, ComplexMatrix)> {
    let n = w.order();
    let norms: Vec<f64> = (0..n)
        .map(|j| {
            (0..n)
                .map(|i| w[(i, j)].norm_sqr())
                .sum::<f64>()
                .sqrt()
        })
        .collect();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| norms[j].total_cmp(&norms[i]));
    let sigma: Vec<f64> = order.iter().map(|&k| norms[k]).collect();
    let w_sorted = ComplexMatrix::from_fn(n, |i, j| w[(i, order[j])])?;
    let v_sorted = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])])?;
    Ok((sigma, w_sorted, v_sorted))
}

/// Singular values only (descending).
pub(crate) fn singular_values_jacobi(a: &ComplexMatrix) -> Result<Vec<f64>> {
    let (w, v) = orthogonalize_columns(a)?;
    let (sigma, _, _) = sort_by_column_norm(&w, &v)?;
    Ok(sigma)
}

/// σ and the right factor V, enough to assemble the positive semidefinite
/// part V·diag(σ)·V* without paying for the left factor.
pub(crate) fn sigma_and_right(a: &ComplexMatrix) -> Result<(Vec<f64>, ComplexMatrix)> {
    let (w, v) = orthogonalize_columns(a)?;
    let (sigma, _, v_sorted) = sort_by_column_norm(&w, &v)?;
    Ok((sigma, v_sorted))
}

/// Full SVD. Columns of W with σ above the rank cutoff are normalized into
/// the left factor; the remaining columns are completed to a unitary basis
/// deterministically (largest-residual standard basis vector, twice
/// re-orthogonalized, lowest index on ties).
pub(crate) fn svd_jacobi(a: &ComplexMatrix) -> Result<Svd> {
    let n = a.order();
    let (w, v) = orthogonalize_columns(a)?;
    let (sigma, w_sorted, v_sorted) = sort_by_column_norm(&w, &v)?;

    let cutoff = n as f64 * f64::EPSILON * sigma[0];
    let mut left = ComplexMatrix::zeros(n)?;
    let mut fixed = 0;
    for j in 0..n {
        if sigma[j] > cutoff && sigma[j] > 0.0 {
            for i in 0..n {
                left[(i, j)] = w_sorted[(i, j)] / sigma[j];
            }
            fixed = j + 1;
        } else {
            break;
        }
    }

    for j in fixed..n {
        complete_column(&mut left, j)?;
    }

    Ok(Svd {
        left,
        singular_values: sigma,
        right: v_sorted,
    })
}

/// Fills column `j` of `left` with a unit vector orthogonal to columns 0..j:
/// each standard basis vector is orthogonalized against the fixed columns
/// (two modified Gram-Schmidt passes) and the one with the largest residual
/// wins, lowest index first on ties.
fn complete_column(left: &mut ComplexMatrix, j: usize) -> Result<()> {
    let n = left.order();
    let mut best: Option<(f64, Vec<Complex64>)> = None;
    for k in 0..n {
        let mut r = vec![Complex64::ZERO; n];
        r[k] = Complex64::ONE;
        for _ in 0..2 {
            for col in 0..j {
                let mut proj = Complex64::ZERO;
                for i in 0..n {
                    proj += left[(i, col)].conj() * r[i];
                }
                for i in 0..n {
                    r[i] -= proj * left[(i, col)];
                }
            }
        }
        let norm = r.iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt();
        if best.as_ref().is_none_or(|(b, _)| norm > *b) {
            best = Some((norm, r));
        }
    }
    let (norm, r) = best.expect("order is at least 1");
    // j < n fixed columns span at most an (n-1)-dimensional subspace, so some
    // basis vector keeps a residual of at least 1/sqrt(n).
    debug_assert!(norm > 0.1);
    for i in 0..n {
        left[(i, j)] = r[i] / norm;
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn diagonal_singular_values() {
        let a = ComplexMatrix::diagonal(&[2.0, -3.0, 0.0]).unwrap();
        let sigma = singular_values_jacobi(&a).unwrap();
        assert_eq!(sigma, vec![3.0, 2.0, 0.0]);
    }

    #[test]
    fn known_two_by_two() {
        // [[1, 1], [0, 1]] has singular values sqrt((3±sqrt(5))/2).
        let a = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        let sigma = singular_values_jacobi(&a).unwrap();
        let hi = ((3.0 + 5f64.sqrt()) / 2.0).sqrt();
        let lo = ((3.0 - 5f64.sqrt()) / 2.0).sqrt();
        assert!((sigma[0] - hi).abs() < 1e-15);
        assert!((sigma[1] - lo).abs() < 1e-15);
    }

    #[test]
    fn full_svd_reconstructs_rank_deficient() {
        let a = ComplexMatrix::from_real_rows(&[&[1.0, 2.0, 3.0], &[2.0, 4.0, 6.0], &[0.0, 0.0, 0.0]])
            .unwrap();
        let svd = svd_jacobi(&a).unwrap();
        assert!(svd.singular_values[1] < 1e-14);
        let n = 3;
        let mut us = svd.left.clone();
        for j in 0..n {
            for i in 0..n {
                us[(i, j)] *= svd.singular_values[j];
            }
        }
        let recon = &us * &svd.right.adjoint();
        assert!((&recon - &a).frobenius_norm() < 1e-13);
        // Left factor is unitary even though the rank is 1.
        let eye = ComplexMatrix::identity(n).unwrap();
        assert!((&(&svd.left.adjoint() * &svd.left) - &eye).frobenius_norm() < 1e-13);
    }

    #[test]
    fn zero_matrix_left_factor_is_identity() {
        let a = ComplexMatrix::zeros(3).unwrap();
        let svd = svd_jacobi(&a).unwrap();
        assert_eq!(svd.singular_values, vec![0.0; 3]);
        let eye = ComplexMatrix::identity(3).unwrap();
        assert!((&svd.left - &eye).frobenius_norm() == 0.0);
    }

    #[test]
    fn tiny_singular_value_keeps_relative_accuracy() {
        let a = ComplexMatrix::diagonal(&[1.0, 1e-9]).unwrap();
        let sigma = singular_values_jacobi(&a).unwrap();
        assert_eq!(sigma[1], 1e-9);
    }
}

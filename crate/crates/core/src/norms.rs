use num_complex::Complex64;

use crate::eigen::hermitian_eigen;
use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::svd::singular_values_jacobi;

/// Singular values of A, descending.
pub fn singular_values(a: &ComplexMatrix) -> Result<Vec<f64>> {
    singular_values_jacobi(a)
}

/// Schatten p-norm: (Σ σ_j^p)^(1/p) for 1 ≤ p < ∞, σ_max for p = +∞.
///
/// p = 2 short-circuits to the entrywise Frobenius norm (the same quantity,
/// computed without a decomposition). Rejects p < 1 and NaN.
pub fn schatten_norm(a: &ComplexMatrix, p: f64) -> Result<f64> {
    if p.is_nan() || p < 1.0 {
        return Err(Error::InvalidExponent { p });
    }
    if p == 2.0 {
        return Ok(a.frobenius_norm());
    }
    let sigma = singular_values_jacobi(a)?;
    let top = sigma[0];
    if p.is_infinite() || top == 0.0 {
        return Ok(top);
    }
    // Factor out σ_max so σ^p cannot overflow for large p; the ratios lie in
    // [0, 1] and the sum in [1, n].
    let sum: f64 = sigma.iter().map(|s| (s / top).powf(p)).sum();
    Ok(top * sum.powf(1.0 / p))
}

/// Largest singular value, i.e. the Schatten ∞-norm.
pub fn operator_norm(a: &ComplexMatrix) -> Result<f64> {
    Ok(singular_values_jacobi(a)?[0])
}

/// Frobenius inner product tr(S*T).
pub fn trace_inner(s: &ComplexMatrix, t: &ComplexMatrix) -> Result<Complex64> {
    if s.order() != t.order() {
        return Err(Error::DimensionMismatch {
            left: s.order(),
            right: t.order(),
        });
    }
    let mut sum = Complex64::ZERO;
    for (a, b) in s.entries().iter().zip(t.entries()) {
        sum += a.conj() * b;
    }
    Ok(sum)
}

/// True iff the largest singular value is at most 1 + tol.
pub fn is_contraction(q: &ComplexMatrix, tol: f64) -> Result<bool> {
    Ok(operator_norm(q)? <= 1.0 + tol)
}

/// True iff X is Hermitian within tol·(1 + ‖X‖_F) and its smallest
/// eigenvalue is at least -tol·(1 + σ_max). Non-Hermitian input is a `false`,
/// not an error: the question "is this psd" has a definite negative answer.
pub fn is_psd(x: &ComplexMatrix, tol: f64) -> Result<bool> {
    if x.hermitian_defect() > tol * (1.0 + x.frobenius_norm()) {
        return Ok(false);
    }
    // Symmetrize before the eigensolver so its own (tighter) Hermitian
    // precondition cannot fire for inputs we already accepted.
    let n = x.order();
    let sym = ComplexMatrix::from_fn(n, |i, j| {
        let z = (x[(i, j)] + x[(j, i)].conj()) * 0.5;
        if i == j {
            Complex64::new(z.re, 0.0)
        } else {
            z
        }
    })?;
    let eig = hermitian_eigen(&sym)?;
    let top = eig.values.iter().fold(0.0f64, |m, &v| m.max(v.abs()));
    let min = *eig.values.last().expect("order is at least 1");
    Ok(min >= -tol * (1.0 + top))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> ComplexMatrix {
        // Singular values 3, 2, 0 by construction.
        ComplexMatrix::diagonal(&[-3.0, 2.0, 0.0]).unwrap()
    }

    #[test]
    fn schatten_known_values() {
        let a = fixture();
        assert_eq!(schatten_norm(&a, 1.0).unwrap(), 5.0);
        assert_eq!(schatten_norm(&a, 2.0).unwrap(), 13f64.sqrt());
        assert_eq!(schatten_norm(&a, f64::INFINITY).unwrap(), 3.0);
        let p3 = schatten_norm(&a, 3.0).unwrap();
        assert!((p3 - 35f64.cbrt()).abs() < 1e-14);
    }

    #[test]
    fn schatten_rejects_bad_exponents() {
        let a = fixture();
        assert!(matches!(
            schatten_norm(&a, 0.5).unwrap_err(),
            Error::InvalidExponent { .. }
        ));
        assert!(matches!(
            schatten_norm(&a, f64::NAN).unwrap_err(),
            Error::InvalidExponent { .. }
        ));
    }

    #[test]
    fn schatten_zero_iff_zero() {
        let z = ComplexMatrix::zeros(3).unwrap();
        for p in [1.0, 2.0, 7.5, f64::INFINITY] {
            assert_eq!(schatten_norm(&z, p).unwrap(), 0.0);
        }
        assert!(schatten_norm(&fixture(), 1.5).unwrap() > 0.0);
    }

    #[test]
    fn huge_exponent_does_not_overflow() {
        let a = ComplexMatrix::diagonal(&[3.0, 2.0]).unwrap();
        let v = schatten_norm(&a, 1e12).unwrap();
        assert!((v - 3.0).abs() < 1e-9);
    }

    #[test]
    fn trace_inner_oracle() {
        let s = ComplexMatrix::new(
            1,
            vec![Complex64::new(1.0, 2.0)],
        )
        .unwrap();
        let t = ComplexMatrix::new(
            1,
            vec![Complex64::new(3.0, -1.0)],
        )
        .unwrap();
        // conj(1+2i)·(3-i) = (1-2i)(3-i) = 3 - i - 6i + 2i² = 1 - 7i
        assert_eq!(trace_inner(&s, &t).unwrap(), Complex64::new(1.0, -7.0));
        let wrong = ComplexMatrix::zeros(2).unwrap();
        assert!(matches!(
            trace_inner(&s, &wrong).unwrap_err(),
            Error::DimensionMismatch { left: 1, right: 2 }
        ));
    }

    #[test]
    fn contraction_check() {
        let q = ComplexMatrix::diagonal(&[1.0, -0.5]).unwrap();
        assert!(is_contraction(&q, 1e-9).unwrap());
        let big = ComplexMatrix::diagonal(&[1.0 + 1e-6, 0.0]).unwrap();
        assert!(!is_contraction(&big, 1e-9).unwrap());
    }

    #[test]
    fn psd_check() {
        let x = ComplexMatrix::diagonal(&[2.0, 0.0]).unwrap();
        assert!(is_psd(&x, 1e-9).unwrap());
        let neg = ComplexMatrix::diagonal(&[2.0, -1e-3]).unwrap();
        assert!(!is_psd(&neg, 1e-9).unwrap());
        let skew = ComplexMatrix::from_real_rows(&[&[1.0, 1.0], &[0.0, 1.0]]).unwrap();
        assert!(!is_psd(&skew, 1e-9).unwrap());
        // Tiny negative within tolerance counts as psd.
        let barely = ComplexMatrix::diagonal(&[1.0, -1e-12]).unwrap();
        assert!(is_psd(&barely, 1e-9).unwrap());
    }
}

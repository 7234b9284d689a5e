use num_complex::Complex64;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;

/// Spectral decomposition H = V diag(values) V* of a Hermitian matrix.
///
/// `values` is sorted descending; column j of `vectors` is the unit
/// eigenvector for `values[j]`. Ties keep the order in which the Jacobi
/// iteration produced them, so the output is deterministic.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    pub vectors: ComplexMatrix,
}

impl HermitianEigen {
    /// V diag(values) V*, for residual checks.
    pub fn reconstruct(&self) -> ComplexMatrix {
        let n = self.vectors.order();
        let mut scaled = self.vectors.clone();
        for j in 0..n {
            for i in 0..n {
                scaled[(i, j)] *= self.values[j];
            }
        }
        &scaled * &self.vectors.adjoint()
    }
}

const MAX_SWEEPS: usize = 60;

/// Off-diagonal Frobenius mass, the quantity driven to zero by the rotations.
fn off_diagonal_mass(h: &ComplexMatrix) -> f64 {
    let n = h.order();
    let mut sum = 0.0;
    for i in 0..n {
        for j in 0..n {
            if i != j {
                sum += h[(i, j)].norm_sqr();
            }
        }
    }
    sum.sqrt()
}

/// One complex Jacobi rotation for the pivot (p, q): returns (c, s, phase)
/// with c, s real, c² + s² = 1, |phase| = 1, such that conjugating by
///   J = [[c·phase, s·phase], [-s, c]]
/// zeroes the (p, q) entry of the embedded 2x2 Hermitian block
/// [[app, apq], [apq*, aqq]]. Requires apq != 0.
pub(crate) fn rotation_for(app: f64, aqq: f64, apq: Complex64) -> (f64, f64, Complex64) {
    let r = apq.norm();
    let phase = apq / r;
    let theta = (aqq - app) / (2.0 * r);
    // Smaller root of t^2 + 2 theta t - 1 = 0; the guard avoids overflow in
    // theta^2 for extreme diagonal spreads.
    let t = if theta.abs() > 1e150 {
        1.0 / (2.0 * theta)
    } else {
        theta.signum() / (theta.abs() + (theta * theta + 1.0).sqrt())
    };
    let c = 1.0 / (t * t + 1.0).sqrt();
    let s = t * c;
    (c, s, phase)
}

/// Applies J to columns (p, q) of `m`, i.e. m <- m · J.
pub(crate) fn rotate_columns(
    m: &mut ComplexMatrix,
    p: usize,
    q: usize,
    c: f64,
    s: f64,
    phase: Complex64,
) {
    let n = m.order();
    for i in 0..n {
        let mip = m[(i, p)];
        let miq = m[(i, q)];
        m[(i, p)] = c * phase * mip - s * miq;
        m[(i, q)] = s * phase * mip + c * miq;
    }
}

/// Applies J* to rows (p, q) of `m`, i.e. m <- J* · m.
fn rotate_rows(m: &mut ComplexMatrix, p: usize, q: usize, c: f64, s: f64, phase: Complex64) {
    let n = m.order();
    let pc = phase.conj();
    for j in 0..n {
        let mpj = m[(p, j)];
        let mqj = m[(q, j)];
        m[(p, j)] = c * pc * mpj - s * mqj;
        m[(q, j)] = s * pc * mpj + c * mqj;
    }
}

/// Eigendecomposition of a Hermitian matrix by cyclic complex Jacobi
/// rotations.
///
/// The input must be Hermitian up to a defect of 1e-12 · (1 + ‖H‖_F); it is
/// symmetrized before iterating so roundoff in the caller's assembly cannot
/// leak into the spectrum. Fails with `NoConvergence` if the off-diagonal
/// mass has not dropped below 1e-13 · (1 + ‖H‖_F) after 60 sweeps.
pub fn hermitian_eigen(h: &ComplexMatrix) -> Result<HermitianEigen> {
    let n = h.order();
    let scale = h.frobenius_norm();
    let allowed = 1e-12 * (1.0 + scale);
    let defect = h.hermitian_defect();
    if defect > allowed {
        return Err(Error::NotHermitian { defect, allowed });
    }

    // Exact symmetrization: a = (h + h*)/2, diagonal forced real.
    let mut a = ComplexMatrix::from_fn(n, |i, j| {
        let z = (h[(i, j)] + h[(j, i)].conj()) * 0.5;
        if i == j {
            Complex64::new(z.re, 0.0)
        } else {
            z
        }
    })?;
    let mut v = ComplexMatrix::identity(n)?;

    let target = 1e-13 * (1.0 + scale);
    let mut residual = off_diagonal_mass(&a);
    let mut sweeps = 0;
    while residual > target {
        if sweeps == MAX_SWEEPS {
            return Err(Error::NoConvergence {
                algorithm: "hermitian Jacobi",
                sweeps,
                residual,
            });
        }
        for p in 0..n - 1 {
            for q in p + 1..n {
                let apq = a[(p, q)];
                if apq.norm() == 0.0 {
                    continue;
                }
                let (c, s, phase) = rotation_for(a[(p, p)].re, a[(q, q)].re, apq);
                rotate_columns(&mut a, p, q, c, s, phase);
                rotate_rows(&mut a, p, q, c, s, phase);
                // The pivot is annihilated by construction; writing the exact
                // zero keeps roundoff from re-entering the off-diagonal mass.
                a[(p, q)] = Complex64::ZERO;
                a[(q, p)] = Complex64::ZERO;
                a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
                a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
                rotate_columns(&mut v, p, q, c, s, phase);
            }
        }
        sweeps += 1;
        residual = off_diagonal_mass(&a);
    }

    // Sort descending; stable in the diagonal position for exact ties.
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&i, &j| a[(j, j)].re.total_cmp(&a[(i, i)].re));
    let values: Vec<f64> = order.iter().map(|&k| a[(k, k)].re).collect();
    let vectors = ComplexMatrix::from_fn(n, |i, j| v[(i, order[j])])?;

    Ok(HermitianEigen { values, vectors })
}

use num_complex::Complex64;
use std::f64::consts::SQRT_2;

use crate::error::{Error, Result};
use crate::matrix::ComplexMatrix;
use crate::norms::{is_contraction, is_psd, operator_norm, trace_inner};
use crate::polar::abs_via_svd;
use crate::report::{CertReport, CERT_REL_TOL};

/// Weight at which the two sides of the weighted trace bound balance:
/// 2 + t = 1/t, i.e. t = √2 - 1.
pub fn optimal_t() -> f64 {
    SQRT_2 - 1.0
}

/// The best possible constant in the Frobenius comparison
/// ‖A + B‖_F ≤ c·‖|A| + |B|‖_F, namely √((1 + √2)/2) ≈ 1.0986841134678098.
pub fn sharp_constant() -> f64 {
    ((1.0 + SQRT_2) / 2.0).sqrt()
}

fn check_same_order(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<()> {
    if a.order() != b.order() {
        return Err(Error::DimensionMismatch {
            left: a.order(),
            right: b.order(),
        });
    }
    Ok(())
}

/// |tr(S*T)| ≤ ‖S‖_F · ‖T‖_F.
pub fn cauchy_schwarz_step(s: &ComplexMatrix, t: &ComplexMatrix) -> Result<CertReport> {
    check_same_order(s, t)?;
    let lhs = trace_inner(s, t)?.norm();
    let rhs = s.frobenius_norm() * t.frobenius_norm();
    Ok(CertReport::certify("cauchy-schwarz", lhs, rhs))
}

/// 2√(ab) ≤ t·a + b/t for a, b ≥ 0 and t > 0.
pub fn am_gm_step(a: f64, b: f64, t: f64) -> Result<CertReport> {
    if !a.is_finite() || a < 0.0 {
        return Err(Error::NegativeOperand { name: "a", value: a });
    }
    if !b.is_finite() || b < 0.0 {
        return Err(Error::NegativeOperand { name: "b", value: b });
    }
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::NonPositiveParameter { name: "t", value: t });
    }
    let lhs = 2.0 * (a * b).sqrt();
    let rhs = t * a + b / t;
    Ok(CertReport::certify("am-gm", lhs, rhs))
}

/// The two steps composing the weighted trace inequality
/// 2·|tr(S*T)| ≤ t·tr(S*S) + (1/t)·tr(T*T), plus the inequality itself.
#[derive(Debug, Clone)]
pub struct Lemma1Certificate {
    pub cauchy_schwarz: CertReport,
    pub am_gm: CertReport,
    pub overall: CertReport,
}

impl Lemma1Certificate {
    pub fn all_satisfied(&self) -> bool {
        self.cauchy_schwarz.satisfied && self.am_gm.satisfied && self.overall.satisfied
    }
}

/// Certifies 2·|tr(S*T)| ≤ t·tr(S*S) + (1/t)·tr(T*T) by chaining
/// Cauchy-Schwarz (cross term against the norm product) with AM-GM
/// (norm product against the weighted sum of squares).
pub fn lemma1_certify(s: &ComplexMatrix, t_mat: &ComplexMatrix, t: f64) -> Result<Lemma1Certificate> {
    check_same_order(s, t_mat)?;
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::NonPositiveParameter { name: "t", value: t });
    }
    let cross = trace_inner(s, t_mat)?.norm();
    let ns2 = trace_inner(s, s)?.re;
    let nt2 = trace_inner(t_mat, t_mat)?.re;

    let cauchy_schwarz = CertReport::certify(
        "lemma1.cauchy-schwarz",
        2.0 * cross,
        2.0 * (ns2 * nt2).sqrt(),
    );
    let am_gm = CertReport::certify(
        "lemma1.am-gm",
        2.0 * (ns2 * nt2).sqrt(),
        t * ns2 + nt2 / t,
    );
    let overall = CertReport::certify("lemma1", 2.0 * cross, t * ns2 + nt2 / t);
    Ok(Lemma1Certificate {
        cauchy_schwarz,
        am_gm,
        overall,
    })
}

/// Certifies 4·|tr(Q·X·Y)| ≤ t·tr(X² + Y²) + (1/t)·tr(XY + YX) for a
/// contraction Q and positive semidefinite X, Y. Preconditions are checked
/// individually at the certification tolerance and reported by name.
pub fn lemma2_certify(
    q: &ComplexMatrix,
    x: &ComplexMatrix,
    y: &ComplexMatrix,
    t: f64,
) -> Result<CertReport> {
    check_same_order(q, x)?;
    check_same_order(x, y)?;
    if !t.is_finite() || t <= 0.0 {
        return Err(Error::NonPositiveParameter { name: "t", value: t });
    }
    if !is_psd(x, CERT_REL_TOL)? {
        return Err(Error::NotPsd { name: "X" });
    }
    if !is_psd(y, CERT_REL_TOL)? {
        return Err(Error::NotPsd { name: "Y" });
    }
    if !is_contraction(q, CERT_REL_TOL)? {
        return Err(Error::NotContraction {
            name: "Q",
            norm: operator_norm(q)?,
        });
    }

    let xy = x * y;
    let lhs = 4.0 * (&(q * x) * y).trace().norm();
    let squares = (&(x * x) + &(y * y)).trace().re;
    let mixed = (&xy + &(y * x)).trace().re;
    let rhs = t * squares + mixed / t;
    Ok(CertReport::certify("lemma2", lhs, rhs))
}

/// Verdict for the Frobenius comparison ‖A + B‖_F ≤ √((1+√2)/2)·‖|A|+|B|‖_F,
/// along with the achieved ratio (None when A = B = 0, where the ratio is
/// undefined but the inequality itself is trivially satisfied).
#[derive(Debug, Clone)]
pub struct TheoremReport {
    pub report: CertReport,
    pub ratio: Option<f64>,
}

pub fn theorem_certify(a: &ComplexMatrix, b: &ComplexMatrix) -> Result<TheoremReport> {
    check_same_order(a, b)?;
    let lhs = (a + b).frobenius_norm();
    let denom = (&abs_via_svd(a)? + &abs_via_svd(b)?).frobenius_norm();
    let rhs = sharp_constant() * denom;
    let report = CertReport::certify("theorem", lhs, rhs);
    let ratio = if denom > 0.0 { Some(lhs / denom) } else { None };
    Ok(TheoremReport { report, ratio })
}

/// The 2x2 pair realizing the extremal ratio as alpha varies:
/// A = [[1, 0], [0, 0]], B = [[cos α, -sin α], [0, 0]].
pub fn canonical_pair(alpha: f64) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if !alpha.is_finite() {
        return Err(Error::NonPositiveParameter {
            name: "alpha",
            value: alpha,
        });
    }
    let a = ComplexMatrix::diagonal(&[1.0, 0.0])?;
    let b = ComplexMatrix::new(
        2,
        vec![
            Complex64::new(alpha.cos(), 0.0),
            Complex64::new(-alpha.sin(), 0.0),
            Complex64::ZERO,
            Complex64::ZERO,
        ],
    )?;
    Ok((a, b))
}

/// Closed form of the Frobenius ratio on the canonical pair:
/// √((1 + cos α) / (1 + cos²α)). Maximized where cos α = √2 - 1.
pub fn canonical_ratio(alpha: f64) -> f64 {
    let c = alpha.cos();
    ((1.0 + c) / (1.0 + c * c)).sqrt()
}

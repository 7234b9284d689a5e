use std::fmt;

/// Relative component of the certification tolerance.
pub const CERT_REL_TOL: f64 = 1e-9;
/// Absolute component of the certification tolerance.
pub const CERT_ABS_TOL: f64 = 1e-12;

/// Outcome of checking one inequality lhs ≤ rhs.
///
/// `satisfied` holds iff lhs ≤ rhs·(1 + 1e-9) + 1e-12, so exact-equality
/// cases pass under roundoff while genuine violations at or above the 1e-9
/// relative scale are flagged. `slack` is rhs - lhs (negative when violated)
/// and `relative_slack` is slack / max(1, rhs).
#[derive(Debug, Clone, PartialEq)]
pub struct CertReport {
    pub label: String,
    pub lhs: f64,
    pub rhs: f64,
    pub slack: f64,
    pub relative_slack: f64,
    pub tolerance: f64,
    pub satisfied: bool,
}

impl CertReport {
    pub fn certify(label: impl Into<String>, lhs: f64, rhs: f64) -> Self {
        let tolerance = rhs.abs() * CERT_REL_TOL + CERT_ABS_TOL;
        let slack = rhs - lhs;
        Self {
            label: label.into(),
            lhs,
            rhs,
            slack,
            relative_slack: slack / rhs.max(1.0),
            tolerance,
            satisfied: lhs <= rhs + tolerance,
        }
    }

    /// An identity check |x - y| ≤ 1e-9 · max(|x|, |y|), encoded in the same
    /// report shape: lhs = |x - y|, rhs = the allowance.
    pub fn certify_identity(label: impl Into<String>, x: f64, y: f64) -> Self {
        let lhs = (x - y).abs();
        let rhs = CERT_REL_TOL * x.abs().max(y.abs());
        Self::certify(label, lhs, rhs)
    }
}

impl fmt::Display for CertReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "label: {}", self.label)?;
        writeln!(f, "lhs: {:.16e}", self.lhs)?;
        writeln!(f, "rhs: {:.16e}", self.rhs)?;
        writeln!(f, "slack: {:.16e}", self.slack)?;
        writeln!(f, "relative_slack: {:.16e}", self.relative_slack)?;
        writeln!(f, "tolerance: {:.16e}", self.tolerance)?;
        write!(
            f,
            "verdict: {}",
            if self.satisfied { "satisfied" } else { "VIOLATED" }
        )
    }
}

use thiserror::Error;

/// Errors produced by the kernels, certifiers, and search routines.
///
/// Every fallible operation in this crate returns one of these instead of
/// panicking; panics are reserved for internal invariant violations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum Error {
    #[error("matrix order must be at least 1")]
    ZeroOrder,

    #[error("expected {expected} entries for an order-{order} matrix, got {got}")]
    BadEntryCount {
        order: usize,
        expected: usize,
        got: usize,
    },

    #[error("matrix contains a non-finite entry at ({row}, {col})")]
    NonFiniteEntry { row: usize, col: usize },

    #[error("matrix orders disagree: {left} vs {right}")]
    DimensionMismatch { left: usize, right: usize },

    #[error("matrix is not Hermitian: defect {defect:.3e} exceeds {allowed:.3e}")]
    NotHermitian { defect: f64, allowed: f64 },

    #[error("{algorithm} failed to converge within {sweeps} sweeps (residual {residual:.3e})")]
    NoConvergence {
        algorithm: &'static str,
        sweeps: usize,
        residual: f64,
    },

    #[error(
        "eigenvalue {value:.6e} of a product that must be positive semidefinite \
         lies below the clamping floor -{floor:.6e}"
    )]
    EigenvalueBelowFloor { value: f64, floor: f64 },

    #[error("parameter `{name}` must be positive, got {value}")]
    NonPositiveParameter { name: &'static str, value: f64 },

    #[error("operand `{name}` must be nonnegative, got {value}")]
    NegativeOperand { name: &'static str, value: f64 },

    #[error("Schatten exponent must satisfy p >= 1 (or be +inf), got {p}")]
    InvalidExponent { p: f64 },

    #[error("matrix `{name}` is not positive semidefinite within tolerance")]
    NotPsd { name: &'static str },

    #[error("matrix `{name}` is not a contraction: largest singular value {norm:.6e}")]
    NotContraction { name: &'static str, norm: f64 },

    #[error("ratio is undefined when both matrices are zero")]
    UndefinedRatio,

    #[error("`{name}` must be at least {min}, got {got}")]
    CountTooSmall {
        name: &'static str,
        min: usize,
        got: usize,
    },
}

pub type Result<T> = std::result::Result<T, Error>;

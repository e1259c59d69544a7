use takagi_numeric::NumericError;
use takagi_rational::RationalError;
use thiserror::Error;

/// Failures in building or analysing an interpolation data set.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ProblemError {
    #[error("dimension mismatch: {0}")]
    Dimension(String),
    #[error("normalization point {re:.6} + {im:.6}i is not usable: {reason}")]
    ForbiddenMu { re: f64, im: f64, reason: String },
    #[error("subspace F(mu) ker P is not neutral (residual {residual:.3e})")]
    NotNeutral { residual: f64 },
    #[error("neutral basis blocks are rank-deficient; cannot align U and V")]
    DegenerateAlignment,
    #[error("Pick data: {0}")]
    PickData(String),
    #[error(transparent)]
    Numeric(#[from] NumericError),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

use takagi_rational::RationalError;
use thiserror::Error;

/// Failures of Blaschke-Potapov constructions.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum BlaschkeError {
    #[error("not a Schur-class function: boundary sup of the largest singular value is {sigma_max:.6}")]
    NotSchurClass { sigma_max: f64 },
    #[error("pole at {re:.6} + {im:.6}i: multiplicity went from {before} to {after} after a rank-one factor")]
    ExtractionStalled { re: f64, im: f64, before: usize, after: usize },
    #[error("invalid Blaschke-Potapov factor: {0}")]
    InvalidFactor(String),
    #[error(transparent)]
    Rational(#[from] RationalError),
}

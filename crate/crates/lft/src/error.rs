use takagi_blaschke::BlaschkeError;
use takagi_numeric::NumericError;
use takagi_problem::ProblemError;
use takagi_rational::RationalError;
use takagi_resolvent::ResolventError;
use thiserror::Error;

/// Failures of linear fractional transformations and solution analysis.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LftError {
    #[error("w21 eps + w22 is singular, so T_W[eps] is undefined")]
    DegenerateDenominator,
    #[error("w22 is singular, so the Potapov-Ginzburg transform is undefined")]
    DegenerateBlock,
    #[error("no admissible constant contraction found in {tries} tries")]
    SearchExhausted { tries: usize },
    #[error("shape mismatch: {0}")]
    Shape(String),
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Resolvent(#[from] ResolventError),
    #[error(transparent)]
    Rational(#[from] RationalError),
    #[error(transparent)]
    Blaschke(#[from] BlaschkeError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

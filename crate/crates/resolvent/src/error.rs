use takagi_blaschke::BlaschkeError;
use takagi_numeric::NumericError;
use takagi_problem::ProblemError;
use takagi_rational::RationalError;
use thiserror::Error;

/// Failures while building or factoring the resolvent matrix.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum ResolventError {
    #[error("{what} is not holomorphic where required")]
    HolomorphyViolation { what: String },
    #[error("no Bezout solution with numerator degree up to {cap}")]
    DegreeCapExceeded { cap: usize },
    #[error("W = Theta Phi fails with residual {residual:.3e}")]
    FactorizationResidual { residual: f64 },
    #[error("associated pair factor has degree {got}, expected {expected}")]
    PairDegree { expected: usize, got: usize },
    #[error("restricted Stein or Lyapunov solution is singular")]
    SingularGramian,
    #[error("matrix X has shape {rows}x{cols}, expected {n}x{n}")]
    XShape { rows: usize, cols: usize, n: usize },
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Rational(#[from] RationalError),
    #[error(transparent)]
    Blaschke(#[from] BlaschkeError),
    #[error(transparent)]
    Numeric(#[from] NumericError),
}

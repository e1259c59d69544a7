use thiserror::Error;

/// Failures of rational-function operations.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum RationalError {
    #[error("function has a pole at {re:.6} + {im:.6}i")]
    PoleAtPoint { re: f64, im: f64 },
    #[error("determinant vanishes identically")]
    SingularDeterminant,
    #[error("quadrature circle of radius {radius:.3e} encloses another pole")]
    RadiusTooLarge { radius: f64 },
    #[error("denominator is identically zero")]
    ZeroDenominator,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

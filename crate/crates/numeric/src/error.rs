use thiserror::Error;

/// Failures reported by the numeric kernels.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum NumericError {
    #[error("matrix is not Hermitian: asymmetry {asym:.3e} exceeds {limit:.3e}")]
    NotHermitian { asym: f64, limit: f64 },
    #[error("spectrum of {block} is not inside the required region (offending eigenvalue {re:.6} + {im:.6}i)")]
    SpectrumViolation { block: &'static str, re: f64, im: f64 },
    #[error("off-diagonal block equation is not uniquely solvable: sigma(A1) meets the reflected sigma(A2)")]
    NonUniqueSylvester,
    #[error("dimension mismatch: {0}")]
    Dimension(String),
}

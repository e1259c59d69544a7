/// Numerical thresholds used for rank, eigenvalue-sign and residual decisions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Tolerances {
    /// Singular values below `rank_tol * sigma_max` count as zero.
    pub rank_tol: f64,
    /// Eigenvalues inside `(-eig_tol, eig_tol)` count as zero.
    pub eig_tol: f64,
    /// Relative residual accepted when checking matrix identities.
    pub residual_tol: f64,
}

impl Default for Tolerances {
    fn default() -> Self {
        Self { rank_tol: 1e-9, eig_tol: 1e-9, residual_tol: 1e-8 }
    }
}

impl Tolerances {
    /// Builds a tolerance set, replacing non-positive or non-finite entries by the defaults.
    pub fn new(rank_tol: f64, eig_tol: f64, residual_tol: f64) -> Self {
        let d = Self::default();
        let pick = |v: f64, fallback: f64| if v.is_finite() && v > 0.0 { v } else { fallback };
        Self {
            rank_tol: pick(rank_tol, d.rank_tol),
            eig_tol: pick(eig_tol, d.eig_tol),
            residual_tol: pick(residual_tol, d.residual_tol),
        }
    }
}

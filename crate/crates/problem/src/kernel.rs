use crate::error::ProblemError;
use takagi_numeric::{hermitian_eigen, hermitian_part, CMatrix, Complex64, DomainKind, Tolerances};
use takagi_rational::RationalMVF;

/// A Hermitian matrix kernel `K_omega(lambda)` sampled by [`negative_squares_sample`].
pub trait HermitianKernel {
    /// Size of the square matrix values.
    fn dim(&self) -> usize;
    /// `K_omega(lambda)`.
    fn eval(&self, lambda: Complex64, omega: Complex64) -> Result<CMatrix, ProblemError>;
}

/// `(I_p - s(lambda) s(omega)*) / rho_omega(lambda)` for a `p x q` function `s`.
#[derive(Debug, Clone)]
pub struct SchurKernel<'a> {
    pub s: &'a RationalMVF,
}

impl HermitianKernel for SchurKernel<'_> {
    fn dim(&self) -> usize {
        self.s.rows()
    }
    fn eval(&self, lambda: Complex64, omega: Complex64) -> Result<CMatrix, ProblemError> {
        let sl = self.s.eval(lambda)?;
        let so = self.s.eval(omega)?;
        let p = self.s.rows();
        Ok((CMatrix::identity(p, p) - sl * so.adjoint()) / self.s.domain().rho(lambda, omega))
    }
}

/// `(J - W(lambda) J W(omega)*) / rho_omega(lambda)` for a square function `W` and signature `J`.
#[derive(Debug, Clone)]
pub struct JKernel<'a> {
    pub w: &'a RationalMVF,
    pub j: CMatrix,
    pub domain: DomainKind,
}

impl HermitianKernel for JKernel<'_> {
    fn dim(&self) -> usize {
        self.w.rows()
    }
    fn eval(&self, lambda: Complex64, omega: Complex64) -> Result<CMatrix, ProblemError> {
        let wl = self.w.eval(lambda)?;
        let wo = self.w.eval(omega)?;
        Ok((&self.j - wl * &self.j * wo.adjoint()) / self.domain.rho(lambda, omega))
    }
}

/// Number of negative eigenvalues of the Gram matrix `[u_a* K_{omega_k}(omega_j) u_b]`.
///
/// Every point is paired with every column of `directions`. Eigenvalues below
/// `-eig_tol * max(1, max |eigenvalue|)` count as negative.
pub fn negative_squares_sample(
    kernel: &dyn HermitianKernel,
    points: &[Complex64],
    directions: &CMatrix,
    tol: &Tolerances,
) -> Result<usize, ProblemError> {
    if directions.nrows() != kernel.dim() {
        return Err(ProblemError::Dimension(format!(
            "directions have {} rows, kernel is {}x{}",
            directions.nrows(),
            kernel.dim(),
            kernel.dim()
        )));
    }
    let r = directions.ncols();
    let size = points.len() * r;
    if size == 0 {
        return Ok(0);
    }
    let mut gram = CMatrix::zeros(size, size);
    for (j, &wj) in points.iter().enumerate() {
        for (k, &wk) in points.iter().enumerate().skip(j) {
            let blk = directions.adjoint() * kernel.eval(wj, wk)? * directions;
            gram.view_mut((j * r, k * r), (r, r)).copy_from(&blk);
            if j != k {
                gram.view_mut((k * r, j * r), (r, r)).copy_from(&blk.adjoint());
            }
        }
    }
    let eig = hermitian_eigen(&hermitian_part(&gram));
    let scale = eig.values.iter().fold(1.0f64, |a, v| a.max(v.abs()));
    Ok(eig.values.iter().filter(|&&v| v < -tol.eig_tol * scale).count())
}

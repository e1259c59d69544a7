use crate::error::ResolventError;
use takagi_numeric::{hermitian_part, norm2, pinv_hermitian, CMatrix, Complex64, DomainKind, Tolerances};
use takagi_problem::DataSet;
use takagi_rational::{Poly, RationalMVF};

/// The resolvent matrix `W(lambda) = I_m - rho_mu(lambda) F(lambda) X F(mu)* j` of a data set.
#[derive(Debug, Clone)]
pub struct ResolventW {
    ds: DataSet,
    x: CMatrix,
    w: RationalMVF,
}

impl ResolventW {
    pub fn ds(&self) -> &DataSet {
        &self.ds
    }
    pub fn x(&self) -> &CMatrix {
        &self.x
    }
    pub fn mu(&self) -> Complex64 {
        self.ds.mu()
    }
    pub fn domain(&self) -> DomainKind {
        self.ds.domain()
    }
    pub fn p(&self) -> usize {
        self.ds.p()
    }
    pub fn q(&self) -> usize {
        self.ds.q()
    }
    /// Signature matrix `j_pq`.
    pub fn j(&self) -> CMatrix {
        self.ds.j()
    }
    /// `W` as an `m x m` rational matrix.
    pub fn rational(&self) -> &RationalMVF {
        &self.w
    }
    pub fn eval(&self, lambda: Complex64) -> Result<CMatrix, ResolventError> {
        Ok(self.w.eval(lambda)?)
    }
    pub fn w11(&self) -> RationalMVF {
        self.w.block(0, 0, self.p(), self.p())
    }
    pub fn w12(&self) -> RationalMVF {
        self.w.block(0, self.p(), self.p(), self.q())
    }
    pub fn w21(&self) -> RationalMVF {
        self.w.block(self.p(), 0, self.q(), self.p())
    }
    pub fn w22(&self) -> RationalMVF {
        self.w.block(self.p(), self.p(), self.q(), self.q())
    }
}

/// `rho_mu(lambda)` as a polynomial in `lambda`.
pub(crate) fn rho_poly(domain: DomainKind, mu: Complex64) -> Poly {
    let one = Complex64::new(1.0, 0.0);
    match domain {
        DomainKind::Disc => Poly::linear(one, -mu.conj()),
        DomainKind::HalfPlane => Poly::linear(mu.conj(), one),
    }
}

/// Builds `W` from the realization. `X` defaults to the spectral pseudoinverse of `P`.
pub fn build_w(ds: &DataSet, x: Option<&CMatrix>, tol: &Tolerances) -> Result<ResolventW, ResolventError> {
    let n = ds.n();
    let x = match x {
        Some(x) if x.shape() != (n, n) => return Err(ResolventError::XShape { rows: x.nrows(), cols: x.ncols(), n }),
        Some(x) => x.clone(),
        None => pinv_hermitian(&hermitian_part(ds.pmat()), tol),
    };
    let mu = ds.mu();
    let right = &x * ds.f_eval(mu)?.adjoint() * ds.j();
    let f = ds.f_rational()?;
    let term = f.right_mul_const(&right).mul_scalar_fn(&rho_poly(ds.domain(), mu), &Poly::one());
    let w = &RationalMVF::identity(ds.m(), ds.domain()) - &term;
    Ok(ResolventW { ds: ds.clone(), x, w })
}

/// `W^-1 = j W^# j`.
pub fn w_inverse(w: &ResolventW) -> RationalMVF {
    let j = w.j();
    w.rational().adjoint_sharp().left_mul_const(&j).right_mul_const(&j)
}

/// Largest `|| F(lambda) X F(omega)* - (j - W(lambda) j W(omega)*) / rho_omega(lambda) ||` over pairs of points.
pub fn kernel_residual(w: &ResolventW, points: &[Complex64]) -> Result<f64, ResolventError> {
    let ds = w.ds();
    let j = w.j();
    let mut worst = 0.0f64;
    let vals: Vec<(CMatrix, CMatrix)> =
        points.iter().map(|&z| Ok((ds.f_eval(z)?, w.eval(z)?))).collect::<Result<_, ResolventError>>()?;
    for (a, (fa, wa)) in points.iter().zip(&vals) {
        for (b, (fb, wb)) in points.iter().zip(&vals) {
            let lhs = fa * w.x() * fb.adjoint();
            let rhs = (&j - wa * &j * wb.adjoint()) / ds.domain().rho(*a, *b);
            worst = worst.max(norm2(&(lhs - rhs)));
        }
    }
    Ok(worst)
}

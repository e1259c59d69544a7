use crate::error::ProblemError;
use takagi_numeric::{
    signature, solve_lyapunov_halfplane, solve_stein_disc, stein_pencil, CMatrix, Complex64, DomainKind, Tolerances,
};
use takagi_rational::{Poly, RationalError, RationalMVF};

/// Interpolation data `(A1, A2, C, P)` with block sizes, target index and normalization point.
#[derive(Debug, Clone, PartialEq)]
pub struct DataSet {
    domain: DomainKind,
    a1: CMatrix,
    a2: CMatrix,
    c: CMatrix,
    pmat: CMatrix,
    p: usize,
    q: usize,
    kappa: usize,
    mu: Complex64,
}

/// Smallest singular value, relative to the largest, below which the pencil counts as singular at `mu`.
const PENCIL_TOL: f64 = 1e-10;

impl DataSet {
    /// Builds a data set after checking dimensions and the normalization point.
    ///
    /// When `mu` is `None` the domain default is used, moved along the boundary if
    /// the pencil `M - mu N` is singular there.
    #[allow(clippy::too_many_arguments)]
    pub fn new(
        domain: DomainKind,
        a1: CMatrix,
        a2: CMatrix,
        c: CMatrix,
        pmat: CMatrix,
        p: usize,
        q: usize,
        kappa: usize,
        mu: Option<Complex64>,
    ) -> Result<Self, ProblemError> {
        check_dims(&a1, &a2, &c, p, q)?;
        let n = a1.nrows() + a2.nrows();
        if pmat.shape() != (n, n) {
            return Err(ProblemError::Dimension(format!("P is {}x{}, expected {n}x{n}", pmat.nrows(), pmat.ncols())));
        }
        let mut ds = Self { domain, a1, a2, c, pmat, p, q, kappa, mu: domain.default_mu() };
        ds.mu = match mu {
            Some(m) => {
                if !domain.on_boundary(m) {
                    return Err(ProblemError::ForbiddenMu { re: m.re, im: m.im, reason: "not on the boundary".into() });
                }
                if !ds.pencil_invertible_at(m) {
                    return Err(ProblemError::ForbiddenMu {
                        re: m.re,
                        im: m.im,
                        reason: "M - mu N is singular".into(),
                    });
                }
                m
            }
            None => ds.pick_mu()?,
        };
        Ok(ds)
    }

    /// Builds a data set whose `P` solves the Stein (disc) or Lyapunov (half-plane) equation.
    #[allow(clippy::too_many_arguments)]
    pub fn with_solved_p(
        domain: DomainKind,
        a1: CMatrix,
        a2: CMatrix,
        c: CMatrix,
        p: usize,
        q: usize,
        kappa: usize,
        mu: Option<Complex64>,
        tol: &Tolerances,
    ) -> Result<Self, ProblemError> {
        check_dims(&a1, &a2, &c, p, q)?;
        let pmat = match domain {
            DomainKind::Disc => solve_stein_disc(&a1, &a2, &c, p, tol)?,
            DomainKind::HalfPlane => solve_lyapunov_halfplane(&a1, &a2, &c, p, tol)?,
        };
        Self::new(domain, a1, a2, c, pmat, p, q, kappa, mu)
    }

    /// Same data with another target index.
    pub fn with_kappa(&self, kappa: usize) -> Self {
        Self { kappa, ..self.clone() }
    }

    fn pencil_invertible_at(&self, mu: Complex64) -> bool {
        let (m, n) = self.pencil();
        let l = m - n * mu;
        if l.is_empty() {
            return true;
        }
        let s = takagi_numeric::singular_values(&l);
        s.last().copied().unwrap_or(0.0) > PENCIL_TOL * s[0].max(1.0)
    }

    fn pick_mu(&self) -> Result<Complex64, ProblemError> {
        let base = self.domain.default_mu();
        let candidates: Vec<Complex64> = match self.domain {
            DomainKind::Disc => (0..32)
                .map(|k| {
                    Complex64::from_polar(
                        1.0,
                        2.0 * std::f64::consts::PI * k as f64 / 32.0 + 0.1 * (k > 0) as u8 as f64,
                    )
                })
                .collect(),
            DomainKind::HalfPlane => std::iter::once(base)
                .chain(
                    (1..32)
                        .map(|k| Complex64::new(0.0, if k % 2 == 1 { (k / 2 + 1) as f64 } else { -((k / 2) as f64) })),
                )
                .collect(),
        };
        candidates.into_iter().find(|&m| self.pencil_invertible_at(m)).ok_or(ProblemError::ForbiddenMu {
            re: base.re,
            im: base.im,
            reason: "no boundary point with an invertible pencil".into(),
        })
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }
    pub fn a1(&self) -> &CMatrix {
        &self.a1
    }
    pub fn a2(&self) -> &CMatrix {
        &self.a2
    }
    pub fn c(&self) -> &CMatrix {
        &self.c
    }
    /// The Hermitian data matrix `P`.
    pub fn pmat(&self) -> &CMatrix {
        &self.pmat
    }
    pub fn p(&self) -> usize {
        self.p
    }
    pub fn q(&self) -> usize {
        self.q
    }
    pub fn m(&self) -> usize {
        self.p + self.q
    }
    pub fn n1(&self) -> usize {
        self.a1.nrows()
    }
    pub fn n2(&self) -> usize {
        self.a2.nrows()
    }
    pub fn n(&self) -> usize {
        self.n1() + self.n2()
    }
    pub fn kappa(&self) -> usize {
        self.kappa
    }
    pub fn mu(&self) -> Complex64 {
        self.mu
    }

    /// Signature matrix `j_pq = diag(I_p, -I_q)`.
    pub fn j(&self) -> CMatrix {
        signature(self.p, self.q)
    }

    /// Pencil `(M, N)` of the domain.
    pub fn pencil(&self) -> (CMatrix, CMatrix) {
        stein_pencil(self.domain, &self.a1, &self.a2)
    }

    /// Top `p` rows of `C`.
    pub fn c1(&self) -> CMatrix {
        self.c.rows(0, self.p).into_owned()
    }
    /// Bottom `q` rows of `C`.
    pub fn c2(&self) -> CMatrix {
        self.c.rows(self.p, self.q).into_owned()
    }
    pub fn c11(&self) -> CMatrix {
        self.c.view((0, 0), (self.p, self.n1())).into_owned()
    }
    pub fn c12(&self) -> CMatrix {
        self.c.view((0, self.n1()), (self.p, self.n2())).into_owned()
    }
    pub fn c21(&self) -> CMatrix {
        self.c.view((self.p, 0), (self.q, self.n1())).into_owned()
    }
    pub fn c22(&self) -> CMatrix {
        self.c.view((self.p, self.n1()), (self.q, self.n2())).into_owned()
    }
    /// Lower-left block `P21` of `P`.
    pub fn p21(&self) -> CMatrix {
        self.pmat.view((self.n1(), 0), (self.n2(), self.n1())).into_owned()
    }

    /// `F(lambda) = C (M - lambda N)^-1`.
    pub fn f_eval(&self, lambda: Complex64) -> Result<CMatrix, ProblemError> {
        let (m, n) = self.pencil();
        if self.n() == 0 {
            return Ok(CMatrix::zeros(self.m(), 0));
        }
        let inv = (m - n * lambda).try_inverse().ok_or(RationalError::PoleAtPoint { re: lambda.re, im: lambda.im })?;
        Ok(&self.c * inv)
    }

    /// `F` as a rational matrix function.
    pub fn f_rational(&self) -> Result<RationalMVF, ProblemError> {
        let (m, n) = self.pencil();
        if self.n() == 0 {
            return Ok(RationalMVF::zeros(self.m(), 0, self.domain));
        }
        let pencil = RationalMVF::from_matrix_coeffs(&[m, -n], Poly::one(), self.domain)?;
        Ok(pencil.inverse()?.left_mul_const(&self.c))
    }

    /// Interpolation node carried by an eigenvalue of `A2`: `conj(z)` on the disc, `-conj(z)` on the half-plane.
    pub fn a2_node(&self, z: Complex64) -> Complex64 {
        match self.domain {
            DomainKind::Disc => z.conj(),
            DomainKind::HalfPlane => -z.conj(),
        }
    }

    /// Eigenvalues of `A1`.
    pub fn nodes1(&self) -> Vec<Complex64> {
        takagi_numeric::eigenvalues(&self.a1)
    }

    /// Nodes carried by `A2`.
    pub fn nodes2(&self) -> Vec<Complex64> {
        takagi_numeric::eigenvalues(&self.a2).into_iter().map(|z| self.a2_node(z)).collect()
    }

    /// All interpolation nodes with numerically repeated points merged.
    pub fn nodes(&self) -> Vec<Complex64> {
        let mut out: Vec<Complex64> = Vec::new();
        for z in self.nodes1().into_iter().chain(self.nodes2()) {
            if !out.iter().any(|w| (w - z).norm() <= 1e-7 * z.norm().max(1.0)) {
                out.push(z);
            }
        }
        out
    }
}

fn check_dims(a1: &CMatrix, a2: &CMatrix, c: &CMatrix, p: usize, q: usize) -> Result<(), ProblemError> {
    if a1.nrows() != a1.ncols() {
        return Err(ProblemError::Dimension(format!("A1 is {}x{}, not square", a1.nrows(), a1.ncols())));
    }
    if a2.nrows() != a2.ncols() {
        return Err(ProblemError::Dimension(format!("A2 is {}x{}, not square", a2.nrows(), a2.ncols())));
    }
    if p == 0 || q == 0 {
        return Err(ProblemError::Dimension(format!("p = {p} and q = {q} must both be positive")));
    }
    let n = a1.nrows() + a2.nrows();
    if n == 0 {
        return Err(ProblemError::Dimension("A1 and A2 are both empty".into()));
    }
    if c.shape() != (p + q, n) {
        return Err(ProblemError::Dimension(format!("C is {}x{}, expected {}x{n}", c.nrows(), c.ncols(), p + q)));
    }
    Ok(())
}

use crate::error::BlaschkeError;
use takagi_numeric::{rank_tol, CMatrix, Complex64, DomainKind, Tolerances};
use takagi_rational::{Poly, RationalError, RationalMVF};

const PROJ_TOL: f64 = 1e-9;

/// Elementary factor `I - P + phi_alpha(lambda) P`.
#[derive(Debug, Clone, PartialEq)]
pub struct BPFactor {
    alpha: Complex64,
    proj: CMatrix,
}

impl BPFactor {
    /// Validates that `proj` is an orthogonal projection and `alpha` lies in the domain.
    pub fn new(alpha: Complex64, proj: CMatrix, domain: DomainKind) -> Result<Self, BlaschkeError> {
        if proj.nrows() != proj.ncols() {
            return Err(BlaschkeError::InvalidFactor("projection is not square".into()));
        }
        let scale = proj.norm().max(1.0);
        if (&proj * &proj - &proj).norm() > PROJ_TOL * scale || (&proj - proj.adjoint()).norm() > PROJ_TOL * scale {
            return Err(BlaschkeError::InvalidFactor("matrix is not an orthogonal projection".into()));
        }
        if !domain.contains(alpha) {
            return Err(BlaschkeError::InvalidFactor(format!("zero {alpha} is not in the {} domain", domain.name())));
        }
        Ok(Self { alpha, proj })
    }

    /// Rank-one factor projecting onto the span of the unit vector `u`.
    pub fn rank_one(alpha: Complex64, u: &CMatrix, domain: DomainKind) -> Result<Self, BlaschkeError> {
        let n = u.norm();
        if n == 0.0 {
            return Err(BlaschkeError::InvalidFactor("zero direction".into()));
        }
        let v = u / Complex64::new(n, 0.0);
        Self::new(alpha, &v * v.adjoint(), domain)
    }

    pub fn alpha(&self) -> Complex64 {
        self.alpha
    }

    pub fn proj(&self) -> &CMatrix {
        &self.proj
    }

    pub fn size(&self) -> usize {
        self.proj.nrows()
    }

    pub fn rank(&self) -> usize {
        rank_tol(&self.proj, &Tolerances::default())
    }

    /// Numerator and denominator of the scalar factor `phi_alpha`.
    fn phi(&self, domain: DomainKind) -> (Poly, Poly) {
        let a = self.alpha;
        let one = Complex64::new(1.0, 0.0);
        match domain {
            DomainKind::Disc => (Poly::linear(-a, one), Poly::linear(one, -a.conj())),
            DomainKind::HalfPlane => (Poly::linear(-a, one), Poly::linear(a.conj(), one)),
        }
    }

    pub fn eval(&self, lambda: Complex64, domain: DomainKind) -> Result<CMatrix, RationalError> {
        let (pn, pd) = self.phi(domain);
        let d = pd.eval(lambda);
        if d.norm() == 0.0 {
            return Err(RationalError::PoleAtPoint { re: lambda.re, im: lambda.im });
        }
        let phi = pn.eval(lambda) / d;
        let id = CMatrix::identity(self.size(), self.size());
        Ok(&id - &self.proj + &self.proj * phi)
    }

    /// The factor as `((I - P) d + P n) / d` with `phi = n / d`.
    pub fn as_rational(&self, domain: DomainKind) -> RationalMVF {
        let (pn, pd) = self.phi(domain);
        self.combine(&pd, &pn, &pd, domain)
    }

    /// The inverse `I - P + P / phi`.
    pub fn inverse_rational(&self, domain: DomainKind) -> RationalMVF {
        let (pn, pd) = self.phi(domain);
        self.combine(&pn, &pd, &pn, domain)
    }

    /// `((I - P) x + P y) / den`.
    fn combine(&self, x: &Poly, y: &Poly, den: &Poly, domain: DomainKind) -> RationalMVF {
        let n = self.size();
        let id = CMatrix::identity(n, n);
        let q = &id - &self.proj;
        let num = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                &x.scale(q[(i, j)]) + &y.scale(self.proj[(i, j)])
            })
            .collect();
        RationalMVF::new(n, n, num, den.clone(), domain).expect("factor denominator is a nonzero linear polynomial")
    }
}

/// Ordered product `b_1 b_2 ... b_k` of elementary factors.
#[derive(Debug, Clone, PartialEq)]
pub struct BPProduct {
    size: usize,
    domain: DomainKind,
    factors: Vec<BPFactor>,
}

impl BPProduct {
    /// The empty product, equal to `I_size`.
    pub fn identity(size: usize, domain: DomainKind) -> Self {
        Self { size, domain, factors: Vec::new() }
    }

    pub fn new(size: usize, domain: DomainKind, factors: Vec<BPFactor>) -> Result<Self, BlaschkeError> {
        if let Some(f) = factors.iter().find(|f| f.size() != size) {
            return Err(BlaschkeError::InvalidFactor(format!(
                "factor of size {} in a product of size {size}",
                f.size()
            )));
        }
        Ok(Self { size, domain, factors })
    }

    pub fn size(&self) -> usize {
        self.size
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    pub fn factors(&self) -> &[BPFactor] {
        &self.factors
    }

    /// Multiplies by `f` on the left.
    pub fn push_front(&mut self, f: BPFactor) {
        self.factors.insert(0, f);
    }

    /// Multiplies by `f` on the right.
    pub fn push_back(&mut self, f: BPFactor) {
        self.factors.push(f);
    }

    /// Total rank of the projections, the degree of the product.
    pub fn degree(&self) -> usize {
        self.factors.iter().map(BPFactor::rank).sum()
    }

    /// Zeros `alpha_j` of the factors, in product order.
    pub fn zeros(&self) -> Vec<Complex64> {
        self.factors.iter().map(BPFactor::alpha).collect()
    }

    pub fn eval(&self, lambda: Complex64) -> Result<CMatrix, RationalError> {
        self.factors
            .iter()
            .try_fold(CMatrix::identity(self.size, self.size), |acc, f| Ok(acc * f.eval(lambda, self.domain)?))
    }

    pub fn as_rational(&self) -> RationalMVF {
        self.factors
            .iter()
            .fold(RationalMVF::identity(self.size, self.domain), |acc, f| &acc * &f.as_rational(self.domain))
    }

    /// `b^-1 = b_k^-1 ... b_1^-1`.
    pub fn inverse_rational(&self) -> RationalMVF {
        self.factors
            .iter()
            .rev()
            .fold(RationalMVF::identity(self.size, self.domain), |acc, f| &acc * &f.inverse_rational(self.domain))
    }

    /// Largest deviation of `b(t)* b(t)` from the identity over `n` boundary samples.
    pub fn unitarity_defect(&self, n: usize) -> Result<f64, RationalError> {
        let id = CMatrix::identity(self.size, self.size);
        self.domain.boundary_samples(n).into_iter().try_fold(0.0f64, |acc, t| {
            let v = self.eval(t)?;
            Ok(acc.max((v.adjoint() * &v - &id).norm()))
        })
    }
}

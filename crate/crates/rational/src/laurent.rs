use crate::error::RationalError;
use crate::mvf::RationalMVF;
use crate::poly::{RootCluster, CLUSTER_TOL};
use std::f64::consts::PI;
use takagi_numeric::{singular_values, CMatrix, Complex64, Tolerances};

/// Quadrature and thresholding parameters for Laurent expansions.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LaurentOptions {
    /// Number of trapezoidal nodes on the circle.
    pub n_quad: usize,
    /// Circle radius; `None` picks half the distance to the nearest other pole.
    pub radius: Option<f64>,
    /// Absolute floor for singular values, relative to the sup-norm on the circle.
    pub coeff_tol: f64,
    /// Relative floor for singular values, relative to the largest one.
    pub rank_tol: f64,
}

impl Default for LaurentOptions {
    fn default() -> Self {
        Self { n_quad: 256, radius: None, coeff_tol: 1e-9, rank_tol: 1e-9 }
    }
}

impl From<&Tolerances> for LaurentOptions {
    fn from(t: &Tolerances) -> Self {
        Self { coeff_tol: t.eig_tol, rank_tol: t.rank_tol, ..Self::default() }
    }
}

/// Laurent coefficients `G_j`, `-order <= j <= order`, of a function about `center`.
#[derive(Debug, Clone, PartialEq)]
pub struct LaurentBlock {
    pub center: Complex64,
    pub radius: f64,
    pub order: usize,
    /// Largest Frobenius norm of the function on the quadrature circle.
    pub sup_norm: f64,
    coeffs: Vec<CMatrix>,
}

impl LaurentBlock {
    /// Coefficient of `(lambda - center)^j`, if it was computed.
    pub fn coeff(&self, j: isize) -> Option<&CMatrix> {
        let idx = j + self.order as isize;
        if idx < 0 {
            return None;
        }
        self.coeffs.get(idx as usize)
    }

    /// Coefficient of `(lambda - center)^-1`.
    pub fn residue(&self) -> CMatrix {
        match self.coeff(-1) {
            Some(m) => m.clone(),
            None => {
                let (r, c) = self.coeffs[0].shape();
                CMatrix::zeros(r, c)
            }
        }
    }

    /// Most negative index whose coefficient is significant, with that coefficient.
    pub fn leading(&self, coeff_tol: f64) -> Option<(isize, &CMatrix)> {
        (1..=self.order as isize)
            .rev()
            .map(|j| (-j, self.coeff(-j).unwrap()))
            .find(|(j, g)| g.norm() * self.radius.powi(*j as i32) > coeff_tol * self.sup_norm.max(f64::MIN_POSITIVE))
    }

    /// Rank of the block Toeplitz matrix of principal-part coefficients.
    ///
    /// This equals the pole multiplicity at `center` when `order` bounds the pole order.
    pub fn principal_rank(&self, opts: &LaurentOptions) -> usize {
        let k = self.order;
        if k == 0 {
            return 0;
        }
        let (rows, cols) = self.coeffs[0].shape();
        if rows == 0 || cols == 0 {
            return 0;
        }
        let h = |j: usize| self.coeff(-(j as isize)).unwrap().map(|x| x / self.radius.powi(j as i32));
        let mut t = CMatrix::zeros(rows * k, cols * k);
        for a in 0..k {
            for b in 0..=a {
                let blk = h(k - a + b);
                t.view_mut((a * rows, b * cols), (rows, cols)).copy_from(&blk);
            }
        }
        let sv = singular_values(&t);
        let smax = sv.first().copied().unwrap_or(0.0);
        let floor = (opts.rank_tol * smax).max(opts.coeff_tol * self.sup_norm);
        sv.iter().filter(|&&s| s > floor).count()
    }
}

impl RationalMVF {
    /// Laurent coefficients about `center` up to order `order` on both sides.
    pub fn laurent(
        &self,
        center: Complex64,
        order: usize,
        opts: &LaurentOptions,
    ) -> Result<LaurentBlock, RationalError> {
        let radius = match opts.radius {
            Some(r) => r,
            None => self.default_radius(center),
        };
        let clusters = self.den_clusters();
        for cl in &clusters {
            if cluster_holds(cl, center) {
                if cl.spread * 4.0 >= radius {
                    return Err(RationalError::RadiusTooLarge { radius });
                }
                continue;
            }
            if (cl.center - center).norm() - cl.spread <= 1.1 * radius {
                return Err(RationalError::RadiusTooLarge { radius });
            }
        }
        let n = opts.n_quad.max(4 * order + 8);
        let mut vals = Vec::with_capacity(n);
        let mut sup = 0.0f64;
        for l in 0..n {
            let theta = 2.0 * PI * l as f64 / n as f64;
            let v = self.eval(center + Complex64::from_polar(radius, theta))?;
            sup = sup.max(v.norm());
            vals.push((theta, v));
        }
        let (rows, cols) = self.shape();
        let mut coeffs = Vec::with_capacity(2 * order + 1);
        for j in -(order as isize)..=(order as isize) {
            let mut acc = CMatrix::zeros(rows, cols);
            for (theta, v) in &vals {
                acc += v * Complex64::from_polar(1.0, -(j as f64) * theta);
            }
            acc /= Complex64::new(n as f64 * radius.powi(j as i32), 0.0);
            coeffs.push(acc);
        }
        Ok(LaurentBlock { center, radius, order, sup_norm: sup, coeffs })
    }

    /// Half the distance from `center` to the nearest denominator root not at `center`, at most 1.
    fn default_radius(&self, center: Complex64) -> f64 {
        let near = self
            .den_clusters()
            .iter()
            .filter(|cl| !cluster_holds(cl, center))
            .map(|cl| (cl.center - center).norm() - cl.spread)
            .fold(f64::INFINITY, f64::min);
        (0.5 * near).min(1.0)
    }

    /// The denominator root cluster at `z`, if any.
    pub fn cluster_at(&self, z: Complex64) -> Option<RootCluster> {
        self.den_clusters().into_iter().find(|cl| cluster_holds(cl, z))
    }

    /// Pole multiplicity at `z`.
    pub fn pole_mult_at(&self, z: Complex64, tol: &Tolerances) -> Result<usize, RationalError> {
        self.pole_mult_at_with(z, &LaurentOptions::from(tol))
    }

    /// Pole multiplicity at `z` with explicit Laurent options.
    pub fn pole_mult_at_with(&self, z: Complex64, opts: &LaurentOptions) -> Result<usize, RationalError> {
        let Some(cl) = self.cluster_at(z) else {
            return Ok(0);
        };
        let block = self.laurent(cl.center, cl.mult, opts)?;
        Ok(block.principal_rank(opts))
    }

    /// Total pole multiplicity in the open domain.
    pub fn pole_mult_region(&self, tol: &Tolerances) -> Result<usize, RationalError> {
        let opts = LaurentOptions::from(tol);
        self.candidate_poles()
            .iter()
            .try_fold(0, |acc, cl| Ok(acc + self.laurent(cl.center, cl.mult, &opts)?.principal_rank(&opts)))
    }

    /// Poles in the open domain with their multiplicities; zero-multiplicity clusters are omitted.
    pub fn poles_in_domain(&self, tol: &Tolerances) -> Result<Vec<(Complex64, usize)>, RationalError> {
        let opts = LaurentOptions::from(tol);
        let mut out = Vec::new();
        for cl in self.candidate_poles() {
            let m = self.laurent(cl.center, cl.mult, &opts)?.principal_rank(&opts);
            if m > 0 {
                out.push((cl.center, m));
            }
        }
        Ok(out)
    }

    /// Zero multiplicity at `z`, the pole multiplicity of the inverse there.
    pub fn zero_mult_at(&self, z: Complex64, tol: &Tolerances) -> Result<usize, RationalError> {
        self.inverse()?.pole_mult_at(z, tol)
    }

    /// Total zero multiplicity in the open domain.
    pub fn zero_mult_region(&self, tol: &Tolerances) -> Result<usize, RationalError> {
        self.inverse()?.pole_mult_region(tol)
    }
}

fn cluster_holds(cl: &RootCluster, z: Complex64) -> bool {
    let scale = cl.center.norm().max(1.0);
    (cl.center - z).norm() <= cl.spread + 10.0 * CLUSTER_TOL * scale
}

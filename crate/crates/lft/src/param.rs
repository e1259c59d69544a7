use crate::error::LftError;
use crate::transform::t_transform;
use takagi_blaschke::{kl_factor_left, kl_factor_right, BPProduct};
use takagi_numeric::{CMatrix, Complex64, Tolerances};
use takagi_problem::{neutral_subspace, uv_from_neutral, DataSet};
use takagi_rational::RationalMVF;
use takagi_resolvent::{build_w, ResolventW};

/// A parameter `eps = theta_l^-1 eps_l = eps_r theta_r^-1` with both Krein-Langer factorizations.
#[derive(Debug, Clone)]
pub struct Parameter {
    pub eps: RationalMVF,
    pub theta_l: BPProduct,
    pub eps_l: RationalMVF,
    pub eps_r: RationalMVF,
    pub theta_r: BPProduct,
}

impl Parameter {
    /// Factors `eps` on both sides; fails unless `eps` is a generalized Schur function.
    pub fn new(eps: RationalMVF, tol: &Tolerances) -> Result<Self, LftError> {
        let (theta_l, eps_l) = kl_factor_left(&eps, tol)?;
        let (eps_r, theta_r) = kl_factor_right(&eps, tol)?;
        Ok(Self { eps, theta_l, eps_l, eps_r, theta_r })
    }

    /// A constant contraction, whose factorizations are trivial.
    pub fn constant(m: &CMatrix, domain: takagi_numeric::DomainKind) -> Self {
        let eps = RationalMVF::constant(m, domain);
        Self {
            theta_l: BPProduct::identity(m.nrows(), domain),
            eps_l: eps.clone(),
            eps_r: eps.clone(),
            theta_r: BPProduct::identity(m.ncols(), domain),
            eps,
        }
    }

    /// Number of negative squares, the degree of the Blaschke-Potapov factors.
    pub fn kappa(&self) -> usize {
        self.theta_l.degree()
    }
}

/// A parametrized solution `s = T_W[eps]` with the resolvent matrix and the full parameter.
#[derive(Debug, Clone)]
pub struct Solution {
    pub w: ResolventW,
    pub eps: RationalMVF,
    pub s: RationalMVF,
}

/// `U diag(eps_tilde, I_nu) V*`, the full parameter for a reduced parameter `eps_tilde`.
///
/// With `nu = min(p, q)` the reduced parameter has an empty dimension and the
/// result is the constant `U diag(0, I_nu) V*`.
pub fn embed_parameter(ds: &DataSet, eps_tilde: &RationalMVF, tol: &Tolerances) -> Result<RationalMVF, LftError> {
    let (p, q, domain) = (ds.p(), ds.q(), ds.domain());
    let basis = neutral_subspace(ds, tol)?;
    let nu = basis.ncols();
    if nu > p.min(q) {
        return Err(LftError::Shape(format!(
            "neutral subspace has dimension {nu}, more than min(p, q) = {}",
            p.min(q)
        )));
    }
    let (pr, qr) = (p - nu, q - nu);
    if eps_tilde.shape() != (pr, qr) && pr > 0 && qr > 0 {
        return Err(LftError::Shape(format!(
            "reduced parameter is {}x{}, expected {pr}x{qr} (nu = {nu})",
            eps_tilde.rows(),
            eps_tilde.cols()
        )));
    }
    if eps_tilde.domain() != domain {
        return Err(LftError::Shape("parameter and data set live on different domains".into()));
    }
    if nu == 0 {
        return Ok(eps_tilde.clone());
    }
    let (u, v) = uv_from_neutral(&basis, p, q)?;
    let mut identity_block = CMatrix::zeros(p, q);
    for k in 0..nu {
        identity_block[(pr + k, qr + k)] = Complex64::new(1.0, 0.0);
    }
    let inner = if pr > 0 && qr > 0 {
        let top = RationalMVF::hcat(eps_tilde, &RationalMVF::zeros(pr, nu, domain));
        let bottom = RationalMVF::constant(&identity_block.view((pr, 0), (nu, q)).into_owned(), domain);
        RationalMVF::vcat(&top, &bottom)
    } else {
        RationalMVF::constant(&identity_block, domain)
    };
    Ok(inner.left_mul_const(&u).right_mul_const(&v.adjoint()))
}

/// `s = T_W[U diag(eps_tilde, I_nu) V*]` with `W` built from the pseudoinverse of `P`.
pub fn parametrize(ds: &DataSet, eps_tilde: &RationalMVF, tol: &Tolerances) -> Result<Solution, LftError> {
    let w = build_w(ds, None, tol)?;
    let eps = embed_parameter(ds, eps_tilde, tol)?;
    let s = t_transform(w.rational(), &eps)?;
    Ok(Solution { w, eps, s })
}

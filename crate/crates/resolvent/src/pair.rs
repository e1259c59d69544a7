use crate::error::ResolventError;
use crate::w::{rho_poly, ResolventW};
use takagi_blaschke::{kl_factor_left, kl_factor_right, BPProduct};
use takagi_numeric::{
    range_basis, solve_lyapunov_halfplane, solve_stein_disc, CMatrix, Complex64, DomainKind, Tolerances,
};
use takagi_rational::{Poly, RationalMVF};

/// Inner factors `b1` (`p x p`) and `b2` (`q x q`) clearing the poles of the rows of `W`.
#[derive(Debug, Clone)]
pub struct AssociatedPair {
    pub b1: BPProduct,
    pub b2: BPProduct,
}

impl AssociatedPair {
    /// The trivial pair `(I_p, I_q)`.
    pub fn identity(p: usize, q: usize, domain: DomainKind) -> Self {
        Self { b1: BPProduct::identity(p, domain), b2: BPProduct::identity(q, domain) }
    }
}

/// Orthonormal basis `R` of `rng B` together with `R* A R`, the restriction of `A` to that invariant subspace.
fn restrict(a: &CMatrix, rows: &CMatrix, tol: &Tolerances) -> (CMatrix, CMatrix) {
    let r = range_basis(rows, tol);
    let ar = r.adjoint() * a * &r;
    (r, ar)
}

/// `(a0 + a1 lambda)^-1` for constant square matrices.
fn pencil_inverse(a0: &CMatrix, a1: &CMatrix, domain: DomainKind) -> Result<RationalMVF, ResolventError> {
    Ok(RationalMVF::from_matrix_coeffs(&[a0.clone(), a1.clone()], Poly::one(), domain)?.inverse()?)
}

/// `b~2` for the observable pair `(c, a)`: an inner function with `b~2 c (a - lambda)^-1` holomorphic in the domain.
fn b2_tilde(
    domain: DomainKind,
    a: &CMatrix,
    c: &CMatrix,
    mu: Complex64,
    tol: &Tolerances,
) -> Result<RationalMVF, ResolventError> {
    let r = a.nrows();
    let q = c.nrows();
    let empty = CMatrix::zeros(0, 0);
    let id = CMatrix::identity(r, r);
    let one = Complex64::new(1.0, 0.0);
    let f = match domain {
        DomainKind::Disc => {
            let q1 = solve_stein_disc(a, &empty, c, 0, tol)?;
            let q1_inv = q1.try_inverse().ok_or(ResolventError::SingularGramian)?;
            let left = c * (a - &id * mu).try_inverse().ok_or(ResolventError::SingularGramian)? * q1_inv;
            pencil_inverse(&(-&id), &a.adjoint(), domain)?
                .left_mul_const(&left)
                .right_mul_const(&c.adjoint())
                .mul_scalar_fn(&Poly::linear(-mu, one), &Poly::one())
        }
        DomainKind::HalfPlane => {
            let q1 = solve_lyapunov_halfplane(a, &empty, c, q, tol)?;
            let q1_inv = q1.try_inverse().ok_or(ResolventError::SingularGramian)?;
            pencil_inverse(&a.adjoint(), &id, domain)?.left_mul_const(&(c * q1_inv)).right_mul_const(&c.adjoint())
        }
    };
    Ok(&RationalMVF::identity(q, domain) + &f)
}

/// `b~1` for the observable pair `(c, a)`: an inner function with `b~1^-1 c (I - lambda a)^-1` (disc)
/// or `b~1^-1 c (a - lambda)^-1` (half-plane) holomorphic in the exterior.
fn b1_tilde(
    domain: DomainKind,
    a: &CMatrix,
    c: &CMatrix,
    mu: Complex64,
    tol: &Tolerances,
) -> Result<RationalMVF, ResolventError> {
    let r = a.nrows();
    let p = c.nrows();
    let empty = CMatrix::zeros(0, 0);
    let id = CMatrix::identity(r, r);
    let f = match domain {
        DomainKind::Disc => {
            let q2 = -solve_stein_disc(a, &empty, c, 0, tol)?;
            let q2_inv = q2.try_inverse().ok_or(ResolventError::SingularGramian)?;
            let tail = (&id - a.adjoint() * mu.conj()).try_inverse().ok_or(ResolventError::SingularGramian)?;
            pencil_inverse(&id, &(-a), domain)?
                .left_mul_const(c)
                .right_mul_const(&(q2_inv * tail * c.adjoint()))
                .mul_scalar_fn(&rho_poly(domain, mu), &Poly::one())
        }
        DomainKind::HalfPlane => {
            let q2 = solve_lyapunov_halfplane(&empty, a, c, p, tol)?;
            let q2_inv = q2.try_inverse().ok_or(ResolventError::SingularGramian)?;
            pencil_inverse(a, &(-&id), domain)?.left_mul_const(c).right_mul_const(&(q2_inv * c.adjoint()))
        }
    };
    Ok(&RationalMVF::identity(p, domain) + &f)
}

/// The associated pair of `W`.
///
/// `(A1, C21)` is restricted to `rng [X11 X12]` and `(A2, C12)` to
/// `rng [X21 X22]`; the Stein or Lyapunov formulas for `b~2`, `b~1` are
/// applied to the restricted pairs and the results are brought to canonical
/// Blaschke-Potapov form by peeling the poles of `b~2^-1` from the left and of
/// `b~1^-1` from the right.
pub fn associated_pair(w: &ResolventW, tol: &Tolerances) -> Result<AssociatedPair, ResolventError> {
    let ds = w.ds();
    let domain = ds.domain();
    let (n1, n2) = (ds.n1(), ds.n2());
    let x = w.x();
    let mut pair = AssociatedPair::identity(ds.p(), ds.q(), domain);
    if n1 > 0 {
        let (r, a) = restrict(ds.a1(), &x.rows(0, n1).into_owned(), tol);
        if r.ncols() > 0 {
            let bt = b2_tilde(domain, &a, &(ds.c21() * &r), ds.mu(), tol)?;
            let (b2, _) = kl_factor_left(&bt.inverse()?, tol)?;
            if b2.degree() != r.ncols() {
                return Err(ResolventError::PairDegree { expected: r.ncols(), got: b2.degree() });
            }
            pair.b2 = b2;
        }
    }
    if n2 > 0 {
        let (r, a) = restrict(ds.a2(), &x.rows(n1, n2).into_owned(), tol);
        if r.ncols() > 0 {
            let bt = b1_tilde(domain, &a, &(ds.c12() * &r), ds.mu(), tol)?;
            let (_, b1) = kl_factor_right(&bt.inverse()?, tol)?;
            if b1.degree() != r.ncols() {
                return Err(ResolventError::PairDegree { expected: r.ncols(), got: b1.degree() });
            }
            pair.b1 = b1;
        }
    }
    Ok(pair)
}

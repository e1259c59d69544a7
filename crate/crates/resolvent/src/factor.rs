use crate::error::ResolventError;
use crate::holo::{holomorphic_in_domain, holomorphic_in_exterior, sample_points};
use crate::pair::AssociatedPair;
use crate::w::{w_inverse, ResolventW};
use takagi_numeric::{norm2, svd, CMatrix, Complex64, DomainKind, Svd, Tolerances};
use takagi_rational::{Poly, RationalMVF};

/// Relative residual accepted for the Bezout coefficient system and the factorization identities.
const IDENTITY_TOL: f64 = 1e-8;

/// Numerators of the coprime factorizations `[w21 w22] = b2^-1 [phi21 phi22]`
/// and `[w11 w12] = b1 [phi~11 phi~12]`.
#[derive(Debug, Clone)]
pub struct PhiRows {
    pub phi21: RationalMVF,
    pub phi22: RationalMVF,
    pub phit11: RationalMVF,
    pub phit12: RationalMVF,
}

/// Factors `W = Theta Phi` over the domain and `W = Theta~ Phi~` over the exterior.
#[derive(Debug, Clone)]
pub struct ThetaPhi {
    pub k: RationalMVF,
    pub theta: RationalMVF,
    pub phi: RationalMVF,
    pub theta_tilde: RationalMVF,
    pub phi_tilde: RationalMVF,
    /// Largest relative residual among `W = Theta Phi`, `W = Theta~ Phi~` and `Theta~# j Theta = j` on samples.
    pub residual: f64,
}

/// `phi2j = b2 w2j` (holomorphic in the domain) and `phi~1j = b1^-1 w1j` (holomorphic in the exterior).
pub fn phi_rows(w: &ResolventW, pair: &AssociatedPair, tol: &Tolerances) -> Result<PhiRows, ResolventError> {
    let b2 = pair.b2.as_rational();
    let b1i = pair.b1.inverse_rational();
    let rows =
        PhiRows { phi21: &b2 * &w.w21(), phi22: &b2 * &w.w22(), phit11: &b1i * &w.w11(), phit12: &b1i * &w.w12() };
    if !holomorphic_in_domain(&RationalMVF::hcat(&rows.phi21, &rows.phi22), tol)? {
        return Err(ResolventError::HolomorphyViolation { what: "b2 [w21 w22]".into() });
    }
    if !holomorphic_in_exterior(&RationalMVF::hcat(&rows.phit11, &rows.phit12), tol)? {
        return Err(ResolventError::HolomorphyViolation { what: "b1^-1 [w11 w12]".into() });
    }
    Ok(rows)
}

/// Exterior pole centers of `f`, repeated by cluster multiplicity.
fn exterior_roots(f: &RationalMVF) -> Vec<Complex64> {
    let domain = f.domain();
    f.candidate_poles()
        .into_iter()
        .filter(|c| domain.exterior_contains(c.center))
        .flat_map(|c| std::iter::repeat_n(c.center, c.mult))
        .collect()
}

/// Min-norm solution of `N(lambda) G(lambda) = rhs(lambda) I_q` over polynomial `G` (`m x q`) of degree at most `dg`.
fn solve_bezout_coeffs(num: &[Vec<Poly>], rhs: &Poly, m: usize, q: usize, dg: usize) -> Option<Vec<Vec<Poly>>> {
    let deg_n = num.iter().flatten().filter_map(Poly::degree).max().unwrap_or(0);
    let rows_per = (deg_n + dg).max(rhs.degree().unwrap_or(0)) + 1;
    let unknowns = m * (dg + 1);
    let mut a = CMatrix::zeros(q * rows_per, unknowns);
    for (i, row) in num.iter().enumerate() {
        for (j, nij) in row.iter().enumerate() {
            for t in 0..=dg {
                for (k, &c) in nij.coeffs().iter().enumerate() {
                    a[(i * rows_per + k + t, j * (dg + 1) + t)] = c;
                }
            }
        }
    }
    let Svd { u, sigma, v } = svd(&a);
    let smax = sigma.first().copied().unwrap_or(0.0);
    let mut g = vec![vec![Poly::zero(); q]; m];
    for col in 0..q {
        let mut b = CMatrix::zeros(q * rows_per, 1);
        for (k, &c) in rhs.coeffs().iter().enumerate() {
            b[(col * rows_per + k, 0)] = c;
        }
        let mut x = CMatrix::zeros(unknowns, 1);
        for (s_idx, &s) in sigma.iter().enumerate() {
            if s > smax * 1e-12 && s > 0.0 {
                let coef = (u.column(s_idx).adjoint() * &b)[(0, 0)] / s;
                x += v.column(s_idx) * coef;
            }
        }
        if (&a * &x - &b).norm() > IDENTITY_TOL * b.norm().max(1.0) {
            return None;
        }
        for (j, gj) in g.iter_mut().enumerate() {
            gj[col] = Poly::new((0..=dg).map(|t| x[(j * (dg + 1) + t, 0)]).collect());
        }
    }
    Some(g)
}

/// A function `K` holomorphic in the domain with `K = (w11 g1 + w12 g2) b2`,
/// where `g1`, `g2` are bounded in the domain and solve `w21 g1 + w22 g2 = b2^-1`.
///
/// The Bezout identity `phi21 g1 + phi22 g2 = I_q` is solved by matching
/// polynomial coefficients with `g = G / e`, where `e` vanishes at the exterior
/// poles of `W^-1` and `b2` (and carries a factor `(lambda + 1)^d` on the
/// half-plane), raising the degree `d` of `G` until the system is consistent.
pub fn compute_k(
    w: &ResolventW,
    pair: &AssociatedPair,
    phis: &PhiRows,
    tol: &Tolerances,
) -> Result<RationalMVF, ResolventError> {
    let domain = w.domain();
    let (p, q) = (w.p(), w.q());
    let m = p + q;
    let phi2 = RationalMVF::hcat(&phis.phi21, &phis.phi22);
    let num: Vec<Vec<Poly>> = (0..q).map(|i| (0..m).map(|j| phi2.num(i, j).clone()).collect()).collect();
    let b2 = pair.b2.as_rational();
    let mut roots = exterior_roots(&w_inverse(w));
    roots.extend(exterior_roots(&b2));
    let e_ext = Poly::from_roots(&roots);
    let top = RationalMVF::hcat(&w.w11(), &w.w12());
    let cap = 4 * (w.rational().den().degree().unwrap_or(0) + 1);
    let one = Complex64::new(1.0, 0.0);
    for d in 0..=cap {
        let (e, dg) = match domain {
            DomainKind::Disc => (e_ext.clone(), d),
            DomainKind::HalfPlane => {
                let shift = (0..d).fold(Poly::one(), |acc, _| &acc * &Poly::linear(one, one));
                (&e_ext * &shift, roots.len() + d)
            }
        };
        let rhs = phi2.den() * &e;
        let Some(g) = solve_bezout_coeffs(&num, &rhs, m, q, dg) else {
            continue;
        };
        let g = RationalMVF::new(m, q, g.into_iter().flatten().collect(), e, domain)?;
        let k = &(&top * &g) * &b2;
        if holomorphic_in_domain(&k, tol)? {
            return Ok(k);
        }
    }
    Err(ResolventError::DegreeCapExceeded { cap })
}

fn pole_centers(fs: &[&RationalMVF]) -> Vec<Complex64> {
    let mut out = Vec::new();
    for f in fs {
        for c in f.candidate_poles() {
            out.push(c.center);
            if c.center.norm() > 1e-12 || f.domain() == DomainKind::HalfPlane {
                out.push(f.domain().reflect(c.center));
            }
        }
    }
    out
}

/// Builds `Theta = [[b1, K b2^-1], [0, b2^-1]]`, `Phi = Theta^-1 W`, their exterior
/// counterparts, and checks the factorizations and `Theta~# j Theta = j` on samples.
pub fn theta_phi(
    w: &ResolventW,
    pair: &AssociatedPair,
    k: &RationalMVF,
    tol: &Tolerances,
) -> Result<ThetaPhi, ResolventError> {
    let domain = w.domain();
    let (p, q) = (w.p(), w.q());
    let (b1, b1i) = (pair.b1.as_rational(), pair.b1.inverse_rational());
    let (b2, b2i) = (pair.b2.as_rational(), pair.b2.inverse_rational());
    let ks = k.adjoint_sharp();
    let (w11, w12, w21, w22) = (w.w11(), w.w12(), w.w21(), w.w22());
    let theta = RationalMVF::block2(&b1, &(k * &b2i), &RationalMVF::zeros(q, p, domain), &b2i);
    let phi = RationalMVF::block2(
        &(&b1i * &(&w11 - &(k * &w21))),
        &(&b1i * &(&w12 - &(k * &w22))),
        &(&b2 * &w21),
        &(&b2 * &w22),
    );
    let theta_tilde = RationalMVF::block2(&b1, &RationalMVF::zeros(p, q, domain), &(&ks * &b1), &b2i);
    let phi_tilde = RationalMVF::block2(
        &(&b1i * &w11),
        &(&b1i * &w12),
        &(&b2 * &(&w21 - &(&ks * &w11))),
        &(&b2 * &(&w22 - &(&ks * &w12))),
    );
    let avoid = pole_centers(&[w.rational(), &theta, &phi, &theta_tilde, &phi_tilde]);
    let j = w.j();
    let mut residual = 0.0f64;
    for z in sample_points(domain, 10, &avoid) {
        let wz = w.eval(z)?;
        let (th, ph) = (theta.eval(z)?, phi.eval(z)?);
        let (tt, pt) = (theta_tilde.eval(z)?, phi_tilde.eval(z)?);
        let tr = theta_tilde.eval(domain.reflect(z))?.adjoint();
        residual = residual.max(product_residual(&wz, &th, &ph));
        residual = residual.max(product_residual(&wz, &tt, &pt));
        residual = residual.max(product_residual(&j, &(&tr * &j), &th));
    }
    if residual > IDENTITY_TOL {
        return Err(ResolventError::FactorizationResidual { residual });
    }
    if !holomorphic_in_domain(&phi, tol)? {
        return Err(ResolventError::HolomorphyViolation { what: "Phi".into() });
    }
    if !holomorphic_in_exterior(&phi_tilde, tol)? {
        return Err(ResolventError::HolomorphyViolation { what: "Phi~".into() });
    }
    Ok(ThetaPhi { k: k.clone(), theta, phi, theta_tilde, phi_tilde, residual })
}

/// `||target - a b||` relative to `max(1, ||a|| ||b||)`.
fn product_residual(target: &CMatrix, a: &CMatrix, b: &CMatrix) -> f64 {
    norm2(&(target - a * b)) / (norm2(a) * norm2(b)).max(1.0)
}

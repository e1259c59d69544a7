use crate::error::LftError;
use crate::param::Parameter;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rand_distr::StandardNormal;
use takagi_blaschke::BPProduct;
use takagi_numeric::{hermitian_eigen, hermitian_part, norm2, singular_values, CMatrix, Complex64, Tolerances};
use takagi_rational::RationalMVF;
use takagi_resolvent::{AssociatedPair, PhiRows};

/// Zeros in the domain of `phi21 eps_r + phi22 theta_r`, counted with multiplicity.
pub fn rouche_count(phis: &PhiRows, param: &Parameter, tol: &Tolerances) -> Result<usize, LftError> {
    let g = &(&phis.phi21 * &param.eps_r) + &(&phis.phi22 * &param.theta_r.as_rational());
    Ok(g.zero_mult_region(tol)?)
}

/// `phi21(z) eps_r + phi22(z) theta_r` is singular: its smallest singular value is
/// below `eig_tol` times the combined size of the two terms.
fn excluded_at(
    phis: &PhiRows,
    eps_r: &CMatrix,
    theta_r: &CMatrix,
    z: Complex64,
    tol: &Tolerances,
) -> Result<bool, LftError> {
    let a = phis.phi21.eval(z)? * eps_r;
    let b = phis.phi22.eval(z)? * theta_r;
    let scale = norm2(&a) + norm2(&b);
    let sigma = singular_values(&(a + b));
    let smallest = sigma.last().copied().unwrap_or(0.0);
    Ok(smallest <= tol.eig_tol * scale.max(f64::MIN_POSITIVE))
}

/// Per node: `phi21 eps_r + phi22 theta_r` is singular there, so the parameter is excluded.
///
/// A node where the expression cannot be evaluated is reported as excluded.
pub fn excluded_check(phis: &PhiRows, param: &Parameter, nodes: &[Complex64], tol: &Tolerances) -> Vec<bool> {
    nodes
        .iter()
        .map(|&z| {
            let flag = (|| -> Result<bool, LftError> {
                excluded_at(phis, &param.eps_r.eval(z)?, &param.theta_r.eval(z)?, z, tol)
            })();
            flag.unwrap_or(true)
        })
        .collect()
}

/// Per node: `phi21 phi21* - phi22 phi22*` is negative definite there, which rules out excluded parameters at that node.
pub fn no_excluded_criterion(phis: &PhiRows, nodes: &[Complex64], tol: &Tolerances) -> Vec<bool> {
    nodes
        .iter()
        .map(|&z| {
            let (Ok(a), Ok(b)) = (phis.phi21.eval(z), phis.phi22.eval(z)) else {
                return false;
            };
            let d = hermitian_part(&(&a * a.adjoint() - &b * b.adjoint()));
            let e = hermitian_eigen(&d);
            let scale = e.values.iter().fold(1.0f64, |acc, v| acc.max(v.abs()));
            e.values.iter().all(|&v| v < -tol.eig_tol * scale)
        })
        .collect()
}

fn gaussian_contraction(rng: &mut ChaCha8Rng, p: usize, q: usize) -> CMatrix {
    let g = CMatrix::from_fn(p, q, |_, _| {
        let re: f64 = rng.sample(StandardNormal);
        let im: f64 = rng.sample(StandardNormal);
        Complex64::new(re, im)
    });
    let smax = singular_values(&g).first().copied().unwrap_or(0.0);
    let radius: f64 = rng.random_range(0.0..1.0);
    if smax > 0.0 {
        g * Complex64::new(radius / smax, 0.0)
    } else {
        g
    }
}

/// A constant contraction `eps` with `phi21 eps + phi22 theta_r` nonsingular at every node.
///
/// Tries `eps = 0` first, then scaled Gaussian contractions drawn from a seeded generator.
/// `theta_r` defaults to the identity.
pub fn find_admissible_constant(
    phis: &PhiRows,
    theta_r: Option<&BPProduct>,
    nodes: &[Complex64],
    max_tries: usize,
    seed: u64,
    tol: &Tolerances,
) -> Result<CMatrix, LftError> {
    let (q, p) = phis.phi21.shape();
    let theta_vals: Vec<CMatrix> = nodes
        .iter()
        .map(|&z| match theta_r {
            Some(t) => Ok(t.eval(z)?),
            None => Ok(CMatrix::identity(q, q)),
        })
        .collect::<Result<_, LftError>>()?;
    let admissible = |eps: &CMatrix| -> Result<bool, LftError> {
        for (&z, th) in nodes.iter().zip(&theta_vals) {
            if excluded_at(phis, eps, th, z, tol)? {
                return Ok(false);
            }
        }
        Ok(true)
    };
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut candidate = CMatrix::zeros(p, q);
    for _ in 0..max_tries {
        if admissible(&candidate)? {
            return Ok(candidate);
        }
        candidate = gaussian_contraction(&mut rng, p, q);
    }
    Err(LftError::SearchExhausted { tries: max_tries })
}

/// `b1^-1 (s - K) b2^-1` has exactly `kappa` poles in the domain.
pub fn takagi_sarason_membership(
    s: &RationalMVF,
    pair: &AssociatedPair,
    k: &RationalMVF,
    kappa: usize,
    tol: &Tolerances,
) -> Result<bool, LftError> {
    let g = &(&pair.b1.inverse_rational() * &(s - k)) * &pair.b2.inverse_rational();
    Ok(g.pole_mult_region(tol)? == kappa)
}

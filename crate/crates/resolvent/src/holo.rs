use takagi_numeric::{Complex64, DomainKind, Tolerances};
use takagi_rational::{RationalError, RationalMVF};

/// Relative size below which a numerator coefficient above the denominator degree counts as zero.
const PROPER_TOL: f64 = 1e-9;

/// True if every entry has numerator degree at most the denominator degree, up to `PROPER_TOL`.
fn is_proper(f: &RationalMVF) -> bool {
    let dd = f.den().degree().unwrap_or(0);
    let den_scale = f.den().max_abs();
    for i in 0..f.rows() {
        for j in 0..f.cols() {
            let num = f.num(i, j);
            let scale = num.max_abs().max(den_scale);
            if num.coeffs().iter().skip(dd + 1).any(|c| c.norm() > PROPER_TOL * scale) {
                return false;
            }
        }
    }
    true
}

/// True if `f` has no poles in the open domain (and is bounded at infinity on the half-plane).
pub fn holomorphic_in_domain(f: &RationalMVF, tol: &Tolerances) -> Result<bool, RationalError> {
    if !f.poles_in_domain(tol)?.is_empty() {
        return Ok(false);
    }
    Ok(f.domain() == DomainKind::Disc || is_proper(f))
}

/// True if `f` has no poles in the open exterior domain, infinity included.
pub fn holomorphic_in_exterior(f: &RationalMVF, tol: &Tolerances) -> Result<bool, RationalError> {
    let domain = f.domain();
    for cl in f.candidate_poles() {
        if domain.exterior_contains(cl.center) && f.pole_mult_at(cl.center, tol)? > 0 {
            return Ok(false);
        }
    }
    Ok(is_proper(f))
}

/// `n` well-spread interior points at distance at least `0.05` from every point of `avoid`.
pub fn sample_points(domain: DomainKind, n: usize, avoid: &[Complex64]) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(n);
    let mut pool = 4 * n.max(1);
    while out.len() < n {
        out = domain
            .interior_samples(pool, 0.9)
            .into_iter()
            .filter(|z| avoid.iter().all(|a| (z - a).norm() >= 0.05))
            .take(n)
            .collect();
        pool *= 2;
    }
    out
}

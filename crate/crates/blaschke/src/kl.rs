use crate::error::BlaschkeError;
use crate::factor::{BPFactor, BPProduct};
use takagi_numeric::{rank_tol, row_stack, svd, CMatrix, Complex64, Svd, Tolerances};
use takagi_rational::{LaurentOptions, RationalMVF};

const SCREEN_SAMPLES: usize = 64;
const SCREEN_SLACK: f64 = 1e-7;

/// Largest singular value of `s` over boundary samples; fails when it exceeds one.
pub fn schur_screen(s: &RationalMVF) -> Result<f64, BlaschkeError> {
    let pts = s.domain().boundary_samples(SCREEN_SAMPLES);
    let sigma_max = s.sup_norm2(&pts).map_err(|_| BlaschkeError::NotSchurClass { sigma_max: f64::INFINITY })?;
    if sigma_max > 1.0 + SCREEN_SLACK {
        return Err(BlaschkeError::NotSchurClass { sigma_max });
    }
    Ok(sigma_max)
}

enum Side {
    Left,
    Right,
}

/// Unit vector with its largest-modulus entry real and positive.
fn canonical_sign(mut v: CMatrix) -> CMatrix {
    let (mut best, mut idx) = (0.0, 0);
    for (k, x) in v.iter().enumerate() {
        if x.norm() > best {
            best = x.norm();
            idx = k;
        }
    }
    if best > 0.0 {
        let phase = v[idx] / best;
        v /= phase;
    }
    v
}

/// Top singular direction of `g`: left singular vector for `Side::Left`, right for `Side::Right`.
fn top_direction(g: &CMatrix, side: &Side) -> CMatrix {
    let Svd { u, v, .. } = svd(g);
    let v = match side {
        Side::Left => u.column(0).into_owned(),
        Side::Right => v.column(0).into_owned(),
    };
    canonical_sign(CMatrix::from_column_slice(v.len(), 1, v.as_slice()))
}

fn extract(s: &RationalMVF, tol: &Tolerances, side: Side) -> Result<(BPProduct, RationalMVF), BlaschkeError> {
    schur_screen(s)?;
    let size = match side {
        Side::Left => s.rows(),
        Side::Right => s.cols(),
    };
    let domain = s.domain();
    let opts = LaurentOptions::from(tol);
    let mut b = BPProduct::identity(size, domain);
    let mut cur = s.clone();
    let mut m = cur.pole_mult_region(tol)?;
    while m > 0 {
        let poles = cur.poles_in_domain(tol)?;
        let Some(&(alpha, _)) = poles.first() else {
            return Err(BlaschkeError::ExtractionStalled { re: f64::NAN, im: f64::NAN, before: m, after: m });
        };
        let order = cur.cluster_at(alpha).map(|c| c.mult).unwrap_or(1);
        let lb = cur.laurent(alpha, order, &opts)?;
        let stalled = BlaschkeError::ExtractionStalled { re: alpha.re, im: alpha.im, before: m, after: m };
        let (_, g) = lb.leading(opts.coeff_tol).ok_or(stalled)?;
        let f = BPFactor::rank_one(alpha, &top_direction(g, &side), domain)?;
        let next = match side {
            Side::Left => &f.as_rational(domain) * &cur,
            Side::Right => &cur * &f.as_rational(domain),
        };
        let m_next = next.pole_mult_region(tol)?;
        if m_next + 1 != m {
            return Err(BlaschkeError::ExtractionStalled { re: alpha.re, im: alpha.im, before: m, after: m_next });
        }
        match side {
            Side::Left => b.push_front(f),
            Side::Right => b.push_back(f),
        }
        cur = next;
        m = m_next;
    }
    Ok((b, cur))
}

/// Left Krein-Langer factorization `s = b_l^-1 s_l`, returning `(b_l, s_l)`.
pub fn kl_factor_left(s: &RationalMVF, tol: &Tolerances) -> Result<(BPProduct, RationalMVF), BlaschkeError> {
    extract(s, tol, Side::Left)
}

/// Right Krein-Langer factorization `s = s_r b_r^-1`, returning `(s_r, b_r)`.
pub fn kl_factor_right(s: &RationalMVF, tol: &Tolerances) -> Result<(RationalMVF, BPProduct), BlaschkeError> {
    extract(s, tol, Side::Right).map(|(b, sr)| (sr, b))
}

/// Distinct zeros of the product, merged when closer than the clustering radius.
fn distinct_zeros(b: &BPProduct) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::new();
    for z in b.zeros() {
        if !out.iter().any(|w| (w - z).norm() <= 1e-7 * z.norm().max(1.0)) {
            out.push(z);
        }
    }
    out
}

/// `rank [b(alpha) s_l(alpha)] = p` at every zero `alpha` of `det b`.
pub fn check_noncancellation_left(b: &BPProduct, s_l: &RationalMVF, tol: &Tolerances) -> Result<bool, BlaschkeError> {
    for alpha in distinct_zeros(b) {
        let m = row_stack(&b.eval(alpha)?, &s_l.eval(alpha)?);
        if rank_tol(&m, tol) != b.size() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// `rank [b_r(alpha)* s_r(alpha)*] = q` at every zero `alpha` of `det b_r`.
pub fn check_noncancellation_right(s_r: &RationalMVF, b: &BPProduct, tol: &Tolerances) -> Result<bool, BlaschkeError> {
    for alpha in distinct_zeros(b) {
        let m = row_stack(&b.eval(alpha)?.adjoint(), &s_r.eval(alpha)?.adjoint());
        if rank_tol(&m, tol) != b.size() {
            return Ok(false);
        }
    }
    Ok(true)
}

use crate::matrix::CMatrix;
use num_complex::Complex64;

const MAX_SWEEPS: usize = 80;

/// Singular value decomposition `A = U diag(sigma) V*` of an `m x n` matrix.
///
/// `sigma` has length `n` in descending order, `v` is `n x n` unitary and
/// `u` is `m x n` with orthonormal columns wherever `sigma` is nonzero and
/// zero columns elsewhere.
#[derive(Debug, Clone)]
pub struct Svd {
    pub u: CMatrix,
    pub sigma: Vec<f64>,
    pub v: CMatrix,
}

/// One-sided (Hestenes) Jacobi SVD.
pub fn svd(a: &CMatrix) -> Svd {
    let (m, n) = a.shape();
    let mut w = a.clone();
    let mut v = CMatrix::identity(n, n);
    let negligible = (f64::EPSILON * a.norm()).powi(2);
    for _ in 0..MAX_SWEEPS {
        let mut rotated = false;
        for p in 0..n {
            for q in (p + 1)..n {
                let alpha = w.column(p).norm_squared();
                let beta = w.column(q).norm_squared();
                let gamma = w.column(p).dotc(&w.column(q));
                let g = gamma.norm();
                if g == 0.0 || g <= f64::EPSILON * (alpha * beta).sqrt() || alpha.min(beta) <= negligible {
                    continue;
                }
                rotated = true;
                let phase = gamma / g;
                let zeta = (beta - alpha) / (2.0 * g);
                let t = zeta.signum() / (zeta.abs() + (1.0 + zeta * zeta).sqrt());
                let cs = 1.0 / (1.0 + t * t).sqrt();
                let sn = cs * t;
                rotate(&mut w, p, q, phase, cs, sn);
                rotate(&mut v, p, q, phase, cs, sn);
            }
        }
        if !rotated {
            break;
        }
    }
    let mut order: Vec<(usize, f64)> = (0..n).map(|k| (k, w.column(k).norm())).collect();
    order.sort_by(|a, b| b.1.total_cmp(&a.1));
    let mut u = CMatrix::zeros(m, n);
    let mut vs = CMatrix::zeros(n, n);
    let mut sigma = Vec::with_capacity(n);
    for (dst, &(k, s)) in order.iter().enumerate() {
        sigma.push(s);
        if s > 0.0 {
            u.set_column(dst, &(w.column(k) / Complex64::new(s, 0.0)));
        }
        vs.set_column(dst, &v.column(k));
    }
    Svd { u, sigma, v: vs }
}

/// Replaces columns `p`, `q` by `c x_p - s e^{-i phi} x_q` and `s x_p + c e^{-i phi} x_q`.
fn rotate(x: &mut CMatrix, p: usize, q: usize, phase: Complex64, cs: f64, sn: f64) {
    let conj = phase.conj();
    for r in 0..x.nrows() {
        let xp = x[(r, p)];
        let xq = x[(r, q)] * conj;
        x[(r, p)] = xp * cs - xq * sn;
        x[(r, q)] = xp * sn + xq * cs;
    }
}

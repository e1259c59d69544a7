use crate::matrix::{zeros, CMatrix};
use crate::svd::{svd, Svd};
use crate::tol::Tolerances;

/// Singular values in descending order.
pub fn singular_values(m: &CMatrix) -> Vec<f64> {
    if m.is_empty() {
        return Vec::new();
    }
    let mut s = svd(m).sigma;
    s.truncate(m.nrows().min(m.ncols()));
    s
}

fn cutoff(s: &[f64], tol: &Tolerances) -> f64 {
    s.first().copied().unwrap_or(0.0) * tol.rank_tol
}

/// Number of singular values above `rank_tol * sigma_max`; zero for a zero matrix.
pub fn rank_tol(m: &CMatrix, tol: &Tolerances) -> usize {
    let s = singular_values(m);
    let cut = cutoff(&s, tol);
    s.iter().filter(|&&x| x > cut && x > 0.0).count()
}

/// Orthonormal basis of the column space, as the columns of the returned matrix.
pub fn range_basis(m: &CMatrix, tol: &Tolerances) -> CMatrix {
    if m.is_empty() {
        return zeros(m.nrows(), 0);
    }
    let Svd { u, sigma: s, .. } = svd(m);
    let smax = s.iter().cloned().fold(0.0, f64::max);
    let keep: Vec<usize> = (0..s.len()).filter(|&k| s[k] > smax * tol.rank_tol && s[k] > 0.0).collect();
    let mut out = zeros(m.nrows(), keep.len());
    for (dst, &k) in keep.iter().enumerate() {
        out.set_column(dst, &u.column(k));
    }
    out
}

/// Orthonormal basis of the kernel, as the columns of the returned matrix.
pub fn null_space(m: &CMatrix, tol: &Tolerances) -> CMatrix {
    let n = m.ncols();
    if n == 0 {
        return zeros(0, 0);
    }
    if m.nrows() == 0 {
        return CMatrix::identity(n, n);
    }
    let Svd { v, sigma: s, .. } = svd(m);
    let smax = s.iter().cloned().fold(0.0, f64::max);
    let null: Vec<usize> = (0..s.len()).filter(|&k| !(s[k] > smax * tol.rank_tol && s[k] > 0.0)).collect();
    let mut out = zeros(n, null.len());
    for (dst, &k) in null.iter().enumerate() {
        out.set_column(dst, &v.column(k));
    }
    out
}

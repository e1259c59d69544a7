use crate::error::NumericError;
use crate::matrix::{zeros, CMatrix};
use crate::tol::Tolerances;
use nalgebra::linalg::Schur;
use num_complex::Complex64;

/// Eigenpairs of a Hermitian matrix, eigenvalues ascending.
#[derive(Debug, Clone)]
pub struct HermitianEigen {
    pub values: Vec<f64>,
    /// Unitary matrix whose columns are the eigenvectors, in the order of `values`.
    pub vectors: CMatrix,
}

/// Counts of negative, zero and positive eigenvalues.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct Inertia {
    pub n_neg: usize,
    pub n_zero: usize,
    pub n_pos: usize,
}

const MAX_SWEEPS: usize = 100;

/// Cyclic Jacobi eigendecomposition of a Hermitian matrix.
///
/// Only the Hermitian part of `h` is used. Pivots are visited in the fixed
/// row-major order `(0,1), (0,2), ..., (n-2,n-1)`, so results are reproducible.
pub fn hermitian_eigen(h: &CMatrix) -> HermitianEigen {
    let n = h.nrows();
    assert_eq!(n, h.ncols(), "hermitian_eigen: matrix must be square");
    let mut a = (h + h.adjoint()).scale(0.5);
    let mut v = CMatrix::identity(n, n);
    let scale = a.norm().max(f64::MIN_POSITIVE);
    for _ in 0..MAX_SWEEPS {
        let mut off = 0.0;
        for i in 0..n {
            for j in (i + 1)..n {
                off += a[(i, j)].norm_sqr();
            }
        }
        if off.sqrt() <= 1e-16 * scale {
            break;
        }
        for p in 0..n {
            for q in (p + 1)..n {
                rotate(&mut a, &mut v, p, q);
            }
        }
    }
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&x, &y| a[(x, x)].re.total_cmp(&a[(y, y)].re));
    let values = order.iter().map(|&k| a[(k, k)].re).collect();
    let mut vectors = zeros(n, n);
    for (dst, &src) in order.iter().enumerate() {
        vectors.set_column(dst, &v.column(src));
    }
    HermitianEigen { values, vectors }
}

fn rotate(a: &mut CMatrix, v: &mut CMatrix, p: usize, q: usize) {
    let g = a[(p, q)];
    let gabs = g.norm();
    if gabs <= f64::MIN_POSITIVE {
        return;
    }
    let app = a[(p, p)].re;
    let aqq = a[(q, q)].re;
    let tau = (aqq - app) / (2.0 * gabs);
    let t = if tau >= 0.0 { 1.0 } else { -1.0 } / (tau.abs() + (1.0 + tau * tau).sqrt());
    let cs = 1.0 / (1.0 + t * t).sqrt();
    let sn = t * cs;
    let e = g / gabs;
    let ec = e.conj();
    let n = a.nrows();
    // Columns: A <- A U with U = [[c, s], [-s conj(e), c conj(e)]].
    for k in 0..n {
        let xp = a[(k, p)];
        let xq = a[(k, q)];
        a[(k, p)] = xp * cs - xq * ec * sn;
        a[(k, q)] = xp * sn + xq * ec * cs;
        let yp = v[(k, p)];
        let yq = v[(k, q)];
        v[(k, p)] = yp * cs - yq * ec * sn;
        v[(k, q)] = yp * sn + yq * ec * cs;
    }
    // Rows: A <- U* A.
    for k in 0..n {
        let xp = a[(p, k)];
        let xq = a[(q, k)];
        a[(p, k)] = xp * cs - xq * e * sn;
        a[(q, k)] = xp * sn + xq * e * cs;
    }
    a[(p, q)] = Complex64::new(0.0, 0.0);
    a[(q, p)] = Complex64::new(0.0, 0.0);
    a[(p, p)] = Complex64::new(a[(p, p)].re, 0.0);
    a[(q, q)] = Complex64::new(a[(q, q)].re, 0.0);
}

fn check_hermitian(h: &CMatrix, tol: &Tolerances) -> Result<(), NumericError> {
    if h.nrows() != h.ncols() {
        return Err(NumericError::Dimension(format!("expected a square matrix, got {}x{}", h.nrows(), h.ncols())));
    }
    let asym = (h - h.adjoint()).norm();
    let limit = tol.residual_tol * h.norm();
    if asym > limit {
        return Err(NumericError::NotHermitian { asym, limit });
    }
    Ok(())
}

/// Inertia of a Hermitian matrix: eigenvalues below `-eig_tol`, within `±eig_tol`, above `eig_tol`.
pub fn inertia(h: &CMatrix, tol: &Tolerances) -> Result<Inertia, NumericError> {
    check_hermitian(h, tol)?;
    let eig = hermitian_eigen(h);
    let mut out = Inertia::default();
    for &l in &eig.values {
        if l < -tol.eig_tol {
            out.n_neg += 1;
        } else if l > tol.eig_tol {
            out.n_pos += 1;
        } else {
            out.n_zero += 1;
        }
    }
    Ok(out)
}

/// Spectral pseudoinverse of a Hermitian matrix.
///
/// Eigenvalues within `±eig_tol` are dropped, the rest inverted, so the result
/// `X` satisfies `XPX = X`, `PXP = P` and carries the same inertia as `P`.
pub fn pinv_hermitian(p: &CMatrix, tol: &Tolerances) -> CMatrix {
    let n = p.nrows();
    let eig = hermitian_eigen(p);
    let mut x = zeros(n, n);
    for (k, &l) in eig.values.iter().enumerate() {
        if l.abs() > tol.eig_tol {
            let col = eig.vectors.column(k);
            x += (col * col.adjoint()).scale(1.0 / l);
        }
    }
    (&x + x.adjoint()).scale(0.5)
}

/// Eigenvalues of a general square complex matrix via the complex Schur form.
pub fn eigenvalues(m: &CMatrix) -> Vec<Complex64> {
    if m.is_empty() {
        return Vec::new();
    }
    match Schur::new(m.clone()).eigenvalues() {
        Some(v) => v.iter().cloned().collect(),
        None => {
            let (_, t) = Schur::new(m.clone()).unpack();
            (0..t.nrows()).map(|k| t[(k, k)]).collect()
        }
    }
}

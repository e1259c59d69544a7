use crate::dataset::DataSet;
use crate::error::ProblemError;
use takagi_numeric::{
    hermitian_eigen, hermitian_part, norm2, null_space, range_basis, rank_tol, CMatrix, Complex64, DomainKind,
    Tolerances,
};

/// Largest `|v* j w|` accepted between vectors of a neutral subspace.
pub const NEUTRAL_TOL: f64 = 1e-9;

/// `nu = rank(M*P^2M + N*P^2N + C*C) - rank P` on the disc, `rank(P^2 + C*C) - rank P` on the half-plane.
pub fn nu_degenerate(ds: &DataSet, tol: &Tolerances) -> usize {
    let p = hermitian_part(ds.pmat());
    let p2 = &p * &p;
    let c = ds.c();
    let big = match ds.domain() {
        DomainKind::Disc => {
            let (m, n) = ds.pencil();
            m.adjoint() * &p2 * &m + n.adjoint() * &p2 * &n + c.adjoint() * c
        }
        DomainKind::HalfPlane => &p2 + c.adjoint() * c,
    };
    let rank_p = hermitian_eigen(&p).values.iter().filter(|v| v.abs() > tol.eig_tol).count();
    rank_tol(&big, tol).saturating_sub(rank_p)
}

/// Eigenvectors of a Hermitian matrix for eigenvalues within `eig_tol` of zero, matching [`takagi_numeric::pinv_hermitian`].
fn hermitian_kernel(p: &CMatrix, tol: &Tolerances) -> CMatrix {
    let eig = hermitian_eigen(p);
    let keep: Vec<usize> = (0..eig.values.len()).filter(|&k| eig.values[k].abs() <= tol.eig_tol).collect();
    CMatrix::from_fn(p.nrows(), keep.len(), |i, j| eig.vectors[(i, keep[j])])
}

/// Rotates each column so that its entry of largest modulus is real and positive.
fn canonical_phases(mut b: CMatrix) -> CMatrix {
    for mut col in b.column_iter_mut() {
        let pivot =
            col.iter()
                .copied()
                .fold(Complex64::new(0.0, 0.0), |a, z| if z.norm() > a.norm() * (1.0 + 1e-12) { z } else { a });
        if pivot.norm() > 0.0 {
            let ph = pivot.conj() / pivot.norm();
            col.apply(|z| *z *= ph);
        }
    }
    b
}

/// Orthonormal basis of `F(mu) ker P`, checked to be `j_pq`-neutral.
pub fn neutral_subspace(ds: &DataSet, tol: &Tolerances) -> Result<CMatrix, ProblemError> {
    let p = hermitian_part(ds.pmat());
    let ker = hermitian_kernel(&p, tol);
    if ker.ncols() == 0 {
        return Ok(CMatrix::zeros(ds.m(), 0));
    }
    let image = ds.f_eval(ds.mu())? * ker;
    let basis = canonical_phases(range_basis(&image, tol));
    let residual = norm2(&(basis.adjoint() * ds.j() * &basis));
    if residual > NEUTRAL_TOL {
        return Err(ProblemError::NotNeutral { residual });
    }
    Ok(basis)
}

/// Unitaries `U` (`p x p`) and `V` (`q x q`) whose last `nu` columns carry the
/// top and bottom blocks of a `j_pq`-neutral basis, scaled so that the top
/// block equals `epsilon` times the bottom block exactly when `epsilon` maps
/// the last columns of `V` onto the last columns of `U`.
pub fn uv_from_neutral(basis: &CMatrix, p: usize, q: usize) -> Result<(CMatrix, CMatrix), ProblemError> {
    if basis.nrows() != p + q {
        return Err(ProblemError::Dimension(format!("basis has {} rows, expected {}", basis.nrows(), p + q)));
    }
    let nu = basis.ncols();
    if nu == 0 {
        return Ok((CMatrix::identity(p, p), CMatrix::identity(q, q)));
    }
    if nu > p.min(q) {
        return Err(ProblemError::DegenerateAlignment);
    }
    let x = basis.rows(0, p).into_owned();
    let y = basis.rows(p, q).into_owned();
    let eig = hermitian_eigen(&hermitian_part(&(x.adjoint() * &x)));
    let top = eig.values.iter().fold(0.0f64, |a, v| a.max(v.abs()));
    if eig.values.iter().any(|&v| v <= 1e-10 * top.max(1e-300)) || top == 0.0 {
        return Err(ProblemError::DegenerateAlignment);
    }
    let mut scaled = eig.vectors.clone();
    for (k, &v) in eig.values.iter().enumerate() {
        scaled.column_mut(k).scale_mut(1.0 / v.sqrt());
    }
    let t = scaled * eig.vectors.adjoint();
    let xh = &x * &t;
    let yh = &y * &t;
    let tol = Tolerances::default();
    let check = |m: &CMatrix| norm2(&(m.adjoint() * m - CMatrix::identity(nu, nu))) <= 1e-8;
    if !check(&xh) || !check(&yh) {
        return Err(ProblemError::DegenerateAlignment);
    }
    let complete = |h: &CMatrix, size: usize| -> Result<CMatrix, ProblemError> {
        let comp = canonical_phases(null_space(&h.adjoint(), &tol));
        if comp.ncols() != size - nu {
            return Err(ProblemError::DegenerateAlignment);
        }
        let mut u = CMatrix::zeros(size, size);
        u.view_mut((0, 0), (size, size - nu)).copy_from(&comp);
        u.view_mut((0, size - nu), (size, nu)).copy_from(h);
        Ok(u)
    };
    Ok((complete(&xh, p)?, complete(&yh, q)?))
}

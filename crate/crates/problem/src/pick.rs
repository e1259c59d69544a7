use crate::dataset::DataSet;
use crate::error::ProblemError;
use takagi_numeric::{CMatrix, Complex64, DomainKind};

fn check_points(domain: DomainKind, alphas: &[Complex64], svals: &[CMatrix]) -> Result<(usize, usize), ProblemError> {
    if alphas.is_empty() {
        return Err(ProblemError::PickData("no interpolation points".into()));
    }
    if alphas.len() != svals.len() {
        return Err(ProblemError::PickData(format!("{} points but {} values", alphas.len(), svals.len())));
    }
    let (p, q) = svals[0].shape();
    if svals.iter().any(|s| s.shape() != (p, q)) {
        return Err(ProblemError::PickData("values have different shapes".into()));
    }
    for (j, &a) in alphas.iter().enumerate() {
        if !domain.contains(a) {
            return Err(ProblemError::PickData(format!("point {a} is not inside the {}", domain.name())));
        }
        if alphas[..j].iter().any(|&b| (a - b).norm() <= 1e-12) {
            return Err(ProblemError::PickData(format!("point {a} is repeated")));
        }
    }
    Ok((p, q))
}

/// Block Pick matrix `[(I_q - S_j* S_k) / rho_{alpha_j}(alpha_k)]` on the given domain.
pub fn pick_matrix(domain: DomainKind, alphas: &[Complex64], svals: &[CMatrix]) -> Result<CMatrix, ProblemError> {
    let (_, q) = check_points(domain, alphas, svals)?;
    let k = alphas.len();
    let mut out = CMatrix::zeros(k * q, k * q);
    for j in 0..k {
        for l in j..k {
            let blk = (CMatrix::identity(q, q) - svals[j].adjoint() * &svals[l]) / domain.rho(alphas[l], alphas[j]);
            out.view_mut((j * q, l * q), (q, q)).copy_from(&blk);
            if j != l {
                out.view_mut((l * q, j * q), (q, q)).copy_from(&blk.adjoint());
            } else {
                for d in 0..q {
                    let z = out[(j * q + d, j * q + d)];
                    out[(j * q + d, j * q + d)] = Complex64::new(z.re, 0.0);
                }
            }
        }
    }
    Ok(out)
}

/// Block Pick matrix of the matrix Nevanlinna-Pick problem `s(alpha_j) = S_j` on the unit disc.
pub fn pick_matrix_np(alphas: &[Complex64], svals: &[CMatrix]) -> Result<CMatrix, ProblemError> {
    pick_matrix(DomainKind::Disc, alphas, svals)
}

/// Data set encoding `s(alpha_j) = S_j` with `S_j` of size `p x q`.
///
/// `A1 = diag(alpha_j I_q)`, `C11 = [S_1 ... S_k]`, `C21 = [I_q ... I_q]` and
/// `A2` is empty; `P` is the Pick matrix.
pub fn nevanlinna_pick_data(
    domain: DomainKind,
    alphas: &[Complex64],
    svals: &[CMatrix],
    kappa: usize,
) -> Result<DataSet, ProblemError> {
    let (p, q) = check_points(domain, alphas, svals)?;
    let k = alphas.len();
    let n1 = k * q;
    let mut a1 = CMatrix::zeros(n1, n1);
    let mut c = CMatrix::zeros(p + q, n1);
    for (j, (&a, s)) in alphas.iter().zip(svals).enumerate() {
        for d in 0..q {
            a1[(j * q + d, j * q + d)] = a;
            c[(p + d, j * q + d)] = Complex64::new(1.0, 0.0);
        }
        c.view_mut((0, j * q), (p, q)).copy_from(s);
    }
    let pmat = pick_matrix(domain, alphas, svals)?;
    DataSet::new(domain, a1, CMatrix::zeros(0, 0), c, pmat, p, q, kappa, None)
}

use crate::domain::DomainKind;
use crate::eigen::eigenvalues;
use crate::error::NumericError;
use crate::matrix::{block_diag, hermitian_part, identity, signature, zeros, CMatrix};
use crate::rank::singular_values;
use crate::tol::Tolerances;

/// The pencil `(M, N)` attached to the blocks `A1`, `A2`.
///
/// Disc: `M = diag(A1, I)`, `N = diag(I, A2)`. Half-plane: `M = diag(A1, A2)`, `N = I`.
pub fn stein_pencil(domain: DomainKind, a1: &CMatrix, a2: &CMatrix) -> (CMatrix, CMatrix) {
    let (n1, n2) = (a1.nrows(), a2.nrows());
    match domain {
        DomainKind::Disc => (block_diag(a1, &identity(n2)), block_diag(&identity(n1), a2)),
        DomainKind::HalfPlane => (block_diag(a1, a2), identity(n1 + n2)),
    }
}

fn kron(a: &CMatrix, b: &CMatrix) -> CMatrix {
    let (ar, ac) = a.shape();
    let (br, bc) = b.shape();
    let mut out = zeros(ar * br, ac * bc);
    for i in 0..ar {
        for j in 0..ac {
            let aij = a[(i, j)];
            if aij.norm() == 0.0 {
                continue;
            }
            out.view_mut((i * br, j * bc), (br, bc)).copy_from(&b.map(|z| z * aij));
        }
    }
    out
}

fn check_shapes(a1: &CMatrix, a2: &CMatrix, c: &CMatrix, p: usize) -> Result<(), NumericError> {
    if !a1.is_square() || !a2.is_square() {
        return Err(NumericError::Dimension("A1 and A2 must be square".into()));
    }
    if c.ncols() != a1.nrows() + a2.nrows() {
        return Err(NumericError::Dimension(format!(
            "C has {} columns, expected n1 + n2 = {}",
            c.ncols(),
            a1.nrows() + a2.nrows()
        )));
    }
    if p > c.nrows() {
        return Err(NumericError::Dimension(format!("p = {} exceeds the {} rows of C", p, c.nrows())));
    }
    Ok(())
}

fn check_spectra(domain: DomainKind, a1: &CMatrix, a2: &CMatrix) -> Result<(), NumericError> {
    for z in eigenvalues(a1) {
        if !domain.a1_spectrum_ok(z) {
            return Err(NumericError::SpectrumViolation { block: "A1", re: z.re, im: z.im });
        }
    }
    for z in eigenvalues(a2) {
        if !domain.a2_spectrum_ok(z) {
            return Err(NumericError::SpectrumViolation { block: "A2", re: z.re, im: z.im });
        }
    }
    Ok(())
}

/// Solves `L vec(P) = rhs` for the Kronecker operator `L`, rejecting a singular operator.
fn solve_vectorized(l: CMatrix, rhs: &CMatrix, tol: &Tolerances) -> Result<CMatrix, NumericError> {
    let n = rhs.nrows();
    if n == 0 {
        return Ok(zeros(0, 0));
    }
    let s = singular_values(&l);
    let smax = s[0];
    let smin = *s.last().expect("non-empty operator");
    if smax > 0.0 && smin <= tol.rank_tol * smax {
        return Err(NumericError::NonUniqueSylvester);
    }
    let b = nalgebra::DVector::from_iterator(n * n, rhs.iter().cloned());
    let x = l.lu().solve(&b).ok_or(NumericError::NonUniqueSylvester)?;
    let p = CMatrix::from_column_slice(n, n, x.as_slice());
    Ok(hermitian_part(&p))
}

/// Solves the disc Stein equation `M* P M - N* P N = C* j C` blockwise.
///
/// `p` is the number of rows of `C` that carry the `+` sign in `j = diag(I_p, -I_q)`.
/// The diagonal blocks are unique once both spectra lie in the disc; the
/// off-diagonal block is unique iff `sigma(A1)` avoids the conjugate of `sigma(A2)`.
pub fn solve_stein_disc(
    a1: &CMatrix,
    a2: &CMatrix,
    c: &CMatrix,
    p: usize,
    tol: &Tolerances,
) -> Result<CMatrix, NumericError> {
    check_shapes(a1, a2, c, p)?;
    check_spectra(DomainKind::Disc, a1, a2)?;
    let (m, nn) = stein_pencil(DomainKind::Disc, a1, a2);
    let j = signature(p, c.nrows() - p);
    let rhs = c.adjoint() * j * c;
    let l = kron(&m.transpose(), &m.adjoint()) - kron(&nn.transpose(), &nn.adjoint());
    solve_vectorized(l, &rhs, tol)
}

/// Solves the half-plane Lyapunov equation `A* P + P A + C* J C = 0` with `A = diag(A1, A2)`.
pub fn solve_lyapunov_halfplane(
    a1: &CMatrix,
    a2: &CMatrix,
    c: &CMatrix,
    p: usize,
    tol: &Tolerances,
) -> Result<CMatrix, NumericError> {
    check_shapes(a1, a2, c, p)?;
    check_spectra(DomainKind::HalfPlane, a1, a2)?;
    let (a, _) = stein_pencil(DomainKind::HalfPlane, a1, a2);
    let n = a.nrows();
    let j = signature(p, c.nrows() - p);
    let rhs = -(c.adjoint() * j * c);
    let l = kron(&identity(n), &a.adjoint()) + kron(&a.transpose(), &identity(n));
    solve_vectorized(l, &rhs, tol)
}

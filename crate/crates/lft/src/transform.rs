use crate::error::LftError;
use takagi_numeric::{norm2, Complex64};
use takagi_rational::{RationalError, RationalMVF};

/// The four blocks of a square function split after row and column `p`.
pub fn blocks(w: &RationalMVF, p: usize) -> (RationalMVF, RationalMVF, RationalMVF, RationalMVF) {
    let q = w.rows() - p;
    (w.block(0, 0, p, p), w.block(0, p, p, q), w.block(p, 0, q, p), w.block(p, p, q, q))
}

fn check_shapes(w: &RationalMVF, eps: &RationalMVF) -> Result<(usize, usize), LftError> {
    let (p, q) = eps.shape();
    if w.rows() != w.cols() || w.rows() != p + q {
        return Err(LftError::Shape(format!("W is {}x{} but the parameter is {}x{}", w.rows(), w.cols(), p, q)));
    }
    Ok((p, q))
}

fn singular_to(err: RationalError, replacement: LftError) -> LftError {
    match err {
        RationalError::SingularDeterminant => replacement,
        other => LftError::Rational(other),
    }
}

/// `T_W[eps] = (w11 eps + w12)(w21 eps + w22)^-1`.
pub fn t_transform(w: &RationalMVF, eps: &RationalMVF) -> Result<RationalMVF, LftError> {
    let (p, _) = check_shapes(w, eps)?;
    let (w11, w12, w21, w22) = blocks(w, p);
    let den = &(&w21 * eps) + &w22;
    let den_inv = den.inverse().map_err(|e| singular_to(e, LftError::DegenerateDenominator))?;
    Ok(&(&(&w11 * eps) + &w12) * &den_inv)
}

/// The dual form `(w11# + eps w12#)^-1 (w21# + eps w22#)`, equal to `T_W[eps]` for `j`-inner `W`.
pub fn t_transform_dual(w: &RationalMVF, eps: &RationalMVF) -> Result<RationalMVF, LftError> {
    let (p, _) = check_shapes(w, eps)?;
    let (w11, w12, w21, w22) = blocks(w, p);
    let left = &w11.adjoint_sharp() + &(eps * &w12.adjoint_sharp());
    let right = &w21.adjoint_sharp() + &(eps * &w22.adjoint_sharp());
    let left_inv = left.inverse().map_err(|e| singular_to(e, LftError::DegenerateDenominator))?;
    Ok(&left_inv * &right)
}

/// Largest spectral-norm difference between the primary and dual forms at the given points.
pub fn dual_discrepancy(w: &RationalMVF, eps: &RationalMVF, points: &[Complex64]) -> Result<f64, LftError> {
    let primary = t_transform(w, eps)?;
    let dual = t_transform_dual(w, eps)?;
    let mut worst = 0.0f64;
    for &z in points {
        worst = worst.max(norm2(&(primary.eval(z)? - dual.eval(z)?)));
    }
    Ok(worst)
}

/// Potapov-Ginzburg transform `[[w11 - w12 w22^-1 w21, w12 w22^-1], [-w22^-1 w21, w22^-1]]`
/// of a square function split after row and column `p`.
pub fn pg_transform(w: &RationalMVF, p: usize) -> Result<RationalMVF, LftError> {
    if w.rows() != w.cols() || p > w.rows() {
        return Err(LftError::Shape(format!("cannot split a {}x{} function after {}", w.rows(), w.cols(), p)));
    }
    let (w11, w12, w21, w22) = blocks(w, p);
    let w22_inv = w22.inverse().map_err(|e| singular_to(e, LftError::DegenerateBlock))?;
    let w12_w22i = &w12 * &w22_inv;
    let w22i_w21 = &w22_inv * &w21;
    Ok(RationalMVF::block2(&(&w11 - &(&w12_w22i * &w21)), &w12_w22i, &(-&w22i_w21), &w22_inv))
}

//! Dense complex matrix kernels shared by the interpolation crates.
//!
//! Matrices are `nalgebra` dynamic matrices over `Complex64`. On top of the
//! plain arithmetic this crate supplies a cyclic Jacobi eigensolver for
//! Hermitian matrices, inertia counts, tolerance-aware rank and kernels,
//! Kronecker-form solvers for the Stein and Lyapunov equations that define
//! Pick matrices, and the spectral pseudoinverse of a Hermitian matrix.

mod domain;
mod eigen;
mod error;
mod matrix;
mod rank;
mod stein;
mod svd;
mod tol;

pub use domain::DomainKind;
pub use eigen::{eigenvalues, hermitian_eigen, inertia, pinv_hermitian, HermitianEigen, Inertia};
pub use error::NumericError;
pub use matrix::{
    block2, block_diag, c, cmat, col_stack, hermitian_part, identity, is_finite, norm2, row_stack, signature, zeros,
    CMatrix,
};
pub use num_complex::Complex64;
pub use rank::{null_space, range_basis, rank_tol, singular_values};
pub use stein::{solve_lyapunov_halfplane, solve_stein_disc, stein_pencil};
pub use svd::{svd, Svd};
pub use tol::Tolerances;

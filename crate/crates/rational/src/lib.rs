//! Rational matrix-valued functions over a scalar denominator.
//!
//! A [`RationalMVF`] stores a matrix of polynomials divided by one scalar
//! polynomial, tagged with the domain (disc or right half-plane) that fixes
//! the meaning of the sharp adjoint and of "poles in the domain". Poles are
//! located from denominator roots and quantified by the rank of the block
//! Toeplitz matrix of Laurent coefficients, which are computed by trapezoidal
//! quadrature on a small circle.

mod error;
mod laurent;
mod mvf;
mod poly;

pub use error::RationalError;
pub use laurent::{LaurentBlock, LaurentOptions};
pub use mvf::{coprime_left_check, coprime_right_check, RationalMVF};
pub use poly::{cluster_roots, Poly, RootCluster};

//! The resolvent matrix of an interpolation data set and its factorizations.
//!
//! [`build_w`] forms `W(lambda) = I - rho_mu(lambda) F(lambda) X F(mu)* j` as an
//! exact rational matrix. [`associated_pair`] computes the inner factors
//! `{b1, b2}` that clear the poles of the rows of `W`, [`phi_rows`] and
//! [`compute_k`] produce the coprime numerators and the function `K`, and
//! [`theta_phi`] assembles the factorization `W = Theta Phi`.

mod error;
mod factor;
mod holo;
mod pair;
mod w;

pub use error::ResolventError;
pub use factor::{compute_k, phi_rows, theta_phi, PhiRows, ThetaPhi};
pub use holo::{holomorphic_in_domain, holomorphic_in_exterior, sample_points};
pub use pair::{associated_pair, AssociatedPair};
pub use w::{build_w, kernel_residual, w_inverse, ResolventW};

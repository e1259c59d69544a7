//! Blaschke-Potapov products and Krein-Langer factorizations.
//!
//! A [`BPProduct`] is an ordered product of elementary factors
//! `I - P + phi_alpha(lambda) P` with `P` an orthogonal projection and
//! `phi_alpha` the scalar Blaschke factor of the domain. The functions
//! [`kl_factor_left`] and [`kl_factor_right`] split a rational generalized
//! Schur function `s` as `b_l^-1 s_l` or `s_r b_r^-1` by peeling off one
//! rank-one factor per step until no pole remains in the domain.

mod error;
mod factor;
mod kl;

pub use error::BlaschkeError;
pub use factor::{BPFactor, BPProduct};
pub use kl::{check_noncancellation_left, check_noncancellation_right, kl_factor_left, kl_factor_right, schur_screen};

//! Bitangential interpolation data sets on the disc or the right half-plane.
//!
//! A [`DataSet`] carries `(A1, A2, C, P)` together with the block sizes `p`,
//! `q`, the target index `kappa` and the normalization point `mu`. This crate
//! checks the standing assumptions (spectra, the Stein or Lyapunov equation,
//! observability and the invariance conditions on `X`), builds Pick matrices,
//! counts negative squares of sampled kernels, and computes the neutral
//! subspace and unitary alignment used when `P` is singular.

mod dataset;
mod error;
#[cfg(feature = "generate")]
pub mod generate;
mod kernel;
mod neutral;
mod pick;
mod validate;

pub use dataset::DataSet;
pub use error::ProblemError;
pub use kernel::{negative_squares_sample, HermitianKernel, JKernel, SchurKernel};
pub use neutral::{neutral_subspace, nu_degenerate, uv_from_neutral};
pub use pick::{nevanlinna_pick_data, pick_matrix_np};
pub use validate::{observable, validate, Check, ValidationReport};

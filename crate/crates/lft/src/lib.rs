//! Linear fractional transformations `T_W[eps]`, parametrization of the
//! solutions of a boundary interpolation problem in a generalized Schur class,
//! verification of candidate solutions, and excluded-parameter analysis.

mod error;
mod excluded;
mod param;
mod transform;
mod verify;

pub use error::LftError;
pub use excluded::{
    excluded_check, find_admissible_constant, no_excluded_criterion, rouche_count, takagi_sarason_membership,
};
pub use param::{embed_parameter, parametrize, Parameter, Solution};
pub use transform::{blocks, dual_discrepancy, pg_transform, t_transform, t_transform_dual};
pub use verify::{
    coprime_a, coprime_b, residue_conditions, verify_solution, C3Basis, VerificationReport, BOUNDARY_SAMPLES,
    CONTRACTIVE_SLACK, GRAM_POINTS,
};

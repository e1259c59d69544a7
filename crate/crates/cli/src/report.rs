//! The machine-readable report emitted by every command.

use crate::format::{complex_to_json, finite, matrix_to_json, JComplex, JMatrix, JRational};
use serde::{Deserialize, Serialize};
use takagi_lft::{C3Basis, VerificationReport};
use takagi_numeric::{Inertia, Tolerances};
use takagi_problem::{Check, ValidationReport};
use takagi_resolvent::AssociatedPair;

/// Process exit status, a stable contract.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Status {
    Ok,
    VerificationFailed,
    ValidationFailed,
    ParseError,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::VerificationFailed => 1,
            Status::ValidationFailed => 2,
            Status::ParseError => 3,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct CheckJson {
    pub ok: bool,
    pub detail: String,
}

impl From<&Check> for CheckJson {
    fn from(c: &Check) -> Self {
        Self { ok: c.ok, detail: c.detail.clone() }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ToleranceJson {
    pub rank: f64,
    pub eig: f64,
    pub res: f64,
}

impl From<&Tolerances> for ToleranceJson {
    fn from(t: &Tolerances) -> Self {
        Self { rank: t.rank_tol, eig: t.eig_tol, res: t.residual_tol }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ValidationJson {
    pub b1: CheckJson,
    pub b2: CheckJson,
    pub b3: CheckJson,
    pub b4: CheckJson,
    pub all_ok: bool,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub stein_residual: Option<f64>,
    pub kappa1: usize,
}

impl From<&ValidationReport> for ValidationJson {
    fn from(r: &ValidationReport) -> Self {
        Self {
            b1: (&r.b1).into(),
            b2: (&r.b2).into(),
            b3: (&r.b3).into(),
            b4: (&r.b4).into(),
            all_ok: r.all_ok(),
            stein_residual: finite(r.stein_residual),
            kappa1: r.kappa1,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PairJson {
    pub b1: JRational,
    pub b2: JRational,
    pub b1_zeros: Vec<JComplex>,
    pub b2_zeros: Vec<JComplex>,
}

impl From<&AssociatedPair> for PairJson {
    fn from(p: &AssociatedPair) -> Self {
        Self {
            b1: JRational::from_mvf(&p.b1.as_rational()),
            b2: JRational::from_mvf(&p.b2.as_rational()),
            b1_zeros: p.b1.zeros().into_iter().map(complex_to_json).collect(),
            b2_zeros: p.b2.zeros().into_iter().map(complex_to_json).collect(),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationJson {
    pub c1: CheckJson,
    pub c2: CheckJson,
    pub c3: CheckJson,
    /// `"residues"`, `"implied"` or `"undetermined"`.
    pub c3_basis: String,
    pub c4: CheckJson,
    pub kappa: usize,
    pub kappa_actual: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa_kl: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub boundary_sup: Option<f64>,
    pub class_membership: usize,
    pub in_class: bool,
    pub membership_detail: String,
    pub coprime_a: bool,
    pub coprime_b: bool,
    pub coprime_detail: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub residue_residual: Option<f64>,
    /// (C1)-(C3) hold and the candidate lies in the target class.
    pub solves: bool,
}

impl VerificationJson {
    pub fn new(r: &VerificationReport, kappa: usize) -> Self {
        Self {
            c1: (&r.c1).into(),
            c2: (&r.c2).into(),
            c3: (&r.c3).into(),
            c3_basis: match r.c3_basis {
                C3Basis::Residues => "residues",
                C3Basis::Implied => "implied",
                C3Basis::Undetermined => "undetermined",
            }
            .into(),
            c4: (&r.c4).into(),
            kappa,
            kappa_actual: r.kappa_actual,
            kappa_kl: r.kappa_kl,
            boundary_sup: finite(r.boundary_sup),
            class_membership: r.class_membership,
            in_class: r.in_class,
            membership_detail: r.membership_detail.clone(),
            coprime_a: r.coprime_a,
            coprime_b: r.coprime_b,
            coprime_detail: r.coprime_detail.clone(),
            residue_residual: r.residue_residual.and_then(finite),
            solves: r.solves(),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct InertiaJson {
    pub negative: usize,
    pub zero: usize,
    pub positive: usize,
}

impl From<Inertia> for InertiaJson {
    fn from(i: Inertia) -> Self {
        Self { negative: i.n_neg, zero: i.n_zero, positive: i.n_pos }
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PickJson {
    pub matrix: JMatrix,
    pub inertia: InertiaJson,
}

/// Output of a command. Absent sections are omitted from the JSON.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportFile {
    pub command: String,
    pub file: String,
    pub status: Status,
    pub exit_code: i32,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub domain: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub tolerances: Option<ToleranceJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kappa: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub validation: Option<ValidationJson>,
    #[serde(rename = "P", default, skip_serializing_if = "Option::is_none")]
    pub pmat: Option<JMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p_solved: Option<bool>,
    #[serde(rename = "X", default, skip_serializing_if = "Option::is_none")]
    pub x: Option<JMatrix>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub nu: Option<usize>,
    #[serde(rename = "W", default, skip_serializing_if = "Option::is_none")]
    pub w: Option<JRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pair: Option<PairJson>,
    #[serde(rename = "K", default, skip_serializing_if = "Option::is_none")]
    pub k: Option<JRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub epsilon: Option<JRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub s: Option<JRational>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub verification: Option<VerificationJson>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pick: Option<PickJson>,
}

impl ReportFile {
    pub fn new(command: &str, file: &str) -> Self {
        Self {
            command: command.into(),
            file: file.into(),
            status: Status::Ok,
            exit_code: 0,
            error: None,
            domain: None,
            seed: None,
            tolerances: None,
            kappa: None,
            validation: None,
            pmat: None,
            p_solved: None,
            x: None,
            nu: None,
            w: None,
            pair: None,
            k: None,
            epsilon: None,
            s: None,
            verification: None,
            pick: None,
        }
    }

    pub fn set_status(&mut self, status: Status) {
        self.status = status;
        self.exit_code = status.exit_code();
    }

    /// Marks the report failed with `status` and a message.
    pub fn fail(mut self, status: Status, message: impl Into<String>) -> Self {
        self.set_status(status);
        self.error = Some(message.into());
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serialization cannot fail")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }
}

/// Helper for optional matrices in reports.
pub fn opt_matrix(m: Option<&takagi_numeric::CMatrix>) -> Option<JMatrix> {
    m.map(matrix_to_json)
}

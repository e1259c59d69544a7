//! The JSON problem file and its conversion to a data set.

use crate::format::{input_matrix, JNum, JRationalIn};
use serde::{Deserialize, Serialize};
use takagi_numeric::{CMatrix, DomainKind, NumericError, Tolerances};
use takagi_problem::{DataSet, ProblemError};
use takagi_rational::RationalMVF;
use thiserror::Error;

/// A malformed or inconsistent problem file.
#[derive(Debug, Clone, PartialEq, Error)]
#[error("{field}: {message}")]
pub struct ParseError {
    /// Path of the offending field, or `<file>` for whole-file problems.
    pub field: String,
    pub message: String,
}

impl ParseError {
    pub fn new(field: impl Into<String>, message: impl Into<String>) -> Self {
        Self { field: field.into(), message: message.into() }
    }
}

/// Failure to turn a problem file into a data set.
#[derive(Debug, Clone, PartialEq, Error)]
pub enum LoadError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    /// The data are well formed but violate a standing assumption needed to build the data set.
    #[error("{0}")]
    Invalid(String),
}

/// `P` given as a matrix, or the string `"solve"`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(untagged)]
pub enum PSpec {
    Solve(String),
    Matrix(Vec<Vec<JNum>>),
}

/// Tolerance overrides; missing entries keep their defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ToleranceFile {
    #[serde(default)]
    pub rank: Option<f64>,
    #[serde(default)]
    pub eig: Option<f64>,
    #[serde(default)]
    pub res: Option<f64>,
}

/// An interpolation problem as read from disk.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ProblemFile {
    /// `"disc"` or `"half-plane"`.
    pub domain: String,
    pub p: usize,
    pub q: usize,
    #[serde(rename = "A1", default)]
    pub a1: Vec<Vec<JNum>>,
    #[serde(rename = "A2", default)]
    pub a2: Vec<Vec<JNum>>,
    #[serde(rename = "C")]
    pub c: Vec<Vec<JNum>>,
    /// Missing or `"solve"` means `P` is computed from the Stein or Lyapunov equation.
    #[serde(rename = "P", default)]
    pub pmat: Option<PSpec>,
    pub kappa: usize,
    #[serde(default)]
    pub mu: Option<JNum>,
    #[serde(default)]
    pub epsilon: Option<JRationalIn>,
    #[serde(default)]
    pub candidate_s: Option<JRationalIn>,
    #[serde(default)]
    pub tolerances: Option<ToleranceFile>,
}

/// Command-line overrides applied on top of the file.
#[derive(Debug, Clone, Default, PartialEq)]
pub struct Overrides {
    pub domain: Option<String>,
    pub tol_rank: Option<f64>,
    pub tol_eig: Option<f64>,
    pub tol_res: Option<f64>,
}

/// A parsed problem with its data set and effective tolerances.
#[derive(Debug, Clone)]
pub struct Loaded {
    pub file: ProblemFile,
    pub domain: DomainKind,
    pub tol: Tolerances,
    pub ds: DataSet,
    /// `P` was computed rather than read.
    pub p_solved: bool,
}

impl Loaded {
    pub fn epsilon(&self) -> Result<Option<RationalMVF>, ParseError> {
        self.file.epsilon.as_ref().map(|e| e.to_mvf(self.domain).map_err(|m| ParseError::new("epsilon", m))).transpose()
    }

    pub fn candidate_s(&self) -> Result<Option<RationalMVF>, ParseError> {
        self.file
            .candidate_s
            .as_ref()
            .map(|e| e.to_mvf(self.domain).map_err(|m| ParseError::new("candidate_s", m)))
            .transpose()
    }
}

/// Deserializes a problem file, naming the offending field on failure.
pub fn parse_problem(text: &str) -> Result<ProblemFile, ParseError> {
    let de = &mut serde_json::Deserializer::from_str(text);
    serde_path_to_error::deserialize(de).map_err(|e| {
        let path = e.path().to_string();
        let field = if path.is_empty() || path == "." { "<file>".to_string() } else { path };
        ParseError::new(field, e.into_inner().to_string())
    })
}

fn square(name: &str, rows: &[Vec<JNum>]) -> Result<CMatrix, ParseError> {
    let m = input_matrix(rows).map_err(|e| ParseError::new(name, e))?;
    if m.nrows() != m.ncols() {
        return Err(ParseError::new(name, format!("must be square, got {}x{}", m.nrows(), m.ncols())));
    }
    Ok(m)
}

/// Builds the data set, checking dimensions field by field.
pub fn load(file: ProblemFile, over: &Overrides) -> Result<Loaded, LoadError> {
    let domain_name = over.domain.clone().unwrap_or_else(|| file.domain.clone());
    let domain = DomainKind::from_name(&domain_name).ok_or_else(|| {
        ParseError::new("domain", format!("unknown domain {domain_name:?}, expected \"disc\" or \"half-plane\""))
    })?;
    let ft = file.tolerances.unwrap_or_default();
    let tol = Tolerances::new(
        over.tol_rank.or(ft.rank).unwrap_or(0.0),
        over.tol_eig.or(ft.eig).unwrap_or(0.0),
        over.tol_res.or(ft.res).unwrap_or(0.0),
    );
    let a1 = square("A1", &file.a1)?;
    let a2 = square("A2", &file.a2)?;
    let n = a1.nrows() + a2.nrows();
    let c = input_matrix(&file.c).map_err(|e| ParseError::new("C", e))?;
    let m = file.p + file.q;
    let c = if c.nrows() == m && c.ncols() == 0 && n > 0 { CMatrix::zeros(m, 0) } else { c };
    if c.nrows() != m {
        return Err(ParseError::new("C", format!("has {} rows, expected p + q = {m}", c.nrows())).into());
    }
    let c = if n == 0 { CMatrix::zeros(m, 0) } else { c };
    if c.ncols() != n {
        return Err(ParseError::new("C", format!("has {} columns, expected n1 + n2 = {n}", c.ncols())).into());
    }
    let mu = file.mu.map(JNum::value);
    let (ds, p_solved) = match &file.pmat {
        None => (DataSet::with_solved_p(domain, a1, a2, c, file.p, file.q, file.kappa, mu, &tol), true),
        Some(PSpec::Solve(s)) if s == "solve" => {
            (DataSet::with_solved_p(domain, a1, a2, c, file.p, file.q, file.kappa, mu, &tol), true)
        }
        Some(PSpec::Solve(s)) => {
            return Err(ParseError::new("P", format!("expected a matrix or \"solve\", got {s:?}")).into())
        }
        Some(PSpec::Matrix(rows)) => {
            let pm = if n == 0 { CMatrix::zeros(0, 0) } else { square("P", rows)? };
            if pm.nrows() != n {
                return Err(ParseError::new("P", format!("is {}x{}, expected {n}x{n}", pm.nrows(), pm.ncols())).into());
            }
            (DataSet::new(domain, a1, a2, c, pm, file.p, file.q, file.kappa, mu), false)
        }
    };
    let ds = ds.map_err(|e| match e {
        ProblemError::Numeric(NumericError::Dimension(_)) | ProblemError::Dimension(_) => {
            LoadError::Parse(ParseError::new("<data set>", e.to_string()))
        }
        ProblemError::ForbiddenMu { .. } if mu.is_some() => LoadError::Parse(ParseError::new("mu", e.to_string())),
        other => LoadError::Invalid(other.to_string()),
    })?;
    Ok(Loaded { file, domain, tol, ds, p_solved })
}

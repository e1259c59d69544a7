//! The `validate`, `solve`, `verify` and `pick` commands.

use crate::format::{matrix_to_json, JRational};
use crate::problem_file::{load, parse_problem, LoadError, Loaded, Overrides, ParseError};
use crate::report::{
    opt_matrix, PairJson, PickJson, ReportFile, Status, ToleranceJson, ValidationJson, VerificationJson,
};
use takagi_lft::{find_admissible_constant, parametrize, verify_solution};
use takagi_numeric::{inertia, CMatrix};
use takagi_problem::{neutral_subspace, validate};
use takagi_rational::RationalMVF;
use takagi_resolvent::{associated_pair, build_w, compute_k, phi_rows, AssociatedPair, PhiRows, ResolventW};

/// Draws tried by the default parameter search in `solve`.
pub const ADMISSIBLE_TRIES: usize = 1000;

/// Parts of the `solve` output to include.
#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Emit {
    #[value(name = "W", alias = "w")]
    W,
    #[value(name = "pair")]
    Pair,
    #[value(name = "K", alias = "k")]
    K,
    #[value(name = "s")]
    S,
    #[value(name = "all")]
    All,
}

/// Options shared by all commands.
#[derive(Debug, Clone, PartialEq)]
pub struct RunOptions {
    pub overrides: Overrides,
    pub seed: u64,
    pub emit: Vec<Emit>,
}

impl Default for RunOptions {
    fn default() -> Self {
        Self { overrides: Overrides::default(), seed: 0, emit: vec![Emit::All] }
    }
}

impl RunOptions {
    fn emits(&self, e: Emit) -> bool {
        self.emit.iter().any(|&x| x == e || x == Emit::All)
    }
}

/// An intermediate result; the error is a finished report.
type Step<T> = Result<T, Box<ReportFile>>;

fn bail(report: &ReportFile, status: Status, message: impl Into<String>) -> Box<ReportFile> {
    Box::new(report.clone().fail(status, message))
}

/// Reads, parses and loads a problem file, filling the report header.
fn start(command: &str, label: &str, text: &str, opts: &RunOptions) -> Step<(Loaded, ReportFile)> {
    let report = ReportFile::new(command, label);
    let file = parse_problem(text).map_err(|e| bail(&report, Status::ParseError, e.to_string()))?;
    let loaded = load(file, &opts.overrides).map_err(|e| match e {
        LoadError::Parse(p) => bail(&report, Status::ParseError, p.to_string()),
        LoadError::Invalid(m) => bail(&report, Status::ValidationFailed, m),
    })?;
    let mut report = report;
    report.domain = Some(loaded.domain.name().into());
    report.tolerances = Some(ToleranceJson::from(&loaded.tol));
    report.kappa = Some(loaded.ds.kappa());
    report.pmat = Some(matrix_to_json(loaded.ds.pmat()));
    report.p_solved = Some(loaded.p_solved);
    Ok((loaded, report))
}

/// Runs the validation step; returns `Err` with a finished report when it fails.
fn validated(loaded: &Loaded, mut report: ReportFile) -> Step<ReportFile> {
    let v = validate(&loaded.ds, &loaded.tol);
    report.validation = Some(ValidationJson::from(&v));
    report.x = opt_matrix(v.x.as_ref());
    if v.all_ok() {
        Ok(report)
    } else {
        let failed: Vec<&str> = [("B1", &v.b1), ("B2", &v.b2), ("B3", &v.b3), ("B4", &v.b4)]
            .into_iter()
            .filter(|(_, c)| !c.ok)
            .map(|(n, _)| n)
            .collect();
        Err(bail(&report, Status::ValidationFailed, format!("standing assumptions fail: {}", failed.join(", "))))
    }
}

fn read(path: &str) -> Result<String, ParseError> {
    std::fs::read_to_string(path).map_err(|e| ParseError::new("<file>", format!("cannot read {path}: {e}")))
}

fn with_file(
    command: &str,
    path: &str,
    opts: &RunOptions,
    run: fn(&str, &str, &RunOptions) -> ReportFile,
) -> ReportFile {
    match read(path) {
        Ok(text) => run(path, &text, opts),
        Err(e) => ReportFile::new(command, path).fail(Status::ParseError, e.to_string()),
    }
}

fn either(r: Step<ReportFile>) -> ReportFile {
    r.unwrap_or_else(|e| *e)
}

/// Checks the standing assumptions and reports `P`, `X` and the number of negative eigenvalues of `P`.
pub fn validate_text(label: &str, text: &str, opts: &RunOptions) -> ReportFile {
    either(start("validate", label, text, opts).and_then(|(loaded, report)| validated(&loaded, report)))
}

pub fn cmd_validate(path: &str, opts: &RunOptions) -> ReportFile {
    with_file("validate", path, opts, validate_text)
}

fn pipeline(loaded: &Loaded) -> Result<(ResolventW, AssociatedPair, PhiRows), String> {
    let w = build_w(&loaded.ds, None, &loaded.tol).map_err(|e| format!("resolvent matrix: {e}"))?;
    let pair = associated_pair(&w, &loaded.tol).map_err(|e| format!("associated pair: {e}"))?;
    let phis = phi_rows(&w, &pair, &loaded.tol).map_err(|e| format!("coprime factors of W: {e}"))?;
    Ok((w, pair, phis))
}

/// The default reduced parameter: an admissible constant when `nu = 0`, otherwise zero.
fn default_parameter(loaded: &Loaded, phis: &PhiRows, nu: usize, seed: u64) -> Result<RationalMVF, String> {
    let (p, q, domain) = (loaded.ds.p(), loaded.ds.q(), loaded.domain);
    if nu > 0 {
        return Ok(RationalMVF::zeros(p.saturating_sub(nu), q.saturating_sub(nu), domain));
    }
    let eps = find_admissible_constant(phis, None, &loaded.ds.nodes(), ADMISSIBLE_TRIES, seed, &loaded.tol)
        .map_err(|e| format!("default parameter: {e}"))?;
    Ok(RationalMVF::constant(&eps, domain))
}

/// Builds `W`, the associated pair and `K`, parametrizes a solution and verifies it.
pub fn solve_text(label: &str, text: &str, opts: &RunOptions) -> ReportFile {
    either((|| {
        let (loaded, report) = start("solve", label, text, opts)?;
        let mut report = validated(&loaded, report)?;
        report.seed = Some(opts.seed);
        let fail = |r: &ReportFile, m: String| bail(r, Status::VerificationFailed, m);
        let given = loaded.epsilon().map_err(|e| bail(&report, Status::ParseError, e.to_string()))?;
        let (w, pair, phis) = pipeline(&loaded).map_err(|m| fail(&report, m))?;
        if opts.emits(Emit::W) {
            report.w = Some(JRational::from_mvf(w.rational()));
        }
        if opts.emits(Emit::Pair) {
            report.pair = Some(PairJson::from(&pair));
        }
        let k = compute_k(&w, &pair, &phis, &loaded.tol).map_err(|e| fail(&report, format!("K: {e}")))?;
        if opts.emits(Emit::K) {
            report.k = Some(JRational::from_mvf(&k));
        }
        let nu = neutral_subspace(&loaded.ds, &loaded.tol)
            .map_err(|e| fail(&report, format!("neutral subspace: {e}")))?
            .ncols();
        report.nu = Some(nu);
        let eps_tilde = match given {
            Some(e) => e,
            None => default_parameter(&loaded, &phis, nu, opts.seed).map_err(|m| fail(&report, m))?,
        };
        let sol = parametrize(&loaded.ds, &eps_tilde, &loaded.tol)
            .map_err(|e| fail(&report, format!("parametrization: {e}")))?;
        report.epsilon = Some(JRational::from_mvf(&sol.eps));
        if opts.emits(Emit::S) {
            report.s = Some(JRational::from_mvf(&sol.s));
        }
        finish_verification(&loaded, report, &w, &sol.s, &pair, &phis)
    })())
}

pub fn cmd_solve(path: &str, opts: &RunOptions) -> ReportFile {
    with_file("solve", path, opts, solve_text)
}

fn finish_verification(
    loaded: &Loaded,
    mut report: ReportFile,
    w: &ResolventW,
    s: &RationalMVF,
    pair: &AssociatedPair,
    phis: &PhiRows,
) -> Step<ReportFile> {
    let kappa = loaded.ds.kappa();
    let r = verify_solution(w, s, pair, phis, kappa, &loaded.tol)
        .map_err(|e| bail(&report, Status::ParseError, e.to_string()))?;
    report.verification = Some(VerificationJson::new(&r, kappa));
    if r.solves() {
        Ok(report)
    } else {
        Err(bail(&report, Status::VerificationFailed, "the function does not solve the problem in the target class"))
    }
}

/// Verifies `candidate_s` against (C1)-(C4), class membership and coprimeness.
pub fn verify_text(label: &str, text: &str, opts: &RunOptions) -> ReportFile {
    either((|| {
        let (loaded, report) = start("verify", label, text, opts)?;
        let s = match loaded.candidate_s() {
            Ok(Some(s)) => s,
            Ok(None) => return Err(bail(&report, Status::ParseError, "candidate_s: missing")),
            Err(e) => return Err(bail(&report, Status::ParseError, e.to_string())),
        };
        let mut report = validated(&loaded, report)?;
        report.s = Some(JRational::from_mvf(&s));
        let (w, pair, phis) = pipeline(&loaded).map_err(|m| bail(&report, Status::VerificationFailed, m))?;
        finish_verification(&loaded, report, &w, &s, &pair, &phis)
    })())
}

pub fn cmd_verify(path: &str, opts: &RunOptions) -> ReportFile {
    with_file("verify", path, opts, verify_text)
}

/// Reports the Pick matrix `P` and its inertia.
pub fn pick_text(label: &str, text: &str, opts: &RunOptions) -> ReportFile {
    either(start("pick", label, text, opts).and_then(|(loaded, mut report)| {
        let pm: &CMatrix = loaded.ds.pmat();
        let i = inertia(pm, &loaded.tol).map_err(|e| bail(&report, Status::ValidationFailed, format!("P: {e}")))?;
        report.pick = Some(PickJson { matrix: matrix_to_json(pm), inertia: i.into() });
        Ok(report)
    }))
}

pub fn cmd_pick(path: &str, opts: &RunOptions) -> ReportFile {
    with_file("pick", path, opts, pick_text)
}

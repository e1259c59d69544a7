use crate::dataset::DataSet;
use takagi_numeric::{
    eigenvalues, hermitian_part, identity, inertia, norm2, pinv_hermitian, range_basis, rank_tol, CMatrix, DomainKind,
    Tolerances,
};

/// Outcome of one assumption check with a human-readable diagnostic.
#[derive(Debug, Clone, PartialEq)]
pub struct Check {
    pub ok: bool,
    pub detail: String,
}

impl Check {
    pub fn pass(detail: impl Into<String>) -> Self {
        Self { ok: true, detail: detail.into() }
    }
    pub fn fail(detail: impl Into<String>) -> Self {
        Self { ok: false, detail: detail.into() }
    }
}

/// Results of checking the standing assumptions on a data set.
#[derive(Debug, Clone, PartialEq)]
pub struct ValidationReport {
    /// Spectra of `A1` and `A2` lie where the domain requires.
    pub b1: Check,
    /// `P` is Hermitian and solves the Stein or Lyapunov equation.
    pub b2: Check,
    /// `(C12, A2)` and `(C21, A1)` are observable.
    pub b3: Check,
    /// The pseudoinverse `X` of `P` satisfies the generalized-inverse and invariance conditions.
    pub b4: Check,
    /// Relative residual of the Stein or Lyapunov equation.
    pub stein_residual: f64,
    /// The matrix `X` when `b4` holds.
    pub x: Option<CMatrix>,
    /// Number of negative eigenvalues of `P`.
    pub kappa1: usize,
}

impl ValidationReport {
    pub fn all_ok(&self) -> bool {
        self.b1.ok && self.b2.ok && self.b3.ok && self.b4.ok
    }
}

/// True if `[C; CA; ...; CA^(n-1)]` has full column rank `n`.
pub fn observable(c: &CMatrix, a: &CMatrix, tol: &Tolerances) -> bool {
    let n = a.nrows();
    if n == 0 {
        return true;
    }
    if c.nrows() == 0 {
        return false;
    }
    let mut blocks = Vec::with_capacity(n);
    let mut cur = c.clone();
    for _ in 0..n {
        let next = &cur * a;
        blocks.push(cur);
        cur = next;
    }
    let rows = c.nrows() * n;
    let mut obs = CMatrix::zeros(rows, n);
    for (k, b) in blocks.iter().enumerate() {
        obs.view_mut((k * c.nrows(), 0), (c.nrows(), n)).copy_from(b);
    }
    rank_tol(&obs, tol) == n
}

fn rel(res: f64, scale: f64) -> f64 {
    res / scale.max(1.0)
}

/// Relative residual of `M*PM - N*PN - C*jC` (disc) or `A*P + PA + C*JC` (half-plane).
pub fn stein_residual(ds: &DataSet) -> f64 {
    let (m, n) = ds.pencil();
    let p = ds.pmat();
    let c = ds.c();
    let cjc = c.adjoint() * ds.j() * c;
    let (lhs, scale) = match ds.domain() {
        DomainKind::Disc => {
            let r = m.adjoint() * p * &m - n.adjoint() * p * &n - &cjc;
            (r, norm2(p) * (norm2(&m).powi(2) + norm2(&n).powi(2)) + norm2(c).powi(2))
        }
        DomainKind::HalfPlane => {
            let r = m.adjoint() * p + p * &m + &cjc;
            (r, 2.0 * norm2(p) * norm2(&m) + norm2(c).powi(2))
        }
    };
    rel(norm2(&lhs), scale)
}

fn check_b1(ds: &DataSet) -> Check {
    let d = ds.domain();
    for z in eigenvalues(ds.a1()) {
        if !d.a1_spectrum_ok(z) {
            return Check::fail(format!("A1 has eigenvalue {:.6}{:+.6}i outside the {}", z.re, z.im, d.name()));
        }
    }
    for z in eigenvalues(ds.a2()) {
        if !d.a2_spectrum_ok(z) {
            return Check::fail(format!("A2 has eigenvalue {:.6}{:+.6}i in the wrong region", z.re, z.im));
        }
    }
    Check::pass("spectra admissible")
}

fn check_b2(ds: &DataSet, residual: f64, tol: &Tolerances) -> Check {
    let p = ds.pmat();
    let asym = rel(norm2(&(p - p.adjoint())), norm2(p));
    if asym > tol.residual_tol {
        return Check::fail(format!("P is not Hermitian (relative asymmetry {asym:.3e})"));
    }
    if residual > tol.residual_tol {
        return Check::fail(format!("equation residual {residual:.3e} exceeds {:.1e}", tol.residual_tol));
    }
    Check::pass(format!("equation residual {residual:.3e}"))
}

fn check_b3(ds: &DataSet, tol: &Tolerances) -> Check {
    let mut failures = Vec::new();
    if ds.n2() > 0 && !observable(&ds.c12(), ds.a2(), tol) {
        failures.push("(C12, A2)");
    }
    if ds.n1() > 0 && !observable(&ds.c21(), ds.a1(), tol) {
        failures.push("(C21, A1)");
    }
    if failures.is_empty() {
        Check::pass("observable")
    } else {
        Check::fail(format!("not observable: {}", failures.join(", ")))
    }
}

fn check_b4(ds: &DataSet, tol: &Tolerances) -> (Check, Option<CMatrix>) {
    let p = hermitian_part(ds.pmat());
    let x = pinv_hermitian(&p, tol);
    let (m, n) = ds.pencil();
    let nx = norm2(&x);
    let np = norm2(&p);
    let r1 = rel(norm2(&(&x * &p * &x - &x)), nx * nx * np);
    let r2 = rel(norm2(&(&p * &x * &p - &p)), np * np * nx);
    let basis = range_basis(&x, tol);
    let proj = identity(ds.n()) - &basis * basis.adjoint();
    let r3 = rel(norm2(&(&proj * &m * &x)), norm2(&m) * nx).max(rel(norm2(&(&proj * &n * &x)), norm2(&n) * nx));
    let mut worst = [("XPX = X", r1), ("PXP = P", r2), ("rng X invariant", r3)].to_vec();
    if ds.domain() == DomainKind::HalfPlane {
        let c = ds.c();
        let ric = &x * m.adjoint() + &m * &x + &x * c.adjoint() * ds.j() * c * &x;
        worst.push(("Riccati", rel(norm2(&ric), 2.0 * nx * norm2(&m) + nx * nx * norm2(c).powi(2))));
    }
    match worst.iter().find(|(_, r)| *r > tol.residual_tol) {
        Some((name, r)) => (Check::fail(format!("{name} fails with residual {r:.3e}")), None),
        None => {
            let maxr = worst.iter().map(|(_, r)| *r).fold(0.0, f64::max);
            (Check::pass(format!("X = pinv(P), worst residual {maxr:.3e}")), Some(x))
        }
    }
}

/// Checks the standing assumptions and reports each one separately.
pub fn validate(ds: &DataSet, tol: &Tolerances) -> ValidationReport {
    let stein_residual = stein_residual(ds);
    let (b4, x) = check_b4(ds, tol);
    let kappa1 = inertia(&hermitian_part(ds.pmat()), tol).map(|i| i.n_neg).unwrap_or(0);
    ValidationReport {
        b1: check_b1(ds),
        b2: check_b2(ds, stein_residual, tol),
        b3: check_b3(ds, tol),
        b4,
        stein_residual,
        x,
        kappa1,
    }
}

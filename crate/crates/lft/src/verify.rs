use crate::error::LftError;
use crate::param::Parameter;
use crate::transform::t_transform;
use takagi_blaschke::{kl_factor_left, kl_factor_right};
use takagi_numeric::{norm2, CMatrix, Complex64, DomainKind, Tolerances};
use takagi_problem::{negative_squares_sample, Check, DataSet, SchurKernel};
use takagi_rational::{coprime_left_check, coprime_right_check, LaurentOptions, Poly, RationalMVF};
use takagi_resolvent::{holomorphic_in_domain, sample_points, w_inverse, AssociatedPair, PhiRows, ResolventW};

/// Boundary points used for the contractivity part of class membership.
pub const BOUNDARY_SAMPLES: usize = 64;
/// Slack allowed above one for the boundary supremum of the largest singular value.
pub const CONTRACTIVE_SLACK: f64 = 1e-7;
/// Interior points of the Gram matrix used to count negative squares.
pub const GRAM_POINTS: usize = 25;

/// How condition (C3) was decided.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum C3Basis {
    /// `s` is holomorphic at every node and the three residue sums were compared.
    Residues,
    /// `s` has a pole at a node; (C3) follows from (C1) and (C2) because the Sylvester block of `P` is unique.
    Implied,
    /// `s` has a pole at a node and the Sylvester block of `P` is not unique.
    Undetermined,
}

/// Outcome of checking a candidate solution against the interpolation problem.
#[derive(Debug, Clone, PartialEq)]
pub struct VerificationReport {
    pub c1: Check,
    pub c2: Check,
    pub c3: Check,
    pub c3_basis: C3Basis,
    pub c4: Check,
    /// Pole multiplicity of `s` in the domain.
    pub kappa_actual: usize,
    /// Degree of the left Krein-Langer Blaschke-Potapov factor, when the factorization exists.
    pub kappa_kl: Option<usize>,
    /// Supremum of the largest singular value of `s` over boundary samples.
    pub boundary_sup: f64,
    /// Negative squares of the sampled Schur kernel of `s`.
    pub class_membership: usize,
    /// Contractive on the boundary, with pole count and sampled negative squares both equal to the target.
    pub in_class: bool,
    pub membership_detail: String,
    pub coprime_a: bool,
    pub coprime_b: bool,
    pub coprime_detail: String,
    /// Largest residual among the residue sums, when they were evaluated.
    pub residue_residual: Option<f64>,
}

impl VerificationReport {
    /// (C1)-(C3) hold and `s` lies in the target class.
    pub fn solves(&self) -> bool {
        self.c1.ok && self.c2.ok && self.c3.ok && self.in_class
    }
}

fn distinct(points: Vec<Complex64>) -> Vec<Complex64> {
    let mut out: Vec<Complex64> = Vec::new();
    for z in points {
        if !out.iter().any(|w| (w - z).norm() <= 1e-7 * z.norm().max(1.0)) {
            out.push(z);
        }
    }
    out
}

/// `(lambda I - a)^-1` as a rational function.
fn resolvent(a: &CMatrix, domain: DomainKind) -> Result<RationalMVF, LftError> {
    let n = a.nrows();
    let pencil = RationalMVF::from_matrix_coeffs(&[-a, CMatrix::identity(n, n)], Poly::one(), domain)?;
    Ok(pencil.inverse()?)
}

/// Sum of the residues of `f` at the given points.
fn residue_sum(f: &RationalMVF, points: &[Complex64], opts: &LaurentOptions) -> Result<CMatrix, LftError> {
    let mut acc = CMatrix::zeros(f.rows(), f.cols());
    for &z in points {
        if let Some(cl) = f.cluster_at(z) {
            acc += f.laurent(cl.center, cl.mult, opts)?.residue();
        }
    }
    Ok(acc)
}

fn relative(diff: &CMatrix, target: &CMatrix) -> f64 {
    if diff.is_empty() {
        return 0.0;
    }
    norm2(diff) / norm2(target).max(1.0)
}

/// Largest residual of the three residue conditions. `s` must be holomorphic at the nodes.
///
/// The sums run over the nodes carried by `A1`, by `A2`, and by both, and are
/// compared with `C11`, `C22*` and `P21` (`-P21` on the half-plane).
pub fn residue_conditions(ds: &DataSet, s: &RationalMVF, tol: &Tolerances) -> Result<f64, LftError> {
    let domain = ds.domain();
    let opts = LaurentOptions::from(tol);
    let mut worst = 0.0f64;
    let r1 = if ds.n1() > 0 { Some(resolvent(ds.a1(), domain)?) } else { None };
    let a2_shift = match domain {
        DomainKind::Disc => ds.a2().adjoint(),
        DomainKind::HalfPlane => -ds.a2().adjoint(),
    };
    let r2 = if ds.n2() > 0 { Some(resolvent(&a2_shift, domain)?) } else { None };
    if let Some(r1) = &r1 {
        let g = &s.right_mul_const(&ds.c21()) * r1;
        let sum = residue_sum(&g, &distinct(ds.nodes1()), &opts)?;
        worst = worst.max(relative(&(sum - ds.c11()), &ds.c11()));
    }
    if let Some(r2) = &r2 {
        let g = r2 * &s.left_mul_const(&ds.c12().adjoint());
        let sum = residue_sum(&g, &distinct(ds.nodes2()), &opts)?;
        let target = ds.c22().adjoint();
        worst = worst.max(relative(&(sum - &target), &target));
    }
    if let (Some(r1), Some(r2)) = (&r1, &r2) {
        let g = &(r2 * &s.left_mul_const(&ds.c12().adjoint()).right_mul_const(&ds.c21())) * r1;
        let sum = residue_sum(&g, &ds.nodes(), &opts)?;
        let target = match domain {
            DomainKind::Disc => ds.p21(),
            DomainKind::HalfPlane => -ds.p21(),
        };
        worst = worst.max(relative(&(sum - &target), &target));
    }
    Ok(worst)
}

/// `G(lambda)` vanishes at the origin (disc) or at infinity (half-plane), up to `tol`.
fn vanishes_at_reference(g: &RationalMVF, tol: &Tolerances) -> Result<bool, LftError> {
    match g.domain() {
        DomainKind::Disc => Ok(norm2(&g.eval(Complex64::new(0.0, 0.0))?) <= tol.residual_tol),
        DomainKind::HalfPlane => {
            let dd = g.den().degree().unwrap_or(0);
            let lead = g.den().coeffs().last().map(|c| c.norm()).unwrap_or(1.0);
            for i in 0..g.rows() {
                for j in 0..g.cols() {
                    if g.num(i, j).coeffs().iter().skip(dd).any(|c| c.norm() > tol.residual_tol * lead) {
                        return Ok(false);
                    }
                }
            }
            Ok(true)
        }
    }
}

/// (C1): `[b_l  -s_l] F` is holomorphic in the domain (and proper on the half-plane).
fn check_c1(f: &RationalMVF, s: &RationalMVF, tol: &Tolerances) -> Check {
    let run = || -> Result<Check, LftError> {
        let (b_l, s_l) = kl_factor_left(s, tol)?;
        let g = &RationalMVF::hcat(&b_l.as_rational(), &(-&s_l)) * f;
        if holomorphic_in_domain(&g, tol)? {
            Ok(Check::pass("[b_l -s_l] F has no poles in the domain"))
        } else {
            let poles = g.poles_in_domain(tol)?;
            Ok(Check::fail(format!("[b_l -s_l] F has poles in the domain: {poles:?}")))
        }
    };
    run().unwrap_or_else(|e| Check::fail(format!("(C1) could not be evaluated: {e}")))
}

/// (C2): `F# [-s_r; b_r]` is holomorphic in the domain and vanishes at the reference point.
fn check_c2(f: &RationalMVF, s: &RationalMVF, tol: &Tolerances) -> Check {
    let run = || -> Result<Check, LftError> {
        let (s_r, b_r) = kl_factor_right(s, tol)?;
        let g = &f.adjoint_sharp() * &RationalMVF::vcat(&(-&s_r), &b_r.as_rational());
        let poles = g.poles_in_domain(tol)?;
        if !poles.is_empty() {
            return Ok(Check::fail(format!("F# [-s_r; b_r] has poles in the domain: {poles:?}")));
        }
        if !vanishes_at_reference(&g, tol)? {
            return Ok(Check::fail("F# [-s_r; b_r] does not vanish at the reference point"));
        }
        Ok(Check::pass("F# [-s_r; b_r] is holomorphic in the domain and vanishes at the reference point"))
    };
    run().unwrap_or_else(|e| Check::fail(format!("(C2) could not be evaluated: {e}")))
}

/// Pole multiplicity of `s` at each node.
fn node_poles(ds: &DataSet, s: &RationalMVF, tol: &Tolerances) -> Result<Vec<(Complex64, usize)>, LftError> {
    ds.nodes().into_iter().map(|z| Ok((z, s.pole_mult_at(z, tol)?))).collect()
}

fn sylvester_unique(ds: &DataSet) -> bool {
    let n2 = ds.nodes2();
    ds.nodes1().iter().all(|a| n2.iter().all(|b| (a - b).norm() > 1e-7 * a.norm().max(1.0)))
}

/// Class membership by boundary contractivity, pole count and sampled negative squares.
fn membership(s: &RationalMVF, kappa: usize, tol: &Tolerances) -> (usize, Option<usize>, f64, usize, bool, String) {
    let kappa_actual = s.pole_mult_region(tol).unwrap_or(usize::MAX);
    let kappa_kl = kl_factor_left(s, tol).ok().map(|(b, _)| b.degree());
    let boundary_sup = s.sup_norm2(&s.domain().boundary_samples(BOUNDARY_SAMPLES)).unwrap_or(f64::INFINITY);
    let poles: Vec<Complex64> = s.den_roots().to_vec();
    let points = sample_points(s.domain(), GRAM_POINTS, &poles);
    let directions = CMatrix::identity(s.rows(), s.rows());
    let neg = negative_squares_sample(&SchurKernel { s }, &points, &directions, tol).unwrap_or(usize::MAX);
    let contractive = boundary_sup <= 1.0 + CONTRACTIVE_SLACK;
    let in_class = contractive && kappa_actual == kappa && neg == kappa;
    let detail = format!(
        "boundary sup {boundary_sup:.3e} ({}), poles in domain {kappa_actual}, sampled negative squares {neg}, target {kappa}",
        if contractive { "contractive" } else { "not contractive" }
    );
    (kappa_actual, kappa_kl, boundary_sup, neg, in_class, detail)
}

/// Coprimeness of the factorizations of `theta_l w11# + eps_l w12#` and `w21 eps_r + w22 theta_r`
/// for the parameter `eps = T_{W^-1}[s]`.
fn coprimeness(
    w: &ResolventW,
    s: &RationalMVF,
    pair: &AssociatedPair,
    phis: &PhiRows,
    tol: &Tolerances,
) -> Result<(bool, bool), LftError> {
    let eps = chop_numerators(&t_transform(&w_inverse(w), s)?, tol.residual_tol);
    let param = Parameter::new(eps, tol)?;
    Ok((coprime_a(pair, phis, &param, tol)?, coprime_b(pair, phis, &param, tol)?))
}

/// Zeroes numerator coefficients below `rel` times the largest denominator coefficient.
fn chop_numerators(f: &RationalMVF, rel: f64) -> RationalMVF {
    let scale = f.den().coeffs().iter().fold(0.0f64, |m, c| m.max(c.norm()));
    let floor = rel * scale;
    let chop = |p: &Poly| {
        Poly::new(p.coeffs().iter().map(|&c| if c.norm() <= floor { Complex64::new(0.0, 0.0) } else { c }).collect())
    };
    let num = (0..f.rows()).flat_map(|i| (0..f.cols()).map(move |j| (i, j))).map(|(i, j)| chop(f.num(i, j))).collect();
    RationalMVF::new(f.rows(), f.cols(), num, f.den().clone(), f.domain()).unwrap_or_else(|_| f.clone())
}

/// Coprimeness over the domain of `theta_l w11# + eps_l w12# = (theta_l phi~11# + eps_l phi~12#) b1^-1`.
pub fn coprime_a(pair: &AssociatedPair, phis: &PhiRows, param: &Parameter, tol: &Tolerances) -> Result<bool, LftError> {
    let h =
        &(&param.theta_l.as_rational() * &phis.phit11.adjoint_sharp()) + &(&param.eps_l * &phis.phit12.adjoint_sharp());
    Ok(coprime_right_check(&pair.b1.as_rational(), &h, tol)?)
}

/// Coprimeness over the domain of `w21 eps_r + w22 theta_r = b2^-1 (phi21 eps_r + phi22 theta_r)`.
pub fn coprime_b(pair: &AssociatedPair, phis: &PhiRows, param: &Parameter, tol: &Tolerances) -> Result<bool, LftError> {
    let h = &(&phis.phi21 * &param.eps_r) + &(&phis.phi22 * &param.theta_r.as_rational());
    Ok(coprime_left_check(&pair.b2.as_rational(), &h, tol)?)
}

/// Checks a candidate `s` against (C1)-(C4), class membership and the coprimeness conditions.
///
/// Sub-check failures, including ones where a sub-check cannot be evaluated,
/// are reported in the result; only a shape mismatch is an error.
pub fn verify_solution(
    w: &ResolventW,
    s: &RationalMVF,
    pair: &AssociatedPair,
    phis: &PhiRows,
    kappa: usize,
    tol: &Tolerances,
) -> Result<VerificationReport, LftError> {
    let ds = w.ds();
    if s.shape() != (ds.p(), ds.q()) {
        return Err(LftError::Shape(format!("candidate is {}x{}, expected {}x{}", s.rows(), s.cols(), ds.p(), ds.q())));
    }
    let f = ds.f_rational()?;
    let c1 = check_c1(&f, s, tol);
    let c2 = check_c2(&f, s, tol);
    let poles_at_nodes = node_poles(ds, s, tol);
    let (c4, holomorphic_at_nodes) = match &poles_at_nodes {
        Ok(list) => {
            let bad: Vec<_> = list.iter().filter(|(_, m)| *m > 0).collect();
            if bad.is_empty() {
                (Check::pass("s is holomorphic at every node"), true)
            } else {
                (Check::fail(format!("s has poles at nodes: {bad:?}")), false)
            }
        }
        Err(e) => (Check::fail(format!("(C4) could not be evaluated: {e}")), false),
    };
    let mut residue_residual = None;
    let (c3, c3_basis) = if holomorphic_at_nodes {
        match residue_conditions(ds, s, tol) {
            Ok(r) => {
                residue_residual = Some(r);
                let check = if r <= tol.residual_tol {
                    Check::pass(format!("residue sums match with residual {r:.3e}"))
                } else {
                    Check::fail(format!("residue sums miss by {r:.3e}"))
                };
                (check, C3Basis::Residues)
            }
            Err(e) => (Check::fail(format!("residue sums could not be evaluated: {e}")), C3Basis::Residues),
        }
    } else if sylvester_unique(ds) {
        let check = if c1.ok && c2.ok {
            Check::pass("implied by (C1) and (C2): the Sylvester block of P is unique")
        } else {
            Check::fail("not implied: (C1) or (C2) fails")
        };
        (check, C3Basis::Implied)
    } else {
        (Check::fail("undetermined: s has a pole at a node shared by A1 and A2"), C3Basis::Undetermined)
    };
    let (kappa_actual, kappa_kl, boundary_sup, class_membership, in_class, membership_detail) =
        membership(s, kappa, tol);
    let (coprime_a, coprime_b, coprime_detail) = match coprimeness(w, s, pair, phis, tol) {
        Ok((a, b)) => (a, b, format!("parameter T_(W^-1)[s]: coprime (a) {a}, coprime (b) {b}")),
        Err(e) => (false, false, format!("parameter T_(W^-1)[s] unavailable: {e}")),
    };
    Ok(VerificationReport {
        c1,
        c2,
        c3,
        c3_basis,
        c4,
        kappa_actual,
        kappa_kl,
        boundary_sup,
        class_membership,
        in_class,
        membership_detail,
        coprime_a,
        coprime_b,
        coprime_detail,
        residue_residual,
    })
}

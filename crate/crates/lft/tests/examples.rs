use takagi_blaschke::{BPFactor, BPProduct};
use takagi_lft::{
    dual_discrepancy, excluded_check, find_admissible_constant, no_excluded_criterion, parametrize, pg_transform,
    rouche_count, t_transform, takagi_sarason_membership, verify_solution, C3Basis, LftError, Parameter,
};
use takagi_numeric::{c, cmat, CMatrix, Complex64, DomainKind, Tolerances};
use takagi_problem::{nevanlinna_pick_data, DataSet};
use takagi_rational::{Poly, RationalMVF};
use takagi_resolvent::{associated_pair, build_w, compute_k, phi_rows, AssociatedPair, PhiRows, ResolventW};

const D: DomainKind = DomainKind::Disc;

fn tol() -> Tolerances {
    Tolerances::default()
}

fn pts() -> Vec<Complex64> {
    (0..10).map(|k| Complex64::from_polar(0.15 + 0.08 * k as f64, 0.9 * k as f64 + 0.2)).collect()
}

fn poly(c: &[f64]) -> Poly {
    Poly::new(c.iter().map(|&x| Complex64::new(x, 0.0)).collect())
}

fn origin_node() -> DataSet {
    let c = cmat(4, 1, &[2.0, 0.0, 0.0, 1.0]);
    DataSet::with_solved_p(D, cmat(1, 1, &[0.0]), CMatrix::zeros(0, 0), c, 2, 2, 1, None, &tol()).unwrap()
}

fn b3_failure() -> DataSet {
    let pmat = cmat(2, 2, &[-1.0, 0.0, 0.0, 1.0]);
    DataSet::new(D, CMatrix::zeros(2, 2), CMatrix::zeros(0, 0), CMatrix::identity(2, 2), pmat, 1, 1, 1, None).unwrap()
}

/// `[[3, 2(1 - l)], [2(1 - l), 3 l]] / (4 - l)`.
fn origin_node_eps() -> RationalMVF {
    let num = vec![poly(&[3.0]), poly(&[2.0, -2.0]), poly(&[2.0, -2.0]), poly(&[0.0, 3.0])];
    RationalMVF::new(2, 2, num, poly(&[4.0, -1.0]), D).unwrap()
}

/// `diag(1 / l, l)`.
fn origin_node_s() -> RationalMVF {
    RationalMVF::diagonal(vec![poly(&[1.0]), poly(&[0.0, 0.0, 1.0])], poly(&[0.0, 1.0]), D).unwrap()
}

fn pipeline(ds: &DataSet) -> (ResolventW, AssociatedPair, PhiRows) {
    let w = build_w(ds, None, &tol()).unwrap();
    let pair = associated_pair(&w, &tol()).unwrap();
    let phis = phi_rows(&w, &pair, &tol()).unwrap();
    (w, pair, phis)
}

#[test]
fn origin_node_rational_parameter_gives_diag_solution() {
    let (w, _, _) = pipeline(&origin_node());
    let s = t_transform(w.rational(), &origin_node_eps()).unwrap();
    for z in pts() {
        let expect = CMatrix::from_row_slice(2, 2, &[1.0 / z, c(0.0, 0.0), c(0.0, 0.0), z]);
        assert!((s.eval(z).unwrap() - expect).norm() <= 1e-9);
    }
    assert!(dual_discrepancy(w.rational(), &origin_node_eps(), &pts()).unwrap() <= 1e-9);
    let sol = parametrize(&origin_node(), &origin_node_eps(), &tol()).unwrap();
    assert!(sol.s.max_diff(&origin_node_s(), &pts()).unwrap() <= 1e-9);
}

#[test]
fn origin_node_verification_report() {
    let (w, pair, phis) = pipeline(&origin_node());
    let r = verify_solution(&w, &origin_node_s(), &pair, &phis, 1, &tol()).unwrap();
    assert!(r.c1.ok, "{}", r.c1.detail);
    assert!(r.c2.ok, "{}", r.c2.detail);
    assert!(r.c3.ok, "{}", r.c3.detail);
    assert_eq!(r.c3_basis, C3Basis::Implied);
    assert!(!r.c4.ok);
    assert_eq!(r.kappa_actual, 1);
    assert_eq!(r.kappa_kl, Some(1));
    assert_eq!(r.class_membership, 1);
    assert!(r.in_class, "{}", r.membership_detail);
    assert!(r.coprime_a && r.coprime_b, "{}", r.coprime_detail);
    assert!(r.solves());
}

#[test]
fn origin_node_excluded_parameter_and_rouche_count() {
    let t = tol();
    let (_, _, phis) = pipeline(&origin_node());
    let param = Parameter::new(origin_node_eps(), &t).unwrap();
    assert_eq!(param.kappa(), 0);
    let zero = c(0.0, 0.0);
    let m = phis.phi21.eval(zero).unwrap() * origin_node_eps().eval(zero).unwrap() + phis.phi22.eval(zero).unwrap();
    let expect = CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), zero, c(0.5, 0.0), zero]);
    assert!((m - expect).norm() < 1e-12);
    assert_eq!(excluded_check(&phis, &param, &[zero], &t), vec![true]);
    assert_eq!(no_excluded_criterion(&phis, &[zero], &t), vec![false]);
    assert_eq!(rouche_count(&phis, &param, &t).unwrap(), 1);
    let eps = find_admissible_constant(&phis, None, &[zero], 10, 0, &t).unwrap();
    assert_eq!(eps, CMatrix::zeros(2, 2));
    let constant = Parameter::constant(&eps, D);
    assert_eq!(excluded_check(&phis, &constant, &[zero], &t), vec![false]);
}

#[test]
fn origin_node_takagi_sarason_membership() {
    let t = tol();
    let (w, pair, phis) = pipeline(&origin_node());
    let k = compute_k(&w, &pair, &phis, &t).unwrap();
    let g = &(&pair.b1.inverse_rational() * &(&origin_node_s() - &k)) * &pair.b2.inverse_rational();
    for z in pts() {
        let expect = CMatrix::from_row_slice(2, 2, &[1.0 / z, -2.0 / z, c(0.0, 0.0), c(1.0, 0.0)]);
        assert!((g.eval(z).unwrap() - expect).norm() < 1e-9);
    }
    assert!(takagi_sarason_membership(&origin_node_s(), &pair, &k, 1, &t).unwrap());
    assert!(!takagi_sarason_membership(&origin_node_s(), &pair, &k, 0, &t).unwrap());
    assert!(takagi_sarason_membership(&k, &pair, &k, 0, &t).unwrap());
    assert!(!takagi_sarason_membership(&k, &pair, &k, 1, &t).unwrap());
    let planted =
        &origin_node_s() + &RationalMVF::diagonal(vec![poly(&[0.1]), poly(&[0.0])], poly(&[-0.5, 1.0]), D).unwrap();
    assert!(!takagi_sarason_membership(&planted, &pair, &k, 1, &t).unwrap());
}

#[test]
fn origin_node_pg_transform() {
    let (w, _, _) = pipeline(&origin_node());
    let s = pg_transform(w.rational(), 2).unwrap();
    let back = pg_transform(&s, 2).unwrap();
    assert!(back.max_diff(w.rational(), &pts()).unwrap() <= 1e-9);
    let s21 = s.block(2, 0, 2, 2);
    assert_eq!(s21.pole_mult_region(&tol()).unwrap(), 1);
}

#[test]
fn b3_failure_constant_parameters_are_fixed_and_outside_the_class() {
    let t = tol();
    let w = build_w(&b3_failure(), None, &t).unwrap();
    let b2 = BPProduct::new(1, D, vec![BPFactor::new(c(0.0, 0.0), CMatrix::identity(1, 1), D).unwrap()]).unwrap();
    let pair = AssociatedPair { b1: BPProduct::identity(1, D), b2 };
    let phis = phi_rows(&w, &pair, &t).unwrap();
    for (k, e) in [0.0, 0.3, -0.7, 0.99].into_iter().enumerate() {
        let eps = RationalMVF::constant(&CMatrix::from_element(1, 1, Complex64::from_polar(e, k as f64)), D);
        let s = t_transform(w.rational(), &eps).unwrap();
        assert!(s.max_diff(&eps, &pts()).unwrap() <= 1e-12);
        let r = verify_solution(&w, &s, &pair, &phis, 1, &t).unwrap();
        assert_eq!(r.kappa_actual, 0);
        assert!(!r.in_class);
        assert!(!r.solves());
    }
}

#[test]
fn identity_w_maps_parameter_to_itself() {
    let i = RationalMVF::identity(3, D);
    let eps = RationalMVF::constant(&cmat(1, 2, &[0.2, -0.4]), D);
    assert!(t_transform(&i, &eps).unwrap().max_diff(&eps, &pts()).unwrap() == 0.0);
    assert!(pg_transform(&i, 1).unwrap().max_diff(&i, &pts()).unwrap() == 0.0);
    let ds = DataSet::new(
        D,
        cmat(1, 1, &[0.0]),
        CMatrix::zeros(0, 0),
        CMatrix::zeros(2, 1),
        cmat(1, 1, &[0.0]),
        1,
        1,
        0,
        None,
    )
    .unwrap();
    let eps_tilde = RationalMVF::constant(&cmat(1, 1, &[0.25]), D);
    let sol = parametrize(&ds, &eps_tilde, &tol()).unwrap();
    assert!(sol.s.max_diff(&eps_tilde, &pts()).unwrap() < 1e-12);
}

#[test]
fn shape_and_degeneracy_errors() {
    let i = RationalMVF::identity(3, D);
    let eps = RationalMVF::constant(&cmat(2, 2, &[0.0; 4]), D);
    assert!(matches!(t_transform(&i, &eps), Err(LftError::Shape(_))));
    let w = RationalMVF::constant(&cmat(2, 2, &[1.0, 0.0, 1.0, 0.0]), D);
    assert!(matches!(pg_transform(&w, 1), Err(LftError::DegenerateBlock)));
    let eps = RationalMVF::constant(&cmat(1, 1, &[0.0]), D);
    assert!(matches!(t_transform(&w, &eps), Err(LftError::DegenerateDenominator)));
}

#[test]
fn degenerate_neutral_problem_forces_constant_one() {
    let t = tol();
    let ds = DataSet::new(
        D,
        cmat(1, 1, &[0.0]),
        CMatrix::zeros(0, 0),
        cmat(2, 1, &[1.0, 1.0]),
        cmat(1, 1, &[0.0]),
        1,
        1,
        0,
        None,
    )
    .unwrap();
    let sol = parametrize(&ds, &RationalMVF::zeros(0, 0, D), &t).unwrap();
    let one = RationalMVF::constant(&cmat(1, 1, &[1.0]), D);
    assert!(sol.s.max_diff(&one, &pts()).unwrap() <= 1e-10);
    let (w, pair, phis) = pipeline(&ds);
    let r = verify_solution(&w, &sol.s, &pair, &phis, 0, &t).unwrap();
    assert_eq!(r.c3_basis, C3Basis::Residues);
    assert!(r.c3.ok, "{}", r.c3.detail);
    assert!(r.residue_residual.unwrap() <= 1e-8);
}

#[test]
fn one_point_pick_problem() {
    let t = tol();
    let zero = RationalMVF::zeros(1, 1, D);
    let ds = nevanlinna_pick_data(D, &[c(0.0, 0.0)], &[cmat(1, 1, &[0.0])], 0).unwrap();
    let (w, pair, phis) = pipeline(&ds);
    let r = verify_solution(&w, &zero, &pair, &phis, 0, &t).unwrap();
    assert!(r.c1.ok && r.c2.ok && r.c3.ok && r.c4.ok && r.in_class && r.coprime_a && r.coprime_b, "{r:?}");

    let ds = nevanlinna_pick_data(D, &[c(0.0, 0.0)], &[cmat(1, 1, &[0.5])], 0).unwrap();
    let (w, pair, phis) = pipeline(&ds);
    let r = verify_solution(&w, &zero, &pair, &phis, 0, &t).unwrap();
    assert!(!r.c1.ok);
    assert!(!r.c3.ok);
    assert!(r.residue_residual.unwrap() > 0.4);
    assert!(!r.solves());
}

#[test]
fn rouche_count_trivial_rows() {
    let t = tol();
    let phis = PhiRows {
        phi21: RationalMVF::zeros(2, 1, D),
        phi22: RationalMVF::identity(2, D),
        phit11: RationalMVF::identity(1, D),
        phit12: RationalMVF::zeros(1, 2, D),
    };
    let param = Parameter::constant(&cmat(1, 2, &[0.3, 0.1]), D);
    assert_eq!(rouche_count(&phis, &param, &t).unwrap(), 0);
    let nodes = [c(0.2, 0.1), c(-0.5, 0.0)];
    assert_eq!(no_excluded_criterion(&phis, &nodes, &t), vec![true, true]);
    assert_eq!(excluded_check(&phis, &param, &nodes, &t), vec![false, false]);
    assert_eq!(find_admissible_constant(&phis, None, &nodes, 1, 0, &t).unwrap(), CMatrix::zeros(1, 2));
}

#[test]
fn scalar_no_excluded_criterion() {
    let t = tol();
    let z = |x: f64| RationalMVF::constant(&cmat(1, 1, &[x]), D);
    let phis = |a: f64, b: f64| PhiRows { phi21: z(a), phi22: z(b), phit11: z(1.0), phit12: z(0.0) };
    assert_eq!(no_excluded_criterion(&phis(0.3, 0.9), &[c(0.1, 0.0)], &t), vec![true]);
    assert_eq!(no_excluded_criterion(&phis(0.9, 0.3), &[c(0.1, 0.0)], &t), vec![false]);
}

#[test]
fn search_exhausts_when_every_constant_is_excluded() {
    let t = tol();
    let phis = PhiRows {
        phi21: RationalMVF::zeros(1, 1, D),
        phi22: RationalMVF::zeros(1, 1, D),
        phit11: RationalMVF::identity(1, D),
        phit12: RationalMVF::zeros(1, 1, D),
    };
    let r = find_admissible_constant(&phis, None, &[c(0.0, 0.0)], 7, 3, &t);
    assert_eq!(r, Err(LftError::SearchExhausted { tries: 7 }));
}

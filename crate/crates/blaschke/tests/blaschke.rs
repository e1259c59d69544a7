use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use std::f64::consts::PI;
use takagi_blaschke::{
    check_noncancellation_left, check_noncancellation_right, kl_factor_left, kl_factor_right, BPFactor, BPProduct,
    BlaschkeError,
};
use takagi_numeric::{c, norm2, CMatrix, Complex64, DomainKind, Tolerances};
use takagi_rational::{Poly, RationalMVF};

const DISC: DomainKind = DomainKind::Disc;

fn lam() -> Poly {
    Poly::monomial(1)
}

fn e1e1() -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[c(1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(0.0, 0.0)])
}

fn diag(a: Complex64, b: Complex64) -> CMatrix {
    CMatrix::from_row_slice(2, 2, &[a, c(0.0, 0.0), c(0.0, 0.0), b])
}

fn tol() -> Tolerances {
    Tolerances::default()
}

#[test]
fn product_evaluation_examples() {
    let empty = BPProduct::identity(3, DISC);
    assert_eq!(empty.eval(c(0.3, 0.1)).unwrap(), CMatrix::identity(3, 3));
    assert_eq!(empty.degree(), 0);

    let scalar =
        BPProduct::new(1, DISC, vec![BPFactor::new(c(0.0, 0.0), CMatrix::identity(1, 1), DISC).unwrap()]).unwrap();
    let z = c(0.2, -0.7);
    assert!((scalar.eval(z).unwrap()[(0, 0)] - z).norm() < 1e-15);
    assert_eq!(scalar.degree(), 1);

    let b = BPProduct::new(2, DISC, vec![BPFactor::new(c(0.0, 0.0), e1e1(), DISC).unwrap()]).unwrap();
    assert!((b.eval(c(0.0, 1.0)).unwrap() - diag(c(0.0, 1.0), c(1.0, 0.0))).norm() < 1e-15);
    assert_eq!(b.degree(), 1);
    assert!(b.unitarity_defect(64).unwrap() < 1e-12);
}

#[test]
fn factor_validation() {
    let not_proj = CMatrix::from_row_slice(1, 1, &[c(2.0, 0.0)]);
    assert!(matches!(BPFactor::new(c(0.0, 0.0), not_proj, DISC), Err(BlaschkeError::InvalidFactor(_))));
    assert!(matches!(BPFactor::new(c(1.5, 0.0), CMatrix::identity(1, 1), DISC), Err(BlaschkeError::InvalidFactor(_))));
    assert!(matches!(
        BPFactor::new(c(-1.0, 0.0), CMatrix::identity(1, 1), DomainKind::HalfPlane),
        Err(BlaschkeError::InvalidFactor(_))
    ));
}

#[test]
fn left_factorization_of_diagonal_example() {
    // s = diag(1/lambda, lambda)
    let s = RationalMVF::diagonal(vec![Poly::one(), Poly::monomial(2)], lam(), DISC).unwrap();
    let (bl, sl) = kl_factor_left(&s, &tol()).unwrap();
    assert_eq!(bl.degree(), 1);
    for z in [c(0.3, 0.2), c(-0.5, 0.5), c(0.9, 0.0)] {
        assert!((bl.eval(z).unwrap() - diag(z, c(1.0, 0.0))).norm() < 1e-12);
        assert!((sl.eval(z).unwrap() - diag(c(1.0, 0.0), z)).norm() < 1e-12);
    }
    assert!(check_noncancellation_left(&bl, &sl, &tol()).unwrap());
}

#[test]
fn right_factorization_of_diagonal_example() {
    let s = RationalMVF::diagonal(vec![Poly::one(), Poly::monomial(2)], lam(), DISC).unwrap();
    let (sr, br) = kl_factor_right(&s, &tol()).unwrap();
    assert_eq!(br.degree(), 1);
    for z in [c(0.3, 0.2), c(-0.5, 0.5)] {
        assert!((br.eval(z).unwrap() - diag(z, c(1.0, 0.0))).norm() < 1e-12);
        assert!((sr.eval(z).unwrap() - diag(c(1.0, 0.0), z)).norm() < 1e-12);
    }
    assert!(check_noncancellation_right(&sr, &br, &tol()).unwrap());
}

#[test]
fn holomorphic_and_scalar_cases() {
    let s0 = RationalMVF::constant(&(CMatrix::identity(2, 2) * c(0.5, 0.0)), DISC);
    let (b, sl) = kl_factor_left(&s0, &tol()).unwrap();
    assert_eq!(b.degree(), 0);
    assert_eq!(sl, s0);
    let (_, br) = kl_factor_right(&s0, &tol()).unwrap();
    assert_eq!(br.degree(), 0);

    let inv = RationalMVF::scalar(Poly::one(), lam(), DISC).unwrap();
    let (b, sl) = kl_factor_left(&inv, &tol()).unwrap();
    let z = c(0.4, 0.4);
    assert!((b.eval(z).unwrap()[(0, 0)] - z).norm() < 1e-12);
    assert!((sl.eval(z).unwrap()[(0, 0)] - c(1.0, 0.0)).norm() < 1e-12);
    let (sr, br) = kl_factor_right(&inv, &tol()).unwrap();
    assert!((br.eval(z).unwrap()[(0, 0)] - z).norm() < 1e-12);
    assert!((sr.eval(z).unwrap()[(0, 0)] - c(1.0, 0.0)).norm() < 1e-12);
}

#[test]
fn noncancellation_examples() {
    let b = BPProduct::new(1, DISC, vec![BPFactor::new(c(0.0, 0.0), CMatrix::identity(1, 1), DISC).unwrap()]).unwrap();
    let sl = RationalMVF::scalar(Poly::new(vec![c(0.0, 0.0), c(0.5, 0.0)]), Poly::one(), DISC).unwrap();
    assert!(!check_noncancellation_left(&b, &sl, &tol()).unwrap());
    let anything = RationalMVF::constant(&CMatrix::zeros(2, 3), DISC);
    assert!(check_noncancellation_left(&BPProduct::identity(2, DISC), &anything, &tol()).unwrap());
}

#[test]
fn non_schur_input_is_rejected() {
    let s = RationalMVF::constant(&(CMatrix::identity(1, 1) * c(2.0, 0.0)), DISC);
    assert!(matches!(kl_factor_left(&s, &tol()), Err(BlaschkeError::NotSchurClass { .. })));
}

fn unit_vec(rng: &mut ChaCha8Rng, n: usize) -> CMatrix {
    let v = CMatrix::from_fn(n, 1, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
    let nv = v.norm();
    v / c(nv, 0.0)
}

fn random_zero(rng: &mut ChaCha8Rng, domain: DomainKind) -> Complex64 {
    match domain {
        DomainKind::Disc => Complex64::from_polar(rng.random_range(0.0..0.85), rng.random_range(0.0..2.0 * PI)),
        DomainKind::HalfPlane => c(rng.random_range(0.2..2.0), rng.random_range(-2.0..2.0)),
    }
}

/// Planted instances s = b0^-1 s0 with s0 a constant strict contraction.
#[test]
fn planted_poles_are_recovered() {
    let mut rng = ChaCha8Rng::seed_from_u64(2024);
    let tol = tol();
    for domain in [DomainKind::Disc, DomainKind::HalfPlane] {
        for trial in 0..25 {
            let p = rng.random_range(1..=3usize);
            let k = rng.random_range(1..=3usize);
            let factors = (0..k)
                .map(|_| BPFactor::rank_one(random_zero(&mut rng, domain), &unit_vec(&mut rng, p), domain).unwrap())
                .collect();
            let b0 = BPProduct::new(p, domain, factors).unwrap();
            assert!(b0.unitarity_defect(64).unwrap() <= 1e-9);
            let raw = CMatrix::from_fn(p, p, |_, _| c(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0)));
            let s0 = &raw * c(0.9 / norm2(&raw), 0.0);
            let s = &b0.inverse_rational() * &RationalMVF::constant(&s0, domain);
            let kappa = s.pole_mult_region(&tol).unwrap();
            assert_eq!(kappa, k, "{domain:?} trial {trial}");

            let (bl, sl) = kl_factor_left(&s, &tol).unwrap();
            assert_eq!(bl.degree(), kappa);
            assert_eq!(sl.pole_mult_region(&tol).unwrap(), 0);
            assert!(bl.unitarity_defect(64).unwrap() <= 1e-9);
            assert!(check_noncancellation_left(&bl, &sl, &tol).unwrap());
            let (sr, br) = kl_factor_right(&s, &tol).unwrap();
            assert_eq!(br.degree(), kappa);
            assert!(check_noncancellation_right(&sr, &br, &tol).unwrap());

            let recon_l = &bl.inverse_rational() * &sl;
            let recon_r = &sr * &br.inverse_rational();
            let mut checked = 0;
            while checked < 20 {
                let z = random_zero(&mut rng, domain) * 1.1;
                let Ok(sv) = s.eval(z) else { continue };
                let scale = 1.0 + sv.norm();
                assert!((recon_l.eval(z).unwrap() - &sv).norm() <= 1e-8 * scale);
                let er = (recon_r.eval(z).unwrap() - &sv).norm();
                assert!(er <= 1e-8 * scale, "{domain:?} trial {trial}: error {er:e}");
                checked += 1;
            }
        }
    }
}

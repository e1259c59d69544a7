//! Seeded random data sets satisfying the standing assumptions.

use crate::dataset::DataSet;
use crate::validate::observable;
use rand::Rng;
use takagi_numeric::{eigenvalues, hermitian_eigen, norm2, CMatrix, Complex64, DomainKind, Tolerances};

/// Shape and acceptance limits for [`random_dataset`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct GenOptions {
    pub domain: DomainKind,
    pub n1: usize,
    pub n2: usize,
    pub p: usize,
    pub q: usize,
    /// Bound on the spectral radius of `A1`, `A2` on the disc.
    pub radius: f64,
    /// Smallest accepted `|eigenvalue|` of `P`.
    pub min_p_eig: f64,
    /// Largest accepted number of negative eigenvalues of `P`.
    pub max_kappa1: usize,
}

impl GenOptions {
    pub fn new(domain: DomainKind, n1: usize, n2: usize, p: usize, q: usize) -> Self {
        Self { domain, n1, n2, p, q, radius: 0.8, min_p_eig: 1e-3, max_kappa1: 2 }
    }
}

fn random_complex<R: Rng + ?Sized>(rng: &mut R) -> Complex64 {
    Complex64::new(rng.random_range(-1.0..1.0), rng.random_range(-1.0..1.0))
}

/// A matrix with independent entries uniform in the unit square.
pub fn random_matrix<R: Rng + ?Sized>(rng: &mut R, rows: usize, cols: usize) -> CMatrix {
    CMatrix::from_fn(rows, cols, |_, _| random_complex(rng))
}

fn random_stable<R: Rng + ?Sized>(rng: &mut R, n: usize, opts: &GenOptions, left: bool) -> CMatrix {
    if n == 0 {
        return CMatrix::zeros(0, 0);
    }
    let b = random_matrix(rng, n, n);
    let nb = norm2(&b).max(1e-12);
    match opts.domain {
        DomainKind::Disc => b * Complex64::new(rng.random_range(0.3..1.0) * opts.radius / nb, 0.0),
        DomainKind::HalfPlane => {
            let shift = rng.random_range(0.5..1.5);
            let a = CMatrix::identity(n, n) * Complex64::new(shift, 0.0) + b * Complex64::new(0.4 * shift / nb, 0.0);
            if left {
                -a
            } else {
                a
            }
        }
    }
}

/// Draws data sets until one has well-separated nodes, observable pairs, `P`
/// with all `|eigenvalues| >= min_p_eig` and at most `max_kappa1` negative
/// eigenvalues. The target index is set to the number of negative eigenvalues.
///
/// Returns `None` if no instance is accepted within 2000 draws.
pub fn random_dataset<R: Rng + ?Sized>(rng: &mut R, opts: &GenOptions) -> Option<DataSet> {
    let tol = Tolerances::default();
    for _ in 0..2000 {
        let a1 = random_stable(rng, opts.n1, opts, false);
        let a2 = random_stable(rng, opts.n2, opts, true);
        let c = random_matrix(rng, opts.p + opts.q, opts.n1 + opts.n2);
        let nodes1 = eigenvalues(&a1);
        let nodes2: Vec<Complex64> = eigenvalues(&a2)
            .into_iter()
            .map(|z| if opts.domain == DomainKind::Disc { z.conj() } else { -z.conj() })
            .collect();
        if nodes1.iter().any(|a| nodes2.iter().any(|b| (a - b).norm() < 0.05)) {
            continue;
        }
        let Ok(ds) = DataSet::with_solved_p(opts.domain, a1, a2, c, opts.p, opts.q, 0, None, &tol) else {
            continue;
        };
        if !observable(&ds.c12(), ds.a2(), &tol) || !observable(&ds.c21(), ds.a1(), &tol) {
            continue;
        }
        let eig = hermitian_eigen(ds.pmat());
        if eig.values.iter().any(|v| v.abs() < opts.min_p_eig) {
            continue;
        }
        let kappa1 = eig.values.iter().filter(|&&v| v < 0.0).count();
        if kappa1 > opts.max_kappa1 {
            continue;
        }
        return Some(ds.with_kappa(kappa1));
    }
    None
}

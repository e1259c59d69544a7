use std::ops::{Add, Mul, Neg, Sub};
use takagi_numeric::{eigenvalues, CMatrix, Complex64, DomainKind};

/// Relative size below which trailing coefficients are dropped.
const TRIM_REL: f64 = 1e-13;
/// Base distance below which denominator roots are merged into one pole.
pub const CLUSTER_TOL: f64 = 1e-6;

/// Polynomial with complex coefficients in ascending degree order.
///
/// The zero polynomial has no coefficients; otherwise the last coefficient is nonzero.
#[derive(Debug, Clone, PartialEq, Default)]
pub struct Poly {
    coeffs: Vec<Complex64>,
}

/// A group of numerically coincident roots, treated as one root of multiplicity `mult`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RootCluster {
    pub center: Complex64,
    pub mult: usize,
    /// Largest distance from a member root to the center.
    pub spread: f64,
}

impl Poly {
    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(Complex64::new(1.0, 0.0))
    }

    pub fn constant(c: Complex64) -> Self {
        Self::new(vec![c])
    }

    /// `lambda^k`.
    pub fn monomial(k: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); k + 1];
        v[k] = Complex64::new(1.0, 0.0);
        Self::new(v)
    }

    /// `a0 + a1 lambda`.
    pub fn linear(a0: Complex64, a1: Complex64) -> Self {
        Self::new(vec![a0, a1])
    }

    /// Builds a polynomial from ascending coefficients, trimming negligible trailing terms.
    pub fn new(mut coeffs: Vec<Complex64>) -> Self {
        let scale = coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max);
        while let Some(last) = coeffs.last() {
            if last.norm() <= TRIM_REL * scale || last.norm() == 0.0 {
                coeffs.pop();
            } else {
                break;
            }
        }
        Self { coeffs }
    }

    /// Builds from real ascending coefficients.
    pub fn real(coeffs: &[f64]) -> Self {
        Self::new(coeffs.iter().map(|&x| Complex64::new(x, 0.0)).collect())
    }

    /// Monic polynomial with the given roots.
    pub fn from_roots(roots: &[Complex64]) -> Self {
        roots.iter().fold(Self::one(), |acc, &r| &acc * &Self::linear(-r, Complex64::new(1.0, 0.0)))
    }

    pub fn coeffs(&self) -> &[Complex64] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree, or `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Coefficient of `lambda^k` (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Complex64 {
        self.coeffs.get(k).copied().unwrap_or_default()
    }

    pub fn eval(&self, z: Complex64) -> Complex64 {
        self.coeffs.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c)
    }

    /// `sum |c_k| |z|^k`, the natural scale of `|p(z)|` against cancellation.
    pub fn abs_bound(&self, z: Complex64) -> f64 {
        let r = z.norm();
        self.coeffs.iter().rev().fold(0.0, |acc, c| acc * r + c.norm())
    }

    /// Largest coefficient modulus.
    pub fn max_abs(&self) -> f64 {
        self.coeffs.iter().map(|z| z.norm()).fold(0.0, f64::max)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        Self::new(self.coeffs.iter().map(|&c| c * s).collect())
    }

    pub fn derivative(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().skip(1).map(|(k, &c)| c * k as f64).collect())
    }

    /// Divides by `(lambda - r)`, returning the quotient and discarding the remainder.
    ///
    /// For `|r| <= 1` the recurrence runs from the leading coefficient down and the
    /// remainder is a constant; otherwise it runs from the constant term up and the
    /// remainder is a multiple of the leading power.
    pub fn deflate(&self, r: Complex64) -> Self {
        let n = self.coeffs.len();
        if n <= 1 {
            return Self::zero();
        }
        let mut q = vec![Complex64::new(0.0, 0.0); n - 1];
        if r.norm() <= 1.0 {
            let mut acc = Complex64::new(0.0, 0.0);
            for k in (1..n).rev() {
                acc = acc * r + self.coeffs[k];
                q[k - 1] = acc;
            }
        } else {
            q[0] = -self.coeffs[0] / r;
            for k in 1..n - 1 {
                q[k] = (q[k - 1] - self.coeffs[k]) / r;
            }
        }
        Self::new(q)
    }

    /// Coefficients reversed against degree `d`: `lambda^d conj(p(1/conj(lambda)))`.
    pub fn reflect_disc(&self, d: usize) -> Self {
        let mut v = vec![Complex64::new(0.0, 0.0); d + 1];
        for (k, c) in self.coeffs.iter().enumerate() {
            v[d - k] = c.conj();
        }
        Self::new(v)
    }

    /// `conj(p(-conj(lambda)))`.
    pub fn reflect_halfplane(&self) -> Self {
        Self::new(self.coeffs.iter().enumerate().map(|(k, c)| if k % 2 == 0 { c.conj() } else { -c.conj() }).collect())
    }

    /// The polynomial `conj(p(lambda°))` cleared of negative powers as needed, for the given domain.
    pub fn reflect(&self, domain: DomainKind, d: usize) -> Self {
        match domain {
            DomainKind::Disc => self.reflect_disc(d),
            DomainKind::HalfPlane => self.reflect_halfplane(),
        }
    }

    /// All roots, from the eigenvalues of the companion matrix.
    pub fn roots(&self) -> Vec<Complex64> {
        let deg = match self.degree() {
            Some(d) if d > 0 => d,
            _ => return Vec::new(),
        };
        // Exact zero roots are split off first so they are not perturbed.
        let lead_zero = self.coeffs.iter().take_while(|c| c.norm() == 0.0).count();
        let mut roots = vec![Complex64::new(0.0, 0.0); lead_zero];
        let rest = &self.coeffs[lead_zero..];
        let d = deg - lead_zero;
        if d == 0 {
            return roots;
        }
        let lead = rest[d];
        let mut comp = CMatrix::zeros(d, d);
        for i in 1..d {
            comp[(i, i - 1)] = Complex64::new(1.0, 0.0);
        }
        for i in 0..d {
            comp[(i, d - 1)] = -rest[i] / lead;
        }
        roots.extend(eigenvalues(&comp));
        roots
    }

    /// Roots grouped into clusters of numerically coincident values.
    pub fn root_clusters(&self) -> Vec<RootCluster> {
        cluster_roots(&self.roots())
    }
}

/// Groups numerically coincident roots.
///
/// A root of multiplicity `k` computed in double precision scatters by about
/// `eps^(1/k)` relative to its modulus. Groups are formed greedily from the
/// largest size down: `k` unassigned roots form a group when their diameter is
/// at most `scale * max(CLUSTER_TOL, 10 eps^(1/k))`. Clusters are returned
/// sorted lexicographically by (real part, imaginary part) of the center.
pub fn cluster_roots(roots: &[Complex64]) -> Vec<RootCluster> {
    let n = roots.len();
    let mut assigned = vec![false; n];
    let mut groups: Vec<Vec<Complex64>> = Vec::new();
    for k in (2..=n).rev() {
        let radius_k = CLUSTER_TOL.max(10.0 * f64::EPSILON.powf(1.0 / k as f64));
        for a in 0..n {
            if assigned[a] {
                continue;
            }
            let mut near: Vec<usize> = (0..n).filter(|&b| !assigned[b]).collect();
            if near.len() < k {
                break;
            }
            near.sort_by(|&x, &y| (roots[x] - roots[a]).norm().total_cmp(&(roots[y] - roots[a]).norm()));
            near.truncate(k);
            let scale = near.iter().map(|&b| roots[b].norm()).fold(1.0, f64::max);
            let diameter = near
                .iter()
                .flat_map(|&x| near.iter().map(move |&y| (x, y)))
                .map(|(x, y)| (roots[x] - roots[y]).norm())
                .fold(0.0, f64::max);
            if diameter <= scale * radius_k {
                for &b in &near {
                    assigned[b] = true;
                }
                groups.push(near.iter().map(|&b| roots[b]).collect());
            }
        }
    }
    for a in 0..n {
        if !assigned[a] {
            groups.push(vec![roots[a]]);
        }
    }
    let mut out: Vec<RootCluster> = groups
        .into_iter()
        .map(|g| {
            let center = g.iter().sum::<Complex64>() / g.len() as f64;
            let spread = g.iter().map(|z| (z - center).norm()).fold(0.0, f64::max);
            RootCluster { center, mult: g.len(), spread }
        })
        .collect();
    out.sort_by(|a, b| a.center.re.total_cmp(&b.center.re).then(a.center.im.total_cmp(&b.center.im)));
    out
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) + o.coeff(k)).collect())
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, o: &Poly) -> Poly {
        let n = self.coeffs.len().max(o.coeffs.len());
        Poly::new((0..n).map(|k| self.coeff(k) - o.coeff(k)).collect())
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, o: &Poly) -> Poly {
        if self.is_zero() || o.is_zero() {
            return Poly::zero();
        }
        let mut v = vec![Complex64::new(0.0, 0.0); self.coeffs.len() + o.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in o.coeffs.iter().enumerate() {
                v[i + j] += a * b;
            }
        }
        Poly::new(v)
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

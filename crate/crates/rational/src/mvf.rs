use crate::error::RationalError;
use crate::poly::{cluster_roots, Poly, CLUSTER_TOL};
use std::ops::{Add, Mul, Neg, Sub};
use takagi_numeric::{CMatrix, Complex64, DomainKind, Tolerances};

/// Relative size below which a numerator value counts as vanishing at a denominator root.
const CANCEL_TOL: f64 = 1e-9;
/// Relative distance to a denominator root below which evaluation reports a pole.
const POLE_TOL: f64 = 1e-14;
/// Modulus below which a denominator root counts as zero when reflecting across the circle.
const ZERO_ROOT: f64 = 1e-300;
/// Relative pointwise change tolerated when cancelling a root or forming a common denominator.
const VALUE_TOL: f64 = 1e-11;

/// Fixed generic points at which denominator manipulations are checked against function values.
fn check_points() -> [Complex64; 4] {
    [
        Complex64::from_polar(0.618, 0.9),
        Complex64::from_polar(1.31, 2.7),
        Complex64::from_polar(0.37, 4.4),
        Complex64::from_polar(2.13, 5.9),
    ]
}

/// Largest relative deviation between `pa / qa` and `pb / qb` over the check points.
fn ratio_deviation(pa: &[Poly], qa: &Poly, pb: &[Poly], qb: &Poly) -> f64 {
    check_points()
        .iter()
        .map(|&z| {
            let (da, db) = (qa.eval(z), qb.eval(z));
            let (mut diff, mut size) = (0.0f64, 0.0f64);
            for (x, y) in pa.iter().zip(pb) {
                let (u, v) = (x.eval(z) / da, y.eval(z) / db);
                diff = diff.max((u - v).norm());
                size = size.max(u.norm()).max(v.norm());
            }
            if diff == 0.0 {
                0.0
            } else {
                diff / size
            }
        })
        .fold(0.0, f64::max)
}

/// Relative distance below which two denominator roots are identified.
const MATCH_TOL: f64 = 1e-9;

/// A `rows x cols` rational matrix function `num(lambda) / den(lambda)`.
///
/// The denominator is held in factored form `gain * prod (lambda - r)` next to
/// its expanded coefficients. Roots are located once, when a denominator enters
/// as a bare polynomial; products, sharp adjoints and common denominators then
/// manipulate the root list directly. Every constructor and arithmetic
/// operation cancels denominator roots at which all numerator entries vanish,
/// and scales the denominator to unit largest coefficient.
#[derive(Debug, Clone, PartialEq)]
pub struct RationalMVF {
    rows: usize,
    cols: usize,
    num: Vec<Poly>,
    roots: Vec<Complex64>,
    gain: Complex64,
    den: Poly,
    domain: DomainKind,
}

/// Roots of `p` with each numerically coincident group replaced by copies of its center.
fn snapped_roots(p: &Poly) -> Vec<Complex64> {
    cluster_roots(&p.roots()).into_iter().flat_map(|cl| std::iter::repeat_n(cl.center, cl.mult)).collect()
}

fn leading(p: &Poly) -> Complex64 {
    p.coeffs().last().copied().unwrap_or(Complex64::new(1.0, 0.0))
}

fn same_root(a: Complex64, b: Complex64) -> bool {
    (a - b).norm() <= MATCH_TOL * a.norm().max(b.norm()).max(1.0)
}

impl RationalMVF {
    /// Builds `num / den` from row-major numerator entries.
    pub fn new(rows: usize, cols: usize, num: Vec<Poly>, den: Poly, domain: DomainKind) -> Result<Self, RationalError> {
        if num.len() != rows * cols {
            return Err(RationalError::Dimension(format!(
                "expected {} numerator entries for a {}x{} function, got {}",
                rows * cols,
                rows,
                cols,
                num.len()
            )));
        }
        if den.is_zero() {
            return Err(RationalError::ZeroDenominator);
        }
        Ok(Self::raw(rows, cols, num, den, domain))
    }

    /// Builds `num / den` from a denominator given by its coefficients.
    fn raw(rows: usize, cols: usize, num: Vec<Poly>, den: Poly, domain: DomainKind) -> Self {
        let roots = snapped_roots(&den);
        Self::from_parts(rows, cols, num, roots, leading(&den), domain)
    }

    /// Builds `num / (gain * prod (lambda - r))`.
    fn from_parts(
        rows: usize,
        cols: usize,
        num: Vec<Poly>,
        roots: Vec<Complex64>,
        gain: Complex64,
        domain: DomainKind,
    ) -> Self {
        let den = Poly::from_roots(&roots).scale(gain);
        let mut r = Self { rows, cols, num, roots, gain, den, domain };
        r.normalize();
        r
    }

    /// Same denominator, new numerator entries.
    fn with_num(&self, rows: usize, cols: usize, num: Vec<Poly>) -> Self {
        Self::from_parts(rows, cols, num, self.roots.clone(), self.gain, self.domain)
    }

    /// Constant function.
    pub fn constant(m: &CMatrix, domain: DomainKind) -> Self {
        let num = (0..m.nrows())
            .flat_map(|i| (0..m.ncols()).map(move |j| (i, j)))
            .map(|(i, j)| Poly::constant(m[(i, j)]))
            .collect();
        Self::raw(m.nrows(), m.ncols(), num, Poly::one(), domain)
    }

    pub fn identity(n: usize, domain: DomainKind) -> Self {
        Self::constant(&CMatrix::identity(n, n), domain)
    }

    pub fn zeros(rows: usize, cols: usize, domain: DomainKind) -> Self {
        Self::constant(&CMatrix::zeros(rows, cols), domain)
    }

    /// `1 x 1` function `p / d`.
    pub fn scalar(p: Poly, d: Poly, domain: DomainKind) -> Result<Self, RationalError> {
        Self::new(1, 1, vec![p], d, domain)
    }

    /// Diagonal function `diag(entries) / den`.
    pub fn diagonal(entries: Vec<Poly>, den: Poly, domain: DomainKind) -> Result<Self, RationalError> {
        let n = entries.len();
        let mut num = vec![Poly::zero(); n * n];
        for (k, p) in entries.into_iter().enumerate() {
            num[k * n + k] = p;
        }
        Self::new(n, n, num, den, domain)
    }

    /// `(sum_k coeffs[k] lambda^k) / den`.
    pub fn from_matrix_coeffs(coeffs: &[CMatrix], den: Poly, domain: DomainKind) -> Result<Self, RationalError> {
        let (rows, cols) = coeffs.first().map(|m| m.shape()).unwrap_or((0, 0));
        let num = (0..rows * cols)
            .map(|idx| Poly::new(coeffs.iter().map(|m| m[(idx / cols, idx % cols)]).collect()))
            .collect();
        Self::new(rows, cols, num, den, domain)
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn shape(&self) -> (usize, usize) {
        (self.rows, self.cols)
    }

    pub fn domain(&self) -> DomainKind {
        self.domain
    }

    /// Same function, reinterpreted on another domain.
    pub fn with_domain(&self, domain: DomainKind) -> Self {
        Self { domain, ..self.clone() }
    }

    pub fn num(&self, i: usize, j: usize) -> &Poly {
        &self.num[i * self.cols + j]
    }

    pub fn den(&self) -> &Poly {
        &self.den
    }

    /// Denominator roots, repeated according to multiplicity.
    pub fn den_roots(&self) -> &[Complex64] {
        &self.roots
    }

    /// Denominator roots grouped into clusters.
    pub fn den_clusters(&self) -> Vec<crate::poly::RootCluster> {
        cluster_roots(&self.roots)
    }

    /// Largest degree among numerator entries and the denominator.
    pub fn degree(&self) -> usize {
        self.num.iter().chain(std::iter::once(&self.den)).filter_map(|p| p.degree()).max().unwrap_or(0)
    }

    /// Numerator matrix evaluated at `z`.
    pub fn num_eval(&self, z: Complex64) -> CMatrix {
        CMatrix::from_fn(self.rows, self.cols, |i, j| self.num(i, j).eval(z))
    }

    /// Value at `z`; fails at a root of the denominator.
    pub fn eval(&self, z: Complex64) -> Result<CMatrix, RationalError> {
        if self.roots.iter().any(|&r| (z - r).norm() <= POLE_TOL * r.norm().max(1.0)) {
            return Err(RationalError::PoleAtPoint { re: z.re, im: z.im });
        }
        let d = self.roots.iter().fold(self.gain, |acc, &r| acc * (z - r));
        if !d.is_finite() || d.norm() == 0.0 {
            return Err(RationalError::PoleAtPoint { re: z.re, im: z.im });
        }
        Ok(self.num_eval(z).map(|x| x / d))
    }

    /// Largest Frobenius norm over the given points.
    pub fn sup_norm(&self, points: &[Complex64]) -> Result<f64, RationalError> {
        points.iter().try_fold(0.0f64, |acc, &z| Ok(acc.max(self.eval(z)?.norm())))
    }

    /// Largest spectral norm over the given points.
    pub fn sup_norm2(&self, points: &[Complex64]) -> Result<f64, RationalError> {
        points.iter().try_fold(0.0f64, |acc, &z| Ok(acc.max(takagi_numeric::norm2(&self.eval(z)?))))
    }

    /// True if every numerator entry is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.num.iter().all(Poly::is_zero)
    }

    /// Cancels common denominator roots and rescales.
    fn normalize(&mut self) {
        if self.is_zero() {
            self.roots.clear();
            self.gain = Complex64::new(1.0, 0.0);
            self.den = Poly::one();
            return;
        }
        let mut i = 0;
        while i < self.roots.len() {
            let z = self.roots[i];
            let vanishes = self.num.iter().all(|p| p.eval(z).norm() <= CANCEL_TOL * p.abs_bound(z));
            if vanishes {
                let num: Vec<Poly> = self.num.iter().map(|p| p.deflate(z)).collect();
                let mut roots = self.roots.clone();
                roots.remove(i);
                let den = Poly::from_roots(&roots).scale(self.gain);
                if ratio_deviation(&self.num, &self.den, &num, &den) <= VALUE_TOL {
                    self.num = num;
                    self.roots = roots;
                    self.den = den;
                    continue;
                }
            }
            i += 1;
        }
        let s = self.den.max_abs();
        if s > 0.0 && (s - 1.0).abs() > 1e-15 {
            let inv = Complex64::new(1.0 / s, 0.0);
            self.num = self.num.iter().map(|p| p.scale(inv)).collect();
            self.den = self.den.scale(inv);
            self.gain *= inv;
        }
    }

    /// The sharp adjoint `f#(lambda) = f(lambda°)*`.
    ///
    /// On the disc `lambda° = 1/conj(lambda)`; on the half-plane `lambda° = -conj(lambda)`.
    pub fn adjoint_sharp(&self) -> Self {
        let d = self.degree();
        let mut num = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.cols {
            for j in 0..self.rows {
                num.push(self.num(j, i).reflect(self.domain, d));
            }
        }
        let den = self.den.reflect(self.domain, d);
        let mut roots: Vec<Complex64> = match self.domain {
            DomainKind::Disc => self.roots.iter().filter(|r| r.norm() > ZERO_ROOT).map(|r| 1.0 / r.conj()).collect(),
            DomainKind::HalfPlane => self.roots.iter().map(|r| -r.conj()).collect(),
        };
        let deg = den.degree().unwrap_or(0);
        roots.resize(deg.max(roots.len()), Complex64::new(0.0, 0.0));
        Self::from_parts(self.cols, self.rows, num, roots, leading(&den), self.domain)
    }

    /// Entrywise conjugate transpose of the coefficients, i.e. `f(conj(lambda))*`.
    pub fn conj_transpose_coeffs(&self) -> Self {
        let conj = |p: &Poly| Poly::new(p.coeffs().iter().map(|c| c.conj()).collect());
        let mut num = Vec::with_capacity(self.rows * self.cols);
        for i in 0..self.cols {
            for j in 0..self.rows {
                num.push(conj(self.num(j, i)));
            }
        }
        let roots = self.roots.iter().map(|r| r.conj()).collect();
        Self::from_parts(self.cols, self.rows, num, roots, self.gain.conj(), self.domain)
    }

    pub fn scale(&self, s: Complex64) -> Self {
        self.with_num(self.rows, self.cols, self.num.iter().map(|p| p.scale(s)).collect())
    }

    /// `m * self` for a constant matrix `m`.
    pub fn left_mul_const(&self, m: &CMatrix) -> Self {
        assert_eq!(m.ncols(), self.rows, "left_mul_const: dimension mismatch");
        let mut num = Vec::with_capacity(m.nrows() * self.cols);
        for i in 0..m.nrows() {
            for j in 0..self.cols {
                let mut acc = Poly::zero();
                for k in 0..self.rows {
                    if m[(i, k)].norm() != 0.0 {
                        acc = &acc + &self.num(k, j).scale(m[(i, k)]);
                    }
                }
                num.push(acc);
            }
        }
        self.with_num(m.nrows(), self.cols, num)
    }

    /// `self * m` for a constant matrix `m`.
    pub fn right_mul_const(&self, m: &CMatrix) -> Self {
        assert_eq!(m.nrows(), self.cols, "right_mul_const: dimension mismatch");
        let mut num = Vec::with_capacity(self.rows * m.ncols());
        for i in 0..self.rows {
            for j in 0..m.ncols() {
                let mut acc = Poly::zero();
                for k in 0..self.cols {
                    if m[(k, j)].norm() != 0.0 {
                        acc = &acc + &self.num(i, k).scale(m[(k, j)]);
                    }
                }
                num.push(acc);
            }
        }
        self.with_num(self.rows, m.ncols(), num)
    }

    /// Multiplies every entry by the scalar rational function `p / d`.
    pub fn mul_scalar_fn(&self, p: &Poly, d: &Poly) -> Self {
        let mut roots = self.roots.clone();
        roots.extend(snapped_roots(d));
        Self::from_parts(
            self.rows,
            self.cols,
            self.num.iter().map(|x| x * p).collect(),
            roots,
            self.gain * leading(d),
            self.domain,
        )
    }

    /// Sub-block starting at `(r0, c0)` of shape `nr x nc`.
    pub fn block(&self, r0: usize, c0: usize, nr: usize, nc: usize) -> Self {
        assert!(r0 + nr <= self.rows && c0 + nc <= self.cols, "block: out of range");
        let num =
            (0..nr).flat_map(|i| (0..nc).map(move |j| (i, j))).map(|(i, j)| self.num(r0 + i, c0 + j).clone()).collect();
        self.with_num(nr, nc, num)
    }

    /// Brings two functions over the monic least common multiple of their
    /// denominators, matching roots that agree to `MATCH_TOL`. Returns the
    /// rescaled numerators and the common roots.
    fn common_den(a: &Self, b: &Self) -> (Vec<Poly>, Vec<Poly>, Vec<Complex64>) {
        let mut used = vec![false; b.roots.len()];
        let mut a_only = Vec::new();
        for &r in &a.roots {
            match (0..b.roots.len()).find(|&k| !used[k] && same_root(r, b.roots[k])) {
                Some(k) => used[k] = true,
                None => a_only.push(r),
            }
        }
        let b_only: Vec<Complex64> = b.roots.iter().zip(&used).filter(|(_, &u)| !u).map(|(&r, _)| r).collect();
        let fa = Poly::from_roots(&b_only).scale(1.0 / a.gain);
        let fb = Poly::from_roots(&a_only).scale(1.0 / b.gain);
        let na = a.num.iter().map(|p| p * &fa).collect();
        let nb = b.num.iter().map(|p| p * &fb).collect();
        let mut roots = a.roots.clone();
        roots.extend(b_only);
        (na, nb, roots)
    }

    /// Horizontal concatenation `[a b]`.
    pub fn hcat(a: &Self, b: &Self) -> Self {
        assert_eq!(a.rows, b.rows, "hcat: row mismatch");
        let (na, nb, roots) = Self::common_den(a, b);
        let cols = a.cols + b.cols;
        let mut num = Vec::with_capacity(a.rows * cols);
        for i in 0..a.rows {
            num.extend_from_slice(&na[i * a.cols..(i + 1) * a.cols]);
            num.extend_from_slice(&nb[i * b.cols..(i + 1) * b.cols]);
        }
        Self::from_parts(a.rows, cols, num, roots, Complex64::new(1.0, 0.0), a.domain)
    }

    /// Vertical concatenation `[a; b]`.
    pub fn vcat(a: &Self, b: &Self) -> Self {
        assert_eq!(a.cols, b.cols, "vcat: column mismatch");
        let (mut na, nb, roots) = Self::common_den(a, b);
        na.extend(nb);
        Self::from_parts(a.rows + b.rows, a.cols, na, roots, Complex64::new(1.0, 0.0), a.domain)
    }

    /// Block matrix `[[a, b], [c, d]]`.
    pub fn block2(a: &Self, b: &Self, c: &Self, d: &Self) -> Self {
        Self::vcat(&Self::hcat(a, b), &Self::hcat(c, d))
    }

    /// Inverse of a square function, via the adjugate of the numerator.
    pub fn inverse(&self) -> Result<Self, RationalError> {
        if self.rows != self.cols {
            return Err(RationalError::Dimension(format!(
                "inverse of a non-square {}x{} function",
                self.rows, self.cols
            )));
        }
        let n = self.rows;
        if n == 0 {
            return Ok(self.clone());
        }
        if self.is_numerically_singular() {
            return Err(RationalError::SingularDeterminant);
        }
        let entries: Vec<Vec<&Poly>> = (0..n).map(|i| (0..n).map(|j| self.num(i, j)).collect()).collect();
        let det = poly_det(&entries);
        if det.is_zero() {
            return Err(RationalError::SingularDeterminant);
        }
        let mut num = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                // adj[i][j] = (-1)^(i+j) det(minor without row j and column i)
                let minor: Vec<Vec<&Poly>> = (0..n)
                    .filter(|&r| r != j)
                    .map(|r| (0..n).filter(|&cc| cc != i).map(|cc| self.num(r, cc)).collect())
                    .collect();
                let mut cof = &poly_det(&minor) * &self.den;
                if (i + j) % 2 == 1 {
                    cof = -&cof;
                }
                num.push(cof);
            }
        }
        let roots = snapped_roots(&det).into_iter().map(|c| self.nearest_root(c).unwrap_or(c)).collect();
        Ok(Self::from_parts(n, n, num, roots, leading(&det), self.domain))
    }

    /// Determinant as a scalar `1 x 1` function.
    pub fn det(&self) -> Result<Self, RationalError> {
        if self.rows != self.cols {
            return Err(RationalError::Dimension("determinant of a non-square function".into()));
        }
        let n = self.rows;
        let entries: Vec<Vec<&Poly>> = (0..n).map(|i| (0..n).map(|j| self.num(i, j)).collect()).collect();
        let roots = self.roots.iter().copied().cycle().take(n * self.roots.len()).collect();
        Ok(Self::from_parts(1, 1, vec![poly_det(&entries)], roots, self.gain.powi(n as i32), self.domain))
    }

    /// Hadamard-ratio test of the numerator determinant at three fixed generic points.
    fn is_numerically_singular(&self) -> bool {
        let pts =
            [Complex64::from_polar(0.71, 1.0), Complex64::from_polar(0.43, 3.0), Complex64::from_polar(1.37, 5.0)];
        pts.iter().all(|&z| {
            let m = self.num_eval(z);
            let bound: f64 = (0..m.nrows()).map(|i| m.row(i).norm()).product();
            let det = m.clone().lu().determinant().norm();
            bound == 0.0 || det <= 1e-12 * bound
        })
    }

    /// Maximum pointwise deviation from another function at the given points.
    pub fn max_diff(&self, other: &Self, points: &[Complex64]) -> Result<f64, RationalError> {
        points.iter().try_fold(0.0f64, |acc, &z| Ok(acc.max((self.eval(z)? - other.eval(z)?).norm())))
    }

    /// Denominator root clusters that lie in the open domain.
    pub fn candidate_poles(&self) -> Vec<crate::poly::RootCluster> {
        self.den_clusters().into_iter().filter(|c| self.domain.contains(c.center)).collect()
    }

    /// The denominator root within root-finding accuracy of `c`, if any.
    fn nearest_root(&self, c: Complex64) -> Option<Complex64> {
        let radius = CLUSTER_TOL * c.norm().max(1.0);
        self.roots
            .iter()
            .copied()
            .filter(|&r| (r - c).norm() <= radius)
            .min_by(|x, y| (x - c).norm().total_cmp(&(y - c).norm()))
    }
}

/// Determinant of a square polynomial matrix by expansion over column subsets.
fn poly_det(m: &[Vec<&Poly>]) -> Poly {
    let n = m.len();
    if n == 0 {
        return Poly::one();
    }
    let mut table: Vec<Poly> = vec![Poly::zero(); 1 << n];
    table[0] = Poly::one();
    for mask in 1usize..(1 << n) {
        let r = mask.count_ones() as usize - 1;
        let mut acc = Poly::zero();
        for (j, entry) in m[r].iter().enumerate() {
            if mask & (1 << j) == 0 || entry.is_zero() {
                continue;
            }
            let rest = mask & !(1 << j);
            if table[rest].is_zero() {
                continue;
            }
            let higher = (mask >> (j + 1)).count_ones();
            let term = *entry * &table[rest];
            acc = if higher % 2 == 0 { &acc + &term } else { &acc - &term };
        }
        table[mask] = acc;
    }
    table[(1 << n) - 1].clone()
}

impl Mul for &RationalMVF {
    type Output = RationalMVF;
    /// # Panics
    /// Panics if the inner dimensions disagree.
    fn mul(self, o: &RationalMVF) -> RationalMVF {
        assert_eq!(self.cols, o.rows, "mul: inner dimension mismatch");
        let mut num = Vec::with_capacity(self.rows * o.cols);
        for i in 0..self.rows {
            for j in 0..o.cols {
                let mut acc = Poly::zero();
                for k in 0..self.cols {
                    let a = self.num(i, k);
                    let b = o.num(k, j);
                    if !a.is_zero() && !b.is_zero() {
                        acc = &acc + &(a * b);
                    }
                }
                num.push(acc);
            }
        }
        let mut roots = self.roots.clone();
        roots.extend_from_slice(&o.roots);
        RationalMVF::from_parts(self.rows, o.cols, num, roots, self.gain * o.gain, self.domain)
    }
}

impl Add for &RationalMVF {
    type Output = RationalMVF;
    fn add(self, o: &RationalMVF) -> RationalMVF {
        assert_eq!(self.shape(), o.shape(), "add: shape mismatch");
        let (na, nb, roots) = RationalMVF::common_den(self, o);
        let num = na.iter().zip(&nb).map(|(x, y)| x + y).collect();
        RationalMVF::from_parts(self.rows, self.cols, num, roots, Complex64::new(1.0, 0.0), self.domain)
    }
}

impl Sub for &RationalMVF {
    type Output = RationalMVF;
    fn sub(self, o: &RationalMVF) -> RationalMVF {
        assert_eq!(self.shape(), o.shape(), "sub: shape mismatch");
        let (na, nb, roots) = RationalMVF::common_den(self, o);
        let num = na.iter().zip(&nb).map(|(x, y)| x - y).collect();
        RationalMVF::from_parts(self.rows, self.cols, num, roots, Complex64::new(1.0, 0.0), self.domain)
    }
}

impl Neg for &RationalMVF {
    type Output = RationalMVF;
    fn neg(self) -> RationalMVF {
        RationalMVF { num: self.num.iter().map(|p| -p).collect(), ..self.clone() }
    }
}

/// Left coprimeness of the pair `(G, H)`: `M_pi(G^-1 H) = M_pi(G^-1)` over the domain.
pub fn coprime_left_check(g: &RationalMVF, h: &RationalMVF, tol: &Tolerances) -> Result<bool, RationalError> {
    let gi = g.inverse()?;
    Ok((&gi * h).pole_mult_region(tol)? == gi.pole_mult_region(tol)?)
}

/// Right coprimeness of the pair `(G, H)`: `M_pi(H G^-1) = M_pi(G^-1)` over the domain.
pub fn coprime_right_check(g: &RationalMVF, h: &RationalMVF, tol: &Tolerances) -> Result<bool, RationalError> {
    let gi = g.inverse()?;
    Ok((h * &gi).pole_mult_region(tol)? == gi.pole_mult_region(tol)?)
}

use num_complex::Complex64;
use std::f64::consts::PI;

/// The two domains on which interpolation problems are posed.
///
/// `Disc` is the open unit disc with boundary the unit circle; `HalfPlane`
/// is the open right half-plane with boundary the imaginary axis.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DomainKind {
    Disc,
    HalfPlane,
}

/// Absolute tolerance used to decide membership of the boundary.
pub const BOUNDARY_TOL: f64 = 1e-9;

impl DomainKind {
    /// `rho_omega(lambda)`: `1 - lambda conj(omega)` on the disc, `lambda + conj(omega)` on the half-plane.
    pub fn rho(self, lambda: Complex64, omega: Complex64) -> Complex64 {
        match self {
            DomainKind::Disc => Complex64::new(1.0, 0.0) - lambda * omega.conj(),
            DomainKind::HalfPlane => lambda + omega.conj(),
        }
    }

    /// The reflection `lambda°` across the boundary: `1/conj(lambda)` or `-conj(lambda)`.
    pub fn reflect(self, lambda: Complex64) -> Complex64 {
        match self {
            DomainKind::Disc => Complex64::new(1.0, 0.0) / lambda.conj(),
            DomainKind::HalfPlane => -lambda.conj(),
        }
    }

    /// Signed distance-like quantity: positive inside the domain, zero on the boundary.
    fn depth(self, lambda: Complex64) -> f64 {
        match self {
            DomainKind::Disc => 1.0 - lambda.norm(),
            DomainKind::HalfPlane => lambda.re,
        }
    }

    /// True if `lambda` lies in the open domain, at least `BOUNDARY_TOL` away from the boundary.
    pub fn contains(self, lambda: Complex64) -> bool {
        lambda.is_finite() && self.depth(lambda) > BOUNDARY_TOL
    }

    /// True if `lambda` lies in the open exterior domain.
    pub fn exterior_contains(self, lambda: Complex64) -> bool {
        !lambda.is_finite() || self.depth(lambda) < -BOUNDARY_TOL
    }

    /// True if `lambda` lies on the boundary within `BOUNDARY_TOL`.
    pub fn on_boundary(self, lambda: Complex64) -> bool {
        lambda.is_finite() && self.depth(lambda).abs() <= BOUNDARY_TOL
    }

    /// Admissible location of the spectrum of `A1`: the domain itself.
    pub fn a1_spectrum_ok(self, z: Complex64) -> bool {
        self.contains(z)
    }

    /// Admissible location of the spectrum of `A2`: the unit disc, or the left half-plane.
    pub fn a2_spectrum_ok(self, z: Complex64) -> bool {
        match self {
            DomainKind::Disc => self.contains(z),
            DomainKind::HalfPlane => z.re < -BOUNDARY_TOL,
        }
    }

    /// `n` equispaced points on the boundary.
    ///
    /// On the imaginary axis the points are images of equispaced circle points
    /// under the Cayley map, so they cluster near the origin and thin out
    /// towards infinity.
    pub fn boundary_samples(self, n: usize) -> Vec<Complex64> {
        (0..n)
            .map(|k| {
                let theta = 2.0 * PI * (k as f64 + 0.5) / n as f64;
                match self {
                    DomainKind::Disc => Complex64::from_polar(1.0, theta),
                    DomainKind::HalfPlane => Complex64::new(0.0, (theta / 2.0 - PI / 2.0).tan()),
                }
            })
            .collect()
    }

    /// `n` well-spread interior points (a golden-angle spiral in the disc,
    /// mapped to the half-plane by the Cayley transform), kept at modulus at most `r_max`.
    pub fn interior_samples(self, n: usize, r_max: f64) -> Vec<Complex64> {
        let golden = PI * (3.0 - 5f64.sqrt());
        (0..n)
            .map(|k| {
                let r = r_max * ((k as f64 + 0.5) / n as f64).sqrt();
                let z = Complex64::from_polar(r, golden * k as f64 + 0.3);
                match self {
                    DomainKind::Disc => z,
                    DomainKind::HalfPlane => (Complex64::new(1.0, 0.0) + z) / (Complex64::new(1.0, 0.0) - z),
                }
            })
            .collect()
    }

    /// Default normalization point on the boundary.
    pub fn default_mu(self) -> Complex64 {
        match self {
            DomainKind::Disc => Complex64::new(1.0, 0.0),
            DomainKind::HalfPlane => Complex64::new(0.0, 0.0),
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            DomainKind::Disc => "disc",
            DomainKind::HalfPlane => "half-plane",
        }
    }

    pub fn from_name(s: &str) -> Option<Self> {
        match s {
            "disc" => Some(DomainKind::Disc),
            "half-plane" | "halfplane" | "right-half-plane" => Some(DomainKind::HalfPlane),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rho_vanishes_on_boundary_diagonal() {
        for d in [DomainKind::Disc, DomainKind::HalfPlane] {
            for t in d.boundary_samples(16) {
                assert!(d.rho(t, t).norm() < 1e-12);
                assert!(d.on_boundary(t));
            }
        }
    }

    #[test]
    fn interior_samples_are_inside() {
        for d in [DomainKind::Disc, DomainKind::HalfPlane] {
            assert!(d.interior_samples(25, 0.9).into_iter().all(|z| d.contains(z)));
        }
    }

    #[test]
    fn reflection_is_an_involution() {
        let z = Complex64::new(0.3, -0.4);
        for d in [DomainKind::Disc, DomainKind::HalfPlane] {
            assert!((d.reflect(d.reflect(z)) - z).norm() < 1e-14);
            assert!(d.exterior_contains(d.reflect(z)));
        }
    }
}

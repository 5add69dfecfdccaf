//! The restriction to hyperbolic 2-space: real-coefficient quaternions in
//! the algebra (1,1/ℝ) acting on the two-sheeted hyperboloid
//! w² − x² − y² = 1 inside the symmetric subspace spanned by {1, i, j}.

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::Error;
use crate::hyperboloid::{HyperboloidPoint, Isometry, IsometryClass, DEFAULT_TOL};
use crate::mat::Mat2;
use crate::models::BOUNDARY_TOL;
use crate::quat::{Algebra, CQuat, Quaternion};

/// Threshold for picking the first significant component when fixing the
/// projective sign of a real representative.
const SIGN_TOL: f64 = 1e-12;

/// The real quaternion algebra (1,1/ℝ) of the plane.
pub fn plane_algebra() -> Algebra<f64> {
    Algebra::new(1.0, 1.0)
}

/// Embed a real quaternion into the complex algebra coefficientwise.
pub fn embed_quat(q: &Quaternion<f64>) -> CQuat {
    CQuat::from_reals(q.w, 0.0, q.x, 0.0, q.y, 0.0, q.z, 0.0)
}

/// A point w + xi + yj of the hyperbolic plane: w² − x² − y² = 1, w > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlanePoint {
    w: f64,
    x: f64,
    y: f64,
}

impl PlanePoint {
    pub fn new(w: f64, x: f64, y: f64) -> Result<Self, Error> {
        Self::with_tol(w, x, y, DEFAULT_TOL)
    }

    pub fn with_tol(w: f64, x: f64, y: f64, tol: f64) -> Result<Self, Error> {
        if (w * w - x * x - y * y - 1.0).abs() > tol {
            return Err(Error::InvalidPoint("plane point must have norm 1"));
        }
        if w <= 0.0 {
            return Err(Error::InvalidPoint(
                "plane point must have positive trace",
            ));
        }
        Ok(Self { w, x, y })
    }

    pub fn one() -> Self {
        Self { w: 1.0, x: 0.0, y: 0.0 }
    }

    /// The point with spatial coordinates (x, y) and w = √(1 + x² + y²).
    pub fn from_spatial(x: f64, y: f64) -> Self {
        Self {
            w: (1.0 + x * x + y * y).sqrt(),
            x,
            y,
        }
    }

    pub fn w(&self) -> f64 {
        self.w
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    /// The underlying real quaternion w + xi + yj.
    pub fn quat(&self) -> Quaternion<f64> {
        Quaternion::new(self.w, self.x, self.y, 0.0, plane_algebra())
    }

    /// The same point inside the 3-space hyperboloid (z = 0 slice).
    pub fn embed(&self) -> HyperboloidPoint {
        HyperboloidPoint::unchecked(embed_quat(&self.quat()))
    }

    pub fn inf_dist(&self, other: &Self) -> f64 {
        (self.w - other.w)
            .abs()
            .max((self.x - other.x).abs())
            .max((self.y - other.y).abs())
    }
}

/// A norm-1 real quaternion acting on the plane by γ·p·γ†, stored as the
/// canonical projective representative. On real coefficients the dagger is
/// w + xi + yj − z·ij.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PlaneIsometry {
    q: Quaternion<f64>,
}

impl PlaneIsometry {
    pub fn new(q: Quaternion<f64>) -> Result<Self, Error> {
        Self::with_tol(q, DEFAULT_TOL)
    }

    pub fn with_tol(q: Quaternion<f64>, tol: f64) -> Result<Self, Error> {
        if (q.norm() - 1.0).abs() > tol {
            return Err(Error::Domain("plane isometry must have norm 1"));
        }
        Ok(Self {
            q: canonicalize_sign_real(&q),
        })
    }

    pub fn from_coeffs(w: f64, x: f64, y: f64, z: f64) -> Result<Self, Error> {
        Self::new(Quaternion::new(w, x, y, z, plane_algebra()))
    }

    pub fn quat(&self) -> &Quaternion<f64> {
        &self.q
    }

    /// The same isometry acting on the 3-space hyperboloid.
    pub fn embed(&self) -> Isometry {
        Isometry::new(embed_quat(&self.q)).expect("unit real quaternions embed as isometries")
    }

    /// Classification by trace, computed on the embedded isometry. Real
    /// traces only: the plane has no purely loxodromic isometries.
    pub fn classify(&self, tol: f64) -> IsometryClass {
        self.embed().classify(tol)
    }
}

fn canonicalize_sign_real(q: &Quaternion<f64>) -> Quaternion<f64> {
    for c in [q.w, q.x, q.y, q.z] {
        if c.abs() > SIGN_TOL {
            return if c < 0.0 { -*q } else { *q };
        }
    }
    *q
}

/// Apply γ·p·γ†. The symmetric subspace {1, i, j} is preserved, so the
/// ij-coefficient of the product vanishes up to rounding and is dropped.
pub fn act_2d(gamma: &PlaneIsometry, p: &PlanePoint) -> PlanePoint {
    let out = *gamma.quat() * p.quat() * gamma.quat().dagger();
    debug_assert!(out.z.abs() < 1e-9, "2D action left the plane");
    PlanePoint {
        w: out.w,
        x: out.x,
        y: out.y,
    }
}

/// The upper half-plane coordinate of a plane point:
/// w + xi + yj ↦ (y + √−1)/(w + x), the z = 0 specialization of the
/// half-space isomorphism with the J-axis read as the imaginary axis.
pub fn iota_2d(p: &PlanePoint) -> Result<Complex64, Error> {
    let denom = p.w + p.x;
    if denom <= BOUNDARY_TOL {
        return Err(Error::Boundary(
            "point is too close to the w + x = 0 boundary chart",
        ));
    }
    Ok(Complex64::new(p.y / denom, 1.0 / denom))
}

/// The restriction of the 2×2 representation to real coefficients:
/// w + xi + yj + z·ij ↦ [[w−x, y−z], [y+z, w+x]] with real entries.
pub fn rho_2d(gamma: &PlaneIsometry) -> Mat2<f64> {
    let q = gamma.quat();
    Mat2::new(q.w - q.x, q.y - q.z, q.y + q.z, q.w + q.x)
}

/// The real Möbius action on the upper half-plane:
/// ζ ↦ (aζ + b)/(cζ + d).
pub fn mobius_2d(m: &Mat2<f64>, zeta: Complex64) -> Complex64 {
    let num = zeta * m.e[0][0] + m.e[0][1];
    let den = zeta * m.e[1][0] + m.e[1][1];
    num / den
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::hyperboloid::in_m;

    /// Deterministic unit real quaternion with coefficients O(1). The split
    /// algebra has indefinite norm, so seeds are stepped until one lands in
    /// the positive-norm region.
    fn unit_gamma(seed: f64) -> PlaneIsometry {
        let mut s = seed;
        loop {
            let q = Quaternion::new(
                (s * 1.3).sin() + 0.6,
                (s * 2.1).cos(),
                (s * 0.7).sin(),
                (s * 1.7).cos() * 0.8,
                plane_algebra(),
            );
            let n = q.norm();
            if n > 0.1 {
                return PlaneIsometry::new(q.scale(1.0 / n.sqrt())).unwrap();
            }
            s += 0.618_033_988_75;
        }
    }

    fn sample_point(seed: f64) -> PlanePoint {
        PlanePoint::from_spatial((seed * 0.9).sin() * 1.5, (seed * 1.9).cos())
    }

    #[test]
    fn identity_fixes_points() {
        let id = PlaneIsometry::from_coeffs(1.0, 0.0, 0.0, 0.0).unwrap();
        let p = sample_point(1.7);
        assert!(act_2d(&id, &p).inf_dist(&p) == 0.0);
    }

    #[test]
    fn action_preserves_the_plane_and_matches_3d() {
        for s in 1..12 {
            let gamma = unit_gamma(s as f64 * 0.83);
            let p = sample_point(s as f64 * 1.31);
            let out = act_2d(&gamma, &p);
            // stays on the hyperboloid of the plane
            assert!((out.w() * out.w() - out.x() * out.x() - out.y() * out.y() - 1.0).abs() < 1e-11);
            assert!(out.w() > 0.0);
            // agrees with the embedded 3-space action
            let embedded = gamma.embed().act(&p.embed());
            assert!(out.embed().quat().inf_dist(embedded.quat()) < 1e-11);
        }
    }

    #[test]
    fn two_dimensional_equivariance() {
        // iota_2d intertwines the action with the real Möbius action of rho
        for s in 1..12 {
            let gamma = unit_gamma(s as f64 * 1.29);
            let p = sample_point(s as f64 * 0.57);
            let lhs = iota_2d(&act_2d(&gamma, &p)).unwrap();
            let rhs = mobius_2d(&rho_2d(&gamma), iota_2d(&p).unwrap());
            assert!((lhs - rhs).norm() < 1e-11);
            // images stay in the upper half-plane
            assert!(lhs.im > 0.0);
        }
    }

    #[test]
    fn iota_2d_frozen_values() {
        let basepoint = iota_2d(&PlanePoint::one()).unwrap();
        assert!((basepoint - Complex64::new(0.0, 1.0)).norm() < 1e-15);
        // translation along the i-axis scales the imaginary part
        let t = 1.0_f64;
        let p = PlanePoint::new(t.cosh(), t.sinh(), 0.0).unwrap();
        let z = iota_2d(&p).unwrap();
        assert!((z - Complex64::new(0.0, (-t).exp())).norm() < 1e-15);
    }

    #[test]
    fn rho_2d_is_real_and_multiplicative() {
        for s in 1..8 {
            let g1 = unit_gamma(s as f64 * 0.91);
            let g2 = unit_gamma(s as f64 * 1.41 + 0.3);
            let prod = PlaneIsometry::new(*g1.quat() * *g2.quat()).unwrap();
            let lhs = rho_2d(&prod);
            let rhs = rho_2d(&g1) * rho_2d(&g2);
            // projective representatives may differ by a global sign
            let close = lhs.inf_dist(&rhs) < 1e-12 || lhs.inf_dist(&-rhs) < 1e-12;
            assert!(close);
            assert!((rho_2d(&g1).det() - g1.quat().norm()).abs() < 1e-12);
        }
    }

    #[test]
    fn skew_space_of_the_plane_is_the_ij_line() {
        let alg = plane_algebra();
        // exhaustive basis check: dagger fixes 1, i, j and negates only ij
        let basis = [
            Quaternion::one(alg),
            Quaternion::i(alg),
            Quaternion::j(alg),
            Quaternion::ij(alg),
        ];
        for (idx, e) in basis.iter().enumerate() {
            let skew = (e.dagger() + *e).inf_norm() == 0.0;
            assert_eq!(skew, idx == 3);
        }
        // the norm of z·ij is +z² (its square is the negative −z²), so the
        // only unit-norm skew elements are ±ij
        for s in 1..10 {
            let z = (s as f64 * 0.73).sin() * 3.0;
            let w = Quaternion::ij(alg).scale(z);
            assert!((w.norm() - z * z).abs() < 1e-12);
            assert!(((w * w) - Quaternion::from_scalar(-z * z, alg)).inf_norm() < 1e-12);
        }
        // and those have trace 0: they rotate by π rather than translating,
        // so the plane admits no purely loxodromic isometries
        for sign in [1.0, -1.0] {
            let u = PlaneIsometry::new(Quaternion::ij(alg).scale(sign)).unwrap();
            assert_eq!(u.quat().trace(), 0.0);
            assert_eq!(u.classify(1e-9), IsometryClass::Elliptic);
        }
    }

    #[test]
    fn plane_points_embed_symmetrically() {
        for s in 1..6 {
            let p = sample_point(s as f64);
            let e = p.embed();
            assert!(in_m(e.quat(), 1e-15));
            assert!((e.quat().norm() - Complex64::new(1.0, 0.0)).norm() < 1e-12);
        }
    }

    #[test]
    fn constructors_enforce_invariants() {
        assert!(PlanePoint::new(1.0, 0.5, 0.0).is_err());
        assert!(PlanePoint::new(-1.0, 0.0, 0.0).is_err());
        assert!(PlaneIsometry::from_coeffs(2.0, 0.0, 0.0, 0.0).is_err());
        // canonical sign flips a negative leading coefficient
        let u = PlaneIsometry::from_coeffs(-1.0, 0.0, 0.0, 0.0).unwrap();
        assert_eq!(u.quat().w, 1.0);
    }
}

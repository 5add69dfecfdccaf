//! Conversions among the hyperboloid, Poincaré ball, and upper half-space
//! models of hyperbolic 3-space, plus two classical actions used as
//! independent cross-checks of the quaternionic one: the Hermitian-matrix
//! (spinor) action on Minkowski space and the Möbius action on the upper
//! half-space inside Hamilton's quaternions.

use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::Error;
use crate::hyperboloid::{HyperboloidPoint, Isometry};
use crate::mat::{rho, Mat2};

/// Tolerance below which a coordinate counts as sitting on the model
/// boundary; conversions refuse rather than return near-infinities.
pub const BOUNDARY_TOL: f64 = 1e-9;

/// A vector (v0, v1, v2, v3) of Minkowski spacetime with quadratic form
/// φ(v) = v0² − v1² − v2² − v3².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct MinkowskiVec {
    pub v0: f64,
    pub v1: f64,
    pub v2: f64,
    pub v3: f64,
}

impl MinkowskiVec {
    pub fn new(v0: f64, v1: f64, v2: f64, v3: f64) -> Self {
        Self { v0, v1, v2, v3 }
    }

    /// The quadratic form v0² − v1² − v2² − v3².
    pub fn phi(&self) -> f64 {
        self.v0 * self.v0 - self.v1 * self.v1 - self.v2 * self.v2 - self.v3 * self.v3
    }

    /// Membership in the upper unit hyperboloid: φ(v) = 1 within tol, v0 > 0.
    pub fn on_hyperboloid(&self, tol: f64) -> bool {
        (self.phi() - 1.0).abs() <= tol && self.v0 > 0.0
    }

    pub fn inf_dist(&self, other: &Self) -> f64 {
        (self.v0 - other.v0)
            .abs()
            .max((self.v1 - other.v1).abs())
            .max((self.v2 - other.v2).abs())
            .max((self.v3 - other.v3).abs())
    }
}

/// A point of the open unit ball, in the coordinates of the pure part of
/// the symmetric space (the coefficients of i, j, and √−1·ij).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BallPoint {
    x: f64,
    y: f64,
    z: f64,
}

impl BallPoint {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, Error> {
        if x * x + y * y + z * z >= 1.0 {
            return Err(Error::InvalidPoint("ball point must have norm below 1"));
        }
        Ok(Self { x, y, z })
    }

    pub fn x(&self) -> f64 {
        self.x
    }

    pub fn y(&self) -> f64 {
        self.y
    }

    pub fn z(&self) -> f64 {
        self.z
    }

    pub fn norm_sq(&self) -> f64 {
        self.x * self.x + self.y * self.y + self.z * self.z
    }

    pub fn inf_dist(&self, other: &Self) -> f64 {
        (self.x - other.x)
            .abs()
            .max((self.y - other.y).abs())
            .max((self.z - other.z).abs())
    }
}

/// A point x1 + x2·I + x3·J of the upper half-space inside Hamilton's
/// quaternions, x3 > 0.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct UpperHalfSpacePoint {
    x1: f64,
    x2: f64,
    x3: f64,
}

impl UpperHalfSpacePoint {
    pub fn new(x1: f64, x2: f64, x3: f64) -> Result<Self, Error> {
        if !(x3 > BOUNDARY_TOL) {
            return Err(Error::Boundary(
                "upper half-space height must exceed the boundary tolerance",
            ));
        }
        Ok(Self { x1, x2, x3 })
    }

    pub fn x1(&self) -> f64 {
        self.x1
    }

    pub fn x2(&self) -> f64 {
        self.x2
    }

    pub fn x3(&self) -> f64 {
        self.x3
    }

    pub fn inf_dist(&self, other: &Self) -> f64 {
        (self.x1 - other.x1)
            .abs()
            .max((self.x2 - other.x2).abs())
            .max((self.x3 - other.x3).abs())
    }
}

/// Hyperbolic distance in the upper half-space model:
/// cosh d = 1 + ‖p − q‖²/(2·x3(p)·x3(q)).
pub fn uhs_distance(p: &UpperHalfSpacePoint, q: &UpperHalfSpacePoint) -> f64 {
    let dx = p.x1 - q.x1;
    let dy = p.x2 - q.x2;
    let dz = p.x3 - q.x3;
    let c = 1.0 + (dx * dx + dy * dy + dz * dz) / (2.0 * p.x3 * q.x3);
    c.max(1.0).acosh()
}

/// The Hermitian-matrix coordinates of a Minkowski vector:
/// (v0, v1, v2, v3) ↦ [[v0−v1, v2−√−1·v3], [v2+√−1·v3, v0+v1]];
/// det transports φ.
pub fn eta(v: &MinkowskiVec) -> Mat2<Complex64> {
    Mat2::new(
        Complex64::new(v.v0 - v.v1, 0.0),
        Complex64::new(v.v2, -v.v3),
        Complex64::new(v.v2, v.v3),
        Complex64::new(v.v0 + v.v1, 0.0),
    )
}

/// Inverse of [`eta`]; the input must be Hermitian within `tol`.
pub fn eta_inv(m: &Mat2<Complex64>, tol: f64) -> Result<MinkowskiVec, Error> {
    let [[a, b], [c, d]] = m.e;
    if a.im.abs() > tol || d.im.abs() > tol || (b - c.conj()).norm() > tol {
        return Err(Error::Domain("eta_inv requires a Hermitian matrix"));
    }
    Ok(MinkowskiVec::new(
        (a.re + d.re) / 2.0,
        (d.re - a.re) / 2.0,
        (b.re + c.re) / 2.0,
        (c.im - b.im) / 2.0,
    ))
}

/// The spinor action of a determinant-1 matrix on the hyperboloid inside
/// Minkowski space: v ↦ η⁻¹(m·η(v)·m̄ᵀ). Used as an independent oracle for
/// the quaternionic action.
pub fn wigner_act(
    m: &Mat2<Complex64>,
    v: &MinkowskiVec,
    tol: f64,
) -> Result<MinkowskiVec, Error> {
    if (m.det() - Complex64::new(1.0, 0.0)).norm() > tol {
        return Err(Error::Domain("spinor action requires determinant 1"));
    }
    if !v.on_hyperboloid(tol) {
        return Err(Error::Domain(
            "spinor action requires a point on the unit hyperboloid",
        ));
    }
    eta_inv(&(m.clone() * eta(v) * m.conj_transpose()), tol)
}

/// The quaternionic action computed through the spinor oracle:
/// transport the point to Minkowski space, act by η-conjugation with
/// ρ(u), and read the coordinates back.
pub fn act_via_wigner(
    u: &Isometry,
    p: &HyperboloidPoint,
    tol: f64,
) -> Result<MinkowskiVec, Error> {
    wigner_act(&rho(u.quat())?, &p.minkowski(), tol)
}

/// Radial projection of the hyperboloid onto the unit ball:
/// w + (pure) ↦ (pure)/(1 + w).
pub fn iota_proj(p: &HyperboloidPoint) -> BallPoint {
    let v = p.minkowski();
    let s = 1.0 + v.v0;
    BallPoint {
        x: v.v1 / s,
        y: v.v2 / s,
        z: v.v3 / s,
    }
}

/// Inverse of [`iota_proj`]: the stereographic lift
/// b ↦ ((1 + ‖b‖²) + 2b)/(1 − ‖b‖²).
pub fn ball_lift(b: &BallPoint) -> HyperboloidPoint {
    let s = b.norm_sq();
    let d = 1.0 - s;
    let v = MinkowskiVec::new((1.0 + s) / d, 2.0 * b.x / d, 2.0 * b.y / d, 2.0 * b.z / d);
    HyperboloidPoint::from_minkowski(&v, 1e-9)
        .expect("stereographic lift of an interior ball point is on the hyperboloid")
}

/// Inversion of the ball through the sphere of radius √2 centered at −J,
/// landing in the upper half-space:
/// (x,y,z) ↦ (2x + 2y·I + (1 − ‖b‖²)·J)/(x² + y² + (z+1)²).
pub fn iota_inv_sphere(b: &BallPoint) -> UpperHalfSpacePoint {
    let s = b.norm_sq();
    let denom = b.x * b.x + b.y * b.y + (b.z + 1.0) * (b.z + 1.0);
    UpperHalfSpacePoint {
        x1: 2.0 * b.x / denom,
        x2: 2.0 * b.y / denom,
        x3: (1.0 - s) / denom,
    }
}

/// The signed coordinate permutation (x, y, z) ↦ (y, −z, x) that aligns the
/// ball's axes before the sphere inversion.
pub fn iota_perm(b: &BallPoint) -> BallPoint {
    BallPoint {
        x: b.y,
        y: -b.z,
        z: b.x,
    }
}

/// Closed-form isomorphism from the hyperboloid to the upper half-space:
/// w + xi + yj + √−1·z·ij ↦ (y − z·I + J)/(w + x).
///
/// Agrees with the composite path [`iota_proj`] → [`iota_perm`] →
/// [`iota_inv_sphere`], and intertwines the quaternionic action with the
/// Möbius action of ρ (the sign of the I-component is fixed by that
/// equivariance requirement).
pub fn iota(p: &HyperboloidPoint) -> Result<UpperHalfSpacePoint, Error> {
    let v = p.minkowski();
    let denom = v.v0 + v.v1;
    if denom <= BOUNDARY_TOL {
        return Err(Error::Boundary(
            "point is too close to the w + x = 0 boundary chart",
        ));
    }
    Ok(UpperHalfSpacePoint {
        x1: v.v2 / denom,
        x2: -v.v3 / denom,
        x3: 1.0 / denom,
    })
}

/// Reference implementation of [`iota`] as the composition of the three
/// elementary maps. Kept separate so the two routes can be checked against
/// each other.
pub fn iota_composed(p: &HyperboloidPoint) -> Result<UpperHalfSpacePoint, Error> {
    let u = iota_inv_sphere(&iota_perm(&iota_proj(p)));
    if u.x3 <= BOUNDARY_TOL {
        return Err(Error::Boundary(
            "point is too close to the w + x = 0 boundary chart",
        ));
    }
    Ok(u)
}

/// Inverse of [`iota`]: x1 + x2·I + x3·J pulls back to the hyperboloid point
/// with Minkowski coordinates
/// ((1+Σxᵢ²)/(2x3), (1−Σxᵢ²)/(2x3), x1/x3, −x2/x3).
pub fn iota_inv(u: &UpperHalfSpacePoint) -> HyperboloidPoint {
    let s = u.x1 * u.x1 + u.x2 * u.x2 + u.x3 * u.x3;
    let v = MinkowskiVec::new(
        (1.0 + s) / (2.0 * u.x3),
        (1.0 - s) / (2.0 * u.x3),
        u.x1 / u.x3,
        -u.x2 / u.x3,
    );
    HyperboloidPoint::from_minkowski(&v, 1e-6)
        .expect("pullback of an upper half-space point is on the hyperboloid")
}

/// A Hamilton quaternion r + i·I + j·J + k·K (I² = J² = K² = −1, IJ = K).
/// The upper half-space model lives inside this algebra, and complex
/// numbers embed as r + i·I.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HQuat {
    pub r: f64,
    pub i: f64,
    pub j: f64,
    pub k: f64,
}

impl HQuat {
    pub fn new(r: f64, i: f64, j: f64, k: f64) -> Self {
        Self { r, i, j, k }
    }

    pub fn from_complex(c: Complex64) -> Self {
        Self::new(c.re, c.im, 0.0, 0.0)
    }

    pub fn from_uhs(p: &UpperHalfSpacePoint) -> Self {
        Self::new(p.x1, p.x2, p.x3, 0.0)
    }

    pub fn conj(&self) -> Self {
        Self::new(self.r, -self.i, -self.j, -self.k)
    }

    pub fn norm_sq(&self) -> f64 {
        self.r * self.r + self.i * self.i + self.j * self.j + self.k * self.k
    }

    pub fn inv(&self) -> Option<Self> {
        let n = self.norm_sq();
        if n == 0.0 {
            return None;
        }
        let c = self.conj();
        Some(Self::new(c.r / n, c.i / n, c.j / n, c.k / n))
    }

    pub fn inf_dist(&self, other: &Self) -> f64 {
        (self.r - other.r)
            .abs()
            .max((self.i - other.i).abs())
            .max((self.j - other.j).abs())
            .max((self.k - other.k).abs())
    }
}

impl Add for HQuat {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Self::new(self.r + o.r, self.i + o.i, self.j + o.j, self.k + o.k)
    }
}

impl Sub for HQuat {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Self::new(self.r - o.r, self.i - o.i, self.j - o.j, self.k - o.k)
    }
}

impl Neg for HQuat {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.r, -self.i, -self.j, -self.k)
    }
}

impl Mul for HQuat {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Self::new(
            self.r * o.r - self.i * o.i - self.j * o.j - self.k * o.k,
            self.r * o.i + self.i * o.r + self.j * o.k - self.k * o.j,
            self.r * o.j - self.i * o.k + self.j * o.r + self.k * o.i,
            self.r * o.k + self.i * o.j - self.j * o.i + self.k * o.r,
        )
    }
}

/// The Möbius action of a determinant-1 complex matrix on the upper
/// half-space: p ↦ (a·p + b)·(c·p + d)⁻¹ in Hamilton-quaternion arithmetic.
pub fn mobius_act(
    m: &Mat2<Complex64>,
    p: &UpperHalfSpacePoint,
    tol: f64,
) -> Result<UpperHalfSpacePoint, Error> {
    if (m.det() - Complex64::new(1.0, 0.0)).norm() > tol {
        return Err(Error::Domain("Möbius action requires determinant 1"));
    }
    let a = HQuat::from_complex(m.e[0][0]);
    let b = HQuat::from_complex(m.e[0][1]);
    let c = HQuat::from_complex(m.e[1][0]);
    let d = HQuat::from_complex(m.e[1][1]);
    let q = HQuat::from_uhs(p);
    let denom = (c * q + d)
        .inv()
        .ok_or(Error::Boundary("Möbius denominator vanished"))?;
    let out = (a * q + b) * denom;
    if !(out.j > BOUNDARY_TOL) {
        return Err(Error::Boundary(
            "Möbius image fell onto the boundary within tolerance",
        ));
    }
    Ok(UpperHalfSpacePoint {
        x1: out.r,
        x2: out.i,
        x3: out.j,
    })
}

/// Residual of the central equivariance identity
/// ι(u·p·u†) = möbius(ρ(u), ι(p)): the max-abs coordinate difference of the
/// two upper half-space points.
pub fn equivariance_check(u: &Isometry, p: &HyperboloidPoint) -> Result<f64, Error> {
    let lhs = iota(&u.act(p))?;
    let rhs = mobius_act(&rho(u.quat())?, &iota(p)?, 1e-6)?;
    Ok(lhs.inf_dist(&rhs))
}

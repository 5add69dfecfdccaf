//! The hyperboloid model of hyperbolic 3-space inside a quaternion algebra:
//! points, the conjugation action, isometry classification, invariant
//! lengths and angles, axes, geodesics, and the symmetric/skew decomposition
//! of the action.

use num_complex::Complex64;
#[cfg(not(feature = "std"))]
use num_traits::Float;

use crate::error::Error;
use crate::mat::rho;
use crate::models::{self, UpperHalfSpacePoint};
use crate::quat::{Algebra, CQuat, Quaternion};
use crate::scalar::{acosh_principal, Scalar};

/// Default tolerance for float-mode invariant checks.
pub const DEFAULT_TOL: f64 = 1e-9;

/// Half-width of the trace band classified as parabolic: |tr ∓ 2| within
/// this bound wins over every other test, since parabolicity is a
/// measure-zero condition that must win ties against float noise.
pub const PARABOLIC_TRACE_TOL: f64 = 1e-8;

/// Threshold for picking the first significant component when fixing the
/// projective sign of a representative.
const SIGN_TOL: f64 = 1e-12;

/// Deterministic representative of {±q}: flip the sign so that the first
/// component of (Re w, Im w, Re x, Im x, Re y, Im y, Re z, Im z) whose
/// magnitude exceeds the sign threshold is positive.
pub(crate) fn canonicalize_sign(q: &CQuat) -> CQuat {
    let comps = [
        q.w.re, q.w.im, q.x.re, q.x.im, q.y.re, q.y.im, q.z.re, q.z.im,
    ];
    for c in comps {
        if c.abs() > SIGN_TOL {
            return if c < 0.0 { -*q } else { *q };
        }
    }
    *q
}

/// True iff `q` is fixed by the dagger involution within `tol`, i.e. lies in
/// the real span of {1, i, j, √−1·ij} (the Minkowski subspace).
pub fn in_m<S: Scalar>(q: &Quaternion<S>, tol: f64) -> bool {
    (q.dagger() - q.clone()).inf_norm() <= tol
}

/// True iff `q` is dagger-skew with norm 1 within `tol`: a point of the
/// one-sheeted hyperboloid −w² + x² + y² + z² = 1 in the skew coordinates.
pub fn in_w1<S: Scalar>(q: &Quaternion<S>, tol: f64) -> bool {
    (q.dagger() + q.clone()).inf_norm() <= tol
        && (q.norm().embed() - Complex64::new(1.0, 0.0)).norm() <= tol
}

/// The extended conjugation action q·p·q†, defined for arbitrary inputs.
/// It is quadratic in `q` and restricts to the isometric action when
/// norm(q) = 1 and `p` is a hyperboloid point.
pub fn act_extended<S: Scalar>(q: &Quaternion<S>, p: &Quaternion<S>) -> Quaternion<S> {
    q.clone() * p.clone() * q.dagger()
}

/// The three pieces of the conjugation action at 1 split along the
/// symmetric/skew decomposition q = m + w.
#[derive(Debug, Clone, PartialEq)]
pub struct ActionDecomposition<S: Scalar> {
    /// m·m† = m², the symmetric part's contribution.
    pub sym_image: Quaternion<S>,
    /// w·w† = −w², the skew part's contribution.
    pub skew_image: Quaternion<S>,
    /// The commutator [m, w]; dagger-symmetric with trace 0.
    pub commutator: Quaternion<S>,
}

/// Split q·1·q† into symmetric, skew, and commutator contributions:
/// q·q† = m² + (−w²) − [m, w]. The identity holds for every quaternion; for
/// unit q it decomposes the image of the basepoint under the action.
pub fn decompose_action<S: Scalar>(q: &Quaternion<S>) -> ActionDecomposition<S> {
    let split = q.sym_skew_split();
    let m = split.sym;
    let w = split.skew;
    ActionDecomposition {
        sym_image: act_extended(&m, &Quaternion::one(q.alg.clone())),
        skew_image: act_extended(&w, &Quaternion::one(q.alg.clone())),
        commutator: m.clone() * w.clone() - w * m,
    }
}

/// A point of the upper unit hyperboloid M⁺¹: dagger-symmetric, norm 1,
/// positive trace.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HyperboloidPoint {
    q: CQuat,
}

impl HyperboloidPoint {
    /// Validate membership within the default tolerance.
    pub fn new(q: CQuat) -> Result<Self, Error> {
        Self::with_tol(q, DEFAULT_TOL)
    }

    /// Validate membership within `tol`: dagger-symmetry, |norm − 1| ≤ tol,
    /// trace > 0.
    pub fn with_tol(q: CQuat, tol: f64) -> Result<Self, Error> {
        if !in_m(&q, tol) {
            return Err(Error::InvalidPoint("point is not dagger-symmetric"));
        }
        if (q.norm() - Complex64::new(1.0, 0.0)).norm() > tol {
            return Err(Error::InvalidPoint("point does not have norm 1"));
        }
        if q.trace().re <= 0.0 {
            return Err(Error::InvalidPoint("point does not have positive trace"));
        }
        Ok(Self { q })
    }

    /// Wrap a quaternion that is known to satisfy the invariants (used for
    /// outputs of operations that preserve them exactly).
    pub(crate) fn unchecked(q: CQuat) -> Self {
        Self { q }
    }

    /// The basepoint 1.
    pub fn one(alg: Algebra<Complex64>) -> Self {
        Self { q: CQuat::one(alg) }
    }

    /// The point with Minkowski coordinates
    /// (√(1+x²+y²+z²), x, y, z) — always on the hyperboloid.
    pub fn from_spatial(x: f64, y: f64, z: f64) -> Self {
        let w = (1.0 + x * x + y * y + z * z).sqrt();
        Self {
            q: CQuat::from_reals(w, 0.0, x, 0.0, y, 0.0, 0.0, z),
        }
    }

    /// Interpret a Minkowski vector with φ(v) = 1, v0 > 0 as a point.
    pub fn from_minkowski(v: &models::MinkowskiVec, tol: f64) -> Result<Self, Error> {
        if !v.on_hyperboloid(tol) {
            return Err(Error::InvalidPoint(
                "vector is not on the upper unit hyperboloid",
            ));
        }
        Ok(Self {
            q: CQuat::from_reals(v.v0, 0.0, v.v1, 0.0, v.v2, 0.0, 0.0, v.v3),
        })
    }

    /// The underlying quaternion w + xi + yj + √−1·z·ij.
    pub fn quat(&self) -> &CQuat {
        &self.q
    }

    /// Minkowski coordinates (w, x, y, z) of the point.
    pub fn minkowski(&self) -> models::MinkowskiVec {
        models::MinkowskiVec::new(self.q.w.re, self.q.x.re, self.q.y.re, self.q.z.im)
    }
}

/// Hyperbolic distance: arcosh of the Minkowski pairing
/// ⟨p,q⟩ = w_p w_q − x_p x_q − y_p y_q − z_p z_q.
pub fn distance(p: &HyperboloidPoint, q: &HyperboloidPoint) -> Result<f64, Error> {
    let a = p.minkowski();
    let b = q.minkowski();
    let pairing = a.v0 * b.v0 - a.v1 * b.v1 - a.v2 * b.v2 - a.v3 * b.v3;
    if pairing < 1.0 - DEFAULT_TOL {
        return Err(Error::InvalidPoint(
            "Minkowski pairing below 1; inputs are not hyperboloid points",
        ));
    }
    Ok(pairing.max(1.0).acosh())
}

/// The square root of a hyperboloid point inside M⁺¹:
/// √p = (p + 1)/√(2 + tr p), satisfying (√p)² = p.
pub fn sqrt_point(p: &HyperboloidPoint) -> CQuat {
    let q = p.quat();
    let scale = 1.0 / (2.0 + q.trace().re).sqrt();
    (*q + CQuat::one(q.alg)).scale(Complex64::new(scale, 0.0))
}

/// Conjugacy classes of orientation-preserving isometries, by trace.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum IsometryClass {
    /// ±1: fixes everything.
    Identity,
    /// Real trace in (−2, 2): rotation about an axis.
    Elliptic,
    /// Trace ±2 (excluding ±1): a single fixed point at infinity.
    Parabolic,
    /// Real trace beyond ±2: pure translation along an axis.
    Hyperbolic,
    /// Non-real trace: screw motion (translation with twist).
    PurelyLoxodromic,
}

impl IsometryClass {
    /// Kebab-case label used by the text interfaces.
    pub fn label(&self) -> &'static str {
        match self {
            IsometryClass::Identity => "identity",
            IsometryClass::Elliptic => "elliptic",
            IsometryClass::Parabolic => "parabolic",
            IsometryClass::Hyperbolic => "hyperbolic",
            IsometryClass::PurelyLoxodromic => "purely-loxodromic",
        }
    }
}

impl core::fmt::Display for IsometryClass {
    fn fmt(&self, f: &mut core::fmt::Formatter<'_>) -> core::fmt::Result {
        f.write_str(self.label())
    }
}

/// A unit quaternion acting on the hyperboloid by p ↦ u·p·u†, stored as the
/// canonical projective representative (±u act identically).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Isometry {
    q: CQuat,
}

impl Isometry {
    /// Validate |norm − 1| ≤ default tolerance and canonicalize the sign.
    pub fn new(q: CQuat) -> Result<Self, Error> {
        Self::with_tol(q, DEFAULT_TOL)
    }

    /// Validate |norm − 1| ≤ tol and canonicalize the sign.
    pub fn with_tol(q: CQuat, tol: f64) -> Result<Self, Error> {
        if (q.norm() - Complex64::new(1.0, 0.0)).norm() > tol {
            return Err(Error::Domain("isometry must have norm 1"));
        }
        Ok(Self {
            q: canonicalize_sign(&q),
        })
    }

    /// Rescale `q` by 1/√n(q) when n(q) is real and positive (within tol),
    /// then wrap; refuse otherwise. Complex norms have no canonical positive
    /// square root, so they are not silently normalized.
    pub fn normalized(q: CQuat, tol: f64) -> Result<Self, Error> {
        let n = q.norm();
        if n.im.abs() > tol || n.re <= tol {
            return Err(Error::Domain(
                "norm is not a positive real; cannot normalize to a unit representative",
            ));
        }
        let s = Complex64::new(1.0 / n.re.sqrt(), 0.0);
        Self::with_tol(q.scale(s), tol.max(DEFAULT_TOL))
    }

    /// A hyperboloid point viewed as an isometry (translation along the
    /// geodesic from 1 through the point).
    pub fn from_point(p: &HyperboloidPoint) -> Self {
        Self {
            q: canonicalize_sign(p.quat()),
        }
    }

    /// The canonical unit-quaternion representative.
    pub fn quat(&self) -> &CQuat {
        &self.q
    }

    pub fn trace(&self) -> Complex64 {
        self.q.trace()
    }

    /// Apply u·p·u†. Preserves all point invariants.
    pub fn act(&self, p: &HyperboloidPoint) -> HyperboloidPoint {
        HyperboloidPoint::unchecked(act_extended(&self.q, p.quat()))
    }

    /// Group composition: (u.compose(v)).act(p) = u.act(v.act(p)).
    pub fn compose(&self, other: &Isometry) -> Isometry {
        Isometry {
            q: canonicalize_sign(&(self.q * other.q)),
        }
    }

    pub fn inverse(&self) -> Isometry {
        let inv = self
            .q
            .qinv()
            .expect("unit quaternions are always invertible");
        Isometry {
            q: canonicalize_sign(&inv),
        }
    }

    /// Classify by trace. Precedence: identity (u = ±1), then the parabolic
    /// band |tr ∓ 2| ≤ 1e−8, then real trace (|Im tr| ≤ tol) split into
    /// elliptic/hyperbolic at |Re tr| = 2, else purely loxodromic.
    ///
    /// Near-real loxodromic traces may flip between hyperbolic and
    /// purely-loxodromic within `tol`; that ambiguity is inherent to float
    /// classification.
    pub fn classify(&self, tol: f64) -> IsometryClass {
        let q = &self.q;
        let one = CQuat::one(q.alg);
        if q.inf_dist(&one) <= tol || q.inf_dist(&-one) <= tol {
            return IsometryClass::Identity;
        }
        let tr = self.trace();
        let two = Complex64::new(2.0, 0.0);
        if (tr - two).norm() <= PARABOLIC_TRACE_TOL || (tr + two).norm() <= PARABOLIC_TRACE_TOL {
            return IsometryClass::Parabolic;
        }
        if tr.im.abs() <= tol {
            if tr.re.abs() < 2.0 {
                IsometryClass::Elliptic
            } else {
                IsometryClass::Hyperbolic
            }
        } else {
            IsometryClass::PurelyLoxodromic
        }
    }

    /// |Re arcosh(tr/2)| on the principal branch: the translation component
    /// of the motion. Zero for elliptic and identity isometries; undefined
    /// for parabolic ones.
    ///
    /// Note the factor-2 convention: the distance a point of the axis
    /// actually moves is [`Self::displacement`], twice this value. Both are
    /// reported because the two conventions coexist in the literature.
    pub fn translation_length(&self) -> Result<f64, Error> {
        match self.classify(DEFAULT_TOL) {
            IsometryClass::Parabolic => Err(Error::UndefinedLength),
            IsometryClass::Identity | IsometryClass::Elliptic => Ok(0.0),
            _ => Ok(acosh_principal(self.trace() / 2.0).re.abs()),
        }
    }

    /// Measured displacement d(x, u·x·u†) of points x on the axis:
    /// 2·|Re arcosh(tr/2)|.
    pub fn displacement(&self) -> Result<f64, Error> {
        Ok(2.0 * self.translation_length()?)
    }

    /// Rotation angle 2·|Im arcosh(tr/2)| folded to [0, π] (the eigenvalue
    /// convention tr = 2cosh((ℓ + θ√−1)/2)). Undefined for parabolic input.
    ///
    /// For the half-angle convention, which reads the angle directly off the
    /// arcosh, see [`Self::rotation_half_angle`].
    pub fn rotation_angle(&self) -> Result<f64, Error> {
        let half = self.rotation_half_angle()?;
        let theta = 2.0 * half;
        Ok(if theta > core::f64::consts::PI {
            2.0 * core::f64::consts::PI - theta
        } else {
            theta
        })
    }

    /// |Im arcosh(tr/2)| on the principal branch, in [0, π]. This is the
    /// angle read directly from arcosh(tr/2) = r + θ√−1; for unit skew
    /// points (tr purely imaginary) it equals π/2.
    pub fn rotation_half_angle(&self) -> Result<f64, Error> {
        if self.classify(DEFAULT_TOL) == IsometryClass::Parabolic {
            return Err(Error::UndefinedAngle);
        }
        Ok(acosh_principal(self.trace() / 2.0).im.abs())
    }

    /// The invariant axis:
    /// - u ∈ M⁺¹ (a point as isometry): the geodesic through 1 and u;
    /// - u ∈ W¹ with tr ≠ 0 (a skew point): the geodesic through 1 and −u²;
    /// - any other elliptic/loxodromic u: computed from the boundary fixed
    ///   points of the Möbius transformation of ρ(u), pulled back from the
    ///   upper half-space model.
    ///
    /// Oriented toward the attracting fixed point when one exists.
    /// Identity and parabolic isometries have no axis.
    pub fn axis(&self, tol: f64) -> Result<Geodesic, Error> {
        match self.classify(tol) {
            IsometryClass::Identity | IsometryClass::Parabolic => return Err(Error::NoAxis),
            _ => {}
        }
        let q = &self.q;
        let basepoint = HyperboloidPoint::one(q.alg);
        if in_m(q, tol) {
            // Canonical sign makes the leading coefficient cosh(t) positive,
            // so q itself is the point the axis passes through.
            let p = HyperboloidPoint::with_tol(*q, 100.0 * tol)?;
            return geodesic_through(&basepoint, &p);
        }
        if in_w1(q, tol) && self.trace().norm() > tol {
            let p = HyperboloidPoint::with_tol(-(*q * *q), 100.0 * tol)?;
            return geodesic_through(&basepoint, &p);
        }
        self.axis_from_fixed_points()
    }

    /// General-position axis via the boundary fixed points of the Möbius map
    /// of ρ(u): solve m10·ξ² + (m11 − m00)·ξ − m01 = 0 on ℂ ∪ {∞}, then take
    /// the geodesic of the upper half-space with those endpoints and pull two
    /// of its points back to the hyperboloid.
    fn axis_from_fixed_points(&self) -> Result<Geodesic, Error> {
        let m = rho(&self.q)?;
        let (m00, m01, m10, m11) = (m.e[0][0], m.e[0][1], m.e[1][0], m.e[1][1]);
        if m10.norm() <= SIGN_TOL {
            // One fixed point at ∞; the axis is the vertical ray over the
            // other. ξ = m01/(m00 − m11), attracting at ∞ iff |m00| > |m11|.
            if (m00 - m11).norm() <= SIGN_TOL {
                return Err(Error::NoAxis);
            }
            let xi = m01 / (m00 - m11);
            let lower = models::iota_inv(&UpperHalfSpacePoint::new(xi.re, xi.im, 1.0)?);
            let upper = models::iota_inv(&UpperHalfSpacePoint::new(xi.re, xi.im, 2.0)?);
            return if m00.norm() >= m11.norm() {
                geodesic_through(&lower, &upper)
            } else {
                geodesic_through(&upper, &lower)
            };
        }
        let disc = (self.trace() * self.trace() - Complex64::new(4.0, 0.0)).sqrt();
        let two_c = m10 * 2.0;
        let xi_plus = ((m00 - m11) + disc) / two_c;
        let xi_minus = ((m00 - m11) - disc) / two_c;
        if (xi_plus - xi_minus).norm() <= SIGN_TOL {
            return Err(Error::NoAxis);
        }
        // Order the endpoints (repelling, attracting): the Möbius derivative
        // at ξ is 1/(m10·ξ + m11)², so larger |m10·ξ + m11| means attracting.
        let (xi_r, xi_a) = if (m10 * xi_plus + m11).norm() >= (m10 * xi_minus + m11).norm() {
            (xi_minus, xi_plus)
        } else {
            (xi_plus, xi_minus)
        };
        // The axis is the semicircle over the segment [ξ_r, ξ_a]: sample its
        // top and a point a quarter-turn toward the attracting end.
        let center = (xi_r + xi_a) / 2.0;
        let radius = (xi_a - xi_r).norm() / 2.0;
        let u_hat = (xi_a - xi_r) / (xi_a - xi_r).norm();
        let mid = center + u_hat * (radius / core::f64::consts::SQRT_2);
        let top = models::iota_inv(&UpperHalfSpacePoint::new(center.re, center.im, radius)?);
        let toward = models::iota_inv(&UpperHalfSpacePoint::new(
            mid.re,
            mid.im,
            radius / core::f64::consts::SQRT_2,
        )?);
        geodesic_through(&top, &toward)
    }
}

/// A complete oriented geodesic, stored as a basepoint, a canonical-sign
/// unit direction (pure, dagger-symmetric, norm −1), and an orientation
/// sign telling whether travel is along +direction or −direction.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Geodesic {
    base: HyperboloidPoint,
    dir: CQuat,
    orientation: i8,
    sqrt_base: CQuat,
}

impl Geodesic {
    pub fn basepoint(&self) -> &HyperboloidPoint {
        &self.base
    }

    /// Canonical-sign unit direction (norm −1, dagger-symmetric, pure).
    pub fn direction(&self) -> &CQuat {
        &self.dir
    }

    /// +1 when travel follows the canonical direction, −1 otherwise.
    pub fn orientation(&self) -> i8 {
        self.orientation
    }

    /// γ(t) = √p·(cosh t + sinh t·εv)·√p, with γ(0) the basepoint and t the
    /// signed arclength.
    pub fn sample(&self, t: f64) -> HyperboloidPoint {
        let v = self.dir.scale(Complex64::new(self.orientation as f64, 0.0));
        let step =
            CQuat::from_scalar(Complex64::new(t.cosh(), 0.0), self.dir.alg) + v.scale(Complex64::new(t.sinh(), 0.0));
        HyperboloidPoint::unchecked(self.sqrt_base * step * self.sqrt_base)
    }

    /// How far `q` is from lying on the geodesic: transport q back to the
    /// geodesic through 1 and measure the failure of its pure part to be a
    /// real multiple of the direction.
    pub fn membership_residual(&self, q: &HyperboloidPoint) -> f64 {
        let s_inv = self
            .sqrt_base
            .qinv()
            .expect("square roots of hyperboloid points are invertible");
        let r = s_inv * *q.quat() * s_inv;
        let r0 = r.pure_part();
        let lambda = r0.x.re * self.dir.x.re + r0.y.re * self.dir.y.re + r0.z.im * self.dir.z.im;
        (r0 - self.dir.scale(Complex64::new(lambda, 0.0))).inf_norm()
    }

    /// The same line traversed the other way.
    pub fn reversed(&self) -> Geodesic {
        Geodesic {
            base: self.base,
            dir: self.dir,
            orientation: -self.orientation,
            sqrt_base: self.sqrt_base,
        }
    }
}

/// The oriented geodesic from `p1` through `p2`: transport by √p1 reduces to
/// a geodesic through 1, whose direction is the normalized pure part of the
/// transported second point.
pub fn geodesic_through(
    p1: &HyperboloidPoint,
    p2: &HyperboloidPoint,
) -> Result<Geodesic, Error> {
    if p1.quat().inf_dist(p2.quat()) <= DEFAULT_TOL {
        return Err(Error::DegenerateGeodesic);
    }
    let s = sqrt_point(p1);
    let s_inv = s
        .qinv()
        .map_err(|_| Error::DegenerateGeodesic)?;
    let transported = s_inv * *p2.quat() * s_inv;
    let pure = transported.pure_part();
    let neg_norm = -pure.norm().re;
    if neg_norm <= 0.0 {
        return Err(Error::DegenerateGeodesic);
    }
    let v_raw = pure.scale(Complex64::new(1.0 / neg_norm.sqrt(), 0.0));
    let v_canon = canonicalize_sign(&v_raw);
    let orientation = if v_canon.inf_dist(&v_raw) <= v_canon.inf_dist(&-v_raw) {
        1
    } else {
        -1
    };
    Ok(Geodesic {
        base: *p1,
        dir: v_canon,
        orientation,
        sqrt_base: s,
    })
}

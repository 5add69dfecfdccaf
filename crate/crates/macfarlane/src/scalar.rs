//! Scalar coefficients: floating real/complex values and exact elements of a
//! quadratic field ℚ(√−d).

use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;
use num_rational::BigRational;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_traits::{Signed, ToPrimitive, Zero as NumZero};

/// Coefficient field shared by the floating and exact arithmetic modes.
///
/// `conj` is the distinguished conjugation: complex conjugation on ℂ,
/// negation of the √−d part on ℚ(√−d), the identity on ℝ. `embed` maps into
/// ℂ for tolerance predicates and reporting; for exact scalars it is the only
/// lossy operation.
pub trait Scalar:
    Clone
    + PartialEq
    + fmt::Debug
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
{
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn conj(&self) -> Self;
    fn embed(&self) -> Complex64;
    /// Multiplicative inverse, `None` when not invertible.
    fn try_inv(&self) -> Option<Self>;
    /// Exact division by two (all fields here have characteristic 0).
    fn half(&self) -> Self;
    /// True when the element is real: within `tol` for floating scalars,
    /// exact for exact scalars (which ignore `tol`).
    fn is_real(&self, tol: f64) -> bool {
        self.embed().im.abs() <= tol
    }
}

impl Scalar for f64 {
    fn zero() -> Self {
        0.0
    }
    fn one() -> Self {
        1.0
    }
    fn is_zero(&self) -> bool {
        *self == 0.0
    }
    fn conj(&self) -> Self {
        *self
    }
    fn embed(&self) -> Complex64 {
        Complex64::new(*self, 0.0)
    }
    fn try_inv(&self) -> Option<Self> {
        (*self != 0.0).then(|| 1.0 / *self)
    }
    fn half(&self) -> Self {
        0.5 * *self
    }
    fn is_real(&self, _tol: f64) -> bool {
        true
    }
}

impl Scalar for Complex64 {
    fn zero() -> Self {
        Complex64::new(0.0, 0.0)
    }
    fn one() -> Self {
        Complex64::new(1.0, 0.0)
    }
    fn is_zero(&self) -> bool {
        self.re == 0.0 && self.im == 0.0
    }
    fn conj(&self) -> Self {
        Complex64::conj(self)
    }
    fn embed(&self) -> Complex64 {
        *self
    }
    fn try_inv(&self) -> Option<Self> {
        (self.norm_sqr() != 0.0).then(|| self.inv())
    }
    fn half(&self) -> Self {
        0.5 * self
    }
}

/// Exact element u + v√−d of the quadratic field ℚ(√−d), d a positive
/// rational.
///
/// `d` identifies the ambient field and is fixed per context. Elements with
/// v = 0 are plain rationals, live in every ℚ(√−d), and store the neutral
/// marker d = 0; binary operations unify the markers and panic when two
/// distinct nonzero values of d meet, so fields cannot be mixed silently.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QuadExt {
    u: BigRational,
    v: BigRational,
    d: BigRational,
}

impl QuadExt {
    /// u + v√−d. The marker is dropped when v = 0.
    pub fn new(u: BigRational, v: BigRational, d: BigRational) -> Self {
        assert!(!d.is_negative(), "quadratic field parameter d must be >= 0");
        if v.is_zero() {
            Self {
                u,
                v,
                d: BigRational::zero(),
            }
        } else {
            assert!(d.is_positive(), "nonzero radical part requires d > 0");
            Self { u, v, d }
        }
    }

    pub fn from_rational(u: BigRational) -> Self {
        Self::new(u, BigRational::zero(), BigRational::zero())
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(BigRational::from_integer(n.into()))
    }

    /// √−d itself.
    pub fn root_neg_d(d: BigRational) -> Self {
        Self::new(BigRational::zero(), BigRational::from_integer(1.into()), d)
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.u
    }

    pub fn radical_part(&self) -> &BigRational {
        &self.v
    }

    /// The context parameter d, or 0 for plain rationals.
    pub fn field_d(&self) -> &BigRational {
        &self.d
    }

    /// True when the element lies in ℚ (the radical part vanishes).
    pub fn is_rational(&self) -> bool {
        self.v.is_zero()
    }

    fn unify_d(&self, rhs: &Self) -> BigRational {
        if self.v.is_zero() {
            rhs.d.clone()
        } else if rhs.v.is_zero() || self.d == rhs.d {
            self.d.clone()
        } else {
            panic!("mixed quadratic fields: d = {} vs d = {}", self.d, rhs.d)
        }
    }
}

impl Add for QuadExt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let d = self.unify_d(&rhs);
        Self::new(self.u + rhs.u, self.v + rhs.v, d)
    }
}

impl Sub for QuadExt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let d = self.unify_d(&rhs);
        Self::new(self.u - rhs.u, self.v - rhs.v, d)
    }
}

impl Mul for QuadExt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (u1 + v1√−d)(u2 + v2√−d) = u1u2 − d·v1v2 + (u1v2 + v1u2)√−d
        let d = self.unify_d(&rhs);
        let u = &self.u * &rhs.u - &d * &self.v * &rhs.v;
        let v = &self.u * &rhs.v + &self.v * &rhs.u;
        Self::new(u, v, d)
    }
}

impl Neg for QuadExt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.u, -self.v, self.d)
    }
}

impl Scalar for QuadExt {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.u.is_zero() && self.v.is_zero()
    }
    fn conj(&self) -> Self {
        Self::new(self.u.clone(), -self.v.clone(), self.d.clone())
    }
    fn embed(&self) -> Complex64 {
        let u = self.u.to_f64().unwrap_or(f64::NAN);
        if self.v.is_zero() {
            Complex64::new(u, 0.0)
        } else {
            let v = self.v.to_f64().unwrap_or(f64::NAN);
            let d = self.d.to_f64().unwrap_or(f64::NAN);
            Complex64::new(u, v * d.sqrt())
        }
    }
    fn try_inv(&self) -> Option<Self> {
        // (u + v√−d)⁻¹ = (u − v√−d)/(u² + d v²); the denominator is positive
        // definite for d > 0.
        let denom = &self.u * &self.u + &self.d * &self.v * &self.v;
        if denom.is_zero() {
            return None;
        }
        Some(Self::new(
            &self.u / &denom,
            -(&self.v / &denom),
            self.d.clone(),
        ))
    }
    fn half(&self) -> Self {
        let two = BigRational::from_integer(2.into());
        Self::new(&self.u / &two, &self.v / &two, self.d.clone())
    }
    fn is_real(&self, _tol: f64) -> bool {
        self.v.is_zero()
    }
}

impl fmt::Display for QuadExt {
    /// Canonical text form: `3/2`, `1/4r`, `3/2+1/4r`, `3/2-1/4r` with
    /// r = √−d understood from context.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.v.is_zero() {
            return write!(f, "{}", self.u);
        }
        if self.u.is_zero() {
            return write!(f, "{}r", self.v);
        }
        if self.v.is_negative() {
            write!(f, "{}-{}r", self.u, -self.v.clone())
        } else {
            write!(f, "{}+{}r", self.u, self.v)
        }
    }
}

/// Principal-branch arcosh on ℂ: ln(ζ + √(ζ−1)·√(ζ+1)) with principal square
/// roots, normalized so the imaginary part lies in [0, π] (cosh is even, so
/// the sign of the result is free and the nonnegative-imaginary
/// representative is chosen).
pub fn acosh_principal(z: Complex64) -> Complex64 {
    let one = Complex64::new(1.0, 0.0);
    let w = (z + (z - one).sqrt() * (z + one).sqrt()).ln();
    if w.im < 0.0 {
        -w
    } else {
        w
    }
}

//! Generic quaternion algebra (a,b/K): arithmetic on the basis {1, i, j, ij}
//! with i² = a, j² = b, ij = −ji, the standard involution (star), and the
//! second-kind involution (dagger) whose symmetric space is the Minkowski
//! subspace used throughout the geometry modules.

use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::Error;
use crate::scalar::Scalar;

/// Structure constants of the algebra: i² = a, j² = b (both nonzero).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Algebra<S: Scalar> {
    pub a: S,
    pub b: S,
}

impl<S: Scalar> Algebra<S> {
    pub fn new(a: S, b: S) -> Self {
        assert!(!a.is_zero() && !b.is_zero(), "algebra parameters must be nonzero");
        Self { a, b }
    }

    /// The standard parameters a = b = 1.
    pub fn standard() -> Self {
        Self {
            a: S::one(),
            b: S::one(),
        }
    }
}

/// Element w + xi + yj + z·ij of the algebra (a,b/K).
///
/// The classical symbol k denotes the basis element ij here; coefficients are
/// always stored against (1, i, j, ij).
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quaternion<S: Scalar> {
    pub w: S,
    pub x: S,
    pub y: S,
    pub z: S,
    pub alg: Algebra<S>,
}

impl<S: Scalar> Quaternion<S> {
    pub fn new(w: S, x: S, y: S, z: S, alg: Algebra<S>) -> Self {
        Self { w, x, y, z, alg }
    }

    pub fn from_scalar(s: S, alg: Algebra<S>) -> Self {
        Self::new(s, S::zero(), S::zero(), S::zero(), alg)
    }

    pub fn zero(alg: Algebra<S>) -> Self {
        Self::from_scalar(S::zero(), alg)
    }

    pub fn one(alg: Algebra<S>) -> Self {
        Self::from_scalar(S::one(), alg)
    }

    /// Basis element i.
    pub fn i(alg: Algebra<S>) -> Self {
        Self::new(S::zero(), S::one(), S::zero(), S::zero(), alg)
    }

    /// Basis element j.
    pub fn j(alg: Algebra<S>) -> Self {
        Self::new(S::zero(), S::zero(), S::one(), S::zero(), alg)
    }

    /// Basis element ij.
    pub fn ij(alg: Algebra<S>) -> Self {
        Self::new(S::zero(), S::zero(), S::zero(), S::one(), alg)
    }

    pub fn same_algebra(&self, other: &Self) -> bool {
        self.alg == other.alg
    }

    /// Componentwise scalar action.
    pub fn scale(&self, s: S) -> Self {
        Self::new(
            s.clone() * self.w.clone(),
            s.clone() * self.x.clone(),
            s.clone() * self.y.clone(),
            s.clone() * self.z.clone(),
            self.alg.clone(),
        )
    }

    /// Standard involution q* = w − xi − yj − z·ij.
    pub fn star(&self) -> Self {
        Self::new(
            self.w.clone(),
            -self.x.clone(),
            -self.y.clone(),
            -self.z.clone(),
            self.alg.clone(),
        )
    }

    /// Second-kind involution q† = w̄ + x̄i + ȳj − z̄·ij.
    ///
    /// Over a field with trivial conjugation (ℝ) this degenerates to the
    /// plain sign flip on the ij coefficient; with a = b = −1 over ℝ it
    /// coincides with the standard involution.
    pub fn dagger(&self) -> Self {
        Self::new(
            self.w.conj(),
            self.x.conj(),
            self.y.conj(),
            -self.z.conj(),
            self.alg.clone(),
        )
    }

    /// Reduced norm n(q) = qq* = w² − ax² − by² + abz².
    pub fn norm(&self) -> S {
        let a = self.alg.a.clone();
        let b = self.alg.b.clone();
        self.w.clone() * self.w.clone() - a.clone() * self.x.clone() * self.x.clone()
            - b.clone() * self.y.clone() * self.y.clone()
            + a * b * self.z.clone() * self.z.clone()
    }

    /// Reduced trace tr(q) = q + q* = 2w.
    pub fn trace(&self) -> S {
        self.w.clone() + self.w.clone()
    }

    pub fn scalar_part(&self) -> S {
        self.w.clone()
    }

    /// q minus its scalar part.
    pub fn pure_part(&self) -> Self {
        Self::new(
            S::zero(),
            self.x.clone(),
            self.y.clone(),
            self.z.clone(),
            self.alg.clone(),
        )
    }

    /// q⁻¹ = q*/n(q).
    pub fn qinv(&self) -> Result<Self, Error> {
        let n = self.norm();
        let inv = n.try_inv().ok_or(Error::NotInvertible)?;
        Ok(self.star().scale(inv))
    }

    /// Splits q into its dagger-symmetric and dagger-skew parts.
    pub fn sym_skew_split(&self) -> SymSkewPair<S> {
        let dag = self.dagger();
        let sym = (self.clone() + dag.clone()).half();
        let skew = (self.clone() - dag).half();
        SymSkewPair { sym, skew }
    }

    fn half(&self) -> Self {
        Self::new(
            self.w.half(),
            self.x.half(),
            self.y.half(),
            self.z.half(),
            self.alg.clone(),
        )
    }

    /// Coefficients embedded into ℂ, algebra parameters included.
    pub fn embed(&self) -> Quaternion<Complex64> {
        Quaternion::new(
            self.w.embed(),
            self.x.embed(),
            self.y.embed(),
            self.z.embed(),
            Algebra::new(self.alg.a.embed(), self.alg.b.embed()),
        )
    }

    /// Largest componentwise distance to `other` after embedding into ℂ.
    pub fn inf_dist(&self, other: &Self) -> f64 {
        let p = self.embed();
        let q = other.embed();
        let mut m: f64 = 0.0;
        for (s, t) in [
            (p.w, q.w),
            (p.x, q.x),
            (p.y, q.y),
            (p.z, q.z),
        ] {
            m = m.max((s.re - t.re).abs()).max((s.im - t.im).abs());
        }
        m
    }

    /// Largest componentwise magnitude after embedding into ℂ.
    pub fn inf_norm(&self) -> f64 {
        self.inf_dist(&Self::zero(self.alg.clone()))
    }
}

/// Dagger-symmetric and dagger-skew parts of a quaternion.
#[derive(Debug, Clone, PartialEq)]
pub struct SymSkewPair<S: Scalar> {
    pub sym: Quaternion<S>,
    pub skew: Quaternion<S>,
}

impl<S: Scalar> Add for Quaternion<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        assert!(self.same_algebra(&rhs), "algebra mismatch");
        Self::new(
            self.w + rhs.w,
            self.x + rhs.x,
            self.y + rhs.y,
            self.z + rhs.z,
            self.alg,
        )
    }
}

impl<S: Scalar> Sub for Quaternion<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        assert!(self.same_algebra(&rhs), "algebra mismatch");
        Self::new(
            self.w - rhs.w,
            self.x - rhs.x,
            self.y - rhs.y,
            self.z - rhs.z,
            self.alg,
        )
    }
}

impl<S: Scalar> Neg for Quaternion<S> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.w, -self.x, -self.y, -self.z, self.alg)
    }
}

impl<S: Scalar> Mul for Quaternion<S> {
    type Output = Self;
    /// Product from i² = a, j² = b, ij = −ji. Panics on mixed algebras; use
    /// [`qmul`] for a checked product.
    fn mul(self, rhs: Self) -> Self {
        assert!(self.same_algebra(&rhs), "algebra mismatch");
        let a = self.alg.a.clone();
        let b = self.alg.b.clone();
        let (w1, x1, y1, z1) = (self.w, self.x, self.y, self.z);
        let (w2, x2, y2, z2) = (rhs.w, rhs.x, rhs.y, rhs.z);
        let w = w1.clone() * w2.clone()
            + a.clone() * x1.clone() * x2.clone()
            + b.clone() * y1.clone() * y2.clone()
            - a.clone() * b.clone() * z1.clone() * z2.clone();
        let x = w1.clone() * x2.clone() + x1.clone() * w2.clone()
            - b.clone() * y1.clone() * z2.clone()
            + b.clone() * z1.clone() * y2.clone();
        let y = w1.clone() * y2.clone() + y1.clone() * w2.clone()
            + a.clone() * x1.clone() * z2.clone()
            - a * z1.clone() * x2.clone();
        let z = w1 * z2 + z1 * w2.clone() + x1 * y2 - y1 * x2;
        Self::new(w, x, y, z, self.alg)
    }
}

/// Checked product: errors on mixed algebras instead of panicking.
pub fn qmul<S: Scalar>(p: &Quaternion<S>, q: &Quaternion<S>) -> Result<Quaternion<S>, Error> {
    if !p.same_algebra(q) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(p.clone() * q.clone())
}

/// [p,q] = pq − qp.
pub fn commutator<S: Scalar>(p: &Quaternion<S>, q: &Quaternion<S>) -> Result<Quaternion<S>, Error> {
    if !p.same_algebra(q) {
        return Err(Error::AlgebraMismatch);
    }
    Ok(p.clone() * q.clone() - q.clone() * p.clone())
}

/// Quaternion over ℂ, the scalar field of the standard algebra (1,1/ℂ).
pub type CQuat = Quaternion<Complex64>;

impl CQuat {
    /// Standard algebra over ℂ with a = b = 1.
    pub fn standard_algebra() -> Algebra<Complex64> {
        Algebra::standard()
    }

    /// Convenience constructor over the standard algebra from 8 real parts.
    #[allow(clippy::too_many_arguments)]
    pub fn from_reals(
        wr: f64,
        wi: f64,
        xr: f64,
        xi: f64,
        yr: f64,
        yi: f64,
        zr: f64,
        zi: f64,
    ) -> Self {
        Self::new(
            Complex64::new(wr, wi),
            Complex64::new(xr, xi),
            Complex64::new(yr, yi),
            Complex64::new(zr, zi),
            Self::standard_algebra(),
        )
    }
}

//! Exact-arithmetic Macfarlane structure on a general algebra (a,b / ℚ(√−d)).
//!
//! For positive rationals a, b, d the quaternion algebra over the imaginary
//! quadratic field ℚ(√−d) carries the same picture as the standard case
//! a = b = d = 1: the dagger involution w̄ + x̄i + ȳj − z̄ij has a symmetric
//! subspace ℚ ⊕ ℚi ⊕ ℚj ⊕ √−d ℚij on which the reduced norm restricts to a
//! quadratic form of signature (1,3), and unit quaternions act on its
//! norm-one, positive-trace sheet by p ↦ u p u†. Everything in this module
//! is computed exactly over the rationals — no floating point enters unless
//! a value is explicitly embedded into ℂ for comparison with the numeric
//! code paths.
//!
//! The 2×2 image of such an algebra needs the auxiliary radicals √a, √b,
//! beyond the √−d already present in the scalars, so its entries live in the
//! fixed eight-dimensional extension record [`ExtScalar`] rather than in a
//! general field tower.

use crate::error::Error;
use crate::mat::Mat2;
use crate::quat::{Algebra, Quaternion};
use crate::scalar::{QuadExt, Scalar};
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
#[cfg(not(feature = "std"))]
use num_traits::Float;
use num_traits::{One, Signed, ToPrimitive, Zero};

/// Quaternion with coefficients in the imaginary quadratic field ℚ(√−d).
pub type GenQuat = Quaternion<QuadExt>;

fn big(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

// ---------------------------------------------------------------------------
// ExtScalar: the fixed extension ℚ(√a, √b, √−d) as an 8-coordinate record
// ---------------------------------------------------------------------------

/// Element of ℚ(√a, √b, √−d), stored as eight rational coordinates.
///
/// Coordinate `idx` multiplies the square-root monomial selected by the bits
/// of `idx`: bit 0 contributes a factor √a, bit 1 a factor √b, bit 2 a factor
/// √−d, so index 5 = 0b101 is the coefficient of √a·√−d. The parameters are
/// carried alongside the coordinates as markers; a marker is stored as 0
/// while no coordinate touches it, and binary operations refuse to merge two
/// distinct nonzero values of the same parameter, so elements of different
/// extensions cannot be combined silently.
///
/// The parameters may be negative (the classical Hamilton case a = b = −1 is
/// used to cross-check the involution transport), in which case the
/// corresponding square roots embed as imaginary numbers and conjugation
/// negates their coordinates.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExtScalar {
    c: [BigRational; 8],
    a: BigRational,
    b: BigRational,
    d: BigRational,
}

impl ExtScalar {
    fn zero_coords() -> [BigRational; 8] {
        core::array::from_fn(|_| BigRational::zero())
    }

    /// A plain rational, living in every extension.
    pub fn from_rational(r: BigRational) -> Self {
        let mut c = Self::zero_coords();
        c[0] = r;
        Self {
            c,
            a: BigRational::zero(),
            b: BigRational::zero(),
            d: BigRational::zero(),
        }
        .normalized()
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(big(n))
    }

    /// coeff · (√a)^α (√b)^β (√−d)^γ where (α,β,γ) are the bits of `idx`.
    ///
    /// Panics when `idx` selects a radical whose parameter is zero: every
    /// nonzero coordinate must have a definite parameter behind it.
    pub fn monomial(
        idx: usize,
        coeff: BigRational,
        a: &BigRational,
        b: &BigRational,
        d: &BigRational,
    ) -> Self {
        assert!(idx < 8, "monomial index out of range");
        if !coeff.is_zero() {
            assert!(idx & 1 == 0 || !a.is_zero(), "monomial uses √a but a = 0");
            assert!(idx & 2 == 0 || !b.is_zero(), "monomial uses √b but b = 0");
            assert!(idx & 4 == 0 || !d.is_zero(), "monomial uses √-d but d = 0");
        }
        let mut c = Self::zero_coords();
        c[idx] = coeff;
        Self {
            c,
            a: a.clone(),
            b: b.clone(),
            d: d.clone(),
        }
        .normalized()
    }

    pub fn coords(&self) -> &[BigRational; 8] {
        &self.c
    }

    /// The parameter markers (a, b, d); a marker reads 0 while unused.
    pub fn params(&self) -> (&BigRational, &BigRational, &BigRational) {
        (&self.a, &self.b, &self.d)
    }

    fn normalized(mut self) -> Self {
        let used = |bit: usize, c: &[BigRational; 8]| {
            c.iter().enumerate().any(|(i, v)| i & bit != 0 && !v.is_zero())
        };
        if !used(1, &self.c) {
            self.a = BigRational::zero();
        }
        if !used(2, &self.c) {
            self.b = BigRational::zero();
        }
        if !used(4, &self.c) {
            self.d = BigRational::zero();
        }
        self
    }

    fn unify(x: &BigRational, y: &BigRational, what: &str) -> BigRational {
        if x.is_zero() {
            y.clone()
        } else if y.is_zero() || x == y {
            x.clone()
        } else {
            panic!("mixed extension parameters: {what} = {x} vs {what} = {y}")
        }
    }

    fn unify_params(&self, rhs: &Self) -> (BigRational, BigRational, BigRational) {
        (
            Self::unify(&self.a, &rhs.a, "a"),
            Self::unify(&self.b, &rhs.b, "b"),
            Self::unify(&self.d, &rhs.d, "d"),
        )
    }

    /// Number of imaginary square-root factors in the monomial at `idx`.
    fn imaginary_factors(&self, idx: usize) -> u32 {
        let mut n = 0;
        if idx & 1 != 0 && self.a.is_negative() {
            n += 1;
        }
        if idx & 2 != 0 && self.b.is_negative() {
            n += 1;
        }
        if idx & 4 != 0 {
            n += 1;
        }
        n
    }
}

impl Add for ExtScalar {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let (a, b, d) = self.unify_params(&rhs);
        let c = core::array::from_fn(|k| &self.c[k] + &rhs.c[k]);
        Self { c, a, b, d }.normalized()
    }
}

impl Sub for ExtScalar {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let (a, b, d) = self.unify_params(&rhs);
        let c = core::array::from_fn(|k| &self.c[k] - &rhs.c[k]);
        Self { c, a, b, d }.normalized()
    }
}

impl Neg for ExtScalar {
    type Output = Self;
    fn neg(self) -> Self {
        let c = core::array::from_fn(|k| -self.c[k].clone());
        Self {
            c,
            a: self.a,
            b: self.b,
            d: self.d,
        }
    }
}

impl Mul for ExtScalar {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let (a, b, d) = self.unify_params(&rhs);
        let mut c = Self::zero_coords();
        for i1 in 0..8 {
            if self.c[i1].is_zero() {
                continue;
            }
            for i2 in 0..8 {
                if rhs.c[i2].is_zero() {
                    continue;
                }
                // A radical shared by both factors squares away: √a·√a = a,
                // √b·√b = b, √−d·√−d = −d. The surviving radicals are the
                // symmetric difference of the two bit patterns.
                let mut term = &self.c[i1] * &rhs.c[i2];
                let shared = i1 & i2;
                if shared & 1 != 0 {
                    term = term * &a;
                }
                if shared & 2 != 0 {
                    term = term * &b;
                }
                if shared & 4 != 0 {
                    term = -(term * &d);
                }
                c[i1 ^ i2] = &c[i1 ^ i2] + &term;
            }
        }
        Self { c, a, b, d }.normalized()
    }
}

impl Scalar for ExtScalar {
    fn zero() -> Self {
        Self::from_int(0)
    }
    fn one() -> Self {
        Self::from_int(1)
    }
    fn is_zero(&self) -> bool {
        self.c.iter().all(|v| v.is_zero())
    }
    fn conj(&self) -> Self {
        // Complex conjugation in the embedding: √−d is always imaginary, and
        // √a, √b are imaginary exactly when a, b are negative. A monomial
        // flips sign iff it contains an odd number of imaginary factors.
        let mut out = self.clone();
        for (idx, v) in out.c.iter_mut().enumerate() {
            if self.imaginary_factors(idx) % 2 == 1 {
                *v = -v.clone();
            }
        }
        out
    }
    fn embed(&self) -> Complex64 {
        let root = |t: f64| {
            if t >= 0.0 {
                Complex64::new(t.sqrt(), 0.0)
            } else {
                Complex64::new(0.0, (-t).sqrt())
            }
        };
        let ra = root(self.a.to_f64().unwrap_or(f64::NAN));
        let rb = root(self.b.to_f64().unwrap_or(f64::NAN));
        let rd = root(-self.d.to_f64().unwrap_or(f64::NAN));
        let mut acc = Complex64::new(0.0, 0.0);
        for (idx, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            let mut m = Complex64::new(v.to_f64().unwrap_or(f64::NAN), 0.0);
            if idx & 1 != 0 {
                m *= ra;
            }
            if idx & 2 != 0 {
                m *= rb;
            }
            if idx & 4 != 0 {
                m *= rd;
            }
            acc += m;
        }
        acc
    }
    fn try_inv(&self) -> Option<Self> {
        // Inversion is provided for monomials only — the single shape the
        // 2×2 image ever needs. (c·m)⁻¹ = m / (c·m·m), and m·m folds back to
        // the rational a^α b^β (−d)^γ.
        let mut support = self.c.iter().enumerate().filter(|(_, v)| !v.is_zero());
        let (idx, coeff) = support.next()?;
        if support.next().is_some() {
            return None;
        }
        let mut denom = coeff.clone();
        if idx & 1 != 0 {
            denom = denom * &self.a;
        }
        if idx & 2 != 0 {
            denom = denom * &self.b;
        }
        if idx & 4 != 0 {
            denom = -(denom * &self.d);
        }
        if denom.is_zero() {
            return None;
        }
        let mut c = Self::zero_coords();
        c[idx] = denom.recip();
        Some(
            Self {
                c,
                a: self.a.clone(),
                b: self.b.clone(),
                d: self.d.clone(),
            }
            .normalized(),
        )
    }
    fn half(&self) -> Self {
        let two = big(2);
        let c = core::array::from_fn(|k| &self.c[k] / &two);
        Self {
            c,
            a: self.a.clone(),
            b: self.b.clone(),
            d: self.d.clone(),
        }
    }
    fn is_real(&self, _tol: f64) -> bool {
        self.c
            .iter()
            .enumerate()
            .all(|(idx, v)| v.is_zero() || self.imaginary_factors(idx) % 2 == 0)
    }
}

impl fmt::Display for ExtScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        const LABELS: [&str; 8] = [
            "", "√a", "√b", "√a√b", "√-d", "√a√-d", "√b√-d", "√a√b√-d",
        ];
        let mut wrote = false;
        for (idx, v) in self.c.iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if wrote {
                f.write_str(if v.is_negative() { " - " } else { " + " })?;
            } else if v.is_negative() {
                f.write_str("-")?;
            }
            let abs = v.abs();
            if LABELS[idx].is_empty() {
                write!(f, "{abs}")?;
            } else if abs.is_one() {
                write!(f, "{}", LABELS[idx])?;
            } else {
                write!(f, "{abs}{}", LABELS[idx])?;
            }
            wrote = true;
        }
        if !wrote {
            write!(f, "0")?;
        }
        Ok(())
    }
}

// ---------------------------------------------------------------------------
// The algebra context and its hyperboloid
// ---------------------------------------------------------------------------

/// A quaternion algebra (a,b / ℚ(√−d)) with a, b, d positive rationals.
///
/// The context owns the parameters and hands out coefficients, quaternions,
/// points and the group action; it is immutable after construction and safe
/// to share across threads.
#[derive(Debug, Clone, PartialEq)]
pub struct GenAlgebraContext {
    a: BigRational,
    b: BigRational,
    d: BigRational,
    alg: Algebra<QuadExt>,
}

/// Point of the exact hyperboloid: dagger-symmetric, norm exactly 1 and
/// positive trace. Built through [`GenAlgebraContext::point`], which checks
/// all three conditions with rational arithmetic.
#[derive(Debug, Clone, PartialEq)]
pub struct GenMacPoint {
    q: GenQuat,
}

impl GenMacPoint {
    pub fn quat(&self) -> &GenQuat {
        &self.q
    }

    pub fn into_quat(self) -> GenQuat {
        self.q
    }
}

impl GenAlgebraContext {
    /// Requires a, b, d > 0; anything else leaves the hyperboloid picture
    /// (the restricted norm form would no longer have signature (1,3)).
    pub fn new(a: BigRational, b: BigRational, d: BigRational) -> Result<Self, Error> {
        if !a.is_positive() || !b.is_positive() || !d.is_positive() {
            return Err(Error::Domain("algebra parameters a, b, d must be positive"));
        }
        let alg = Algebra::new(
            QuadExt::from_rational(a.clone()),
            QuadExt::from_rational(b.clone()),
        );
        Ok(Self { a, b, d, alg })
    }

    pub fn from_i64(a: i64, b: i64, d: i64) -> Result<Self, Error> {
        Self::new(big(a), big(b), big(d))
    }

    pub fn a(&self) -> &BigRational {
        &self.a
    }

    pub fn b(&self) -> &BigRational {
        &self.b
    }

    pub fn d(&self) -> &BigRational {
        &self.d
    }

    pub fn algebra(&self) -> &Algebra<QuadExt> {
        &self.alg
    }

    /// The coefficient u + v√−d in this context's scalar field.
    pub fn scalar(&self, u: BigRational, v: BigRational) -> QuadExt {
        if v.is_zero() {
            QuadExt::from_rational(u)
        } else {
            QuadExt::new(u, v, self.d.clone())
        }
    }

    pub fn quat(&self, w: QuadExt, x: QuadExt, y: QuadExt, z: QuadExt) -> GenQuat {
        Quaternion::new(w, x, y, z, self.alg.clone())
    }

    /// Membership in the dagger-symmetric subspace, checked exactly.
    ///
    /// q† = q forces w, x, y into ℚ and z into √−d·ℚ, which is the
    /// coefficient lattice ℚ ⊕ ℚi ⊕ ℚj ⊕ √−d ℚij.
    pub fn in_m(&self, q: &GenQuat) -> bool {
        q.dagger() == *q
    }

    /// Signature of the norm form restricted to the symmetric subspace.
    ///
    /// On its basis 1, i, j, √−d·ij the form diagonalizes as
    /// (1, −a, −b, −abd), so positive parameters always give (1,3).
    pub fn signature(&self) -> (usize, usize) {
        let diag = [
            BigRational::one(),
            -self.a.clone(),
            -self.b.clone(),
            -(&self.a * &self.b * &self.d),
        ];
        signature_of(&diag)
    }

    /// The basepoint 1 of the hyperboloid.
    pub fn one_point(&self) -> GenMacPoint {
        GenMacPoint {
            q: Quaternion::one(self.alg.clone()),
        }
    }

    /// Validates dagger symmetry, unit norm and positive trace, all exactly.
    pub fn point(&self, q: GenQuat) -> Result<GenMacPoint, Error> {
        if !q.same_algebra(&Quaternion::one(self.alg.clone())) {
            return Err(Error::AlgebraMismatch);
        }
        if !self.in_m(&q) {
            return Err(Error::InvalidPoint("point is not dagger-symmetric"));
        }
        if q.norm() != QuadExt::one() {
            return Err(Error::InvalidPoint("point norm is not exactly 1"));
        }
        // Dagger symmetry puts the trace in ℚ, so positivity is a rational
        // comparison — no real embedding is needed.
        if !q.trace().rational_part().is_positive() {
            return Err(Error::InvalidPoint("point trace must be positive"));
        }
        Ok(GenMacPoint { q })
    }

    /// The action p ↦ u p u† of a unit quaternion, computed exactly.
    ///
    /// Closure is a theorem: the image is dagger-symmetric because
    /// (upu†)† = upu†, has norm n(u)·n(p)·n(u)‾ = 1, and keeps a positive
    /// trace; the final validation only guards against internal bugs.
    pub fn act(&self, u: &GenQuat, p: &GenMacPoint) -> Result<GenMacPoint, Error> {
        if u.norm() != QuadExt::one() {
            return Err(Error::Domain("acting quaternion must have norm exactly 1"));
        }
        let image = u.clone() * p.q.clone() * u.dagger();
        Ok(self
            .point(image)
            .expect("conjugation by a unit preserves the hyperboloid"))
    }

    /// A norm-1 quaternion built from any h with n(h) ≠ 0, without square
    /// roots: h²/n(h) has norm n(h)²/n(h)² = 1.
    pub fn unit_from(&self, h: &GenQuat) -> Option<GenQuat> {
        let inv = h.norm().try_inv()?;
        Some((h.clone() * h.clone()).scale(inv))
    }

    /// A hyperboloid point built from a dagger-symmetric h with n(h) ≠ 0:
    /// p = 1 − (tr h / n h)·h satisfies n(p) = 1 − tr²/n + tr²/n = 1
    /// exactly, and the sign of p is then fixed by the trace condition.
    pub fn point_from(&self, h: &GenQuat) -> Option<GenMacPoint> {
        if !self.in_m(h) {
            return None;
        }
        let lambda = h.trace() * h.norm().try_inv()?;
        let candidate = Quaternion::one(self.alg.clone()) - h.clone().scale(lambda);
        let oriented = if candidate.trace().rational_part().is_positive() {
            candidate
        } else {
            -candidate
        };
        self.point(oriented).ok()
    }
}

fn signature_of(diag: &[BigRational]) -> (usize, usize) {
    let pos = diag.iter().filter(|v| v.is_positive()).count();
    let neg = diag.iter().filter(|v| v.is_negative()).count();
    (pos, neg)
}

// ---------------------------------------------------------------------------
// The symbolic 2×2 image
// ---------------------------------------------------------------------------

/// Exact 2×2 image of a quaternion whose algebra parameters are rational:
///
/// ```text
/// ( w − x√a    y√b − z√a√b )
/// ( y√b + z√a√b    w + x√a )
/// ```
///
/// The entries live in [`ExtScalar`] so the map is an exact algebra
/// homomorphism: images multiply, the determinant is the norm, the matrix
/// trace is the quaternion trace, and the dagger goes to the conjugate
/// transpose. It is injective — the pullback below recovers the quaternion.
pub fn symbolic_rho(q: &GenQuat) -> Result<Mat2<ExtScalar>, Error> {
    if !q.alg.a.is_rational() || !q.alg.b.is_rational() {
        return Err(Error::UnsupportedRepresentation(
            "symbolic 2x2 image requires rational algebra parameters",
        ));
    }
    let a = q.alg.a.rational_part().clone();
    let b = q.alg.b.rational_part().clone();
    let d = [&q.w, &q.x, &q.y, &q.z]
        .iter()
        .map(|c| c.field_d())
        .find(|d| !d.is_zero())
        .cloned()
        .unwrap_or_else(BigRational::zero);

    // A coefficient u + v√−d lands on the monomial pair (bits, bits|4).
    let place = |coeff: &QuadExt, bits: usize, negate: bool| {
        let (mut u, mut v) = (coeff.rational_part().clone(), coeff.radical_part().clone());
        if negate {
            u = -u;
            v = -v;
        }
        ExtScalar::monomial(bits, u, &a, &b, &d) + ExtScalar::monomial(bits | 4, v, &a, &b, &d)
    };
    Ok(Mat2::new(
        place(&q.w, 0, false) + place(&q.x, 1, true),
        place(&q.y, 2, false) + place(&q.z, 3, true),
        place(&q.y, 2, false) + place(&q.z, 3, false),
        place(&q.w, 0, false) + place(&q.x, 1, false),
    ))
}

/// Inverse of [`symbolic_rho`] on its image.
///
/// Solves the linear system entry by entry — w from half the matrix trace,
/// x from half the difference of the diagonal, y and z from the off-diagonal
/// sum and difference — and rejects any matrix carrying coordinates outside
/// the embedded copy of the algebra (such matrices are not images of any
/// quaternion, which is exactly the injectivity statement).
pub fn symbolic_rho_pullback(
    m: &Mat2<ExtScalar>,
    alg: &Algebra<QuadExt>,
) -> Result<GenQuat, Error> {
    let w = extract(&(m.e[0][0].clone() + m.e[1][1].clone()).half(), 0)?;
    let x = extract(&(m.e[1][1].clone() - m.e[0][0].clone()).half(), 1)?;
    let y = extract(&(m.e[0][1].clone() + m.e[1][0].clone()).half(), 2)?;
    let z = extract(&(m.e[1][0].clone() - m.e[0][1].clone()).half(), 3)?;
    Ok(Quaternion::new(w, x, y, z, alg.clone()))
}

/// Reads a coefficient u + v√−d off the monomial pair (bits, bits|4),
/// requiring every other coordinate to vanish.
fn extract(e: &ExtScalar, bits: usize) -> Result<QuadExt, Error> {
    for (idx, v) in e.coords().iter().enumerate() {
        if idx != bits && idx != (bits | 4) && !v.is_zero() {
            return Err(Error::UnsupportedRepresentation(
                "matrix does not lie in the image of the quaternion embedding",
            ));
        }
    }
    let u = e.coords()[bits].clone();
    let v = e.coords()[bits | 4].clone();
    let d = if v.is_zero() {
        BigRational::zero()
    } else {
        e.params().2.clone()
    };
    Ok(QuadExt::new(u, v, d))
}

// ---------------------------------------------------------------------------
// Uniqueness of the dagger among sign involutions
// ---------------------------------------------------------------------------

/// One of the sixteen candidate maps θ(q) = ε₀w̄ + ε₁x̄·i + ε₂ȳ·j + ε₃z̄·ij,
/// a sign pattern composed with coefficient conjugation, together with the
/// two facts that single out the dagger: whether θ satisfies the involution
/// axioms, and the signature of the norm form on the subspace θ fixes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct InvolutionCandidate {
    /// (ε₀, ε₁, ε₂, ε₃), each ±1.
    pub signs: [i8; 4],
    /// θ(1) = 1, θ∘θ = id and θ(pq) = θ(q)θ(p), all checked exactly on the
    /// eight-element ℚ-basis {1, i, j, ij, √−d, √−d·i, √−d·j, √−d·ij}.
    pub is_involution: bool,
    /// Signature of the norm form restricted to the fixed subspace of θ:
    /// coordinate direction k contributes n(e_k) when ε_k = +1 and
    /// −d·n(e_k) when ε_k = −1 (the fixed coefficients being √−d·ℚ there).
    pub signature: (usize, usize),
}

/// θ(q) = ε₀w̄ + ε₁x̄·i + ε₂ȳ·j + ε₃z̄·ij for a sign pattern ε.
pub fn apply_sign_involution(q: &GenQuat, signs: [i8; 4]) -> GenQuat {
    let signed = |c: &QuadExt, s: i8| {
        if s >= 0 {
            c.conj()
        } else {
            -c.conj()
        }
    };
    Quaternion::new(
        signed(&q.w, signs[0]),
        signed(&q.x, signs[1]),
        signed(&q.y, signs[2]),
        signed(&q.z, signs[3]),
        q.alg.clone(),
    )
}

/// Examines all 16 sign patterns and reports, for each, whether it is an
/// involution of the algebra and what signature its fixed subspace carries.
///
/// Exactly four patterns pass the involution axioms (ε₀ = +1 and
/// ε₃ = −ε₁ε₂, which the anti-multiplicativity check enforces), and among
/// those only (+,+,+,−) — the dagger — has a fixed space of signature (1,3).
pub fn enumerate_sign_involutions(ctx: &GenAlgebraContext) -> Vec<InvolutionCandidate> {
    let alg = ctx.algebra().clone();
    let one = Quaternion::one(alg.clone());

    // ℚ-basis of the algebra: {1, i, j, ij} and their √−d multiples.
    let mut basis: Vec<GenQuat> = Vec::with_capacity(8);
    for s in [QuadExt::one(), QuadExt::root_neg_d(ctx.d().clone())] {
        let z = QuadExt::zero();
        basis.push(ctx.quat(s.clone(), z.clone(), z.clone(), z.clone()));
        basis.push(ctx.quat(z.clone(), s.clone(), z.clone(), z.clone()));
        basis.push(ctx.quat(z.clone(), z.clone(), s.clone(), z.clone()));
        basis.push(ctx.quat(z.clone(), z.clone(), z.clone(), s.clone()));
    }

    let base_diag = [
        BigRational::one(),
        -ctx.a().clone(),
        -ctx.b().clone(),
        ctx.a() * ctx.b(),
    ];

    let mut out = Vec::with_capacity(16);
    for mask in 0..16u8 {
        let sign = |bit: u8| if mask & bit == 0 { 1i8 } else { -1i8 };
        let signs = [sign(1), sign(2), sign(4), sign(8)];
        let theta = |q: &GenQuat| apply_sign_involution(q, signs);

        let mut ok = theta(&one) == one;
        for e in &basis {
            ok = ok && theta(&theta(e)) == *e;
        }
        for p in &basis {
            for q in &basis {
                ok = ok && theta(&(p.clone() * q.clone())) == theta(q) * theta(p);
            }
        }

        let diag: Vec<BigRational> = base_diag
            .iter()
            .zip(signs)
            .map(|(n_k, s)| {
                if s > 0 {
                    n_k.clone()
                } else {
                    -(n_k * ctx.d())
                }
            })
            .collect();

        out.push(InvolutionCandidate {
            signs,
            is_involution: ok,
            signature: signature_of(&diag),
        });
    }
    out
}

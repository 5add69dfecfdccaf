//! 2×2 matrices over a scalar field, and the representations ρ (standard
//! algebra) and ρ_B (general parameters via embedded square roots).

use core::ops::{Add, Mul, Neg, Sub};

use num_complex::Complex64;

use crate::error::Error;
use crate::quat::{Algebra, CQuat, Quaternion};
use crate::scalar::Scalar;

/// Row-major 2×2 matrix.
#[derive(Debug, Clone, PartialEq)]
pub struct Mat2<S: Scalar> {
    pub e: [[S; 2]; 2],
}

impl<S: Scalar> Mat2<S> {
    pub fn new(e00: S, e01: S, e10: S, e11: S) -> Self {
        Self {
            e: [[e00, e01], [e10, e11]],
        }
    }

    pub fn identity() -> Self {
        Self::new(S::one(), S::zero(), S::zero(), S::one())
    }

    pub fn det(&self) -> S {
        self.e[0][0].clone() * self.e[1][1].clone() - self.e[0][1].clone() * self.e[1][0].clone()
    }

    /// Matrix trace (named to avoid colliding with the quaternion trace).
    pub fn mtr(&self) -> S {
        self.e[0][0].clone() + self.e[1][1].clone()
    }

    /// Entrywise conjugate, transposed.
    pub fn conj_transpose(&self) -> Self {
        Self::new(
            self.e[0][0].conj(),
            self.e[1][0].conj(),
            self.e[0][1].conj(),
            self.e[1][1].conj(),
        )
    }

    pub fn scale(&self, s: &S) -> Self {
        Self::new(
            s.clone() * self.e[0][0].clone(),
            s.clone() * self.e[0][1].clone(),
            s.clone() * self.e[1][0].clone(),
            s.clone() * self.e[1][1].clone(),
        )
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|row| row.iter().all(S::is_zero))
    }

    /// Largest componentwise distance to `other` after embedding into ℂ.
    pub fn inf_dist(&self, other: &Self) -> f64 {
        let mut m: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let d = self.e[r][c].embed() - other.e[r][c].embed();
                m = m.max(d.re.abs()).max(d.im.abs());
            }
        }
        m
    }

    pub fn inf_norm(&self) -> f64 {
        let mut m: f64 = 0.0;
        for r in 0..2 {
            for c in 0..2 {
                let v = self.e[r][c].embed();
                m = m.max(v.re.abs()).max(v.im.abs());
            }
        }
        m
    }
}

impl<S: Scalar> Add for Mat2<S> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        let [[a00, a01], [a10, a11]] = self.e;
        let [[b00, b01], [b10, b11]] = rhs.e;
        Self::new(a00 + b00, a01 + b01, a10 + b10, a11 + b11)
    }
}

impl<S: Scalar> Sub for Mat2<S> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        let [[a00, a01], [a10, a11]] = self.e;
        let [[b00, b01], [b10, b11]] = rhs.e;
        Self::new(a00 - b00, a01 - b01, a10 - b10, a11 - b11)
    }
}

impl<S: Scalar> Neg for Mat2<S> {
    type Output = Self;
    fn neg(self) -> Self {
        let [[a00, a01], [a10, a11]] = self.e;
        Self::new(-a00, -a01, -a10, -a11)
    }
}

impl<S: Scalar> Mul for Mat2<S> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let a = &self.e;
        let b = &rhs.e;
        Self::new(
            a[0][0].clone() * b[0][0].clone() + a[0][1].clone() * b[1][0].clone(),
            a[0][0].clone() * b[0][1].clone() + a[0][1].clone() * b[1][1].clone(),
            a[1][0].clone() * b[0][0].clone() + a[1][1].clone() * b[1][0].clone(),
            a[1][0].clone() * b[0][1].clone() + a[1][1].clone() * b[1][1].clone(),
        )
    }
}

/// ρ for the standard algebra (1,1/ℂ):
/// w + xi + yj + z·ij ↦ [[w−x, y−z], [y+z, w+x]].
///
/// Bijective ℂ-algebra isomorphism onto M₂(ℂ); det transports the norm, the
/// matrix trace transports the trace, and conjugate-transpose transports the
/// dagger.
pub fn rho(q: &CQuat) -> Result<Mat2<Complex64>, Error> {
    let one = Complex64::new(1.0, 0.0);
    if q.alg.a != one || q.alg.b != one {
        return Err(Error::UnsupportedRepresentation(
            "rho requires algebra parameters a = b = 1",
        ));
    }
    Ok(Mat2::new(q.w - q.x, q.y - q.z, q.y + q.z, q.w + q.x))
}

/// Inverse of [`rho`]: [[e00, e01], [e10, e11]] ↦
/// ((e00+e11)/2, (e11−e00)/2, (e01+e10)/2, (e10−e01)/2).
pub fn rho_inv(m: &Mat2<Complex64>) -> CQuat {
    let h = Complex64::new(0.5, 0.0);
    CQuat::new(
        (m.e[0][0] + m.e[1][1]) * h,
        (m.e[1][1] - m.e[0][0]) * h,
        (m.e[0][1] + m.e[1][0]) * h,
        (m.e[1][0] - m.e[0][1]) * h,
        CQuat::standard_algebra(),
    )
}

/// Square roots of the algebra parameters, fixed once per algebra so that
/// ρ_B is a single consistent homomorphism.
///
/// `sqrt_ab` is defined as `sqrt_a·sqrt_b` (not the principal root of ab),
/// which is what multiplicativity of the representation requires.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RhoEmbedding {
    pub sqrt_a: Complex64,
    pub sqrt_b: Complex64,
    pub sqrt_ab: Complex64,
}

impl RhoEmbedding {
    pub fn new<S: Scalar>(alg: &Algebra<S>) -> Self {
        let sqrt_a = alg.a.embed().sqrt();
        let sqrt_b = alg.b.embed().sqrt();
        Self {
            sqrt_a,
            sqrt_b,
            sqrt_ab: sqrt_a * sqrt_b,
        }
    }
}

/// ρ_B for general parameters:
/// w + xi + yj + z·ij ↦ [[w−x√a, y√b−z√ab], [y√b+z√ab, w+x√a]].
///
/// Coefficients are embedded into ℂ; the square roots come from a fixed
/// [`RhoEmbedding`]. For a = b = 1 this specializes to [`rho`].
pub fn rho_general<S: Scalar>(q: &Quaternion<S>, emb: &RhoEmbedding) -> Mat2<Complex64> {
    let w = q.w.embed();
    let x = q.x.embed();
    let y = q.y.embed();
    let z = q.z.embed();
    Mat2::new(
        w - x * emb.sqrt_a,
        y * emb.sqrt_b - z * emb.sqrt_ab,
        y * emb.sqrt_b + z * emb.sqrt_ab,
        w + x * emb.sqrt_a,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> Complex64 {
        Complex64::new(re, im)
    }

    fn q_rand(seed: f64) -> CQuat {
        // aperiodic but deterministic coefficients for spot checks
        CQuat::from_reals(
            (seed * 1.1).sin(),
            (seed * 2.3).cos(),
            (seed * 0.7).sin() * 2.0,
            (seed * 1.9).cos() * 0.5,
            (seed * 3.1).sin() - 0.4,
            (seed * 0.3).cos() + 0.2,
            (seed * 2.7).sin() * 1.5,
            (seed * 1.3).cos() * 0.8,
        )
    }

    #[test]
    fn rho_basis_images() {
        let alg = CQuat::standard_algebra();
        assert_eq!(
            rho(&CQuat::i(alg)).unwrap(),
            Mat2::new(c(-1.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(1.0, 0.0))
        );
        assert_eq!(rho(&CQuat::one(alg)).unwrap(), Mat2::identity());
        assert_eq!(
            rho(&CQuat::j(alg)).unwrap(),
            Mat2::new(c(0.0, 0.0), c(1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
        );
        assert_eq!(
            rho(&CQuat::ij(alg)).unwrap(),
            Mat2::new(c(0.0, 0.0), c(-1.0, 0.0), c(1.0, 0.0), c(0.0, 0.0))
        );
    }

    #[test]
    fn rho_is_a_homomorphism() {
        for s in 1..6 {
            let p = q_rand(s as f64);
            let q = q_rand(s as f64 + 0.5);
            let lhs = rho(&(p * q)).unwrap();
            let rhs = rho(&p).unwrap() * rho(&q).unwrap();
            assert!(lhs.inf_dist(&rhs) < 1e-12 * (1.0 + rhs.inf_norm()));
        }
    }

    #[test]
    fn rho_transports_norm_trace_dagger() {
        for s in 1..6 {
            let q = q_rand(s as f64 * 1.7);
            let m = rho(&q).unwrap();
            assert!((m.det() - q.norm()).norm() < 1e-12 * (1.0 + q.norm().norm()));
            assert!((m.mtr() - q.trace()).norm() < 1e-13 * (1.0 + q.trace().norm()));
            assert!(rho(&q.dagger()).unwrap().inf_dist(&m.conj_transpose()) < 1e-14);
        }
    }

    #[test]
    fn rho_round_trips() {
        for s in 1..6 {
            let q = q_rand(s as f64 * 0.9);
            assert!(rho_inv(&rho(&q).unwrap()).inf_dist(&q) < 1e-15);
            // and matrix → quaternion → matrix
            let m = Mat2::new(
                c(0.4 * s as f64, -1.0),
                c(1.0, 2.0 / s as f64),
                c(-0.3, 0.8),
                c(2.0, 0.1 * s as f64),
            );
            let back = rho(&rho_inv(&m)).unwrap();
            assert!(back.inf_dist(&m) < 1e-15);
        }
    }

    #[test]
    fn rho_rejects_general_parameters() {
        let q = CQuat::one(Algebra::new(c(4.0, 0.0), c(1.0, 0.0)));
        assert!(matches!(rho(&q), Err(Error::UnsupportedRepresentation(_))));
    }

    #[test]
    fn rho_general_specializes_and_scales() {
        // a = 4, b = 1: rho_B(i) = [[−2, 0], [0, 2]]
        let alg = Algebra::new(c(4.0, 0.0), c(1.0, 0.0));
        let emb = RhoEmbedding::new(&alg);
        let m = rho_general(&CQuat::i(alg), &emb);
        assert!(m.inf_dist(&Mat2::new(c(-2.0, 0.0), c(0.0, 0.0), c(0.0, 0.0), c(2.0, 0.0))) < 1e-15);
        // a = b = 1 specializes to rho
        let alg = CQuat::standard_algebra();
        let emb = RhoEmbedding::new(&alg);
        for s in 1..4 {
            let q = q_rand(s as f64 * 2.3);
            assert!(rho_general(&q, &emb).inf_dist(&rho(&q).unwrap()) < 1e-15);
        }
    }

    #[test]
    fn rho_general_is_a_homomorphism_for_positive_params() {
        let alg = Algebra::new(c(2.0, 0.0), c(3.0, 0.0));
        let emb = RhoEmbedding::new(&alg);
        for s in 1..6 {
            let mut p = q_rand(s as f64);
            let mut q = q_rand(s as f64 + 0.25);
            p.alg = alg;
            q.alg = alg;
            let lhs = rho_general(&(p * q), &emb);
            let rhs = rho_general(&p, &emb) * rho_general(&q, &emb);
            assert!(lhs.inf_dist(&rhs) < 1e-12 * (1.0 + rhs.inf_norm()));
            // i² ↦ a·Id
            let m = rho_general(&CQuat::i(alg), &emb);
            assert!((m.clone() * m).inf_dist(&Mat2::identity().scale(&c(2.0, 0.0))) < 1e-12);
        }
    }

    #[test]
    fn mat_ops() {
        let m = Mat2::new(c(1.0, 1.0), c(0.0, 2.0), c(3.0, 0.0), c(-1.0, 0.5));
        let id = Mat2::identity();
        assert_eq!(m.clone() * id.clone(), m);
        assert_eq!(
            m.conj_transpose(),
            Mat2::new(c(1.0, -1.0), c(3.0, 0.0), c(0.0, -2.0), c(-1.0, -0.5))
        );
        assert_eq!((m.clone() - m.clone()).det(), c(0.0, 0.0));
        assert!((id.clone() + id).mtr() == c(4.0, 0.0));
    }
}

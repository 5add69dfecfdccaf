//! Exact-arithmetic sweeps over the generalized algebras (a,b / ℚ(√−d)):
//! closure of the action, the symbolic 2×2 homomorphism, the Hamilton
//! specialization, and agreement between the exact and floating routes
//! after embedding.

use macfarlane::{
    rho_general, symbolic_rho, symbolic_rho_pullback, Algebra, CQuat, GenAlgebraContext, GenQuat,
    Mat2, QuadExt, Quaternion, RhoEmbedding, Scalar,
};
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

fn rat(n: i64, m: i64) -> BigRational {
    BigRational::new(BigInt::from(n), BigInt::from(m))
}

/// Deterministic rational stream; every value this produces is exact, so
/// every identity checked below is an equality of rationals, not a bound.
struct Lcg(u64);

impl Lcg {
    fn next(&mut self) -> u64 {
        self.0 = self
            .0
            .wrapping_mul(6364136223846793005)
            .wrapping_add(1442695040888963407);
        self.0
    }

    fn rational(&mut self) -> BigRational {
        let n = (self.next() >> 33) as i64 % 9 - 4;
        let m = 1 + (self.next() >> 33) as i64 % 4;
        rat(n, m)
    }

    fn coefficient(&mut self, ctx: &GenAlgebraContext) -> QuadExt {
        ctx.scalar(self.rational(), self.rational())
    }

    fn quat(&mut self, ctx: &GenAlgebraContext) -> GenQuat {
        ctx.quat(
            self.coefficient(ctx),
            self.coefficient(ctx),
            self.coefficient(ctx),
            self.coefficient(ctx),
        )
    }

    fn unit(&mut self, ctx: &GenAlgebraContext) -> GenQuat {
        loop {
            if let Some(u) = ctx.unit_from(&self.quat(ctx)) {
                return u;
            }
        }
    }

    fn symmetric(&mut self, ctx: &GenAlgebraContext) -> GenQuat {
        ctx.quat(
            QuadExt::from_rational(self.rational()),
            QuadExt::from_rational(self.rational()),
            QuadExt::from_rational(self.rational()),
            ctx.scalar(BigRational::zero(), self.rational()),
        )
    }

    fn point(&mut self, ctx: &GenAlgebraContext) -> macfarlane::GenMacPoint {
        loop {
            if let Some(p) = ctx.point_from(&self.symmetric(ctx)) {
                return p;
            }
        }
    }
}

fn embed_quat(q: &GenQuat) -> CQuat {
    CQuat::new(
        q.w.embed(),
        q.x.embed(),
        q.y.embed(),
        q.z.embed(),
        CQuat::standard_algebra(),
    )
}

fn embed_mat(m: &Mat2<macfarlane::ExtScalar>) -> Mat2<num_complex::Complex64> {
    Mat2::new(
        m.e[0][0].embed(),
        m.e[0][1].embed(),
        m.e[1][0].embed(),
        m.e[1][1].embed(),
    )
}

#[test]
fn action_closure_is_exact_on_500_cases_per_algebra() {
    for (a, b, d) in [(1, 1, 1), (2, 3, 5)] {
        let ctx = GenAlgebraContext::from_i64(a, b, d).unwrap();
        let mut lcg = Lcg(0x9e3779b97f4a7c15);
        for case in 0..500 {
            let u = lcg.unit(&ctx);
            let p = lcg.point(&ctx);
            let image = ctx.act(&u, &p).unwrap();

            // Every invariant holds with exact equality: dagger symmetry,
            // unit norm, positive rational trace.
            let q = image.quat();
            assert!(ctx.in_m(q), "case {case} over ({a},{b},{d}): not symmetric");
            assert_eq!(q.norm(), QuadExt::one(), "case {case}: norm drifted");
            assert!(
                q.trace().rational_part().is_positive(),
                "case {case}: trace left the upper sheet"
            );
        }
    }
}

#[test]
fn symbolic_image_identities_are_exact_on_500_cases() {
    let ctx = GenAlgebraContext::from_i64(1, 1, 1).unwrap();
    let mut lcg = Lcg(0x51803398);
    for case in 0..500 {
        let p = lcg.quat(&ctx);
        let q = lcg.quat(&ctx);

        let mp = symbolic_rho(&p).unwrap();
        let mq = symbolic_rho(&q).unwrap();

        // Homomorphism and dagger transport, exactly.
        assert_eq!(
            symbolic_rho(&(p.clone() * q.clone())).unwrap(),
            mp.clone() * mq.clone(),
            "case {case}: image is not multiplicative"
        );
        assert_eq!(
            symbolic_rho(&p.dagger()).unwrap(),
            mp.conj_transpose(),
            "case {case}: dagger did not transport"
        );

        // Determinant = norm and matrix trace = quaternion trace, read back
        // through the coefficient extraction.
        let det = symbolic_rho_pullback(
            &Mat2::new(
                mp.det(),
                macfarlane::ExtScalar::zero(),
                macfarlane::ExtScalar::zero(),
                mp.det(),
            ),
            ctx.algebra(),
        )
        .unwrap();
        assert_eq!(det.w, p.norm(), "case {case}: determinant is not the norm");
        assert_eq!(mp.mtr(), {
            let t = p.trace();
            macfarlane::ExtScalar::monomial(0, t.rational_part().clone(), ctx.a(), ctx.b(), ctx.d())
                + macfarlane::ExtScalar::monomial(
                    4,
                    t.radical_part().clone(),
                    ctx.a(),
                    ctx.b(),
                    ctx.d(),
                )
        });

        // Injectivity via the exact pullback.
        assert_eq!(symbolic_rho_pullback(&mp, ctx.algebra()).unwrap(), p);
    }
}

#[test]
fn symbolic_image_embeds_onto_the_floating_image() {
    // The exact matrix, embedded into ℂ entry by entry, is the same matrix
    // the floating-point embedding produces from the embedded quaternion.
    let ctx = GenAlgebraContext::from_i64(2, 3, 5).unwrap();
    let alg_float = Algebra::new(2.0f64, 3.0f64);
    let emb = RhoEmbedding::new(&alg_float);
    let mut lcg = Lcg(77);
    for _ in 0..200 {
        let q = lcg.quat(&ctx);
        let exact = embed_mat(&symbolic_rho(&q).unwrap());

        let qf = Quaternion::new(
            q.w.embed(),
            q.x.embed(),
            q.y.embed(),
            q.z.embed(),
            Algebra::new(
                num_complex::Complex64::new(2.0, 0.0),
                num_complex::Complex64::new(3.0, 0.0),
            ),
        );
        let float = rho_general(&qf, &emb);
        assert!(
            exact.inf_dist(&float) <= 1e-10 * (1.0 + exact.inf_norm()),
            "embedded exact image diverged from the floating image"
        );
    }
}

#[test]
fn hamilton_specialization_pulls_conjugate_transpose_back_to_star() {
    // a = b = −1: the classical quaternions. Here the conjugate transpose of
    // the 2×2 image corresponds to the star involution, not the dagger.
    let alg = Algebra::new(QuadExt::from_int(-1), QuadExt::from_int(-1));
    let mut lcg = Lcg(13);
    for case in 0..1000 {
        let q = Quaternion::new(
            QuadExt::from_rational(lcg.rational()),
            QuadExt::from_rational(lcg.rational()),
            QuadExt::from_rational(lcg.rational()),
            QuadExt::from_rational(lcg.rational()),
            alg.clone(),
        );
        let m = symbolic_rho(&q).unwrap();
        let back = symbolic_rho_pullback(&m.conj_transpose(), &alg).unwrap();
        assert_eq!(back, q.star(), "case {case}: pullback is not the star");
    }
}

#[test]
fn exact_and_floating_actions_agree_after_embedding() {
    let ctx = GenAlgebraContext::from_i64(1, 1, 1).unwrap();
    let mut lcg = Lcg(4242);
    for _ in 0..200 {
        let u = lcg.unit(&ctx);
        let p = lcg.point(&ctx);
        let exact = ctx.act(&u, &p).unwrap();

        let float = macfarlane::act_extended(&embed_quat(&u), &embed_quat(p.quat()));
        let gap = embed_quat(exact.quat()).inf_dist(&float);
        assert!(gap <= 1e-12, "embedding gap {gap}");
    }
}

#[test]
fn involution_uniqueness_holds_across_algebras() {
    for (a, b, d) in [(1, 1, 1), (2, 3, 5), (1, 1, 3), (7, 11, 2)] {
        let ctx = GenAlgebraContext::from_i64(a, b, d).unwrap();
        let candidates = macfarlane::enumerate_sign_involutions(&ctx);
        assert_eq!(candidates.len(), 16);

        let dagger_like: Vec<_> = candidates
            .iter()
            .filter(|k| k.is_involution && k.signature == (1, 3))
            .collect();
        assert_eq!(
            dagger_like.len(),
            1,
            "({a},{b},{d}): expected a unique admissible involution"
        );
        assert_eq!(dagger_like[0].signs, [1, 1, 1, -1]);
    }
}

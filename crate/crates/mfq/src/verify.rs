//! Seeded property suites behind `mfq verify`.
//!
//! Each suite draws its cases with a deterministic per-case generator
//! (`seed + index`), measures named residuals, and compares them against
//! bounds derived from the configured tolerance. Exact suites count
//! violations instead of measuring residuals, so their bound is zero.

use macfarlane::{
    act_2d, act_via_wigner, decompose_action, distance, equivariance_check, geodesic_through,
    iota_2d, mobius_2d, plane_algebra, rho, rho_2d, symbolic_rho, symbolic_rho_pullback, Algebra,
    CQuat, ExtScalar, GenAlgebraContext, GenMacPoint, GenQuat, HyperboloidPoint, Isometry,
    PlaneIsometry, PlanePoint, QuadExt, Quaternion, Scalar,
};
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

/// One named measurement with its pass bound.
#[derive(Debug, Clone, PartialEq)]
pub struct CheckOutcome {
    pub name: &'static str,
    pub max_residual: f64,
    pub bound: f64,
    pub pass: bool,
}

impl CheckOutcome {
    fn new(name: &'static str, max_residual: f64, bound: f64) -> Self {
        Self {
            name,
            max_residual,
            bound,
            pass: max_residual <= bound,
        }
    }
}

/// Result of one verification suite run.
#[derive(Debug, Clone, PartialEq)]
pub struct SuiteOutcome {
    pub suite: &'static str,
    pub cases: usize,
    pub seed: u64,
    pub checks: Vec<CheckOutcome>,
    pub pass: bool,
}

impl SuiteOutcome {
    fn new(suite: &'static str, cases: usize, seed: u64, checks: Vec<CheckOutcome>) -> Self {
        let pass = checks.iter().all(|c| c.pass);
        Self {
            suite,
            cases,
            seed,
            checks,
            pass,
        }
    }

    /// The single largest residual-to-bound ratio, for quick reporting.
    pub fn worst_check(&self) -> Option<&CheckOutcome> {
        self.checks.iter().max_by(|x, y| {
            let rx = x.max_residual / x.bound.max(f64::MIN_POSITIVE);
            let ry = y.max_residual / y.bound.max(f64::MIN_POSITIVE);
            rx.partial_cmp(&ry).unwrap_or(core::cmp::Ordering::Equal)
        })
    }
}

pub const SUITES: [&str; 7] = [
    "equivariance",
    "closure",
    "homomorphism",
    "decomposition",
    "axes",
    "2d",
    "generalized",
];

/// Default case count per suite, chosen to match the sizes the properties
/// are normally quoted at.
pub fn default_cases(suite: &str) -> usize {
    match suite {
        "axes" => 100,
        "2d" => 1000,
        // Three algebras, 500 exact cases each.
        "generalized" => 1500,
        _ => 10_000,
    }
}

/// Run the named suite. `Err` is reserved for unknown suite names (a usage
/// error); failed properties come back as `Ok` outcomes with `pass == false`.
pub fn run_suite(suite: &str, cases: usize, seed: u64, tol: f64) -> Result<SuiteOutcome, String> {
    match suite {
        "equivariance" => Ok(suite_equivariance(cases, seed, tol)),
        "closure" => Ok(suite_closure(cases, seed, tol)),
        "homomorphism" => Ok(suite_homomorphism(cases, seed, tol)),
        "decomposition" => Ok(suite_decomposition(cases, seed, tol)),
        "axes" => Ok(suite_axes(cases, seed, tol)),
        "2d" => Ok(suite_2d(cases, seed, tol)),
        "generalized" => Ok(suite_generalized(cases, seed)),
        other => Err(format!(
            "unknown suite '{other}'; expected one of {}",
            SUITES.join(", ")
        )),
    }
}

fn case_rng(seed: u64, index: usize) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed.wrapping_add(index as u64))
}

/// Random unit-norm complex quaternion. Raw coefficients are drawn with
/// components in (−7, 7) and the draw is retried until the norm has modulus
/// at least 1, so the normalizing factor 1/√n never enlarges: every
/// coefficient of the returned unit quaternion has modulus below 10.
fn rand_unit(rng: &mut ChaCha8Rng) -> Isometry {
    loop {
        let mut coeff = [0.0f64; 8];
        for v in coeff.iter_mut() {
            *v = rng.gen_range(-7.0..7.0);
        }
        let q = CQuat::from_reals(
            coeff[0], coeff[1], coeff[2], coeff[3], coeff[4], coeff[5], coeff[6], coeff[7],
        );
        if q.norm().norm() < 1.0 {
            continue;
        }
        let scaled = q.scale(q.norm().sqrt().inv());
        if let Ok(u) = Isometry::new(scaled) {
            return u;
        }
    }
}

fn rand_point(rng: &mut ChaCha8Rng) -> HyperboloidPoint {
    HyperboloidPoint::from_spatial(
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
        rng.gen_range(-2.0..2.0),
    )
}

/// Random complex quaternion with coefficient components in (−10, 10); no
/// norm constraint.
fn rand_quat(rng: &mut ChaCha8Rng) -> CQuat {
    let mut coeff = [0.0f64; 8];
    for v in coeff.iter_mut() {
        *v = rng.gen_range(-10.0..10.0);
    }
    CQuat::from_reals(
        coeff[0], coeff[1], coeff[2], coeff[3], coeff[4], coeff[5], coeff[6], coeff[7],
    )
}

fn suite_equivariance(cases: usize, seed: u64, tol: f64) -> SuiteOutcome {
    let mut uhs = 0.0f64;
    let mut spinor = 0.0f64;
    for index in 0..cases {
        let mut rng = case_rng(seed, index);
        let u = rand_unit(&mut rng);
        let p = rand_point(&mut rng);

        let r = equivariance_check(&u, &p).unwrap_or(f64::INFINITY);
        uhs = uhs.max(r);

        let direct = u.act(&p).minkowski();
        let oracle = act_via_wigner(&u, &p, 1e-6);
        let r = oracle.map_or(f64::INFINITY, |v| v.inf_dist(&direct));
        spinor = spinor.max(r);
    }
    SuiteOutcome::new(
        "equivariance",
        cases,
        seed,
        vec![
            CheckOutcome::new("uhs_equivariance", uhs, tol),
            CheckOutcome::new("spinor_agreement", spinor, tol),
        ],
    )
}

fn suite_closure(cases: usize, seed: u64, tol: f64) -> SuiteOutcome {
    let mut dagger = 0.0f64;
    let mut unit = 0.0f64;
    let mut worst_trace = f64::INFINITY;
    for index in 0..cases {
        let mut rng = case_rng(seed, index);
        let u = rand_unit(&mut rng);
        let p = rand_point(&mut rng);
        let image = u.act(&p);
        let q = image.quat();
        dagger = dagger.max(q.dagger().inf_dist(q));
        unit = unit.max((q.norm() - Complex64::new(1.0, 0.0)).norm());
        worst_trace = worst_trace.min(q.trace().re);
    }
    SuiteOutcome::new(
        "closure",
        cases,
        seed,
        vec![
            CheckOutcome::new("dagger_symmetry", dagger, tol),
            CheckOutcome::new("unit_norm", unit, tol),
            // Residual 0 exactly when every image trace stayed positive.
            CheckOutcome::new("upper_sheet", (-worst_trace).max(0.0), 0.0),
        ],
    )
}

fn suite_homomorphism(cases: usize, seed: u64, tol: f64) -> SuiteOutcome {
    let mut multiplicative = 0.0f64;
    let mut determinant = 0.0f64;
    let mut trace = 0.0f64;
    let mut dagger = 0.0f64;
    for index in 0..cases {
        let mut rng = case_rng(seed, index);
        let q = rand_quat(&mut rng);
        let r = rand_quat(&mut rng);
        let (mq, mr) = match (rho(&q), rho(&r)) {
            (Ok(mq), Ok(mr)) => (mq, mr),
            _ => {
                multiplicative = f64::INFINITY;
                continue;
            }
        };
        let scale = 1.0 + mq.inf_norm() * mr.inf_norm();

        let lhs = rho(&(q * r)).map_or(f64::INFINITY, |m| m.inf_dist(&(mq.clone() * mr.clone())));
        multiplicative = multiplicative.max(lhs / scale);

        let det_scale = 1.0 + q.norm().norm();
        determinant = determinant.max((mq.det() - q.norm()).norm() / det_scale);

        let tr_scale = 1.0 + q.trace().norm();
        trace = trace.max((mq.mtr() - q.trace()).norm() / tr_scale);

        let dag = rho(&q.dagger()).map_or(f64::INFINITY, |m| m.inf_dist(&mq.conj_transpose()));
        dagger = dagger.max(dag / (1.0 + mq.inf_norm()));
    }
    SuiteOutcome::new(
        "homomorphism",
        cases,
        seed,
        vec![
            CheckOutcome::new("multiplicative", multiplicative, tol),
            CheckOutcome::new("determinant_norm", determinant, tol),
            CheckOutcome::new("trace_transport", trace, tol),
            CheckOutcome::new("dagger_transport", dagger, tol),
        ],
    )
}

fn suite_decomposition(cases: usize, seed: u64, tol: f64) -> SuiteOutcome {
    let one = Quaternion::one(CQuat::standard_algebra());
    let mut reconstruction = 0.0f64;
    let mut additivity = 0.0f64;
    let mut traceless_m = 0.0f64;
    for index in 0..cases {
        let mut rng = case_rng(seed, index);
        let q = rand_quat(&mut rng);
        let whole = q * one * q.dagger();
        let parts = decompose_action(&q);
        let rebuilt =
            parts.sym_image + parts.skew_image - parts.commutator;
        let scale = 1.0 + whole.inf_norm();
        reconstruction = reconstruction.max(whole.inf_dist(&rebuilt) / scale);

        let tr_sum = parts.sym_image.trace() + parts.skew_image.trace();
        additivity = additivity.max((whole.trace() - tr_sum).norm() / (1.0 + whole.trace().norm()));

        let comm_scale = 1.0 + parts.commutator.inf_norm();
        let sym_residual = parts.commutator.dagger().inf_dist(&parts.commutator);
        let trace_residual = parts.commutator.trace().norm();
        traceless_m = traceless_m.max(sym_residual.max(trace_residual) / comm_scale);
    }
    SuiteOutcome::new(
        "decomposition",
        cases,
        seed,
        vec![
            CheckOutcome::new("reconstruction", reconstruction, tol),
            CheckOutcome::new("trace_additivity", additivity, tol),
            // Commutators land in the trace-zero symmetric slice; two orders
            // tighter because the identity is structural, not metric.
            CheckOutcome::new("commutator_traceless_symmetric", traceless_m, tol / 100.0),
        ],
    )
}

/// Unit skew quaternion (dagger-antisymmetric, norm exactly 1 up to float
/// rounding) with nonzero trace: coefficients (𝕚w̃, 𝕚x̃, 𝕚ỹ, z̃) with
/// x̃² + ỹ² + z̃² = 1 + w̃².
fn rand_unit_skew(rng: &mut ChaCha8Rng) -> CQuat {
    loop {
        let wt: f64 = rng.gen_range(0.1..2.0);
        let (xt, yt, zt): (f64, f64, f64) = (
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
            rng.gen_range(-1.0..1.0),
        );
        let len = (xt * xt + yt * yt + zt * zt).sqrt();
        if len < 1e-3 {
            continue;
        }
        let s = (1.0 + wt * wt).sqrt() / len;
        return CQuat::from_reals(0.0, wt, 0.0, xt * s, 0.0, yt * s, zt * s, 0.0);
    }
}

fn suite_axes(cases: usize, seed: u64, tol: f64) -> SuiteOutcome {
    let alg = CQuat::standard_algebra();
    let one = HyperboloidPoint::one(alg);
    let samples = [-1.0, 0.0, 0.7, 2.3];

    let mut invariance = 0.0f64;
    let mut constancy = 0.0f64;
    let mut trace_formula = 0.0f64;
    let mut skew_square = 0.0f64;
    let mut skew_invariance = 0.0f64;
    let mut skew_angle = 0.0f64;

    for index in 0..cases {
        let mut rng = case_rng(seed, index);

        // Positive-trace points acting on their own axis through 1.
        let p = loop {
            let p = rand_point(&mut rng);
            if distance(&one, &p).unwrap_or(0.0) > 0.1 {
                break p;
            }
        };
        let u = Isometry::from_point(&p);
        match geodesic_through(&one, &p) {
            Ok(axis) => {
                let mut displacements = [0.0f64; 4];
                for (slot, t) in samples.iter().enumerate() {
                    let x = axis.sample(*t);
                    let y = u.act(&x);
                    invariance = invariance.max(axis.membership_residual(&y));
                    displacements[slot] = distance(&x, &y).unwrap_or(f64::INFINITY);
                }
                for d in &displacements[1..] {
                    constancy = constancy.max((d - displacements[0]).abs());
                }
                let expected = 2.0 * (p.quat().trace().re / 2.0).acosh();
                trace_formula = trace_formula.max((displacements[0] - expected).abs());
            }
            Err(_) => invariance = f64::INFINITY,
        }

        // Unit skew quaternions: the action at 1 is −p², the line through 1
        // and −p² is preserved setwise, and arcosh(tr/2) sits on the branch
        // with imaginary part π/2.
        let s = rand_unit_skew(&mut rng);
        let image = s * Quaternion::one(alg) * s.dagger();
        let minus_sq = -(s * s);
        skew_square = skew_square.max(image.inf_dist(&minus_sq));

        let u = Isometry::new(s).expect("skew generator is unit by construction");
        match HyperboloidPoint::new(image).and_then(|img| geodesic_through(&one, &img)) {
            Ok(axis) => {
                for t in samples {
                    let x = axis.sample(t);
                    let y = u.act(&x);
                    skew_invariance = skew_invariance.max(axis.membership_residual(&y));
                }
            }
            Err(_) => skew_invariance = f64::INFINITY,
        }

        let half = u
            .rotation_half_angle()
            .unwrap_or(f64::INFINITY);
        skew_angle = skew_angle.max((half - core::f64::consts::FRAC_PI_2).abs());
    }

    SuiteOutcome::new(
        "axes",
        cases,
        seed,
        vec![
            CheckOutcome::new("axis_invariance", invariance, tol),
            CheckOutcome::new("displacement_constancy", constancy, tol),
            CheckOutcome::new("displacement_trace_formula", trace_formula, tol),
            // Structural identity: three orders tighter than the metric tol.
            CheckOutcome::new("skew_square_identity", skew_square, tol / 1000.0),
            CheckOutcome::new("skew_axis_invariance", skew_invariance, tol),
            CheckOutcome::new("skew_half_angle", skew_angle, tol),
        ],
    )
}

/// Split-algebra isometry with a norm safely off the light cone.
fn rand_plane_isometry(rng: &mut ChaCha8Rng) -> PlaneIsometry {
    loop {
        let w = rng.gen_range(-2.0..2.0);
        let x = rng.gen_range(-2.0..2.0);
        let y = rng.gen_range(-2.0..2.0);
        let z = rng.gen_range(-2.0..2.0);
        let n: f64 = w * w - x * x - y * y + z * z;
        if n < 0.1 {
            continue;
        }
        let s = n.sqrt();
        if let Ok(gamma) = PlaneIsometry::from_coeffs(w / s, x / s, y / s, z / s) {
            return gamma;
        }
    }
}

fn suite_2d(cases: usize, seed: u64, tol: f64) -> SuiteOutcome {
    let mut embedding = 0.0f64;
    let mut mobius = 0.0f64;
    let mut skew_violations = 0usize;

    // Exhaustive part: the skew slice of the split algebra is spanned by ij
    // alone, and a skew element squares to −z² — never 1, so the plane has
    // no one-sheeted unit set and hence no purely loxodromic points.
    let alg = plane_algebra();
    let basis = [
        Quaternion::one(alg),
        Quaternion::i(alg),
        Quaternion::j(alg),
        Quaternion::ij(alg),
    ];
    for (idx, e) in basis.iter().enumerate() {
        let skew = e.dagger() == -*e;
        if skew != (idx == 3) {
            skew_violations += 1;
        }
    }

    for index in 0..cases {
        let mut rng = case_rng(seed, index);
        let gamma = rand_plane_isometry(&mut rng);
        let p = PlanePoint::from_spatial(rng.gen_range(-2.0..2.0), rng.gen_range(-2.0..2.0));

        let image = act_2d(&gamma, &p);
        let embedded = gamma.embed().act(&p.embed());
        embedding = embedding.max(image.embed().quat().inf_dist(embedded.quat()));

        let lhs = iota_2d(&image);
        let rhs = iota_2d(&p).map(|zeta| mobius_2d(&rho_2d(&gamma), zeta));
        match (lhs, rhs) {
            (Ok(l), Ok(r)) => mobius = mobius.max((l - r).norm()),
            _ => mobius = f64::INFINITY,
        }

        // Random-z part of the unit-skew scan, both signs exhausted.
        let z = rng.gen_range(0.0..5.0);
        for sign in [1.0, -1.0] {
            let s = Quaternion::ij(alg).scale(sign * z);
            let square = s * s;
            if (square.w + z * z).abs() > 1e-12 || (square.w - 1.0).abs() < 1e-6 {
                skew_violations += 1;
            }
        }
    }

    SuiteOutcome::new(
        "2d",
        cases,
        seed,
        vec![
            // An order tighter than the metric tolerance: the embedding is
            // coordinate bookkeeping, not geometry.
            CheckOutcome::new("embedding_agreement", embedding, tol / 10.0),
            CheckOutcome::new("mobius_equivariance", mobius, tol),
            CheckOutcome::new("skew_unit_free", skew_violations as f64, 0.0),
        ],
    )
}

fn rand_rational(rng: &mut ChaCha8Rng) -> BigRational {
    BigRational::new(
        rng.gen_range(-4i64..=4).into(),
        rng.gen_range(1i64..=3).into(),
    )
}

fn rand_exact_quat(rng: &mut ChaCha8Rng, ctx: &GenAlgebraContext) -> GenQuat {
    let mut parts = Vec::with_capacity(4);
    for _ in 0..4 {
        parts.push(ctx.scalar(rand_rational(rng), rand_rational(rng)));
    }
    let z = parts.pop().unwrap();
    let y = parts.pop().unwrap();
    let x = parts.pop().unwrap();
    let w = parts.pop().unwrap();
    ctx.quat(w, x, y, z)
}

fn rand_exact_unit(rng: &mut ChaCha8Rng, ctx: &GenAlgebraContext) -> GenQuat {
    loop {
        let h = rand_exact_quat(rng, ctx);
        if let Some(u) = ctx.unit_from(&h) {
            return u;
        }
    }
}

fn rand_exact_point(rng: &mut ChaCha8Rng, ctx: &GenAlgebraContext) -> GenMacPoint {
    loop {
        // Dagger-symmetric: rational w, x, y and a pure-radical ij part.
        let h = ctx.quat(
            ctx.scalar(rand_rational(rng), BigRational::zero()),
            ctx.scalar(rand_rational(rng), BigRational::zero()),
            ctx.scalar(rand_rational(rng), BigRational::zero()),
            ctx.scalar(BigRational::zero(), rand_rational(rng)),
        );
        if let Some(p) = ctx.point_from(&h) {
            return p;
        }
    }
}

fn suite_generalized(cases: usize, seed: u64) -> SuiteOutcome {
    let contexts = [
        GenAlgebraContext::from_i64(1, 1, 1).expect("positive parameters"),
        GenAlgebraContext::from_i64(2, 3, 5).expect("positive parameters"),
        GenAlgebraContext::from_i64(1, 1, 3).expect("positive parameters"),
    ];

    let mut signature_violations = 0usize;
    let mut involution_violations = 0usize;
    for ctx in &contexts {
        if ctx.signature() != (1, 3) {
            signature_violations += 1;
        }
        let survivors: Vec<[i8; 4]> = macfarlane::enumerate_sign_involutions(ctx)
            .into_iter()
            .filter(|k| k.is_involution && k.signature == (1, 3))
            .map(|k| k.signs)
            .collect();
        if survivors != vec![[1, 1, 1, -1]] {
            involution_violations += 1;
        }
    }

    let per_context = (cases / contexts.len()).max(1);
    let mut closure_violations = 0usize;
    let mut homomorphism_violations = 0usize;
    for (slot, ctx) in contexts.iter().enumerate() {
        for index in 0..per_context {
            let mut rng = case_rng(seed, slot * per_context + index);

            let u = rand_exact_unit(&mut rng, ctx);
            let p = rand_exact_point(&mut rng, ctx);
            match ctx.act(&u, &p) {
                Ok(image) => {
                    let q = image.quat();
                    let unit = q.norm() == QuadExt::one();
                    let symmetric = ctx.in_m(q);
                    let positive = q.trace().rational_part().is_positive();
                    if !(unit && symmetric && positive) {
                        closure_violations += 1;
                    }
                }
                Err(_) => closure_violations += 1,
            }

            let q = rand_exact_quat(&mut rng, ctx);
            let r = rand_exact_quat(&mut rng, ctx);
            let ok = (|| -> Option<bool> {
                let mq = symbolic_rho(&q).ok()?;
                let mr = symbolic_rho(&r).ok()?;
                let mqr = symbolic_rho(&(q.clone() * r.clone())).ok()?;
                if mqr != mq.clone() * mr {
                    return Some(false);
                }
                let (a, b, d) = (ctx.a().clone(), ctx.b().clone(), ctx.d().clone());
                let n = q.norm();
                let det_expected = ExtScalar::monomial(0, n.rational_part().clone(), &a, &b, &d)
                    + ExtScalar::monomial(4, n.radical_part().clone(), &a, &b, &d);
                if mq.det() != det_expected {
                    return Some(false);
                }
                let t = q.trace();
                let tr_expected = ExtScalar::monomial(0, t.rational_part().clone(), &a, &b, &d)
                    + ExtScalar::monomial(4, t.radical_part().clone(), &a, &b, &d);
                if mq.mtr() != tr_expected {
                    return Some(false);
                }
                let dag = symbolic_rho(&q.dagger()).ok()?;
                Some(dag == mq.conj_transpose())
            })();
            if ok != Some(true) {
                homomorphism_violations += 1;
            }
        }
    }

    // Hamilton specialization a = b = −1: the conjugate transpose pulls back
    // to the star involution on rational quaternions.
    let hamilton = Algebra::new(QuadExt::from_int(-1), QuadExt::from_int(-1));
    let mut hamilton_violations = 0usize;
    for index in 0..1000 {
        let mut rng = case_rng(seed.wrapping_add(0x48414d), index);
        let q = Quaternion::new(
            QuadExt::from_rational(rand_rational(&mut rng)),
            QuadExt::from_rational(rand_rational(&mut rng)),
            QuadExt::from_rational(rand_rational(&mut rng)),
            QuadExt::from_rational(rand_rational(&mut rng)),
            hamilton.clone(),
        );
        let ok = symbolic_rho(&q)
            .ok()
            .and_then(|m| symbolic_rho_pullback(&m.conj_transpose(), &hamilton).ok())
            .map(|back| back == q.star());
        if ok != Some(true) {
            hamilton_violations += 1;
        }
    }

    SuiteOutcome::new(
        "generalized",
        per_context * contexts.len(),
        seed,
        vec![
            CheckOutcome::new("signature_1_3", signature_violations as f64, 0.0),
            CheckOutcome::new("involution_uniqueness", involution_violations as f64, 0.0),
            CheckOutcome::new("exact_closure", closure_violations as f64, 0.0),
            CheckOutcome::new("exact_homomorphism", homomorphism_violations as f64, 0.0),
            CheckOutcome::new("hamilton_star", hamilton_violations as f64, 0.0),
        ],
    )
}

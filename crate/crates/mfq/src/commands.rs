//! Command implementations: parse literals, run the library, emit reports.
//!
//! Every command returns either a JSON document or a usage/domain error
//! string (exit code 2). `cmd_verify` additionally reports whether the suite
//! passed, which the front end maps to exit code 1.

use macfarlane::{
    acosh_principal, ball_lift, decompose_action, distance, iota, iota_proj, CQuat,
    GenAlgebraContext, GenMacPoint, GenQuat, HyperboloidPoint, Isometry, IsometryClass,
    MinkowskiVec, QuadExt, Quaternion, Scalar, UpperHalfSpacePoint,
};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{Signed, Zero};

use crate::config::{Config, Mode};
use crate::json::Json;
use crate::parser::{
    format_exact_quaternion, parse_exact_quaternion, parse_float_quaternion, ParseError,
};
use crate::verify::{default_cases, run_suite, SuiteOutcome};

fn parse_failure(what: &str, err: ParseError) -> String {
    format!("{what}: {err}")
}

/// Minkowski coordinates of a dagger-symmetric quaternion: the real parts of
/// w, x, y and the imaginary part of z.
fn minkowski_coords(q: &CQuat) -> [f64; 4] {
    [q.w.re, q.x.re, q.y.re, q.z.im]
}

fn embed_exact(q: &GenQuat) -> CQuat {
    CQuat::new(
        q.w.embed(),
        q.x.embed(),
        q.y.embed(),
        q.z.embed(),
        CQuat::standard_algebra(),
    )
}

/// √r for perfect-square positive rationals, exactly.
fn exact_sqrt(r: &BigRational) -> Option<BigRational> {
    if !r.is_positive() {
        return None;
    }
    let sn: BigInt = r.numer().sqrt();
    let sd: BigInt = r.denom().sqrt();
    (&sn * &sn == *r.numer() && &sd * &sd == *r.denom()).then(|| BigRational::new(sn, sd))
}

/// Unit-norm representative in exact mode: accept norm exactly 1, or divide
/// by an exactly representable square root of a positive rational norm.
fn exact_unit(q: GenQuat) -> Result<GenQuat, String> {
    let n = q.norm();
    if n == QuadExt::one() {
        return Ok(q);
    }
    if !n.is_real(0.0) {
        return Err(format!(
            "cannot normalize: norm has a nonzero radical part (norm = {} + {}·√−d)",
            n.rational_part(),
            n.radical_part()
        ));
    }
    match exact_sqrt(n.rational_part()) {
        Some(root) => Ok(q.scale(QuadExt::from_rational(root.recip()))),
        None => Err(format!(
            "cannot normalize exactly: norm {} is not the square of a rational",
            n.rational_part()
        )),
    }
}

fn float_requires_standard(cfg: &Config) -> Result<(), String> {
    if cfg.algebra.is_standard_algebra() {
        Ok(())
    } else {
        Err(format!(
            "float mode supports algebra parameters 1,1,d only (got {}); use --mode exact for general algebras",
            cfg.algebra
        ))
    }
}

fn json_or_null(value: Result<f64, macfarlane::Error>) -> Json {
    match value {
        Ok(v) => Json::Num(v),
        Err(_) => Json::Null,
    }
}

fn axis_json(u: &Isometry, tol: f64) -> Json {
    match u.axis(tol) {
        Ok(axis) => {
            let base = axis.basepoint().minkowski();
            let dir = axis.direction().scale(Complex64::new(
                axis.orientation() as f64,
                0.0,
            ));
            Json::obj(vec![
                ("basepoint", Json::reals(&[base.v0, base.v1, base.v2, base.v3])),
                ("direction", Json::reals(&minkowski_coords(&dir))),
            ])
        }
        Err(_) => Json::Null,
    }
}

fn classification_json(class: IsometryClass, u: &Isometry, tol: f64) -> Vec<(&'static str, Json)> {
    let tr = u.trace();
    vec![
        ("class", Json::str(class.label())),
        ("trace", Json::reals(&[tr.re, tr.im])),
        ("translation_length", json_or_null(u.translation_length())),
        ("displacement", json_or_null(u.displacement())),
        ("rotation_angle", json_or_null(u.rotation_angle())),
        ("rotation_half_angle", json_or_null(u.rotation_half_angle())),
        ("axis", axis_json(u, tol)),
    ]
}

pub fn cmd_classify(literal: &str, cfg: &Config) -> Result<Json, String> {
    match cfg.mode {
        Mode::Float => {
            float_requires_standard(cfg)?;
            let q = parse_float_quaternion(literal, cfg.algebra.d_f64())
                .map_err(|e| parse_failure("quaternion literal", e))?;
            let u = Isometry::normalized(q, cfg.tol).map_err(|e| e.to_string())?;
            let class = u.classify(cfg.tol);
            Ok(Json::obj(classification_json(class, &u, cfg.tol)))
        }
        Mode::Exact => {
            let ctx = cfg.algebra.context();
            let q = parse_exact_quaternion(literal, &ctx)
                .map_err(|e| parse_failure("quaternion literal", e))?;
            let u = exact_unit(q)?;
            if cfg.algebra.is_standard_algebra() {
                // a = b = 1: the floating pipeline applies after embedding,
                // and the exact trace is reported alongside.
                let iso =
                    Isometry::with_tol(embed_exact(&u), cfg.tol).map_err(|e| e.to_string())?;
                let class = exact_class(&u, &ctx);
                let mut fields = classification_json(class, &iso, cfg.tol);
                fields.push(("exact_trace", exact_scalar_json(&u.trace())));
                Ok(Json::Obj(
                    fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
                ))
            } else {
                // General algebras: classification and lengths come from the
                // trace; the axis geometry is a standard-algebra feature.
                let class = exact_class(&u, &ctx);
                let tr = u.trace().embed();
                let half = acosh_principal(tr / 2.0);
                let parabolic = class == IsometryClass::Parabolic;
                let zero_length = matches!(
                    class,
                    IsometryClass::Identity | IsometryClass::Elliptic
                );
                let length = if zero_length { 0.0 } else { half.re.abs() };
                let length_json = |v: f64| {
                    if parabolic {
                        Json::Null
                    } else {
                        Json::Num(v)
                    }
                };
                let folded = {
                    let theta = 2.0 * half.im.abs();
                    if theta > core::f64::consts::PI {
                        2.0 * core::f64::consts::PI - theta
                    } else {
                        theta
                    }
                };
                Ok(Json::obj(vec![
                    ("class", Json::str(class.label())),
                    ("trace", Json::reals(&[tr.re, tr.im])),
                    ("translation_length", length_json(length)),
                    ("displacement", length_json(2.0 * length)),
                    ("rotation_angle", length_json(folded)),
                    ("rotation_half_angle", length_json(half.im.abs())),
                    ("axis", Json::Null),
                    ("exact_trace", exact_scalar_json(&u.trace())),
                ]))
            }
        }
    }
}

/// Exact classification from the trace: identity and parabolic are exact
/// equalities, the rest split on the real trace against ±2.
fn exact_class(u: &GenQuat, ctx: &GenAlgebraContext) -> IsometryClass {
    let one = Quaternion::one(ctx.algebra().clone());
    if *u == one || *u == -one.clone() {
        return IsometryClass::Identity;
    }
    let tr = u.trace();
    let two = QuadExt::from_int(2);
    if tr == two || tr == -two {
        return IsometryClass::Parabolic;
    }
    if tr.radical_part().is_zero() {
        if tr.rational_part().abs() < BigRational::from_integer(2.into()) {
            IsometryClass::Elliptic
        } else {
            IsometryClass::Hyperbolic
        }
    } else {
        IsometryClass::PurelyLoxodromic
    }
}

fn exact_scalar_json(s: &QuadExt) -> Json {
    Json::Arr(vec![
        Json::str(s.rational_part().to_string()),
        Json::str(s.radical_part().to_string()),
    ])
}

fn point_models_json(p: &HyperboloidPoint) -> Vec<(&'static str, Json)> {
    let v = p.minkowski();
    let ball = iota_proj(p);
    let uhs = match iota(p) {
        Ok(u) => Json::reals(&[u.x1(), u.x2(), u.x3()]),
        Err(_) => Json::Null,
    };
    vec![
        ("hyperboloid", Json::reals(&[v.v0, v.v1, v.v2, v.v3])),
        ("ball", Json::reals(&[ball.x(), ball.y(), ball.z()])),
        ("uhs", uhs),
    ]
}

pub fn cmd_act(unit: &str, point: &str, cfg: &Config) -> Result<Json, String> {
    match cfg.mode {
        Mode::Float => {
            float_requires_standard(cfg)?;
            let d = cfg.algebra.d_f64();
            let u = parse_float_quaternion(unit, d)
                .map_err(|e| parse_failure("acting quaternion", e))?;
            let p = parse_float_quaternion(point, d)
                .map_err(|e| parse_failure("point literal", e))?;
            let u = Isometry::with_tol(u, cfg.tol).map_err(|e| e.to_string())?;
            let p = HyperboloidPoint::with_tol(p, cfg.tol).map_err(|e| e.to_string())?;
            let image = u.act(&p);
            Ok(Json::obj(point_models_json(&image)))
        }
        Mode::Exact => {
            let ctx = cfg.algebra.context();
            let u = parse_exact_quaternion(unit, &ctx)
                .map_err(|e| parse_failure("acting quaternion", e))?;
            let p = parse_exact_quaternion(point, &ctx)
                .map_err(|e| parse_failure("point literal", e))?;
            let p: GenMacPoint = ctx.point(p).map_err(|e| e.to_string())?;
            let image = ctx.act(&u, &p).map_err(|e| e.to_string())?;

            let mut fields = if cfg.algebra.is_standard_algebra() {
                let embedded = HyperboloidPoint::with_tol(embed_exact(image.quat()), cfg.tol)
                    .map_err(|e| e.to_string())?;
                point_models_json(&embedded)
            } else {
                vec![
                    ("hyperboloid", Json::Null),
                    ("ball", Json::Null),
                    ("uhs", Json::Null),
                ]
            };
            fields.push(("exact", Json::str(format_exact_quaternion(image.quat()))));
            Ok(Json::Obj(
                fields.into_iter().map(|(k, v)| (k.to_string(), v)).collect(),
            ))
        }
    }
}

fn parse_coords(text: &str, expect: usize, model: &str) -> Result<Vec<f64>, String> {
    let parts: Vec<&str> = text.split(',').collect();
    if parts.len() != expect {
        return Err(format!(
            "model '{model}' takes {expect} comma-separated coordinates, got {}",
            parts.len()
        ));
    }
    parts
        .iter()
        .map(|s| {
            s.trim()
                .parse::<f64>()
                .map_err(|e| format!("bad coordinate '{}': {e}", s.trim()))
        })
        .collect()
}

pub fn cmd_convert(from: &str, to: &str, coords: &str, cfg: &Config) -> Result<Json, String> {
    let point = match from {
        "hyperboloid" => {
            let c = parse_coords(coords, 4, from)?;
            let v = MinkowskiVec::new(c[0], c[1], c[2], c[3]);
            HyperboloidPoint::from_minkowski(&v, cfg.tol).map_err(|e| e.to_string())?
        }
        "ball" => {
            let c = parse_coords(coords, 3, from)?;
            let b = macfarlane::BallPoint::new(c[0], c[1], c[2]).map_err(|e| e.to_string())?;
            ball_lift(&b)
        }
        "uhs" => {
            let c = parse_coords(coords, 3, from)?;
            let u =
                UpperHalfSpacePoint::new(c[0], c[1], c[2]).map_err(|e| e.to_string())?;
            macfarlane::iota_inv(&u)
        }
        other => return Err(format!("unknown model '{other}'; expected hyperboloid, ball, or uhs")),
    };
    let out = match to {
        "hyperboloid" => {
            let v = point.minkowski();
            Json::reals(&[v.v0, v.v1, v.v2, v.v3])
        }
        "ball" => {
            let b = iota_proj(&point);
            Json::reals(&[b.x(), b.y(), b.z()])
        }
        "uhs" => {
            let u = iota(&point).map_err(|e| e.to_string())?;
            Json::reals(&[u.x1(), u.x2(), u.x3()])
        }
        other => return Err(format!("unknown model '{other}'; expected hyperboloid, ball, or uhs")),
    };
    Ok(Json::obj(vec![
        ("from", Json::str(from)),
        ("to", Json::str(to)),
        ("coords", out),
    ]))
}

pub fn cmd_distance(p: &str, q: &str, cfg: &Config) -> Result<Json, String> {
    let (p, q) = match cfg.mode {
        Mode::Float => {
            float_requires_standard(cfg)?;
            let d = cfg.algebra.d_f64();
            let p = parse_float_quaternion(p, d).map_err(|e| parse_failure("first point", e))?;
            let q = parse_float_quaternion(q, d).map_err(|e| parse_failure("second point", e))?;
            (
                HyperboloidPoint::with_tol(p, cfg.tol).map_err(|e| e.to_string())?,
                HyperboloidPoint::with_tol(q, cfg.tol).map_err(|e| e.to_string())?,
            )
        }
        Mode::Exact => {
            if !cfg.algebra.is_standard_algebra() {
                return Err(format!(
                    "distance in exact mode requires algebra parameters 1,1,d (got {})",
                    cfg.algebra
                ));
            }
            let ctx = cfg.algebra.context();
            let pe = parse_exact_quaternion(p, &ctx).map_err(|e| parse_failure("first point", e))?;
            let qe =
                parse_exact_quaternion(q, &ctx).map_err(|e| parse_failure("second point", e))?;
            let pe = ctx.point(pe).map_err(|e| e.to_string())?;
            let qe = ctx.point(qe).map_err(|e| e.to_string())?;
            (
                HyperboloidPoint::with_tol(embed_exact(pe.quat()), cfg.tol)
                    .map_err(|e| e.to_string())?,
                HyperboloidPoint::with_tol(embed_exact(qe.quat()), cfg.tol)
                    .map_err(|e| e.to_string())?,
            )
        }
    };
    let dist = distance(&p, &q).map_err(|e| e.to_string())?;
    Ok(Json::obj(vec![("distance", Json::Num(dist))]))
}

pub fn cmd_decompose(literal: &str, cfg: &Config) -> Result<Json, String> {
    match cfg.mode {
        Mode::Float => {
            float_requires_standard(cfg)?;
            let q = parse_float_quaternion(literal, cfg.algebra.d_f64())
                .map_err(|e| parse_failure("quaternion literal", e))?;
            let parts = decompose_action(&q);
            let whole = q * Quaternion::one(q.alg) * q.dagger();
            let rebuilt = parts.sym_image + parts.skew_image - parts.commutator;
            let tr_sum = parts.sym_image.trace() + parts.skew_image.trace();
            Ok(Json::obj(vec![
                ("sym_image", Json::reals(&minkowski_coords(&parts.sym_image))),
                ("skew_image", Json::reals(&minkowski_coords(&parts.skew_image))),
                ("commutator", Json::reals(&minkowski_coords(&parts.commutator))),
                ("reconstruction_residual", Json::Num(whole.inf_dist(&rebuilt))),
                (
                    "trace_additivity_residual",
                    Json::Num((whole.trace() - tr_sum).norm()),
                ),
            ]))
        }
        Mode::Exact => {
            let ctx = cfg.algebra.context();
            let q = parse_exact_quaternion(literal, &ctx)
                .map_err(|e| parse_failure("quaternion literal", e))?;
            let parts = decompose_action(&q);
            let whole = q.clone() * Quaternion::one(ctx.algebra().clone()) * q.dagger();
            let rebuilt = parts.sym_image.clone() + parts.skew_image.clone()
                - parts.commutator.clone();
            let exact_identity = whole == rebuilt;
            let tr_exact =
                whole.trace() == parts.sym_image.trace() + parts.skew_image.trace();
            Ok(Json::obj(vec![
                ("sym_image", Json::str(format_exact_quaternion(&parts.sym_image))),
                ("skew_image", Json::str(format_exact_quaternion(&parts.skew_image))),
                ("commutator", Json::str(format_exact_quaternion(&parts.commutator))),
                (
                    "reconstruction_residual",
                    Json::Num(if exact_identity { 0.0 } else { f64::INFINITY }),
                ),
                (
                    "trace_additivity_residual",
                    Json::Num(if tr_exact { 0.0 } else { f64::INFINITY }),
                ),
            ]))
        }
    }
}

pub fn cmd_verify(suite: &str, cfg: &Config) -> Result<(Json, bool), String> {
    let cases = cfg.cases.unwrap_or_else(|| default_cases(suite));
    let outcome = run_suite(suite, cases, cfg.seed, cfg.tol)?;
    Ok((suite_json(&outcome), outcome.pass))
}

pub fn suite_json(outcome: &SuiteOutcome) -> Json {
    Json::obj(vec![
        ("suite", Json::str(outcome.suite)),
        ("cases", Json::Int(outcome.cases as i64)),
        ("seed", Json::Int(outcome.seed as i64)),
        (
            "checks",
            Json::Arr(
                outcome
                    .checks
                    .iter()
                    .map(|c| {
                        Json::obj(vec![
                            ("name", Json::str(c.name)),
                            ("max_residual", Json::Num(c.max_residual)),
                            ("bound", Json::Num(c.bound)),
                            ("pass", Json::Bool(c.pass)),
                        ])
                    })
                    .collect(),
            ),
        ),
        ("pass", Json::Bool(outcome.pass)),
    ])
}

/// Human-readable rendering: top-level keys become lines, nested structures
/// stay compact.
pub fn render_plain(doc: &Json) -> String {
    fn inline(doc: &Json) -> String {
        match doc {
            Json::Null => "null".to_string(),
            Json::Bool(b) => b.to_string(),
            Json::Num(x) => format!("{}", if *x == 0.0 { 0.0 } else { *x }),
            Json::Int(n) => n.to_string(),
            Json::Str(s) => s.clone(),
            Json::Arr(items) => {
                let inner: Vec<String> = items.iter().map(inline).collect();
                format!("[{}]", inner.join(", "))
            }
            Json::Obj(fields) => {
                let inner: Vec<String> = fields
                    .iter()
                    .map(|(k, v)| format!("{k}: {}", inline(v)))
                    .collect();
                format!("{{{}}}", inner.join(", "))
            }
        }
    }
    match doc {
        Json::Obj(fields) => fields
            .iter()
            .map(|(k, v)| format!("{k}: {}", inline(v)))
            .collect::<Vec<_>>()
            .join("\n"),
        other => inline(other),
    }
}

//! Property-based tests for the quaternion literal grammar: round trips,
//! whitespace insensitivity, and totality on arbitrary input.

use macfarlane::{CQuat, GenAlgebraContext, GenQuat};
use mfq::parser::{
    format_exact_quaternion, format_float_quaternion, parse_exact_quaternion,
    parse_float_quaternion,
};
use num_complex::Complex64;
use num_rational::BigRational;
use proptest::prelude::*;

/// Any finite double, including zeros and subnormals; the formatter has no
/// representation for NaN or infinities, so round trips exclude them.
fn finite() -> impl Strategy<Value = f64> {
    prop_oneof![
        4 => prop::num::f64::NORMAL,
        1 => prop::num::f64::SUBNORMAL,
        1 => prop::num::f64::ZERO,
        2 => -100.0f64..100.0,
    ]
}

/// Coefficients that are real about half the time, so formatting exercises
/// both bare reals and parenthesized complex pairs.
fn component() -> impl Strategy<Value = Complex64> {
    (finite(), prop_oneof![2 => Just(0.0), 3 => finite()])
        .prop_map(|(re, im)| Complex64::new(re, im))
}

fn float_quat() -> impl Strategy<Value = CQuat> {
    (component(), component(), component(), component()).prop_map(|(w, x, y, z)| {
        CQuat::new(w, x, y, z, CQuat::standard_algebra())
    })
}

fn rational() -> impl Strategy<Value = BigRational> {
    prop_oneof![
        1 => Just(0i64).prop_map(|_| BigRational::from_integer(0.into())),
        4 => (-9999i64..=9999, 1i64..=999)
            .prop_map(|(n, d)| BigRational::new(n.into(), d.into())),
    ]
}

fn exact_quat() -> impl Strategy<Value = GenQuat> {
    proptest::collection::vec((rational(), rational()), 4).prop_map(|parts| {
        let ctx = GenAlgebraContext::from_i64(1, 1, 1).expect("positive parameters");
        let mut scalars = parts
            .into_iter()
            .map(|(u, v)| ctx.scalar(u, v))
            .collect::<Vec<_>>();
        let z = scalars.pop().unwrap();
        let y = scalars.pop().unwrap();
        let x = scalars.pop().unwrap();
        let w = scalars.pop().unwrap();
        ctx.quat(w, x, y, z)
    })
}

/// Whitespace sprinkled between the characters of `text` at the marked
/// positions. The scanner squeezes whitespace before tokenizing, so the
/// parse must come out identical no matter where the gaps land.
fn sprinkle(text: &str, gaps: &[bool], filler: &str) -> String {
    let mut out = String::with_capacity(text.len() * 2);
    for (index, ch) in text.chars().enumerate() {
        if gaps.get(index).copied().unwrap_or(false) {
            out.push_str(filler);
        }
        out.push(ch);
    }
    out
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(400))]

    #[test]
    fn float_literals_round_trip_bit_for_bit(q in float_quat()) {
        let text = format_float_quaternion(&q);
        let back = parse_float_quaternion(&text, 1.0);
        prop_assert_eq!(back.as_ref(), Ok(&q), "text was {:?}", text);
    }

    #[test]
    fn exact_literals_round_trip_as_identical_rationals(q in exact_quat()) {
        let ctx = GenAlgebraContext::from_i64(1, 1, 1).expect("positive parameters");
        let text = format_exact_quaternion(&q);
        let back = parse_exact_quaternion(&text, &ctx);
        prop_assert_eq!(back.as_ref(), Ok(&q), "text was {:?}", text);
    }

    #[test]
    fn whitespace_never_changes_a_parse(
        q in float_quat(),
        gaps in proptest::collection::vec(any::<bool>(), 0..64),
        filler in prop_oneof![Just(" "), Just("\t"), Just("  \t ")],
    ) {
        let text = format_float_quaternion(&q);
        let padded = sprinkle(&text, &gaps, filler);
        let plain = parse_float_quaternion(&text, 1.0);
        let spaced = parse_float_quaternion(&padded, 1.0);
        prop_assert_eq!(plain, spaced, "padded form was {:?}", padded);
    }

    #[test]
    fn arbitrary_input_parses_or_errors_in_range(text in any::<String>()) {
        let ctx = GenAlgebraContext::from_i64(1, 1, 1).expect("positive parameters");
        if let Err(err) = parse_float_quaternion(&text, 1.0) {
            prop_assert!(err.offset <= text.len());
            prop_assert!(text.is_char_boundary(err.offset));
        }
        if let Err(err) = parse_exact_quaternion(&text, &ctx) {
            prop_assert!(err.offset <= text.len());
            prop_assert!(text.is_char_boundary(err.offset));
        }
    }

    #[test]
    fn near_grammar_soup_parses_or_errors_in_range(
        text in "[0-9ijkrIeE+().,/ \t-]{0,32}",
    ) {
        if let Err(err) = parse_float_quaternion(&text, 2.0) {
            prop_assert!(err.offset <= text.len());
            prop_assert!(err.message.len() > 0);
        }
    }
}

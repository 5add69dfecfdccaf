//! Text grammar for quaternion literals.
//!
//! ```text
//! expr  := ('+'|'-')? term (('+'|'-') term)*
//! term  := coeff basis? | basis
//! coeff := real | '(' real ('+'|'-') real 'I' ')' | rational ('r')?
//! basis := 'i' | 'j' | 'k'
//! ```
//!
//! `k` names the basis element ij. The `r` suffix multiplies a rational by
//! the radical √−d of the active field, so `3/2 + 1/2r i` is the quaternion
//! with scalar part 3/2 and i-coefficient (1/2)√−d. Repeated basis symbols
//! accumulate by addition, whitespace is ignored everywhere, and every error
//! carries the byte offset of the offending character.
//!
//! Decimal and parenthesized complex coefficients belong to the floating
//! realization; exact parsing accepts integers and rationals only (where
//! arithmetic is arbitrary-precision, so the only malformed number is a zero
//! denominator).

use core::fmt;
use macfarlane::{CQuat, GenAlgebraContext, GenQuat, QuadExt, Scalar};
use num_bigint::BigInt;
use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// Positioned parse failure; `offset` indexes bytes of the original input.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseError {
    pub offset: usize,
    pub message: String,
}

impl ParseError {
    fn new(offset: usize, message: impl Into<String>) -> Self {
        Self {
            offset,
            message: message.into(),
        }
    }
}

impl fmt::Display for ParseError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "parse error at byte {}: {}", self.offset, self.message)
    }
}

impl std::error::Error for ParseError {}

#[derive(Debug, Clone, PartialEq)]
enum Coeff {
    /// Plain digits: meaningful in both realizations.
    Integer(String),
    /// numerator/denominator digit strings.
    Rational(String, String),
    /// Carried a decimal point or exponent: floating realization only.
    Decimal(f64),
    /// Parenthesized re ± im I literal: floating realization only.
    Complex(f64, f64),
}

#[derive(Debug, Clone, PartialEq)]
struct Term {
    sign: i8,
    coeff: Option<Coeff>,
    radical: bool,
    /// 0 = scalar, 1 = i, 2 = j, 3 = ij.
    basis: usize,
    offset: usize,
}

/// Character stream with original byte offsets, whitespace already removed.
struct Scanner {
    chars: Vec<(char, usize)>,
    pos: usize,
    end: usize,
}

impl Scanner {
    fn new(text: &str) -> Self {
        Self {
            chars: text
                .char_indices()
                .filter(|(_, c)| !c.is_whitespace())
                .map(|(at, c)| (c, at))
                .collect(),
            pos: 0,
            end: text.len(),
        }
    }

    fn peek(&self) -> Option<char> {
        self.chars.get(self.pos).map(|&(c, _)| c)
    }

    /// Byte offset of the current character, or the end of the input.
    fn offset(&self) -> usize {
        self.chars.get(self.pos).map_or(self.end, |&(_, at)| at)
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.peek();
        if c.is_some() {
            self.pos += 1;
        }
        c
    }

    fn eat(&mut self, expected: char) -> bool {
        if self.peek() == Some(expected) {
            self.pos += 1;
            true
        } else {
            false
        }
    }

    fn expect(&mut self, expected: char, what: &str) -> Result<(), ParseError> {
        if self.eat(expected) {
            Ok(())
        } else {
            Err(ParseError::new(self.offset(), format!("expected {what}")))
        }
    }

    fn digits(&mut self) -> String {
        let mut out = String::new();
        while let Some(c) = self.peek() {
            if c.is_ascii_digit() {
                out.push(c);
                self.pos += 1;
            } else {
                break;
            }
        }
        out
    }
}

/// An unsigned number: digits, optionally continued by `/den` (rational) or
/// by a fraction/exponent (decimal).
fn scan_number(s: &mut Scanner) -> Result<Coeff, ParseError> {
    let start = s.offset();
    let int_part = s.digits();
    if int_part.is_empty() && s.peek() != Some('.') {
        return Err(ParseError::new(start, "expected a number"));
    }

    if !int_part.is_empty() && s.eat('/') {
        let den_at = s.offset();
        let den = s.digits();
        if den.is_empty() {
            return Err(ParseError::new(den_at, "expected a denominator"));
        }
        return Ok(Coeff::Rational(int_part, den));
    }

    let mut text = int_part;
    let mut is_decimal = false;
    if s.peek() == Some('.') {
        s.bump();
        let frac_at = s.offset();
        let frac = s.digits();
        if text.is_empty() && frac.is_empty() {
            return Err(ParseError::new(start, "expected a number"));
        }
        if frac.is_empty() {
            return Err(ParseError::new(frac_at, "expected digits after '.'"));
        }
        text.push('.');
        text.push_str(&frac);
        is_decimal = true;
    }
    if matches!(s.peek(), Some('e') | Some('E')) {
        s.bump();
        let mut exp = String::new();
        if matches!(s.peek(), Some('+') | Some('-')) {
            exp.push(s.bump().unwrap());
        }
        let exp_at = s.offset();
        let digits = s.digits();
        if digits.is_empty() {
            return Err(ParseError::new(exp_at, "expected exponent digits"));
        }
        exp.push_str(&digits);
        text.push('e');
        text.push_str(&exp);
        is_decimal = true;
    }

    if is_decimal {
        let value: f64 = text
            .parse()
            .map_err(|_| ParseError::new(start, "malformed number"))?;
        if !value.is_finite() {
            return Err(ParseError::new(start, "number overflows"));
        }
        Ok(Coeff::Decimal(value))
    } else {
        Ok(Coeff::Integer(text))
    }
}

/// A real literal inside a complex coefficient, with an optional sign.
fn scan_signed_real(s: &mut Scanner) -> Result<f64, ParseError> {
    let negative = if s.eat('-') {
        true
    } else {
        s.eat('+');
        false
    };
    let at = s.offset();
    let value = match scan_number(s)? {
        Coeff::Integer(text) => text
            .parse::<f64>()
            .ok()
            .filter(|v| v.is_finite())
            .ok_or_else(|| ParseError::new(at, "number overflows"))?,
        Coeff::Decimal(v) => v,
        Coeff::Rational(..) => {
            return Err(ParseError::new(
                at,
                "complex coefficients take real parts, not rationals",
            ))
        }
        Coeff::Complex(..) => unreachable!("scan_number never returns a complex literal"),
    };
    Ok(if negative { -value } else { value })
}

fn scan_term(s: &mut Scanner, sign: i8) -> Result<Term, ParseError> {
    let offset = s.offset();
    match s.peek() {
        Some(c) if c.is_ascii_digit() || c == '.' => {
            let coeff = scan_number(s)?;
            let radical = s.eat('r');
            let basis = scan_basis_opt(s);
            Ok(Term {
                sign,
                coeff: Some(coeff),
                radical,
                basis,
                offset,
            })
        }
        Some('(') => {
            s.bump();
            let re = scan_signed_real(s)?;
            let im_sign = match s.bump() {
                Some('+') => 1.0,
                Some('-') => -1.0,
                _ => {
                    return Err(ParseError::new(
                        s.offset(),
                        "expected '+' or '-' between the parts of a complex coefficient",
                    ))
                }
            };
            let im_at = s.offset();
            let im = match scan_number(s)? {
                Coeff::Integer(text) => text
                    .parse::<f64>()
                    .ok()
                    .filter(|v| v.is_finite())
                    .ok_or_else(|| ParseError::new(im_at, "number overflows"))?,
                Coeff::Decimal(v) => v,
                _ => {
                    return Err(ParseError::new(
                        im_at,
                        "complex coefficients take real parts, not rationals",
                    ))
                }
            };
            s.expect('I', "'I' to close the imaginary part")?;
            s.expect(')', "')' to close the complex coefficient")?;
            let basis = scan_basis_opt(s);
            Ok(Term {
                sign,
                coeff: Some(Coeff::Complex(re, im_sign * im)),
                radical: false,
                basis,
                offset,
            })
        }
        Some('i') => {
            s.bump();
            Ok(Term {
                sign,
                coeff: None,
                radical: false,
                basis: 1,
                offset,
            })
        }
        Some('j') => {
            s.bump();
            Ok(Term {
                sign,
                coeff: None,
                radical: false,
                basis: 2,
                offset,
            })
        }
        Some('k') => {
            s.bump();
            Ok(Term {
                sign,
                coeff: None,
                radical: false,
                basis: 3,
                offset,
            })
        }
        Some(_) => Err(ParseError::new(
            offset,
            "expected a coefficient or basis symbol",
        )),
        None => Err(ParseError::new(offset, "expected a term")),
    }
}

fn scan_basis_opt(s: &mut Scanner) -> usize {
    match s.peek() {
        Some('i') => {
            s.bump();
            1
        }
        Some('j') => {
            s.bump();
            2
        }
        Some('k') => {
            s.bump();
            3
        }
        _ => 0,
    }
}

fn parse_terms(text: &str) -> Result<Vec<Term>, ParseError> {
    let mut s = Scanner::new(text);
    if s.peek().is_none() {
        return Err(ParseError::new(0, "empty input"));
    }
    let mut sign: i8 = if s.eat('-') {
        -1
    } else {
        s.eat('+');
        1
    };
    let mut terms = Vec::new();
    loop {
        terms.push(scan_term(&mut s, sign)?);
        match s.peek() {
            None => return Ok(terms),
            Some('+') => {
                s.bump();
                sign = 1;
            }
            Some('-') => {
                s.bump();
                sign = -1;
            }
            Some(_) => {
                return Err(ParseError::new(
                    s.offset(),
                    "expected '+' or '-' between terms",
                ))
            }
        }
    }
}

/// Parse into a complex quaternion over the standard algebra; `d` gives the
/// value of the radical, `r` ↦ √−d = 𝕚√d.
pub fn parse_float_quaternion(text: &str, d: f64) -> Result<CQuat, ParseError> {
    let terms = parse_terms(text)?;
    let mut comps = [Complex64::new(0.0, 0.0); 4];
    for t in &terms {
        let base = match &t.coeff {
            None => Complex64::new(1.0, 0.0),
            Some(Coeff::Integer(text)) => {
                let v: f64 = text
                    .parse()
                    .ok()
                    .filter(|v: &f64| v.is_finite())
                    .ok_or_else(|| ParseError::new(t.offset, "number overflows"))?;
                Complex64::new(v, 0.0)
            }
            Some(Coeff::Rational(num, den)) => {
                let n: f64 = num
                    .parse()
                    .ok()
                    .filter(|v: &f64| v.is_finite())
                    .ok_or_else(|| ParseError::new(t.offset, "number overflows"))?;
                let m: f64 = den
                    .parse()
                    .ok()
                    .filter(|v: &f64| v.is_finite())
                    .ok_or_else(|| ParseError::new(t.offset, "number overflows"))?;
                if m == 0.0 {
                    return Err(ParseError::new(t.offset, "zero denominator"));
                }
                Complex64::new(n / m, 0.0)
            }
            Some(Coeff::Decimal(v)) => Complex64::new(*v, 0.0),
            Some(Coeff::Complex(re, im)) => Complex64::new(*re, *im),
        };
        let base = if t.radical {
            base * Complex64::new(0.0, d.sqrt())
        } else {
            base
        };
        comps[t.basis] += if t.sign < 0 { -base } else { base };
    }
    Ok(CQuat::new(
        comps[0],
        comps[1],
        comps[2],
        comps[3],
        CQuat::standard_algebra(),
    ))
}

/// Parse into an exact quaternion over the context's field ℚ(√−d).
/// Rational arithmetic is arbitrary-precision, so no magnitude overflows;
/// decimal and complex literals are rejected as inexact.
pub fn parse_exact_quaternion(
    text: &str,
    ctx: &GenAlgebraContext,
) -> Result<GenQuat, ParseError> {
    let terms = parse_terms(text)?;
    let mut comps = [
        QuadExt::zero(),
        QuadExt::zero(),
        QuadExt::zero(),
        QuadExt::zero(),
    ];
    for t in &terms {
        let rational = match &t.coeff {
            None => BigRational::one(),
            Some(Coeff::Integer(text)) => BigRational::from_integer(
                BigInt::parse_bytes(text.as_bytes(), 10)
                    .ok_or_else(|| ParseError::new(t.offset, "malformed integer"))?,
            ),
            Some(Coeff::Rational(num, den)) => {
                let n = BigInt::parse_bytes(num.as_bytes(), 10)
                    .ok_or_else(|| ParseError::new(t.offset, "malformed numerator"))?;
                let m = BigInt::parse_bytes(den.as_bytes(), 10)
                    .ok_or_else(|| ParseError::new(t.offset, "malformed denominator"))?;
                if m.is_zero() {
                    return Err(ParseError::new(t.offset, "zero denominator"));
                }
                BigRational::new(n, m)
            }
            Some(Coeff::Decimal(_)) => {
                return Err(ParseError::new(
                    t.offset,
                    "decimal literals are not exact; use rationals in exact mode",
                ))
            }
            Some(Coeff::Complex(..)) => {
                return Err(ParseError::new(
                    t.offset,
                    "complex coefficients require float mode",
                ))
            }
        };
        let rational = if t.sign < 0 { -rational } else { rational };
        let coefficient = if t.radical {
            ctx.scalar(BigRational::zero(), rational)
        } else {
            ctx.scalar(rational, BigRational::zero())
        };
        comps[t.basis] = comps[t.basis].clone() + coefficient;
    }
    let [w, x, y, z] = comps;
    Ok(ctx.quat(w, x, y, z))
}

fn fmt_real(x: f64) -> String {
    format!("{x}")
}

fn push_term(parts: &mut Vec<(bool, String)>, negative: bool, body: String) {
    parts.push((negative, body));
}

fn join_terms(parts: Vec<(bool, String)>) -> String {
    if parts.is_empty() {
        return "0".to_string();
    }
    let mut out = String::new();
    for (idx, (negative, body)) in parts.iter().enumerate() {
        if idx == 0 {
            if *negative {
                out.push('-');
            }
        } else {
            out.push_str(if *negative { " - " } else { " + " });
        }
        out.push_str(body);
    }
    out
}

/// Canonical text form: terms ordered scalar, i, j, k; real coefficients
/// pulled out of the sign; unit coefficients elided (`k`, not `1k`); complex
/// coefficients parenthesized. `parse_float_quaternion` inverts this exactly
/// because the shortest-round-trip float formatting is itself exact.
pub fn format_float_quaternion(q: &CQuat) -> String {
    const BASIS: [&str; 4] = ["", "i", "j", "k"];
    let comps = [q.w, q.x, q.y, q.z];
    let mut parts = Vec::new();
    for (c, sym) in comps.iter().zip(BASIS) {
        if c.re == 0.0 && c.im == 0.0 {
            continue;
        }
        if c.im == 0.0 {
            let m = c.re.abs();
            let body = if sym.is_empty() {
                fmt_real(m)
            } else if m == 1.0 {
                sym.to_string()
            } else {
                format!("{}{}", fmt_real(m), sym)
            };
            push_term(&mut parts, c.re < 0.0, body);
        } else {
            let sep = if c.im < 0.0 { '-' } else { '+' };
            let body = format!("({}{}{}I){}", fmt_real(c.re), sep, fmt_real(c.im.abs()), sym);
            push_term(&mut parts, false, body);
        }
    }
    join_terms(parts)
}

/// Canonical exact form: each coefficient u + v√−d contributes a rational
/// term and a radical (`r`-suffixed) term, in that order per basis symbol.
pub fn format_exact_quaternion(q: &GenQuat) -> String {
    const BASIS: [&str; 4] = ["", "i", "j", "k"];
    let comps = [&q.w, &q.x, &q.y, &q.z];
    let mut parts = Vec::new();
    for (c, sym) in comps.iter().zip(BASIS) {
        let u = c.rational_part();
        if !u.is_zero() {
            let m = u.abs();
            let body = if sym.is_empty() {
                format!("{m}")
            } else if m.is_one() {
                sym.to_string()
            } else {
                format!("{m}{sym}")
            };
            push_term(&mut parts, u.is_negative(), body);
        }
        let v = c.radical_part();
        if !v.is_zero() {
            let body = format!("{}r{}", v.abs(), sym);
            push_term(&mut parts, v.is_negative(), body);
        }
    }
    join_terms(parts)
}

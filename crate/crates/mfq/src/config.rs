//! Run configuration shared by every command: arithmetic mode, tolerance,
//! algebra parameters and output format.

use std::fmt;
use std::str::FromStr;

use macfarlane::GenAlgebraContext;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, ToPrimitive, Zero};

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Mode {
    /// f64 arithmetic over the standard algebra.
    Float,
    /// Arbitrary-precision rational arithmetic over ℚ(√−d).
    Exact,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum OutputFormat {
    /// Deterministic single-line JSON.
    Json,
    /// Human-readable key: value lines.
    Plain,
}

/// The three positive parameters (a, b, d) selecting the quaternion algebra
/// (a,b / ℚ(√−d)). Parsed from a comma-separated list of positive rationals,
/// e.g. `1,1,1` or `2,3,5`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AlgebraSpec {
    pub a: BigRational,
    pub b: BigRational,
    pub d: BigRational,
}

impl AlgebraSpec {
    pub fn standard() -> Self {
        Self {
            a: BigRational::from_integer(1.into()),
            b: BigRational::from_integer(1.into()),
            d: BigRational::from_integer(1.into()),
        }
    }

    /// True when the floating geometry pipeline applies (a = b = 1); d may
    /// still be arbitrary since √−d embeds into the complex coefficients.
    pub fn is_standard_algebra(&self) -> bool {
        self.a.is_one() && self.b.is_one()
    }

    pub fn context(&self) -> GenAlgebraContext {
        GenAlgebraContext::new(self.a.clone(), self.b.clone(), self.d.clone())
            .expect("AlgebraSpec components are validated positive at parse time")
    }

    pub fn a_f64(&self) -> f64 {
        rational_to_f64(&self.a)
    }

    pub fn b_f64(&self) -> f64 {
        rational_to_f64(&self.b)
    }

    pub fn d_f64(&self) -> f64 {
        rational_to_f64(&self.d)
    }
}

fn rational_to_f64(r: &BigRational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

fn parse_positive_rational(text: &str) -> Result<BigRational, String> {
    let text = text.trim();
    let value = match text.split_once('/') {
        Some((num, den)) => {
            let n = BigInt::from_str(num.trim()).map_err(|e| format!("bad numerator: {e}"))?;
            let m = BigInt::from_str(den.trim()).map_err(|e| format!("bad denominator: {e}"))?;
            if m.is_zero() {
                return Err("zero denominator".to_string());
            }
            BigRational::new(n, m)
        }
        None => BigRational::from_integer(
            BigInt::from_str(text).map_err(|e| format!("bad integer: {e}"))?,
        ),
    };
    if !value.is_positive() {
        return Err(format!("algebra parameters must be positive, got {value}"));
    }
    Ok(value)
}

impl FromStr for AlgebraSpec {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts: Vec<&str> = s.split(',').collect();
        if parts.len() != 3 {
            return Err(format!(
                "expected three comma-separated values a,b,d, got {} part(s)",
                parts.len()
            ));
        }
        Ok(Self {
            a: parse_positive_rational(parts[0])?,
            b: parse_positive_rational(parts[1])?,
            d: parse_positive_rational(parts[2])?,
        })
    }
}

impl fmt::Display for AlgebraSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{},{},{}", self.a, self.b, self.d)
    }
}

/// Everything a command needs beyond its own arguments.
#[derive(Debug, Clone)]
pub struct Config {
    pub mode: Mode,
    pub tol: f64,
    pub algebra: AlgebraSpec,
    pub output: OutputFormat,
    pub seed: u64,
    pub cases: Option<usize>,
}

impl Config {
    pub fn validate(&self) -> Result<(), String> {
        if !(self.tol > 0.0) {
            return Err(format!("tolerance must be positive, got {}", self.tol));
        }
        Ok(())
    }
}

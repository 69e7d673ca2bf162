//! Exact rational scalars and dense rational vectors.
//!
//! All coefficients in this crate are [`Rational`] values backed by
//! arbitrary-precision integers, always stored in lowest terms with a
//! positive denominator. Nothing is ever rounded.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

pub use num_rational::BigRational as Rational;

/// A dense rational vector.
pub type RVector = Vec<Rational>;

/// Shorthand for the rational `num / den`.
///
/// # Panics
///
/// Panics if `den == 0`.
pub fn rat(num: i64, den: i64) -> Rational {
    Rational::new(BigInt::from(num), BigInt::from(den))
}

/// The integer `v` as a rational.
pub fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

/// Builds a rational vector from integers.
pub fn ivec(values: &[i64]) -> RVector {
    values.iter().map(|&v| int(v)).collect()
}

/// The zero vector of length `n`.
pub fn zeros(n: usize) -> RVector {
    vec![Rational::zero(); n]
}

/// The `i`-th canonical basis vector of length `n`.
pub fn unit(n: usize, i: usize) -> RVector {
    let mut v = zeros(n);
    v[i] = Rational::one();
    v
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseRationalError(pub String);

impl fmt::Display for ParseRationalError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid rational {:?}", self.0)
    }
}

impl std::error::Error for ParseRationalError {}

/// Parses `"p"`, `"p/q"` or a finite decimal such as `"0.25"`.
///
/// Both the ASCII hyphen and the Unicode minus sign (U+2212) are accepted
/// as a leading sign. Decimals are converted exactly (`"0.1"` is `1/10`).
pub fn parse_rational(text: &str) -> Result<Rational, ParseRationalError> {
    let err = || ParseRationalError(text.to_string());
    let trimmed = text.trim();
    let (negative, body) = if let Some(rest) = trimmed.strip_prefix('-') {
        (true, rest)
    } else if let Some(rest) = trimmed.strip_prefix('\u{2212}') {
        (true, rest)
    } else if let Some(rest) = trimmed.strip_prefix('+') {
        (false, rest)
    } else {
        (false, trimmed)
    };
    if body.is_empty() || body.starts_with(['-', '+', '\u{2212}']) {
        return Err(err());
    }
    let value = if let Some((num, den)) = body.split_once('/') {
        let num = parse_digits(num).ok_or_else(err)?;
        let den = parse_digits(den).ok_or_else(err)?;
        if den.is_zero() {
            return Err(err());
        }
        Rational::new(num, den)
    } else if let Some((whole, frac)) = body.split_once('.') {
        if whole.is_empty() && frac.is_empty() {
            return Err(err());
        }
        let whole = if whole.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(whole).ok_or_else(err)?
        };
        let scale = num_traits::pow(BigInt::from(10), frac.len());
        let frac = if frac.is_empty() {
            BigInt::zero()
        } else {
            parse_digits(frac).ok_or_else(err)?
        };
        Rational::new(whole * &scale + frac, scale)
    } else {
        Rational::from_integer(parse_digits(body).ok_or_else(err)?)
    };
    Ok(if negative { -value } else { value })
}

fn parse_digits(s: &str) -> Option<BigInt> {
    if s.is_empty() || !s.bytes().all(|b| b.is_ascii_digit()) {
        return None;
    }
    s.parse().ok()
}

/// Parses a comma-separated list of rationals, e.g. `"-2,1,-5/3"`.
pub fn parse_vector(text: &str) -> Result<RVector, ParseRationalError> {
    if text.trim().is_empty() {
        return Err(ParseRationalError(text.to_string()));
    }
    text.split(',').map(parse_rational).collect()
}

/// Formats a rational as `p` or `p/q` (ASCII minus).
pub fn fmt_rational(v: &Rational) -> String {
    if v.is_integer() {
        v.numer().to_string()
    } else {
        format!("{}/{}", v.numer(), v.denom())
    }
}

/// Formats a vector as `a,b,c` (the textual file format).
pub fn fmt_list(v: &[Rational]) -> String {
    v.iter().map(fmt_rational).collect::<Vec<_>>().join(",")
}

/// Formats a vector as `(a,b,c)`.
pub fn fmt_vector(v: &[Rational]) -> String {
    format!("({})", fmt_list(v))
}

pub fn to_f64(v: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    v.to_f64().unwrap_or(f64::NAN)
}

pub fn dot(a: &[Rational], b: &[Rational]) -> Rational {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub fn add(a: &[Rational], b: &[Rational]) -> RVector {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn sub(a: &[Rational], b: &[Rational]) -> RVector {
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn scale(a: &[Rational], s: &Rational) -> RVector {
    a.iter().map(|x| x * s).collect()
}

pub fn neg(a: &[Rational]) -> RVector {
    a.iter().map(|x| -x).collect()
}

/// `a + s * b`
pub fn axpy(a: &[Rational], s: &Rational, b: &[Rational]) -> RVector {
    a.iter().zip(b).map(|(x, y)| x + s * y).collect()
}

/// `(1 - t) a + t b`
pub fn lerp(a: &[Rational], b: &[Rational], t: &Rational) -> RVector {
    let s = Rational::one() - t;
    a.iter().zip(b).map(|(x, y)| &s * x + t * y).collect()
}

pub fn is_zero(a: &[Rational]) -> bool {
    a.iter().all(Zero::is_zero)
}

pub fn l1(a: &[Rational]) -> Rational {
    a.iter().map(|x| x.abs()).sum()
}

pub fn linf(a: &[Rational]) -> Rational {
    a.iter().map(|x| x.abs()).max().unwrap_or_else(Rational::zero)
}

pub fn sq_l2(a: &[Rational]) -> Rational {
    a.iter().map(|x| x * x).sum()
}

/// Componentwise `a <= b`.
pub fn le(a: &[Rational], b: &[Rational]) -> bool {
    a.iter().zip(b).all(|(x, y)| x <= y)
}

/// The smallest positive multiple of `v` with coprime integer entries.
///
/// Returns `v` unchanged when it is the zero vector.
pub fn primitive(v: &[Rational]) -> RVector {
    let mut lcm = BigInt::one();
    for x in v {
        lcm = lcm.lcm(x.denom());
    }
    let ints: Vec<BigInt> = v.iter().map(|x| (x * &lcm).to_integer()).collect();
    let mut g = BigInt::zero();
    for x in &ints {
        g = g.gcd(x);
    }
    if g.is_zero() {
        return v.to_vec();
    }
    ints.into_iter()
        .map(|x| Rational::from_integer(x / &g))
        .collect()
}

/// True when `a = k b` for some rational `k > 0`.
pub fn positively_parallel(a: &[Rational], b: &[Rational]) -> bool {
    !is_zero(a) && primitive(a) == primitive(b)
}

//! Norm choices and exactly represented norm values.
//!
//! Euclidean norms of rational vectors are generally irrational, so every
//! norm value is carried as a [`Root`]: the nonnegative square root of an
//! exact rational. Comparisons, products and quotients of roots stay exact;
//! a float is only produced on request.

use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::rational::{self, fmt_rational, Rational};

/// `sqrt(square)` for a rational `square >= 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Root {
    square: Rational,
}

impl Root {
    /// # Panics
    ///
    /// Panics if `square` is negative.
    pub fn from_square(square: Rational) -> Self {
        assert!(!square.is_negative(), "square root of a negative rational");
        Self { square }
    }

    /// The root whose value is `|v|`.
    pub fn from_rational(v: &Rational) -> Self {
        Self { square: v * v }
    }

    pub fn zero() -> Self {
        Self {
            square: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        Self {
            square: Rational::one(),
        }
    }

    pub fn square(&self) -> &Rational {
        &self.square
    }

    pub fn is_zero(&self) -> bool {
        self.square.is_zero()
    }

    /// The exact value when it is rational.
    pub fn as_rational(&self) -> Option<Rational> {
        let n = exact_isqrt(self.square.numer())?;
        let d = exact_isqrt(self.square.denom())?;
        Some(Rational::new(n, d))
    }

    pub fn to_f64(&self) -> f64 {
        rational::to_f64(&self.square).sqrt()
    }

    pub fn mul(&self, other: &Root) -> Root {
        Root {
            square: &self.square * &other.square,
        }
    }

    /// # Panics
    ///
    /// Panics if `other` is zero.
    pub fn div(&self, other: &Root) -> Root {
        assert!(!other.is_zero(), "division by a zero root");
        Root {
            square: &self.square / &other.square,
        }
    }

    pub fn mul_rational(&self, r: &Rational) -> Root {
        Root {
            square: &self.square * r * r,
        }
    }
}

fn exact_isqrt(n: &BigInt) -> Option<BigInt> {
    if n.is_negative() {
        return None;
    }
    let r = n.sqrt();
    (&r * &r == *n).then_some(r)
}

impl PartialOrd for Root {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for Root {
    fn cmp(&self, other: &Self) -> Ordering {
        self.square.cmp(&other.square)
    }
}

impl fmt::Display for Root {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(v) => write!(f, "{}", fmt_rational(&v)),
            None => write!(f, "sqrt({})", fmt_rational(&self.square)),
        }
    }
}

/// Compares `a * sqrt(ra)` with `b * sqrt(rb)` exactly.
pub fn cmp_scaled(a: &Rational, ra: &Root, b: &Rational, rb: &Root) -> Ordering {
    let sa = sign_of(a, ra);
    let sb = sign_of(b, rb);
    if sa != sb {
        return sa.cmp(&sb);
    }
    let lhs = a * a * ra.square();
    let rhs = b * b * rb.square();
    match sa {
        1 => lhs.cmp(&rhs),
        -1 => rhs.cmp(&lhs),
        _ => Ordering::Equal,
    }
}

fn sign_of(a: &Rational, r: &Root) -> i8 {
    if a.is_zero() || r.is_zero() {
        0
    } else if a.is_positive() {
        1
    } else {
        -1
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NormKind {
    Euclidean,
    L1,
    Linf,
}

impl NormKind {
    pub fn dual(self) -> NormKind {
        match self {
            NormKind::Euclidean => NormKind::Euclidean,
            NormKind::L1 => NormKind::Linf,
            NormKind::Linf => NormKind::L1,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            NormKind::Euclidean => "euclidean",
            NormKind::L1 => "l1",
            NormKind::Linf => "linf",
        }
    }

    pub fn is_polyhedral(self) -> bool {
        !matches!(self, NormKind::Euclidean)
    }
}

impl FromStr for NormKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "euclidean" | "l2" => Ok(NormKind::Euclidean),
            "l1" => Ok(NormKind::L1),
            "linf" => Ok(NormKind::Linf),
            other => Err(format!("unknown norm {other:?}")),
        }
    }
}

impl fmt::Display for NormKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Which space a norm lives on.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Space {
    /// Decision space `R^n`.
    Decision,
    /// Image (objective) space `R^q`.
    Image,
    /// Parameter space `R^T`; always sup-norm, dual l1.
    Parameter,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct NormSpec {
    pub kind: NormKind,
    pub space: Space,
}

impl NormSpec {
    pub fn new(kind: NormKind, space: Space) -> Self {
        Self { kind, space }
    }

    /// The parameter-space norm. It is fixed: primal sup-norm, dual l1.
    pub fn parameter() -> Self {
        Self {
            kind: NormKind::Linf,
            space: Space::Parameter,
        }
    }

    pub fn dual(self) -> Self {
        Self {
            kind: self.kind.dual(),
            space: self.space,
        }
    }
}

/// `||v||` under `spec`.
pub fn norm_value(spec: NormSpec, v: &[Rational]) -> Root {
    match spec.kind {
        NormKind::Euclidean => Root::from_square(rational::sq_l2(v)),
        NormKind::L1 => Root::from_rational(&rational::l1(v)),
        NormKind::Linf => Root::from_rational(&rational::linf(v)),
    }
}

/// `||v||_*`, the dual norm of `spec` evaluated at `v`.
pub fn dual_norm_value(spec: NormSpec, v: &[Rational]) -> Root {
    norm_value(spec.dual(), v)
}

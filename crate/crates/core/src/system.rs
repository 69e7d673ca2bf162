//! Parameter-affine inequality systems `<a, x> <= phi(b)`.

use std::fmt;

use num_traits::{One, Signed, Zero};

use crate::problem::Problem;
use crate::rational::{self, fmt_rational, RVector, Rational};

/// `b -> <gamma, b> + kappa`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct AffineForm {
    pub coefficients: RVector,
    pub constant: Rational,
}

impl AffineForm {
    pub fn zero(m: usize) -> Self {
        Self {
            coefficients: rational::zeros(m),
            constant: Rational::zero(),
        }
    }

    /// The coordinate form `b -> b_t`.
    pub fn coordinate(m: usize, t: usize) -> Self {
        Self {
            coefficients: rational::unit(m, t),
            constant: Rational::zero(),
        }
    }

    pub fn new(coefficients: RVector, constant: Rational) -> Self {
        Self {
            coefficients,
            constant,
        }
    }

    pub fn eval(&self, b: &[Rational]) -> Rational {
        rational::dot(&self.coefficients, b) + &self.constant
    }

    pub fn add(&self, other: &AffineForm) -> AffineForm {
        AffineForm {
            coefficients: rational::add(&self.coefficients, &other.coefficients),
            constant: &self.constant + &other.constant,
        }
    }

    pub fn scale(&self, s: &Rational) -> AffineForm {
        AffineForm {
            coefficients: rational::scale(&self.coefficients, s),
            constant: &self.constant * s,
        }
    }

    /// `s * self + t * other`
    pub fn combine(&self, s: &Rational, other: &AffineForm, t: &Rational) -> AffineForm {
        self.scale(s).add(&other.scale(t))
    }

    pub fn is_zero(&self) -> bool {
        self.constant.is_zero() && rational::is_zero(&self.coefficients)
    }

    /// A form that is nonnegative for every `b`: the zero-coefficient forms
    /// with a nonnegative constant.
    pub fn is_tautologically_nonnegative(&self) -> bool {
        rational::is_zero(&self.coefficients) && !self.constant.is_negative()
    }
}

impl fmt::Display for AffineForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut terms: Vec<(Rational, String)> = self
            .coefficients
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(t, c)| (c.clone(), format!("b{}", t + 1)))
            .collect();
        if !self.constant.is_zero() {
            terms.push((self.constant.clone(), String::new()));
        }
        f.write_str(&fmt_terms(&terms))
    }
}

/// Renders `sum coef * name` with `+`/`-` separators; an empty name is a
/// constant term.
pub(crate) fn fmt_terms(terms: &[(Rational, String)]) -> String {
    if terms.is_empty() {
        return "0".into();
    }
    let mut out = String::new();
    for (i, (c, name)) in terms.iter().enumerate() {
        let mag = c.abs();
        if i == 0 {
            if c.is_negative() {
                out.push('-');
            }
        } else {
            out.push_str(if c.is_negative() { " - " } else { " + " });
        }
        if name.is_empty() || !mag.is_one() {
            out.push_str(&fmt_rational(&mag));
        }
        out.push_str(name);
    }
    out
}

/// One inequality `<lhs, x> <= rhs(b)`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Row {
    pub lhs: RVector,
    pub rhs: AffineForm,
}

impl Row {
    pub fn new(lhs: RVector, rhs: AffineForm) -> Self {
        Self { lhs, rhs }
    }

    /// Positive rescaling to coprime integer coefficients over the whole row.
    pub fn canonical(&self) -> Row {
        let mut all = self.lhs.clone();
        all.extend(self.rhs.coefficients.iter().cloned());
        all.push(self.rhs.constant.clone());
        let p = rational::primitive(&all);
        let n = self.lhs.len();
        let m = self.rhs.coefficients.len();
        Row {
            lhs: p[..n].to_vec(),
            rhs: AffineForm::new(p[n..n + m].to_vec(), p[n + m].clone()),
        }
    }

    pub fn scale(&self, s: &Rational) -> Row {
        Row {
            lhs: rational::scale(&self.lhs, s),
            rhs: self.rhs.scale(s),
        }
    }

    pub fn is_consistency(&self) -> bool {
        rational::is_zero(&self.lhs)
    }

    /// `<lhs, x> <= rhs(b)`
    pub fn holds(&self, x: &[Rational], b: &[Rational]) -> bool {
        rational::dot(&self.lhs, x) <= self.rhs.eval(b)
    }
}

impl fmt::Display for Row {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let terms: Vec<(Rational, String)> = self
            .lhs
            .iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(j, c)| (c.clone(), format!("x{}", j + 1)))
            .collect();
        write!(f, "{} <= {}", fmt_terms(&terms), self.rhs)
    }
}

/// Inequalities in `x` whose right-hand sides are affine in `b in R^m`.
///
/// Rows with a zero left-hand side are pure conditions on `b` and are kept
/// apart in `consistency_rows`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymbolicSystem {
    pub n: usize,
    pub m: usize,
    pub rows: Vec<Row>,
    pub consistency_rows: Vec<Row>,
}

impl SymbolicSystem {
    pub fn new(n: usize, m: usize) -> Self {
        Self {
            n,
            m,
            rows: Vec::new(),
            consistency_rows: Vec::new(),
        }
    }

    /// The feasible-set system `<a_t, x> <= b_t`.
    pub fn from_problem(problem: &Problem) -> Self {
        let m = problem.m();
        let mut sys = Self::new(problem.n, m);
        for (t, a) in problem.rows.iter().enumerate() {
            sys.push(Row::new(a.clone(), AffineForm::coordinate(m, t)));
        }
        sys
    }

    /// Appends a row, routing zero left-hand sides to the consistency rows.
    pub fn push(&mut self, row: Row) {
        if row.is_consistency() {
            self.consistency_rows.push(row);
        } else {
            self.rows.push(row);
        }
    }

    /// Every row canonically scaled, order preserved.
    pub fn canonical(&self) -> SymbolicSystem {
        SymbolicSystem {
            n: self.n,
            m: self.m,
            rows: self.rows.iter().map(Row::canonical).collect(),
            consistency_rows: self.consistency_rows.iter().map(Row::canonical).collect(),
        }
    }

    /// Whether the parameter conditions hold at `b`.
    pub fn consistent_at(&self, b: &[Rational]) -> bool {
        self.consistency_rows
            .iter()
            .all(|r| !r.rhs.eval(b).is_negative())
    }

    /// The ordinary system obtained by fixing `b`, consistency rows included.
    pub fn instantiate(&self, b: &[Rational]) -> Halfspaces {
        let mut h = Halfspaces::new(self.n);
        for r in self.rows.iter().chain(&self.consistency_rows) {
            h.push(r.lhs.clone(), r.rhs.eval(b));
        }
        h
    }

    pub fn contains(&self, b: &[Rational], x: &[Rational]) -> bool {
        self.consistent_at(b) && self.rows.iter().all(|r| r.holds(x, b))
    }

    pub fn all_rows(&self) -> impl Iterator<Item = &Row> {
        self.rows.iter().chain(&self.consistency_rows)
    }
}

impl fmt::Display for SymbolicSystem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in &self.rows {
            writeln!(f, "{r}")?;
        }
        for r in &self.consistency_rows {
            writeln!(f, "{r}")?;
        }
        Ok(())
    }
}

/// A concrete H-representation `{x | <a_i, x> <= b_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Halfspaces {
    pub n: usize,
    pub a: Vec<RVector>,
    pub b: RVector,
}

impl Halfspaces {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            a: Vec::new(),
            b: Vec::new(),
        }
    }

    pub fn from_rows(n: usize, a: Vec<RVector>, b: RVector) -> Self {
        Self { n, a, b }
    }

    pub fn push(&mut self, a: RVector, b: Rational) {
        self.a.push(a);
        self.b.push(b);
    }

    pub fn len(&self) -> usize {
        self.a.len()
    }

    pub fn is_empty(&self) -> bool {
        self.a.is_empty()
    }

    pub fn contains(&self, x: &[Rational]) -> bool {
        self.a
            .iter()
            .zip(&self.b)
            .all(|(a, b)| rational::dot(a, x) <= *b)
    }

    /// Adds the equality `<a, x> = b` as two inequalities.
    pub fn push_equality(&mut self, a: RVector, b: Rational) {
        self.push(rational::neg(&a), -b.clone());
        self.push(a, b);
    }
}

//! Exact linear programming over `{x | <a_t, x> <= b_t}`.
//!
//! [`solve`] minimizes `<c, x>` and certifies every outcome. [`dual_face`]
//! returns the full set of optimal multipliers, whose negative is the
//! subdifferential of the optimal value function in the right-hand side.

mod simplex;

pub use simplex::{Lp, LpResult, Relation};

use num_traits::{Signed, Zero};

use crate::error::LpError;
use crate::linalg;
use crate::problem::Problem;
use crate::rational::{self, RVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LpStatus {
    Optimal,
    Infeasible,
    Unbounded,
}

/// A certified solution of `min <c,x> s.t. <a_t,x> <= b_t`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpOutcome {
    /// `lambda >= 0`, `sum lambda_t a_t = -c`, `<c,x> = -<b,lambda>`.
    Optimal {
        x: RVector,
        value: Rational,
        lambda: RVector,
    },
    /// `w >= 0`, `sum w_t a_t = 0`, `<b,w> < 0`.
    Infeasible { certificate: RVector },
    /// `x` feasible, `<a_t,ray> <= 0` for all t and `<c,ray> < 0`.
    Unbounded { x: RVector, ray: RVector },
}

impl LpOutcome {
    pub fn status(&self) -> LpStatus {
        match self {
            LpOutcome::Optimal { .. } => LpStatus::Optimal,
            LpOutcome::Infeasible { .. } => LpStatus::Infeasible,
            LpOutcome::Unbounded { .. } => LpStatus::Unbounded,
        }
    }

    pub fn value(&self) -> Option<&Rational> {
        match self {
            LpOutcome::Optimal { value, .. } => Some(value),
            _ => None,
        }
    }

    pub fn point(&self) -> Option<&RVector> {
        match self {
            LpOutcome::Optimal { x, .. } | LpOutcome::Unbounded { x, .. } => Some(x),
            LpOutcome::Infeasible { .. } => None,
        }
    }
}

pub fn solve(rows: &[RVector], b: &[Rational], c: &[Rational]) -> LpOutcome {
    let n = c.len();
    let mut lp = Lp::new(n).minimize(c.to_vec());
    for (a, bt) in rows.iter().zip(b) {
        lp.le(a.clone(), bt.clone());
    }
    match lp.solve() {
        LpResult::Optimal { x, value, y } => LpOutcome::Optimal {
            x,
            value,
            lambda: rational::neg(&y),
        },
        LpResult::Infeasible { y } => LpOutcome::Infeasible {
            certificate: rational::neg(&y),
        },
        LpResult::Unbounded { x, ray } => LpOutcome::Unbounded { x, ray },
    }
}

/// Whether `{x | <a_t,x> <= b_t}` is nonempty.
pub fn feasible(rows: &[RVector], b: &[Rational], n: usize) -> bool {
    solve(rows, b, &rational::zeros(n)).status() != LpStatus::Infeasible
}

/// `{lambda >= 0 | sum lambda_t a_t = -c, <b, lambda> = -value}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DualFace {
    pub rows: Vec<RVector>,
    pub b: RVector,
    pub c: RVector,
    pub value: Rational,
}

impl DualFace {
    pub fn m(&self) -> usize {
        self.rows.len()
    }

    /// The equality block `M lambda = r` of the H-representation.
    pub fn equalities(&self) -> (Vec<RVector>, RVector) {
        let n = self.c.len();
        let mut eqs = linalg::transpose(&self.rows, n);
        let mut rhs = rational::neg(&self.c);
        eqs.push(self.b.clone());
        rhs.push(-self.value.clone());
        (eqs, rhs)
    }

    pub fn contains(&self, lambda: &[Rational]) -> bool {
        let (eqs, rhs) = self.equalities();
        lambda.len() == self.m()
            && lambda.iter().all(|v| !v.is_negative())
            && eqs.iter().zip(&rhs).all(|(e, r)| rational::dot(e, lambda) == *r)
    }

    /// `max <w, lambda>` over the face; `None` when unbounded.
    pub fn maximize(&self, w: &[Rational]) -> Option<(Rational, RVector)> {
        let (eqs, rhs) = self.equalities();
        let mut lp = Lp::new(self.m()).maximize(w.to_vec()).all_nonnegative();
        for (e, r) in eqs.into_iter().zip(rhs) {
            lp.eq(e, r);
        }
        match lp.solve() {
            LpResult::Optimal { x, value, .. } => Some((-value, x)),
            LpResult::Unbounded { .. } => None,
            LpResult::Infeasible { .. } => unreachable!("dual face is nonempty by construction"),
        }
    }

    /// Extreme points, sorted lexicographically.
    pub fn vertices(&self) -> Vec<RVector> {
        let (eqs, rhs) = self.equalities();
        basic_feasible_points(&eqs, &rhs, self.m())
    }

    /// Extreme rays of the recession cone, each scaled to coprime integers.
    pub fn rays(&self) -> Vec<RVector> {
        let (mut eqs, mut rhs) = self.equalities();
        for r in rhs.iter_mut() {
            *r = Rational::zero();
        }
        eqs.push(vec![Rational::from_integer(1.into()); self.m()]);
        rhs.push(Rational::from_integer(1.into()));
        let mut out: Vec<RVector> = basic_feasible_points(&eqs, &rhs, self.m())
            .iter()
            .map(|v| rational::primitive(v))
            .collect();
        out.sort();
        out.dedup();
        out
    }

    pub fn is_bounded(&self) -> bool {
        self.rays().is_empty()
    }
}

/// Vertices of `{z >= 0 | M z = r}` by exhaustive basis enumeration.
pub fn basic_feasible_points(eqs: &[RVector], rhs: &[Rational], m: usize) -> Vec<RVector> {
    let aug: Vec<RVector> = eqs
        .iter()
        .zip(rhs)
        .map(|(e, r)| {
            let mut v = e.clone();
            v.push(r.clone());
            v
        })
        .collect();
    let (red, pivots) = linalg::rref(&aug);
    if pivots.last() == Some(&m) {
        return Vec::new();
    }
    let k = pivots.len();
    let reduced: Vec<RVector> = red.into_iter().take(k).collect();
    let mut out = Vec::new();
    if k == 0 {
        return vec![rational::zeros(m)];
    }
    for subset in combinations(m, k) {
        let sub: Vec<RVector> = reduced
            .iter()
            .map(|row| subset.iter().map(|&j| row[j].clone()).collect())
            .collect();
        let r: RVector = reduced.iter().map(|row| row[m].clone()).collect();
        let Some(sol) = linalg::solve_square(&sub, &r) else {
            continue;
        };
        if sol.iter().any(Signed::is_negative) {
            continue;
        }
        let mut z = rational::zeros(m);
        for (&j, v) in subset.iter().zip(sol) {
            z[j] = v;
        }
        out.push(z);
    }
    out.sort();
    out.dedup();
    out
}

/// All `k`-subsets of `0..m` in lexicographic order.
pub fn combinations(m: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
    fn rec(start: usize, m: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..m {
            if m - i < k - cur.len() {
                break;
            }
            cur.push(i);
            rec(i + 1, m, k, cur, out);
            cur.pop();
        }
    }
    rec(0, m, k, &mut cur, &mut out);
    out
}

/// The face of optimal multipliers of `min <c,x>` over `F(b)`.
pub fn dual_face(rows: &[RVector], b: &[Rational], c: &[Rational]) -> Result<DualFace, LpError> {
    if rows.len() != b.len() || rows.iter().any(|a| a.len() != c.len()) {
        return Err(LpError::DimensionMismatch(
            "rows, parameter and objective disagree".into(),
        ));
    }
    match solve(rows, b, c) {
        LpOutcome::Optimal { value, .. } => Ok(DualFace {
            rows: rows.to_vec(),
            b: b.to_vec(),
            c: c.to_vec(),
            value,
        }),
        LpOutcome::Infeasible { .. } => Err(LpError::NotSolvable("infeasible")),
        LpOutcome::Unbounded { .. } => Err(LpError::NotSolvable("unbounded")),
    }
}

/// Whether `-c` lies in `cone{a_t}`.
pub fn dual_consistent(rows: &[RVector], c: &[Rational]) -> bool {
    let m = rows.len();
    let mut lp = Lp::new(m).all_nonnegative();
    for (j, cj) in c.iter().enumerate() {
        lp.eq(rows.iter().map(|a| a[j].clone()).collect(), -cj.clone());
    }
    !matches!(lp.solve(), LpResult::Infeasible { .. })
}

/// Whether `b` lies in the domain of the nondominated-solution mapping.
///
/// Requires `F(b)` nonempty and some strictly positive weighting of the
/// objectives to be bounded below on it.
pub fn in_dom_s(problem: &Problem, b: &[Rational]) -> bool {
    feasible(&problem.rows, b, problem.n) && bounded_weight(problem).is_some()
}

/// Weights `w >= 1` with `sum w_i c_i` bounded below on every nonempty
/// `F(b)`, i.e. `-sum w_i c_i` in `cone{a_t}`. The uniform weighting is
/// tried first.
pub fn bounded_weight(problem: &Problem) -> Option<RVector> {
    let ones = vec![Rational::from_integer(1.into()); problem.q()];
    if dual_consistent(&problem.rows, &problem.composite(&ones)) {
        return Some(ones);
    }
    let (m, q) = (problem.m(), problem.q());
    let mut lp = weight_cone(problem);
    for i in 0..q {
        lp.ge(rational::unit(m + q, m + i), Rational::from_integer(1.into()));
    }
    match lp.solve() {
        LpResult::Optimal { x, .. } => Some(x[m..].to_vec()),
        _ => None,
    }
}

/// For each objective, the weight on the unit simplex maximizing its own
/// entry among weights with bounded scalarization. Empty when no such
/// weight exists.
pub fn extreme_bounded_weights(problem: &Problem) -> Vec<RVector> {
    let (m, q) = (problem.m(), problem.q());
    (0..q)
        .filter_map(|i| {
            let mut lp = weight_cone(problem).maximize(rational::unit(m + q, m + i));
            let mut sum = rational::zeros(m);
            sum.extend(vec![Rational::from_integer(1.into()); q]);
            lp.eq(sum, Rational::from_integer(1.into()));
            match lp.solve() {
                LpResult::Optimal { x, .. } => Some(x[m..].to_vec()),
                _ => None,
            }
        })
        .collect()
}

/// `{(lambda, w) >= 0 : sum lambda_t a_t + sum w_i c_i = 0}`.
fn weight_cone(problem: &Problem) -> Lp {
    let (m, q) = (problem.m(), problem.q());
    let mut lp = Lp::new(m + q).all_nonnegative();
    for j in 0..problem.n {
        let mut e: RVector = problem.rows.iter().map(|a| a[j].clone()).collect();
        e.extend(problem.objectives.iter().map(|c| c[j].clone()));
        lp.eq(e, Rational::zero());
    }
    lp
}

//! Redundant-row removal for parameter-affine systems.

use num_traits::{Signed, Zero};

use crate::lp::{Lp, LpResult};
use crate::rational::{self, RVector, Rational};
use crate::system::{Row, SymbolicSystem};

/// Result of [`remove_redundancy`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Pruned {
    pub system: SymbolicSystem,
    /// Rows implied by the others at the requested parameter only.
    pub locally_dropped: Vec<Row>,
}

/// Canonically scales every row and removes exact duplicates (first copy
/// kept) and constant tautologies among the consistency rows.
pub fn canonical_dedup(sys: &SymbolicSystem) -> SymbolicSystem {
    let mut out = SymbolicSystem::new(sys.n, sys.m);
    for r in &sys.rows {
        let c = r.canonical();
        if !out.rows.contains(&c) {
            out.rows.push(c);
        }
    }
    for r in &sys.consistency_rows {
        let c = r.canonical();
        if c.rhs.is_tautologically_nonnegative() || out.consistency_rows.contains(&c) {
            continue;
        }
        out.consistency_rows.push(c);
    }
    out
}

/// Drops rows that are implied by the remaining ones.
///
/// Without `at`, a row is dropped only when it holds at every `(x, b)`
/// satisfying the other rows and the consistency rows, which is decided by
/// one LP over the joint `(x, b)` space. With `at = Some(b)` the survivors
/// are further tested at that fixed parameter and the additional drops are
/// reported in [`Pruned::locally_dropped`]. Rows are tested from last to
/// first. Consistency rows are never dropped by the LP tests.
pub fn remove_redundancy(sys: &SymbolicSystem, at: Option<&[Rational]>) -> Pruned {
    let mut cur = canonical_dedup(sys);
    if joint_feasible(&cur) {
        let mut i = cur.rows.len();
        while i > 0 {
            i -= 1;
            let row = cur.rows.remove(i);
            if !globally_implied(&cur, &row) {
                cur.rows.insert(i, row);
            }
        }
    }
    let mut locally_dropped = Vec::new();
    if let Some(b) = at {
        let inst_feasible = {
            let h = cur.instantiate(b);
            crate::lp::feasible(&h.a, &h.b, cur.n)
        };
        if inst_feasible {
            let mut i = cur.rows.len();
            while i > 0 {
                i -= 1;
                let row = cur.rows.remove(i);
                if locally_implied(&cur, &row, b) {
                    locally_dropped.push(row);
                } else {
                    cur.rows.insert(i, row);
                }
            }
            locally_dropped.reverse();
        }
    }
    Pruned {
        system: cur,
        locally_dropped,
    }
}

/// Joint `(x, b)` coefficients of `<a, x> - <gamma, b> <= kappa`.
fn joint_row(r: &Row) -> (RVector, Rational) {
    let mut v = r.lhs.clone();
    v.extend(r.rhs.coefficients.iter().map(|g| -g.clone()));
    (v, r.rhs.constant.clone())
}

fn joint_lp(sys: &SymbolicSystem) -> Lp {
    let mut lp = Lp::new(sys.n + sys.m);
    for r in sys.all_rows() {
        let (v, k) = joint_row(r);
        lp.le(v, k);
    }
    lp
}

fn joint_feasible(sys: &SymbolicSystem) -> bool {
    !matches!(joint_lp(sys).solve(), LpResult::Infeasible { .. })
}

fn globally_implied(others: &SymbolicSystem, row: &Row) -> bool {
    let (v, k) = joint_row(row);
    let lp = joint_lp(others).maximize(v);
    match lp.solve() {
        LpResult::Optimal { value, .. } => !(-value - k).is_positive(),
        _ => false,
    }
}

fn locally_implied(others: &SymbolicSystem, row: &Row, b: &[Rational]) -> bool {
    let h = others.instantiate(b);
    let mut lp = Lp::new(others.n).maximize(row.lhs.clone());
    for (a, bt) in h.a.into_iter().zip(h.b) {
        lp.le(a, bt);
    }
    match lp.solve() {
        LpResult::Optimal { value, .. } => -value <= row.rhs.eval(b),
        _ => false,
    }
}

/// Whether a system has any row whose left-hand side is zero. Such rows
/// belong among the consistency rows.
pub fn misplaced_rows(sys: &SymbolicSystem) -> bool {
    sys.rows.iter().any(|r| rational::is_zero(&r.lhs))
        || sys.consistency_rows.iter().any(|r| !r.lhs.iter().all(Zero::is_zero))
}

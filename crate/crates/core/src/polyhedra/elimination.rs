//! Symbolic elimination of one direction: `F(b) + cone{u}` and `F(b) + span{u}`.
//!
//! Both are single Fourier–Motzkin steps on the multiplier of `u`. Pairs
//! `(t, s)` produce the row
//! `<a_s,u> a_t - <a_t,u> a_s  <=  <a_s,u> phi_t - <a_t,u> phi_s`,
//! whose right-hand side is again affine in `b`.

use num_traits::{Signed, Zero};

use crate::error::PolyhedraError;
use crate::rational::{self, Rational};
use crate::system::{Row, SymbolicSystem};

/// Index sets of a system relative to a direction `u`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Partition12 {
    /// `<a_t, u> <= 0`
    pub t1: Vec<usize>,
    /// `<a_t, u> > 0`
    pub t2: Vec<usize>,
    /// `<a_t, u> = 0`, a subset of `t1`
    pub t0: Vec<usize>,
}

impl Partition12 {
    pub fn of(sys: &SymbolicSystem, u: &[Rational]) -> Self {
        let mut p = Partition12 {
            t1: Vec::new(),
            t2: Vec::new(),
            t0: Vec::new(),
        };
        for (t, r) in sys.rows.iter().enumerate() {
            let v = rational::dot(&r.lhs, u);
            if v.is_positive() {
                p.t2.push(t);
            } else {
                if v.is_zero() {
                    p.t0.push(t);
                }
                p.t1.push(t);
            }
        }
        p
    }
}

fn check(sys: &SymbolicSystem, u: &[Rational]) -> Result<(), PolyhedraError> {
    if u.len() != sys.n {
        return Err(PolyhedraError::DimensionMismatch(format!(
            "direction has {} entries, expected {}",
            u.len(),
            sys.n
        )));
    }
    if rational::is_zero(u) {
        return Err(PolyhedraError::ZeroDirection);
    }
    Ok(())
}

fn pair_row(rt: &Row, rs: &Row, u: &[Rational]) -> Row {
    let at_u = rational::dot(&rt.lhs, u);
    let as_u = rational::dot(&rs.lhs, u);
    let lhs = rational::sub(
        &rational::scale(&rt.lhs, &as_u),
        &rational::scale(&rs.lhs, &at_u),
    );
    let rhs = rt.rhs.combine(&as_u, &rs.rhs, &-at_u);
    Row::new(lhs, rhs)
}

fn empty_like(sys: &SymbolicSystem) -> SymbolicSystem {
    let mut out = SymbolicSystem::new(sys.n, sys.m);
    out.consistency_rows = sys.consistency_rows.clone();
    out
}

/// A system whose instantiation at every `b` is `F_sys(b) + cone{u}`.
///
/// Rows are emitted as `t in T1` first, then the pairs `(t, s)` in
/// `T1 x T2` ordered by `t` and then `s`. When `T2` is empty the system is
/// returned unchanged; when `T1` is empty only the consistency rows remain.
pub fn eliminate_cone_direction(
    sys: &SymbolicSystem,
    u: &[Rational],
) -> Result<SymbolicSystem, PolyhedraError> {
    check(sys, u)?;
    let part = Partition12::of(sys, u);
    if part.t2.is_empty() {
        return Ok(sys.clone());
    }
    let mut out = empty_like(sys);
    for &t in &part.t1 {
        out.push(sys.rows[t].clone());
    }
    for &t in &part.t1 {
        for &s in &part.t2 {
            out.push(pair_row(&sys.rows[t], &sys.rows[s], u));
        }
    }
    Ok(out)
}

/// A system whose instantiation at every `b` is `F_sys(b) + span{u}`.
///
/// Rows orthogonal to `u` are kept, then every pair with `<a_t,u> < 0` and
/// `<a_s,u> > 0` is combined.
pub fn eliminate_span_direction(
    sys: &SymbolicSystem,
    u: &[Rational],
) -> Result<SymbolicSystem, PolyhedraError> {
    check(sys, u)?;
    let part = Partition12::of(sys, u);
    if part.t0.len() == sys.rows.len() {
        return Ok(sys.clone());
    }
    let mut out = empty_like(sys);
    for &t in &part.t0 {
        out.push(sys.rows[t].clone());
    }
    for &t in part.t1.iter().filter(|t| !part.t0.contains(t)) {
        for &s in &part.t2 {
            out.push(pair_row(&sys.rows[t], &sys.rows[s], u));
        }
    }
    Ok(out)
}

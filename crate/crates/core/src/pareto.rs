//! Nondominance tests and Pareto-front membership.

use num_traits::{Signed, Zero};

use crate::error::ParetoError;
use crate::lp::{self, Lp, LpOutcome, LpResult};
use crate::problem::Problem;
use crate::rational::{self, RVector, Rational};

/// A point `p = C(x)` of the image space with an optional preimage `x`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ImagePoint {
    pub p: RVector,
    pub witness: Option<RVector>,
}

/// Answer of the domination LP.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Domination {
    Nondominated,
    /// A feasible point whose image is componentwise no larger, with at
    /// least one strict inequality.
    DominatedBy(RVector),
}

fn check_dims(problem: &Problem, b: &[Rational], x: Option<&[Rational]>) -> Result<(), ParetoError> {
    if b.len() != problem.m() {
        return Err(ParetoError::DimensionMismatch(format!(
            "parameter has {} entries, expected {}",
            b.len(),
            problem.m()
        )));
    }
    if let Some(x) = x {
        if x.len() != problem.n {
            return Err(ParetoError::DimensionMismatch(format!(
                "point has {} entries, expected {}",
                x.len(),
                problem.n
            )));
        }
    }
    Ok(())
}

fn require_feasible(problem: &Problem, b: &[Rational], x: &[Rational]) -> Result<(), ParetoError> {
    check_dims(problem, b, Some(x))?;
    if problem.is_feasible(b, x) {
        Ok(())
    } else {
        Err(ParetoError::InfeasiblePoint)
    }
}

/// Solves `max sum s_i` over `y in F(b)`, `<c_i,y> + s_i <= <c_i,x0>`, `s >= 0`.
pub fn domination(problem: &Problem, b: &[Rational], x0: &[Rational]) -> Result<Domination, ParetoError> {
    require_feasible(problem, b, x0)?;
    let (n, q) = (problem.n, problem.q());
    let mut objective = rational::zeros(n);
    objective.extend(std::iter::repeat_n(Rational::from_integer(1.into()), q));
    let mut lp = Lp::new(n + q).maximize(objective);
    for i in 0..q {
        lp = lp.nonnegative(n + i);
    }
    for (a, bt) in problem.rows.iter().zip(b) {
        let mut v = a.clone();
        v.extend(rational::zeros(q));
        lp.le(v, bt.clone());
    }
    let img = problem.image(x0);
    for (i, c) in problem.objectives.iter().enumerate() {
        let mut v = c.clone();
        v.extend(rational::unit(q, i));
        lp.le(v, img[i].clone());
    }
    Ok(match lp.solve() {
        LpResult::Optimal { x, value, .. } => {
            if value.is_zero() {
                Domination::Nondominated
            } else {
                Domination::DominatedBy(x[..n].to_vec())
            }
        }
        LpResult::Unbounded { x, ray } => {
            Domination::DominatedBy(rational::add(&x[..n], &ray[..n]))
        }
        LpResult::Infeasible { .. } => unreachable!("x0 itself is feasible"),
    })
}

pub fn is_nondominated(problem: &Problem, b: &[Rational], x0: &[Rational]) -> Result<bool, ParetoError> {
    Ok(domination(problem, b, x0)? == Domination::Nondominated)
}

/// Moves a feasible point to a nondominated one with no larger image.
///
/// Stage `j` minimizes `<c_j, x>` over `F(b)` subject to
/// `<c_i, x> <= <c_i, x_{j-1}>` for all `i`, stopping as soon as the
/// current point is nondominated.
pub fn dominate_to_nondominated(
    problem: &Problem,
    b: &[Rational],
    x0: &[Rational],
) -> Result<RVector, ParetoError> {
    require_feasible(problem, b, x0)?;
    let mut x = x0.to_vec();
    if is_nondominated(problem, b, &x)? {
        return Ok(x);
    }
    for cj in &problem.objectives {
        let img = problem.image(&x);
        let mut rows = problem.rows.clone();
        let mut rhs = b.to_vec();
        rows.extend(problem.objectives.iter().cloned());
        rhs.extend(img);
        match lp::solve(&rows, &rhs, cj) {
            LpOutcome::Optimal { x: next, .. } => x = next,
            LpOutcome::Unbounded { .. } => return Err(ParetoError::NotInDomS),
            LpOutcome::Infeasible { .. } => unreachable!("the previous stage point is feasible"),
        }
        if is_nondominated(problem, b, &x)? {
            return Ok(x);
        }
    }
    debug_assert!(false, "the final stage point is always nondominated");
    Ok(x)
}

/// Minimizes `sum_i w_i <c_i, x>` over `F(b)` for strictly positive `w`.
pub fn pareto_point(problem: &Problem, b: &[Rational], weights: &[Rational]) -> Result<ImagePoint, ParetoError> {
    check_dims(problem, b, None)?;
    if weights.len() != problem.q() {
        return Err(ParetoError::DimensionMismatch(format!(
            "{} weights given, expected {}",
            weights.len(),
            problem.q()
        )));
    }
    if weights.iter().any(|w| !w.is_positive()) {
        return Err(ParetoError::NonPositiveWeights);
    }
    match lp::solve(&problem.rows, b, &problem.composite(weights)) {
        LpOutcome::Optimal { x, .. } => Ok(ImagePoint {
            p: problem.image(&x),
            witness: Some(x),
        }),
        LpOutcome::Infeasible { .. } => Err(ParetoError::Infeasible),
        LpOutcome::Unbounded { .. } => Err(ParetoError::UnboundedScalarization),
    }
}

/// Whether `p in P(b) + R^q_+`, i.e. some `x in F(b)` has `C(x) <= p`.
pub fn in_epi_pareto(problem: &Problem, b: &[Rational], p: &[Rational]) -> Result<bool, ParetoError> {
    check_dims(problem, b, None)?;
    if lp::bounded_weight(problem).is_none() {
        return Err(ParetoError::NotInDomS);
    }
    // A dominated image certifies F(b) nonempty.
    if image_dominated_feasible(problem, b, p) {
        return Ok(true);
    }
    if !lp::feasible(&problem.rows, b, problem.n) {
        return Err(ParetoError::NotInDomS);
    }
    Ok(false)
}

/// `exists x in F(b): C(x) <= p`, without the domain check.
pub(crate) fn image_dominated_feasible(problem: &Problem, b: &[Rational], p: &[Rational]) -> bool {
    let mut rows = problem.rows.clone();
    let mut rhs = b.to_vec();
    rows.extend(problem.objectives.iter().cloned());
    rhs.extend(p.iter().cloned());
    lp::feasible(&rows, &rhs, problem.n)
}

/// A preimage `x in S(b)` with `C(x) = p`, if `p` lies on the front.
pub fn on_front(problem: &Problem, b: &[Rational], p: &[Rational]) -> Result<Option<RVector>, ParetoError> {
    check_dims(problem, b, None)?;
    let mut lp = Lp::new(problem.n);
    for (a, bt) in problem.rows.iter().zip(b) {
        lp.le(a.clone(), bt.clone());
    }
    for (c, pi) in problem.objectives.iter().zip(p) {
        lp.eq(c.clone(), pi.clone());
    }
    let LpResult::Optimal { x, .. } = lp.solve() else {
        return Ok(None);
    };
    Ok(is_nondominated(problem, b, &x)?.then_some(x))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::ivec;

    /// Constraints `x1 >= b1`, `x1 + x2 >= b2` written as `-x <= b`.
    fn ex52() -> Problem {
        Problem::new(
            vec![ivec(&[1, 0]), ivec(&[0, 1])],
            vec![ivec(&[-1, 0]), ivec(&[-1, -1])],
            ivec(&[0, 0]),
        )
        .unwrap()
    }

    #[test]
    fn nondominance() {
        let p = ex52();
        let b = ivec(&[0, 0]);
        assert!(is_nondominated(&p, &b, &ivec(&[0, 0])).unwrap());
        let Domination::DominatedBy(y) = domination(&p, &b, &ivec(&[1, 0])).unwrap() else {
            panic!("(1,0) is dominated");
        };
        assert!(p.is_feasible(&b, &y));
        assert!(rational::le(&p.image(&y), &ivec(&[1, 0])));
        assert_eq!(
            is_nondominated(&p, &b, &ivec(&[-1, 0])),
            Err(ParetoError::InfeasiblePoint)
        );
    }

    #[test]
    fn staged_procedure() {
        let p = ex52();
        let b = ivec(&[0, 0]);
        assert_eq!(dominate_to_nondominated(&p, &b, &ivec(&[1, 0])).unwrap(), ivec(&[0, 0]));
        assert_eq!(dominate_to_nondominated(&p, &b, &ivec(&[2, -2])).unwrap(), ivec(&[2, -2]));
        let x = dominate_to_nondominated(&p, &b, &ivec(&[3, 5])).unwrap();
        assert!(is_nondominated(&p, &b, &x).unwrap());
        assert!(rational::le(&p.image(&x), &ivec(&[3, 5])));
    }

    #[test]
    fn scalarized_points() {
        let a2 = Problem::new(
            vec![ivec(&[2, 0]), ivec(&[0, 1])],
            vec![ivec(&[-1, 0]), ivec(&[0, -1])],
            ivec(&[0, 0]),
        )
        .unwrap();
        let pt = pareto_point(&a2, &ivec(&[0, 0]), &ivec(&[1, 1])).unwrap();
        assert_eq!(pt.p, ivec(&[0, 0]));
        assert_eq!(pt.witness, Some(ivec(&[0, 0])));
        assert_eq!(
            pareto_point(&a2, &ivec(&[0, 0]), &ivec(&[1, 0])),
            Err(ParetoError::NonPositiveWeights)
        );
        // Weighting x2 more than x1 is unbounded on this feasible set.
        assert_eq!(
            pareto_point(&ex52(), &ivec(&[0, 0]), &ivec(&[1, 2])),
            Err(ParetoError::UnboundedScalarization)
        );
    }

    #[test]
    fn epigraph_membership() {
        let p = ex52();
        let b = ivec(&[0, 0]);
        assert!(in_epi_pareto(&p, &b, &ivec(&[0, 0])).unwrap());
        assert!(!in_epi_pareto(&p, &b, &ivec(&[-1, 0])).unwrap());
        assert!(in_epi_pareto(&p, &b, &ivec(&[100, 100])).unwrap());
        assert_eq!(on_front(&p, &b, &ivec(&[3, -3])).unwrap(), Some(ivec(&[3, -3])));
        assert_eq!(on_front(&p, &b, &ivec(&[1, 0])).unwrap(), None);
    }
}

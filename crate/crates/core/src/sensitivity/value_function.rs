use num_traits::{Signed, Zero};

use crate::error::SensitivityError;
use crate::lp::{self, LpOutcome};
use crate::norm::{dual_norm_value, Root};
use crate::polyhedra::{add_cone, polar_generators, Pruning};
use crate::problem::Problem;
use crate::rational::{self, RVector, Rational};
use crate::system::{AffineForm, SymbolicSystem};

use super::grid::{GridMode, WeightGrid};
use super::subdiff::{subdiff_f, Exactness, SubdiffPiece, SubdiffSet};

/// The optimal value `theta(b) = max_k phi_k(b)` of a single-objective
/// program, valid where every domain condition is nonnegative.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ValueFunction {
    pub pieces: Vec<AffineForm>,
    /// `g(b) >= 0` for each listed form.
    pub domain_conditions: Vec<AffineForm>,
}

impl ValueFunction {
    pub fn in_domain(&self, b: &[Rational]) -> bool {
        self.domain_conditions
            .iter()
            .all(|g| !g.eval(b).is_negative())
    }

    pub fn in_interior(&self, b: &[Rational]) -> bool {
        self.domain_conditions.iter().all(|g| g.eval(b).is_positive())
    }

    /// `None` outside the domain.
    pub fn eval(&self, b: &[Rational]) -> Option<Rational> {
        if !self.in_domain(b) {
            return None;
        }
        self.pieces.iter().map(|p| p.eval(b)).max()
    }

    /// Indices of the pieces attaining the maximum at `b`.
    pub fn active(&self, b: &[Rational]) -> Vec<usize> {
        let Some(v) = self.eval(b) else {
            return Vec::new();
        };
        (0..self.pieces.len())
            .filter(|&k| self.pieces[k].eval(b) == v)
            .collect()
    }
}

fn single_objective(problem: &Problem) -> Result<&RVector, SensitivityError> {
    match problem.objectives.as_slice() {
        [c] => Ok(c),
        _ => Err(SensitivityError::SingleObjectiveRequired),
    }
}

/// Symbolic optimal value function built by eliminating `{c}°` from the
/// feasible-set system; no optimal solution is needed.
///
/// Redundant rows are pruned between elimination steps but not after the
/// last one, so every row of the final fold contributes a piece.
pub fn lp_value_function(problem: &Problem) -> Result<ValueFunction, SensitivityError> {
    let c = single_objective(problem)?;
    if !lp::dual_consistent(&problem.rows, c) {
        return Err(SensitivityError::NotDualConsistent);
    }
    let theta = polar_generators(problem.n, &problem.objectives);
    let sys = add_cone(&SymbolicSystem::from_problem(problem), &theta, Pruning::KeepFinal)?;
    let neg_c = rational::neg(c);
    let j = c.iter().position(|v| !v.is_zero()).expect("objective is nonzero");
    let mut pieces = Vec::new();
    for row in &sys.rows {
        if !rational::positively_parallel(&row.lhs, &neg_c) {
            return Err(SensitivityError::RowNotMultipleOfC);
        }
        // row: -k <c, x> <= phi(b), i.e. <c, x> >= -phi(b) / k.
        let k = &row.lhs[j] / &neg_c[j];
        pieces.push(row.rhs.scale(&(-k.recip())));
    }
    Ok(ValueFunction {
        pieces,
        domain_conditions: sys.consistency_rows.iter().map(|r| r.rhs.clone()).collect(),
    })
}

/// Extreme points of `conv(points)`, sorted.
fn hull_vertices(points: &[RVector]) -> Vec<RVector> {
    let mut pts = points.to_vec();
    pts.sort();
    pts.dedup();
    let mut keep = Vec::new();
    for (i, p) in pts.iter().enumerate() {
        let others: Vec<&RVector> = pts
            .iter()
            .enumerate()
            .filter(|(k, _)| *k != i)
            .map(|(_, v)| v)
            .collect();
        if others.is_empty() {
            keep.push(p.clone());
            continue;
        }
        // p in conv(others)?
        let mut lp = lp::Lp::new(others.len()).all_nonnegative();
        for j in 0..p.len() {
            lp.eq(others.iter().map(|v| v[j].clone()).collect(), p[j].clone());
        }
        lp.eq(vec![Rational::from_integer(1.into()); others.len()], Rational::from_integer(1.into()));
        if matches!(lp.solve(), lp::LpResult::Infeasible { .. }) {
            keep.push(p.clone());
        }
    }
    keep
}

/// Subdifferential of the value function at an interior point of its
/// domain: the hull of the gradients of the active pieces.
pub fn subdiff_p_lp(problem: &Problem, b_bar: &[Rational]) -> Result<SubdiffSet, SensitivityError> {
    let vf = lp_value_function(problem)?;
    if !vf.in_interior(b_bar) {
        return Err(SensitivityError::OnDomainBoundary);
    }
    let grads: Vec<RVector> = vf
        .active(b_bar)
        .into_iter()
        .map(|k| vf.pieces[k].coefficients.clone())
        .collect();
    Ok(SubdiffSet {
        pieces: vec![SubdiffPiece {
            weight: vec![Rational::from_integer(1.into())],
            divisor: Root::one(),
            active: true,
            face: None,
            vertices: hull_vertices(&grads),
            rays: Vec::new(),
        }],
        exactness: Exactness::Exact,
    })
}

/// The single-objective identities between the three moduli.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LpRelations {
    pub lip_p: Rational,
    pub lip_ep: Rational,
    pub lip_ef: Root,
    /// `||c||_*` in the decision space.
    pub c_dual_norm: Root,
    /// Vertices of the value-function subdifferential.
    pub subdiff_p: Vec<RVector>,
    /// Whether the vertices of `∂P` equal `||c||_*` times those of `∂F`.
    pub proportionality_ok: bool,
}

pub fn lp_relations(
    problem: &Problem,
    b_bar: &[Rational],
    x_bar: &[Rational],
) -> Result<LpRelations, SensitivityError> {
    let c = single_objective(problem)?.clone();
    let optimal = x_bar.len() == problem.n
        && problem.is_feasible(b_bar, x_bar)
        && matches!(
            lp::solve(&problem.rows, b_bar, &c),
            LpOutcome::Optimal { ref value, .. } if *value == rational::dot(&c, x_bar)
        );
    if !optimal {
        return Err(SensitivityError::AnchorNotOptimal);
    }
    let dp = subdiff_p_lp(problem, b_bar)?;
    let vp = dp.pieces[0].vertices.clone();
    let lip_p = vp.iter().map(|v| rational::l1(v)).max().unwrap_or_else(Rational::zero);

    let grid = WeightGrid::new(problem, GridMode::CompositeNormalized, 1);
    let df = subdiff_f(problem, b_bar, x_bar, &grid)?;
    let piece = &df.pieces[0];
    let c_dual_norm = dual_norm_value(problem.decision_norm, &c);
    // y_F = v / ||c||_*, so ||c||_* y_F = v exactly when the divisor is ||c||_*.
    let mut vf = piece.vertices.clone();
    vf.sort();
    let mut vp_sorted = vp.clone();
    vp_sorted.sort();
    let proportionality_ok =
        piece.active && piece.divisor == c_dual_norm && piece.rays.is_empty() && vf == vp_sorted;
    let lip_ef = Root::from_rational(&lip_p).div(&c_dual_norm);
    Ok(LpRelations {
        lip_ep: lip_p.clone(),
        lip_p,
        lip_ef,
        c_dual_norm,
        subdiff_p: vp,
        proportionality_ok,
    })
}

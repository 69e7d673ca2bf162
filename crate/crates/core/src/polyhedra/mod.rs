//! Polar cones and symbolic elimination producing parameter-affine systems.

mod cone;
mod elimination;
mod redundancy;

pub use cone::{polar_generators, ConeGenerators};
pub use elimination::{eliminate_cone_direction, eliminate_span_direction, Partition12};
pub use redundancy::{canonical_dedup, misplaced_rows, remove_redundancy, Pruned};

use crate::error::PolyhedraError;
use crate::problem::Problem;
use crate::rational::{RVector, Rational};
use crate::system::SymbolicSystem;

/// When redundant rows are removed during a fold.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pruning {
    /// After every step, including the last.
    EveryStep,
    /// After every step but the last, which only gets duplicate removal.
    KeepFinal,
}

/// Adds the cone `theta` to the solution set of `sys`, one generator at a
/// time: rays first, then lineality directions.
pub fn add_cone(
    sys: &SymbolicSystem,
    theta: &ConeGenerators,
    pruning: Pruning,
) -> Result<SymbolicSystem, PolyhedraError> {
    let steps: Vec<(bool, &RVector)> = theta
        .rays
        .iter()
        .map(|r| (true, r))
        .chain(theta.lineality.iter().map(|l| (false, l)))
        .collect();
    let mut cur = remove_redundancy(sys, None).system;
    for (k, (is_ray, u)) in steps.iter().enumerate() {
        let next = if *is_ray {
            eliminate_cone_direction(&cur, u)?
        } else {
            eliminate_span_direction(&cur, u)?
        };
        let last = k + 1 == steps.len();
        cur = if last && pruning == Pruning::KeepFinal {
            canonical_dedup(&next)
        } else {
            remove_redundancy(&next, None).system
        };
    }
    Ok(cur)
}

/// A system whose instantiation at `b` is `F(b) + {c_1, ..., c_q}°`.
pub fn epigraph_system(problem: &Problem) -> Result<SymbolicSystem, PolyhedraError> {
    let theta = polar_generators(problem.n, &problem.objectives);
    add_cone(&SymbolicSystem::from_problem(problem), &theta, Pruning::EveryStep)
}

/// Fourier–Motzkin projection of `sys` onto the coordinates not listed in
/// `drop`, returned in the remaining coordinates (order preserved).
pub fn project_coordinates(
    sys: &SymbolicSystem,
    drop: &[usize],
) -> Result<SymbolicSystem, PolyhedraError> {
    let mut cur = sys.clone();
    for &j in drop {
        let u = crate::rational::unit(sys.n, j);
        cur = remove_redundancy(&eliminate_span_direction(&cur, &u)?, None).system;
    }
    let keep: Vec<usize> = (0..sys.n).filter(|j| !drop.contains(j)).collect();
    let mut out = SymbolicSystem::new(keep.len(), sys.m);
    for r in cur.all_rows() {
        let lhs: Vec<Rational> = keep.iter().map(|&j| r.lhs[j].clone()).collect();
        out.push(crate::system::Row::new(lhs, r.rhs.clone()));
    }
    Ok(out)
}

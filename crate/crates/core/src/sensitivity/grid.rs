use num_traits::Zero;

use crate::norm::{dual_norm_value, Root};
use crate::problem::Problem;
use crate::rational::{RVector, Rational};

/// How grid weights are normalized.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GridMode {
    /// `||alpha||_* = 1` in the image space.
    ImageNormalized,
    /// `||sum alpha_i c_i||_* = 1` in the decision space.
    CompositeNormalized,
}

/// A simplex point `alpha` together with the norm that rescales it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightPoint {
    /// Nonnegative, summing to one.
    pub alpha: RVector,
    /// The normalized weight is `alpha / normalizer`.
    pub normalizer: Root,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightGrid {
    pub mode: GridMode,
    pub resolution: usize,
    pub points: Vec<WeightPoint>,
}

impl WeightGrid {
    /// All `alpha = k / K` with `k` a composition of `K` into `q` parts,
    /// ordered lexicographically by `k`. Points with a zero normalizer are
    /// skipped.
    pub fn new(problem: &Problem, mode: GridMode, resolution: usize) -> Self {
        let k = Rational::from_integer(resolution.into());
        let points = compositions(resolution, problem.q())
            .into_iter()
            .filter_map(|parts| {
                let alpha: RVector = parts
                    .into_iter()
                    .map(|p| Rational::from_integer(p.into()) / &k)
                    .collect();
                point(problem, mode, alpha)
            })
            .collect();
        Self {
            mode,
            resolution,
            points,
        }
    }

    /// A grid holding the given weights only, each rescaled onto the simplex.
    pub fn from_weights(problem: &Problem, mode: GridMode, weights: &[RVector]) -> Self {
        let points = weights
            .iter()
            .filter_map(|w| {
                let s: Rational = w.iter().sum();
                if s.is_zero() {
                    return None;
                }
                point(problem, mode, w.iter().map(|v| v / &s).collect())
            })
            .collect();
        Self {
            mode,
            resolution: 0,
            points,
        }
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }
}

fn point(problem: &Problem, mode: GridMode, alpha: RVector) -> Option<WeightPoint> {
    let normalizer = match mode {
        GridMode::ImageNormalized => dual_norm_value(problem.image_norm, &alpha),
        GridMode::CompositeNormalized => {
            dual_norm_value(problem.decision_norm, &problem.composite(&alpha))
        }
    };
    (!normalizer.is_zero()).then_some(WeightPoint { alpha, normalizer })
}

fn compositions(total: usize, parts: usize) -> Vec<Vec<usize>> {
    if parts == 1 {
        return vec![vec![total]];
    }
    let mut out = Vec::new();
    for first in 0..=total {
        for mut rest in compositions(total - first, parts - 1) {
            rest.insert(0, first);
            out.push(rest);
        }
    }
    out
}

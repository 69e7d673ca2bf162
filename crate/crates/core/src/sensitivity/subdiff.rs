use std::fmt;

use rayon::prelude::*;

use crate::error::SensitivityError;
use crate::lp::{self, DualFace, LpOutcome};
use crate::norm::{cmp_scaled, Root};
use crate::pareto;
use crate::problem::Problem;
use crate::rational::{self, fmt_vector, RVector, Rational};

use super::grid::{GridMode, WeightGrid};

/// The parameter-dual vector `numerator / divisor`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subgradient {
    pub numerator: RVector,
    pub divisor: Root,
}

impl Subgradient {
    /// `||y||_1` as an exact root.
    pub fn l1(&self) -> Root {
        Root::from_rational(&rational::l1(&self.numerator)).div(&self.divisor)
    }

    /// The exact vector when the divisor is rational.
    pub fn as_rational(&self) -> Option<RVector> {
        let d = self.divisor.as_rational()?;
        Some(self.numerator.iter().map(|v| v / &d).collect())
    }

    pub fn to_f64(&self) -> Vec<f64> {
        let d = self.divisor.to_f64();
        self.numerator.iter().map(|v| rational::to_f64(v) / d).collect()
    }

    /// Compares `<y, v>` with `rhs` exactly.
    pub fn cmp_dot(&self, v: &[Rational], rhs: &Rational) -> std::cmp::Ordering {
        cmp_scaled(
            &rational::dot(&self.numerator, v),
            &Root::one(),
            rhs,
            &self.divisor,
        )
    }
}

impl fmt::Display for Subgradient {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.as_rational() {
            Some(y) => f.write_str(&fmt_vector(&y)),
            None => write!(f, "{}/{}", fmt_vector(&self.numerator), self.divisor),
        }
    }
}

/// The subgradients contributed by one weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdiffPiece {
    /// Simplex weight (unnormalized).
    pub weight: RVector,
    /// Norm dividing the numerators below.
    pub divisor: Root,
    pub active: bool,
    /// Negated optimal multipliers; `None` for explicit hulls.
    pub face: Option<DualFace>,
    /// Extreme numerators `-lambda`.
    pub vertices: Vec<RVector>,
    /// Extreme recession directions of the numerators.
    pub rays: Vec<RVector>,
}

impl SubdiffPiece {
    pub fn subgradients(&self) -> impl Iterator<Item = Subgradient> + '_ {
        self.vertices.iter().map(|v| Subgradient {
            numerator: v.clone(),
            divisor: self.divisor.clone(),
        })
    }

    /// `max ||y||_1` over the piece; `None` when unbounded, `Some(0)`
    /// when inactive.
    pub fn max_l1(&self) -> Option<(Root, Option<Subgradient>)> {
        if !self.active {
            return Some((Root::zero(), None));
        }
        if let Some(face) = &self.face {
            let ones = vec![Rational::from_integer(1.into()); face.m()];
            let (s, lambda) = face.maximize(&ones)?;
            let y = Subgradient {
                numerator: rational::neg(&lambda),
                divisor: self.divisor.clone(),
            };
            return Some((Root::from_rational(&s).div(&self.divisor), Some(y)));
        }
        if !self.rays.is_empty() {
            return None;
        }
        self.subgradients()
            .map(|y| (y.l1(), Some(y)))
            .max_by(|a, b| a.0.cmp(&b.0))
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Exactness {
    Exact,
    /// Union over a finite weight grid: every listed element is a true
    /// subgradient, and moduli are lower bounds.
    GridApproximation { resolution: usize },
}

impl fmt::Display for Exactness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Exactness::Exact => f.write_str("exact"),
            Exactness::GridApproximation { resolution } => {
                write!(f, "grid-approximation K={resolution}")
            }
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdiffSet {
    pub pieces: Vec<SubdiffPiece>,
    pub exactness: Exactness,
}

impl SubdiffSet {
    pub fn active_pieces(&self) -> impl Iterator<Item = &SubdiffPiece> {
        self.pieces.iter().filter(|p| p.active)
    }

    pub fn subgradients(&self) -> Vec<Subgradient> {
        self.active_pieces().flat_map(|p| p.subgradients()).collect()
    }

    pub fn is_empty(&self) -> bool {
        self.active_pieces().next().is_none()
    }
}

fn exactness(problem: &Problem, grid: &WeightGrid) -> Exactness {
    if problem.q() == 1 {
        Exactness::Exact
    } else {
        Exactness::GridApproximation {
            resolution: grid.resolution,
        }
    }
}

/// One piece per grid weight; active iff `<c_alpha, x_bar>` attains the
/// scalarized optimal value at `b_bar`.
fn pieces(
    problem: &Problem,
    b_bar: &[Rational],
    x_bar: &[Rational],
    grid: &WeightGrid,
) -> Result<Vec<SubdiffPiece>, SensitivityError> {
    grid.points
        .par_iter()
        .map(|pt| {
            let c = problem.composite(&pt.alpha);
            let attained = match lp::solve(&problem.rows, b_bar, &c) {
                LpOutcome::Optimal { value, .. } => rational::dot(&c, x_bar) == value,
                LpOutcome::Unbounded { .. } => false,
                LpOutcome::Infeasible { .. } => return Err(SensitivityError::NotInDomS),
            };
            let mut piece = SubdiffPiece {
                weight: pt.alpha.clone(),
                divisor: pt.normalizer.clone(),
                active: attained,
                face: None,
                vertices: Vec::new(),
                rays: Vec::new(),
            };
            if attained {
                let face = lp::dual_face(&problem.rows, b_bar, &c)?;
                piece.vertices = face.vertices().iter().map(|v| rational::neg(v)).collect();
                piece.rays = face.rays().iter().map(|v| rational::neg(v)).collect();
                piece.face = Some(face);
            }
            Ok(piece)
        })
        .collect()
}

fn check_param(problem: &Problem, b_bar: &[Rational]) -> Result<(), SensitivityError> {
    if b_bar.len() != problem.m() {
        return Err(crate::error::ParetoError::DimensionMismatch(format!(
            "parameter has {} entries, expected {}",
            b_bar.len(),
            problem.m()
        ))
        .into());
    }
    if !lp::in_dom_s(problem, b_bar) {
        return Err(SensitivityError::NotInDomS);
    }
    Ok(())
}

/// Subdifferential of the feasible-set mapping at `(b_bar, x_bar)` over a
/// composite-normalized grid.
pub fn subdiff_f(
    problem: &Problem,
    b_bar: &[Rational],
    x_bar: &[Rational],
    grid: &WeightGrid,
) -> Result<SubdiffSet, SensitivityError> {
    check_param(problem, b_bar)?;
    if x_bar.len() != problem.n
        || !pareto::image_dominated_feasible(problem, b_bar, &problem.image(x_bar))
    {
        return Err(SensitivityError::AnchorNotInGraph);
    }
    if grid.points.is_empty() && grid.resolution == 0 {
        return Err(SensitivityError::EmptyGrid);
    }
    Ok(SubdiffSet {
        pieces: pieces(problem, b_bar, x_bar, grid)?,
        exactness: exactness(problem, grid),
    })
}

/// Subdifferential of the Pareto-front mapping at `(b_bar, p_bar)` over an
/// image-normalized grid.
pub fn subdiff_p(
    problem: &Problem,
    b_bar: &[Rational],
    p_bar: &[Rational],
    grid: &WeightGrid,
) -> Result<SubdiffSet, SensitivityError> {
    check_param(problem, b_bar)?;
    if p_bar.len() != problem.q() {
        return Err(SensitivityError::AnchorNotOnFront);
    }
    let x_bar = pareto::on_front(problem, b_bar, p_bar)?.ok_or(SensitivityError::AnchorNotOnFront)?;
    if grid.points.is_empty() && grid.resolution == 0 {
        return Err(SensitivityError::EmptyGrid);
    }
    Ok(SubdiffSet {
        pieces: pieces(problem, b_bar, &x_bar, grid)?,
        exactness: exactness(problem, grid),
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ModulusTarget {
    LipEF,
    LipEP,
    /// Single objective only.
    LipP,
}

impl ModulusTarget {
    pub fn name(self) -> &'static str {
        match self {
            ModulusTarget::LipEF => "lip_EF",
            ModulusTarget::LipEP => "lip_EP",
            ModulusTarget::LipP => "lip_P",
        }
    }
}

/// A nonnegative extended real with exact finite part.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub enum Modulus {
    Finite(Root),
    Infinite,
}

impl Modulus {
    pub fn to_f64(&self) -> f64 {
        match self {
            Modulus::Finite(r) => r.to_f64(),
            Modulus::Infinite => f64::INFINITY,
        }
    }

    pub fn finite(&self) -> Option<&Root> {
        match self {
            Modulus::Finite(r) => Some(r),
            Modulus::Infinite => None,
        }
    }
}

impl fmt::Display for Modulus {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Modulus::Finite(r) => write!(f, "{r}"),
            Modulus::Infinite => f.write_str("inf"),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModulusReport {
    pub target: ModulusTarget,
    pub value: Modulus,
    pub attaining_weight: Option<RVector>,
    pub attaining_subgradient: Option<Subgradient>,
    pub exactness: Exactness,
}

impl ModulusReport {
    pub fn value_string(&self) -> String {
        let tag = match self.exactness {
            Exactness::Exact => "exact".to_string(),
            Exactness::GridApproximation { resolution } => format!("lower bound, K={resolution}"),
        };
        format!("{} ({tag})", self.value)
    }
}

/// `sup ||y||_1` over the active pieces.
pub fn modulus_of(set: &SubdiffSet, target: ModulusTarget) -> ModulusReport {
    let mut best = ModulusReport {
        target,
        value: Modulus::Finite(Root::zero()),
        attaining_weight: None,
        attaining_subgradient: None,
        exactness: set.exactness,
    };
    let per_piece: Vec<_> = set
        .pieces
        .par_iter()
        .filter(|p| p.active)
        .map(|p| (p, p.max_l1()))
        .collect();
    for (piece, m) in per_piece {
        match m {
            None => {
                return ModulusReport {
                    value: Modulus::Infinite,
                    attaining_weight: Some(piece.weight.clone()),
                    attaining_subgradient: None,
                    ..best
                }
            }
            Some((v, y)) => {
                let better = match &best.value {
                    Modulus::Finite(cur) => v > *cur || best.attaining_weight.is_none(),
                    Modulus::Infinite => false,
                };
                if better {
                    best.value = Modulus::Finite(v);
                    best.attaining_weight = Some(piece.weight.clone());
                    best.attaining_subgradient = y;
                }
            }
        }
    }
    best
}

/// Lipschitz modulus of the chosen mapping at `b_bar`.
///
/// `anchor` is `x_bar` for [`ModulusTarget::LipEF`] and `p_bar` otherwise.
/// For two or more objectives the value is computed over a grid of
/// `resolution` and is a certified lower bound.
pub fn lip_modulus(
    problem: &Problem,
    target: ModulusTarget,
    b_bar: &[Rational],
    anchor: &[Rational],
    resolution: usize,
) -> Result<ModulusReport, SensitivityError> {
    if resolution == 0 {
        return Err(SensitivityError::EmptyGrid);
    }
    match target {
        ModulusTarget::LipEF => {
            let grid = WeightGrid::new(problem, GridMode::CompositeNormalized, resolution);
            Ok(modulus_of(&subdiff_f(problem, b_bar, anchor, &grid)?, target))
        }
        ModulusTarget::LipEP => {
            let grid = WeightGrid::new(problem, GridMode::ImageNormalized, resolution);
            Ok(modulus_of(&subdiff_p(problem, b_bar, anchor, &grid)?, target))
        }
        ModulusTarget::LipP => {
            if problem.q() != 1 {
                return Err(SensitivityError::LipPUnsupported);
            }
            let grid = WeightGrid::new(problem, GridMode::ImageNormalized, 1);
            Ok(modulus_of(&subdiff_p(problem, b_bar, anchor, &grid)?, target))
        }
    }
}

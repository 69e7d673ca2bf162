use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;

use crate::error::{ParetoError, VerifyError};
use crate::norm::cmp_scaled;
use crate::pareto;
use crate::problem::Problem;
use crate::rational::{self, RVector, Rational};
use crate::sensitivity::{Subgradient, WeightPoint};

use super::sampling::{self, SampleConfig, WeightSampler};

/// Draws per sample before giving up on finding a point of `gph S`.
const RETRIES: usize = 16;

/// Which subgradient inequality is checked.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubgradientKind {
    /// `<y, b - b_bar> <= <c_alpha, x - x_bar> / s`.
    F,
    /// `<y, b - b_bar> <= <alpha, p - p_bar> / s`.
    P,
}

impl FromStr for SubgradientKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "f" => Ok(SubgradientKind::F),
            "p" => Ok(SubgradientKind::P),
            other => Err(format!("unknown subdifferential '{other}'")),
        }
    }
}

impl fmt::Display for SubgradientKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            SubgradientKind::F => "f",
            SubgradientKind::P => "p",
        })
    }
}

/// A point of the solution graph with its image.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GraphSample {
    pub b: RVector,
    pub x: RVector,
    pub p: RVector,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CheckOutcome {
    pub holds: bool,
    /// The first violating sample, by draw index.
    pub witness: Option<GraphSample>,
    pub checked: usize,
}

/// Points `(b, x)` of `gph S` with `b` in the ball around `b_bar`, each
/// found by scalarizing with random positive weights drawn from the
/// bounded ones. Draws where the scalarization fails are retried and
/// eventually dropped.
pub fn sample_graph(problem: &Problem, b_bar: &[Rational], config: &SampleConfig) -> Vec<GraphSample> {
    let Some(weights) = WeightSampler::new(problem) else {
        return Vec::new();
    };
    (0..config.samples)
        .into_par_iter()
        .filter_map(|k| {
            let mut rng = config.rng(k);
            let d = config.denominator_bound;
            (0..RETRIES).find_map(|_| {
                let b = sampling::ball_point(&mut rng, b_bar, &config.radius, d);
                let w = weights.sample(&mut rng, d);
                let pt = pareto::pareto_point(problem, &b, &w).ok()?;
                Some(GraphSample {
                    b,
                    x: pt.witness.expect("scalarization returns its solution"),
                    p: pt.p,
                })
            })
        })
        .collect()
}

/// Whether `sample` violates the subgradient inequality, exactly.
pub fn violates(
    problem: &Problem,
    kind: SubgradientKind,
    weight: &WeightPoint,
    y: &Subgradient,
    b_bar: &[Rational],
    anchor: &[Rational],
    sample: &GraphSample,
) -> bool {
    let lhs = rational::dot(&y.numerator, &rational::sub(&sample.b, b_bar));
    let rhs = match kind {
        SubgradientKind::F => {
            rational::dot(&problem.composite(&weight.alpha), &rational::sub(&sample.x, anchor))
        }
        SubgradientKind::P => rational::dot(&weight.alpha, &rational::sub(&sample.p, anchor)),
    };
    // lhs / d_y <= rhs / d_w  iff  lhs d_w <= rhs d_y.
    cmp_scaled(&lhs, &weight.normalizer, &rhs, &y.divisor) == Ordering::Greater
}

/// Checks the subgradient inequality of `y` for `weight` on fresh samples.
pub fn subgradient_check(
    problem: &Problem,
    kind: SubgradientKind,
    weight: &WeightPoint,
    y: &Subgradient,
    b_bar: &[Rational],
    anchor: &[Rational],
    config: &SampleConfig,
) -> Result<CheckOutcome, VerifyError> {
    config.validate()?;
    check_dims(problem, kind, weight, y, b_bar, anchor)?;
    let samples = sample_graph(problem, b_bar, config);
    Ok(subgradient_check_on(&samples, problem, kind, weight, y, b_bar, anchor))
}

/// Checks the subgradient inequality on precomputed samples.
pub fn subgradient_check_on(
    samples: &[GraphSample],
    problem: &Problem,
    kind: SubgradientKind,
    weight: &WeightPoint,
    y: &Subgradient,
    b_bar: &[Rational],
    anchor: &[Rational],
) -> CheckOutcome {
    let witness = samples
        .iter()
        .find(|s| violates(problem, kind, weight, y, b_bar, anchor, s))
        .cloned();
    CheckOutcome {
        holds: witness.is_none(),
        witness,
        checked: samples.len(),
    }
}

fn check_dims(
    problem: &Problem,
    kind: SubgradientKind,
    weight: &WeightPoint,
    y: &Subgradient,
    b_bar: &[Rational],
    anchor: &[Rational],
) -> Result<(), VerifyError> {
    let anchor_dim = match kind {
        SubgradientKind::F => problem.n,
        SubgradientKind::P => problem.q(),
    };
    if b_bar.len() != problem.m()
        || y.numerator.len() != problem.m()
        || weight.alpha.len() != problem.q()
    {
        return Err(ParetoError::DimensionMismatch("subgradient check".into()).into());
    }
    if anchor.len() != anchor_dim {
        return Err(VerifyError::AnchorNotInGraph);
    }
    Ok(())
}

/// A failed convexity test: both endpoints are members, the combination
/// is not.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityWitness {
    pub b1: RVector,
    pub p1: RVector,
    pub b2: RVector,
    pub p2: RVector,
    pub t: Rational,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConvexityOutcome {
    pub holds: bool,
    pub witness: Option<ConvexityWitness>,
    pub checked: usize,
}

/// Membership in `gph E_P`.
pub type MembershipOracle<'a> = dyn Fn(&Problem, &[Rational], &[Rational]) -> Result<bool, ParetoError> + Sync + 'a;

/// Convexity of `gph E_P` around the nominal parameter, tested with the
/// exact membership LP.
///
/// Endpoints are images of scalarized solutions at random parameters,
/// lifted by random nonnegative offsets, so they lie in `gph E_P` by
/// construction; only the combined point is tested.
pub fn convexity_check(problem: &Problem, config: &SampleConfig) -> Result<ConvexityOutcome, VerifyError> {
    convexity(problem, config, &pareto::in_epi_pareto, false)
}

/// As [`convexity_check`] with a caller-supplied membership oracle, which
/// is also applied to the endpoints; pairs it rejects are skipped.
pub fn convexity_check_with(
    problem: &Problem,
    config: &SampleConfig,
    oracle: &MembershipOracle<'_>,
) -> Result<ConvexityOutcome, VerifyError> {
    convexity(problem, config, oracle, true)
}

fn convexity(
    problem: &Problem,
    config: &SampleConfig,
    oracle: &MembershipOracle<'_>,
    check_endpoints: bool,
) -> Result<ConvexityOutcome, VerifyError> {
    config.validate()?;
    let d = config.denominator_bound;
    let Some(weights) = WeightSampler::new(problem) else {
        return Ok(ConvexityOutcome {
            holds: true,
            witness: None,
            checked: 0,
        });
    };
    let endpoint = |rng: &mut rand_chacha::ChaCha8Rng| -> Option<(RVector, RVector)> {
        (0..RETRIES).find_map(|_| {
            let b = sampling::ball_point(rng, &problem.nominal, &config.radius, d);
            let w = weights.sample(rng, d);
            let pt = pareto::pareto_point(problem, &b, &w).ok()?;
            let lift: RVector = sampling::cube_point(rng, problem.q(), d)
                .iter()
                .map(|v| num_traits::Signed::abs(v) * &config.radius)
                .collect();
            Some((b, rational::add(&pt.p, &lift)))
        })
    };
    let results: Vec<Result<Option<Option<ConvexityWitness>>, ParetoError>> = (0..config.samples)
        .into_par_iter()
        .map(|k| {
            let mut rng = config.rng(k);
            let (Some((b1, p1)), Some((b2, p2))) = (endpoint(&mut rng), endpoint(&mut rng)) else {
                return Ok(None);
            };
            if check_endpoints && (!oracle(problem, &b1, &p1)? || !oracle(problem, &b2, &p2)?) {
                return Ok(None);
            }
            let t = num_traits::Signed::abs(&sampling::unit_rational(&mut rng, d));
            let b = rational::lerp(&b1, &b2, &t);
            let p = rational::lerp(&p1, &p2, &t);
            let member = match oracle(problem, &b, &p) {
                Ok(v) => v,
                Err(ParetoError::NotInDomS) => false,
                Err(e) => return Err(e),
            };
            Ok(Some((!member).then_some(ConvexityWitness { b1, p1, b2, p2, t })))
        })
        .collect();
    let mut checked = 0;
    for r in results {
        if let Some(w) = r? {
            checked += 1;
            if let Some(w) = w {
                return Ok(ConvexityOutcome {
                    holds: false,
                    witness: Some(w),
                    checked,
                });
            }
        }
    }
    Ok(ConvexityOutcome {
        holds: true,
        witness: None,
        checked,
    })
}

use rand::Rng;
use rayon::prelude::*;

use crate::error::VerifyError;
use crate::norm::Root;
use crate::problem::Problem;
use crate::rational::{self, RVector, Rational};

use super::distance::nearest_in_union;
use super::mapping::{MappingKind, SetMapping, SymbolicMapping};
use super::sampling::{self, SampleConfig};

/// The pair attaining an empirical ratio.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LipWitness {
    pub b: RVector,
    pub b_prime: RVector,
    /// A point of `M(b)`.
    pub z: RVector,
    pub distance: Root,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LipEstimate {
    /// `max d(z, M(b')) / ||b - b'||_inf` over the evaluated draws.
    pub value: Root,
    pub witness: Option<LipWitness>,
    pub evaluated: usize,
    pub skipped: usize,
}

impl LipEstimate {
    pub fn to_f64(&self) -> f64 {
        self.value.to_f64()
    }
}

/// Lower estimate of the Lipschitz modulus of a problem mapping.
pub fn empirical_lip(
    problem: &Problem,
    kind: MappingKind,
    b_bar: &[Rational],
    anchor: &[Rational],
    config: &SampleConfig,
) -> Result<LipEstimate, VerifyError> {
    let mapping = SymbolicMapping::of(problem, kind)?;
    empirical_lip_of(&mapping, b_bar, anchor, config)
}

/// Lower estimate of the Lipschitz modulus of `mapping` around
/// `(b_bar, anchor)`.
///
/// Draw `k` picks `b` in the ball, a step `b' = b + r rho d` (clamped to the
/// ball) with `d` a sign vector or a cube point, and `z` the point of `M(b)`
/// nearest to the anchor or to a jittered anchor. Draws with `b' = b` or an
/// empty value are skipped.
pub fn empirical_lip_of(
    mapping: &dyn SetMapping,
    b_bar: &[Rational],
    anchor: &[Rational],
    config: &SampleConfig,
) -> Result<LipEstimate, VerifyError> {
    config.validate()?;
    if b_bar.len() != mapping.parameter_dim()
        || anchor.len() != mapping.value_dim()
        || !mapping.contains(b_bar, anchor)
    {
        return Err(VerifyError::AnchorNotInGraph);
    }
    let draws: Vec<Result<Option<(Root, LipWitness)>, VerifyError>> = (0..config.samples)
        .into_par_iter()
        .map(|k| draw(mapping, b_bar, anchor, config, k))
        .collect();
    let mut best: Option<(Root, LipWitness)> = None;
    let (mut evaluated, mut skipped) = (0, 0);
    for d in draws {
        match d? {
            Some((ratio, w)) => {
                evaluated += 1;
                if best.as_ref().is_none_or(|(r, _)| ratio > *r) {
                    best = Some((ratio, w));
                }
            }
            None => skipped += 1,
        }
    }
    let (value, witness) = match best {
        Some((r, w)) => (r, Some(w)),
        None => (Root::zero(), None),
    };
    Ok(LipEstimate {
        value,
        witness,
        evaluated,
        skipped,
    })
}

fn draw(
    mapping: &dyn SetMapping,
    b_bar: &[Rational],
    anchor: &[Rational],
    config: &SampleConfig,
    k: usize,
) -> Result<Option<(Root, LipWitness)>, VerifyError> {
    let mut rng = config.rng(k);
    let d = config.denominator_bound;
    let r = &config.radius;
    let b = sampling::ball_point(&mut rng, b_bar, r, d);
    let dir = if rng.random_bool(0.5) {
        sampling::sign_vector(&mut rng, b.len())
    } else {
        sampling::cube_point(&mut rng, b.len(), d)
    };
    let rho = sampling::positive_fraction(&mut rng, d);
    let step = rational::scale(&dir, &(r * rho));
    let b_prime = sampling::clamp_to_ball(&rational::add(&b, &step), b_bar, r);
    let delta = rational::linf(&rational::sub(&b_prime, &b));
    let target = if rng.random_bool(0.5) {
        anchor.to_vec()
    } else {
        let jitter = sampling::cube_point(&mut rng, anchor.len(), d);
        rational::axpy(anchor, r, &jitter)
    };
    if rational::is_zero(&[delta.clone()]) {
        return Ok(None);
    }
    let z = match nearest_in_union(&target, &mapping.value_at(&b), mapping.norm()) {
        Ok(n) => n.point,
        Err(VerifyError::EmptySet) => return Ok(None),
        Err(e) => return Err(e),
    };
    let dist = match nearest_in_union(&z, &mapping.value_at(&b_prime), mapping.norm()) {
        Ok(n) => n.distance,
        Err(VerifyError::EmptySet) => return Ok(None),
        Err(e) => return Err(e),
    };
    let ratio = dist.div(&Root::from_rational(&delta));
    Ok(Some((
        ratio,
        LipWitness {
            b,
            b_prime,
            z,
            distance: dist,
        },
    )))
}

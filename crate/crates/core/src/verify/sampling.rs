use num_bigint::BigInt;
use num_traits::{One, Signed};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::VerifyError;
use crate::lp;
use crate::problem::Problem;
use crate::rational::{self, RVector, Rational};

/// Parameters of a reproducible sample stream.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SampleConfig {
    /// Sup-norm radius of the parameter ball around the nominal point.
    pub radius: Rational,
    pub samples: usize,
    pub seed: u64,
    /// Every sampled coordinate is a multiple of `1 / denominator_bound`
    /// times a rational scale.
    pub denominator_bound: u64,
}

impl SampleConfig {
    pub fn new(radius: Rational, samples: usize, seed: u64) -> Self {
        Self {
            radius,
            samples,
            seed,
            denominator_bound: 1000,
        }
    }

    pub fn validate(&self) -> Result<(), VerifyError> {
        if !self.radius.is_positive() {
            return Err(VerifyError::InvalidConfig("radius must be positive".into()));
        }
        if self.denominator_bound == 0 {
            return Err(VerifyError::InvalidConfig(
                "denominator bound must be positive".into(),
            ));
        }
        Ok(())
    }

    /// The generator for draw `index`. Streams are independent of the
    /// order in which draws are evaluated.
    pub fn rng(&self, index: usize) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(index as u64);
        rng
    }
}

/// Uniform on the grid `{k / d : -d <= k <= d}`.
pub fn unit_rational(rng: &mut impl Rng, d: u64) -> Rational {
    let d = d as i64;
    let k = rng.random_range(-d..=d);
    Rational::new(BigInt::from(k), BigInt::from(d))
}

/// Uniform on the grid `{k / d : 1 <= k <= d}`.
pub fn positive_fraction(rng: &mut impl Rng, d: u64) -> Rational {
    let d = d as i64;
    let k = rng.random_range(1..=d);
    Rational::new(BigInt::from(k), BigInt::from(d))
}

/// A point of the cube `[-1, 1]^len` on the `1/d` grid.
pub fn cube_point(rng: &mut impl Rng, len: usize, d: u64) -> RVector {
    (0..len).map(|_| unit_rational(rng, d)).collect()
}

/// A uniformly random sign vector.
pub fn sign_vector(rng: &mut impl Rng, len: usize) -> RVector {
    (0..len)
        .map(|_| {
            if rng.random_bool(0.5) {
                Rational::one()
            } else {
                -Rational::one()
            }
        })
        .collect()
}

/// `center + radius * u` with `u` drawn from the cube.
pub fn ball_point(rng: &mut impl Rng, center: &[Rational], radius: &Rational, d: u64) -> RVector {
    let u = cube_point(rng, center.len(), d);
    rational::axpy(center, radius, &u)
}

/// Strictly positive weights on the `1/d` grid.
pub fn positive_weights(rng: &mut impl Rng, len: usize, d: u64) -> RVector {
    (0..len).map(|_| positive_fraction(rng, d)).collect()
}

/// Draws strictly positive weights whose scalarization is bounded below:
/// convex combinations of a strictly positive center, with positive
/// coefficient, and the extreme bounded weights on the simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightSampler {
    center: RVector,
    extremes: Vec<RVector>,
}

impl WeightSampler {
    /// `None` when no strictly positive weighting is bounded.
    pub fn new(problem: &Problem) -> Option<Self> {
        let w = lp::bounded_weight(problem)?;
        let s: Rational = w.iter().sum();
        Some(Self {
            center: w.iter().map(|v| v / &s).collect(),
            extremes: lp::extreme_bounded_weights(problem),
        })
    }

    pub fn sample(&self, rng: &mut impl Rng, d: u64) -> RVector {
        let t = positive_fraction(rng, d);
        let mut w = rational::scale(&self.center, &t);
        if self.extremes.is_empty() {
            return w;
        }
        let mu = positive_weights(rng, self.extremes.len(), d);
        let total: Rational = mu.iter().sum();
        let rest = Rational::one() - &t;
        for (e, m) in self.extremes.iter().zip(&mu) {
            w = rational::axpy(&w, &(&rest * m / &total), e);
        }
        w
    }
}

/// Clamps `v` into the sup-norm ball of `radius` around `center`.
pub fn clamp_to_ball(v: &[Rational], center: &[Rational], radius: &Rational) -> RVector {
    v.iter()
        .zip(center)
        .map(|(x, c)| {
            let lo = c - radius;
            let hi = c + radius;
            if *x < lo {
                lo
            } else if *x > hi {
                hi
            } else {
                x.clone()
            }
        })
        .collect()
}

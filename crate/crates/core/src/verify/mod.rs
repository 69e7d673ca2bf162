//! Sampling oracles: empirical Lipschitz estimates, exact distances,
//! subgradient inequalities on the solution graph, and convexity of the
//! image epigraph.
//!
//! Every sample is rational, so all inequality checks are exact; only the
//! reported estimates are converted to floats. Draw `k` uses its own
//! generator stream, so serial and parallel evaluation agree.

mod checks;
mod distance;
mod empirical;
mod mapping;
mod sampling;

pub use checks::{
    convexity_check, convexity_check_with, sample_graph, subgradient_check, subgradient_check_on,
    violates, CheckOutcome, ConvexityOutcome, ConvexityWitness, GraphSample, MembershipOracle,
    SubgradientKind,
};
pub use distance::{distance_to_set, nearest_in_union, nearest_point, Nearest, EUCLIDEAN_MAX_DIM};
pub use empirical::{empirical_lip, empirical_lip_of, LipEstimate, LipWitness};
pub use mapping::{
    efficient_index_sets, front_pieces, image_epigraph, IntervalFixture, MappingKind, SetMapping,
    SymbolicMapping,
};
pub use sampling::{
    ball_point, clamp_to_ball, cube_point, positive_fraction, positive_weights, sign_vector,
    unit_rational, SampleConfig, WeightSampler,
};

//! Exact sensitivity analysis for right-hand-side parameterized
//! multiobjective linear programs
//!
//! ```text
//! min (<c_1, x>, ..., <c_q, x>)  s.t.  <a_t, x> <= b_t,  t = 1..m
//! ```
//!
//! All arithmetic is over the rationals. The crate builds symbolic
//! inequality systems for the epigraphical feasible-set mapping by
//! eliminating polar cone directions, computes subdifferentials of the
//! feasible-set and Pareto-front mappings over weight grids, and reports
//! the resulting Lipschitz moduli. The [`verify`] module checks these
//! outputs against sampling oracles.

pub mod error;
pub mod linalg;
pub mod lp;
pub mod norm;
pub mod pareto;
pub mod polyhedra;
pub mod problem;
pub mod rational;
pub mod sensitivity;
pub mod system;
pub mod verify;

pub use error::{Error, LpError, ParetoError, PolyhedraError, ProblemError, SensitivityError, VerifyError};
pub use lp::{DualFace, LpOutcome, LpStatus};
pub use norm::{NormKind, NormSpec, Root, Space};
pub use pareto::{Domination, ImagePoint};
pub use polyhedra::{ConeGenerators, Pruning};
pub use problem::{parse_problem, Problem};
pub use rational::{RVector, Rational};
pub use sensitivity::{
    Exactness, GridMode, Modulus, ModulusReport, ModulusTarget, SubdiffSet, Subgradient, ValueFunction,
    WeightGrid, WeightPoint,
};
pub use system::{AffineForm, Halfspaces, Row, SymbolicSystem};
pub use verify::{MappingKind, SampleConfig, SubgradientKind};

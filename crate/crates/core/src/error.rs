//! Error types, one enum per module, plus a crate-wide wrapper.
//!
//! Every error has a stable name of the form `module/name` (see
//! [`Error::code`]) which the command-line front end prints verbatim.

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProblemError {
    #[error("line {line}: {message}")]
    MalformedSyntax { line: usize, message: String },
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("a problem needs at least one objective")]
    ZeroObjectives,
    #[error("objective {0} is the zero vector")]
    ZeroObjectiveVector(usize),
}

impl ProblemError {
    pub fn name(&self) -> &'static str {
        match self {
            ProblemError::MalformedSyntax { .. } => "malformed-syntax",
            ProblemError::DimensionMismatch(_) => "dimension-mismatch",
            ProblemError::ZeroObjectives => "zero-objectives",
            ProblemError::ZeroObjectiveVector(_) => "zero-objective-vector",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LpError {
    #[error("the linear program is not solvable ({0})")]
    NotSolvable(&'static str),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl LpError {
    pub fn name(&self) -> &'static str {
        match self {
            LpError::NotSolvable(_) => "not-solvable",
            LpError::DimensionMismatch(_) => "dimension-mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyhedraError {
    #[error("direction must be nonzero")]
    ZeroDirection,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl PolyhedraError {
    pub fn name(&self) -> &'static str {
        match self {
            PolyhedraError::ZeroDirection => "zero-direction",
            PolyhedraError::DimensionMismatch(_) => "dimension-mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ParetoError {
    #[error("the point is not feasible for the given parameter")]
    InfeasiblePoint,
    #[error("the parameter is outside the domain of the nondominated-solution mapping")]
    NotInDomS,
    #[error("the feasible set is empty")]
    Infeasible,
    #[error("the weighted objective is unbounded below")]
    UnboundedScalarization,
    #[error("weights must be strictly positive")]
    NonPositiveWeights,
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
}

impl ParetoError {
    pub fn name(&self) -> &'static str {
        match self {
            ParetoError::InfeasiblePoint => "infeasible-point",
            ParetoError::NotInDomS => "not-in-domS",
            ParetoError::Infeasible => "infeasible",
            ParetoError::UnboundedScalarization => "unbounded-scalarization",
            ParetoError::NonPositiveWeights => "non-positive-weights",
            ParetoError::DimensionMismatch(_) => "dimension-mismatch",
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SensitivityError {
    #[error("the anchor is not in the graph of the epigraphical feasible-set mapping")]
    AnchorNotInGraph,
    #[error("the parameter is outside the domain of the nondominated-solution mapping")]
    NotInDomS,
    #[error("the anchor is not on the Pareto front")]
    AnchorNotOnFront,
    #[error("the anchor is not an optimal solution")]
    AnchorNotOptimal,
    #[error("lip P is only supported for a single objective")]
    LipPUnsupported,
    #[error("this operation requires a single objective")]
    SingleObjectiveRequired,
    #[error("the objective is not dual consistent")]
    NotDualConsistent,
    #[error("internal: eliminated row is not a negative multiple of the objective")]
    RowNotMultipleOfC,
    #[error("the parameter lies on the boundary of the value-function domain")]
    OnDomainBoundary,
    #[error("grid resolution must be positive")]
    EmptyGrid,
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
    #[error(transparent)]
    Pareto(#[from] ParetoError),
}

impl SensitivityError {
    pub fn code(&self) -> String {
        let name = match self {
            SensitivityError::AnchorNotInGraph => "anchor-not-in-graph",
            SensitivityError::NotInDomS => "not-in-domS",
            SensitivityError::AnchorNotOnFront => "anchor-not-on-front",
            SensitivityError::AnchorNotOptimal => "anchor-not-optimal",
            SensitivityError::LipPUnsupported => "q2-lipP-unsupported",
            SensitivityError::SingleObjectiveRequired => "single-objective-required",
            SensitivityError::NotDualConsistent => "not-dual-consistent",
            SensitivityError::RowNotMultipleOfC => "row-not-multiple-of-c",
            SensitivityError::OnDomainBoundary => "on-domain-boundary",
            SensitivityError::EmptyGrid => "empty-grid",
            SensitivityError::Lp(e) => return format!("lp/{}", e.name()),
            SensitivityError::Polyhedra(e) => return format!("polyhedra/{}", e.name()),
            SensitivityError::Pareto(e) => return format!("pareto/{}", e.name()),
        };
        format!("sensitivity/{name}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum VerifyError {
    #[error("the anchor is not in the graph of the mapping")]
    AnchorNotInGraph,
    #[error("the set is empty")]
    EmptySet,
    #[error("euclidean projection is limited to dimension {max} (got {got})")]
    DimensionTooLarge { got: usize, max: usize },
    #[error("invalid sampling configuration: {0}")]
    InvalidConfig(String),
    #[error(transparent)]
    Pareto(#[from] ParetoError),
    #[error(transparent)]
    Sensitivity(#[from] SensitivityError),
}

impl VerifyError {
    pub fn code(&self) -> String {
        let name = match self {
            VerifyError::AnchorNotInGraph => "anchor-not-in-graph",
            VerifyError::EmptySet => "empty-set",
            VerifyError::DimensionTooLarge { .. } => "dimension-too-large",
            VerifyError::InvalidConfig(_) => "invalid-config",
            VerifyError::Pareto(e) => return format!("pareto/{}", e.name()),
            VerifyError::Sensitivity(e) => return e.code(),
        };
        format!("verify/{name}")
    }
}

/// Any error produced by this crate.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Problem(#[from] ProblemError),
    #[error(transparent)]
    Lp(#[from] LpError),
    #[error(transparent)]
    Polyhedra(#[from] PolyhedraError),
    #[error(transparent)]
    Pareto(#[from] ParetoError),
    #[error(transparent)]
    Sensitivity(#[from] SensitivityError),
    #[error(transparent)]
    Verify(#[from] VerifyError),
}

impl Error {
    /// The stable `module/name` identifier of this error.
    pub fn code(&self) -> String {
        match self {
            Error::Problem(e) => format!("core/{}", e.name()),
            Error::Lp(e) => format!("lp/{}", e.name()),
            Error::Polyhedra(e) => format!("polyhedra/{}", e.name()),
            Error::Pareto(e) => format!("pareto/{}", e.name()),
            Error::Sensitivity(e) => e.code(),
            Error::Verify(e) => e.code(),
        }
    }
}

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};

use crate::error::{PolyhedraError, VerifyError};
use crate::lp::{self, Lp, LpResult};
use crate::norm::NormKind;
use crate::polyhedra::{epigraph_system, project_coordinates};
use crate::problem::Problem;
use crate::rational::{self, Rational};
use crate::system::{AffineForm, Halfspaces, Row, SymbolicSystem};

/// A set-valued mapping whose values are finite unions of polyhedra.
pub trait SetMapping: Sync {
    fn parameter_dim(&self) -> usize;
    fn value_dim(&self) -> usize;
    /// Norm of the value space.
    fn norm(&self) -> NormKind;
    /// The members of the union `M(b)`; empty members may appear.
    fn value_at(&self, b: &[Rational]) -> Vec<Halfspaces>;

    fn contains(&self, b: &[Rational], z: &[Rational]) -> bool {
        self.value_at(b).iter().any(|h| h.contains(z))
    }
}

/// The three mappings derived from a problem.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MappingKind {
    /// `b -> E_F(b)`, the decisions whose image lies above the front.
    EF,
    /// `b -> E_P(b) = P(b) + R^q_+`.
    EP,
    /// `b -> P(b)`, the Pareto front itself.
    P,
}

impl MappingKind {
    pub fn name(self) -> &'static str {
        match self {
            MappingKind::EF => "ef",
            MappingKind::EP => "ep",
            MappingKind::P => "p",
        }
    }
}

impl FromStr for MappingKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "ef" => Ok(MappingKind::EF),
            "ep" => Ok(MappingKind::EP),
            "p" => Ok(MappingKind::P),
            other => Err(format!("unknown mapping '{other}'")),
        }
    }
}

impl fmt::Display for MappingKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Mapping given by finitely many symbolic systems, `M(b)` being the union
/// of their instantiations.
#[derive(Debug, Clone)]
pub struct SymbolicMapping {
    pub systems: Vec<SymbolicSystem>,
    pub norm: NormKind,
    dim: usize,
    m: usize,
}

impl SymbolicMapping {
    pub fn new(systems: Vec<SymbolicSystem>, dim: usize, m: usize, norm: NormKind) -> Self {
        Self {
            systems,
            norm,
            dim,
            m,
        }
    }

    pub fn of(problem: &Problem, kind: MappingKind) -> Result<Self, VerifyError> {
        let built = match kind {
            MappingKind::EF => epigraph_system(problem)
                .map(|s| Self::new(vec![s], problem.n, problem.m(), problem.decision_norm.kind)),
            MappingKind::EP => image_epigraph(problem)
                .map(|s| Self::new(vec![s], problem.q(), problem.m(), problem.image_norm.kind)),
            MappingKind::P => front_pieces(problem)
                .map(|s| Self::new(s, problem.q(), problem.m(), problem.image_norm.kind)),
        };
        built.map_err(|e| crate::error::SensitivityError::from(e).into())
    }
}

impl SetMapping for SymbolicMapping {
    fn parameter_dim(&self) -> usize {
        self.m
    }

    fn value_dim(&self) -> usize {
        self.dim
    }

    fn norm(&self) -> NormKind {
        self.norm
    }

    fn value_at(&self, b: &[Rational]) -> Vec<Halfspaces> {
        self.systems.iter().map(|s| s.instantiate(b)).collect()
    }
}

/// Rows of `gph C` over `(x, p)`: `<c_i, x> - p_i <= 0`, plus the reverse
/// inequalities when `equal`.
fn with_image_rows(problem: &Problem, equal: bool) -> SymbolicSystem {
    let (n, q, m) = (problem.n, problem.q(), problem.m());
    let mut sys = SymbolicSystem::new(n + q, m);
    for (t, a) in problem.rows.iter().enumerate() {
        let mut lhs = a.clone();
        lhs.extend(rational::zeros(q));
        sys.push(Row::new(lhs, AffineForm::coordinate(m, t)));
    }
    for (i, c) in problem.objectives.iter().enumerate() {
        let mut lhs = c.clone();
        lhs.extend(rational::neg(&rational::unit(q, i)));
        if equal {
            sys.push(Row::new(rational::neg(&lhs), AffineForm::zero(m)));
        }
        sys.push(Row::new(lhs, AffineForm::zero(m)));
    }
    sys
}

/// `E_P(b) = C(F(b)) + R^q_+` as a symbolic system over `p`.
pub fn image_epigraph(problem: &Problem) -> Result<SymbolicSystem, PolyhedraError> {
    let sys = with_image_rows(problem, false);
    project_coordinates(&sys, &(0..problem.n).collect::<Vec<_>>())
}

/// Index sets `I` whose faces `F_I(b)` lie in the efficient set for every
/// `b`: some `w > 0` and `mu >= 0` supported on `I` satisfy
/// `sum mu_t a_t + sum w_i c_i = 0`. The condition does not involve `b`.
pub fn efficient_index_sets(problem: &Problem) -> Vec<Vec<usize>> {
    let (n, q, m) = (problem.n, problem.q(), problem.m());
    let mut out: Vec<Vec<usize>> = Vec::new();
    for k in 0..=m {
        for set in lp::combinations(m, k) {
            if out.iter().any(|s| s.iter().all(|t| set.contains(t))) {
                continue;
            }
            // Variables: mu (k, >= 0), w (q, >= 1 by homogeneity).
            let mut lp = Lp::new(k + q).minimize(rational::zeros(k + q));
            for j in 0..k {
                lp = lp.nonnegative(j);
            }
            for i in 0..q {
                lp.ge(rational::unit(k + q, k + i), Rational::one());
            }
            for j in 0..n {
                let mut v: Vec<Rational> = set.iter().map(|&t| problem.rows[t][j].clone()).collect();
                v.extend(problem.objectives.iter().map(|c| c[j].clone()));
                lp.eq(v, Rational::zero());
            }
            if matches!(lp.solve(), LpResult::Optimal { .. }) {
                out.push(set);
            }
        }
    }
    out
}

/// One system over `p` per minimal efficient index set; `P(b)` is the union
/// of their instantiations.
pub fn front_pieces(problem: &Problem) -> Result<Vec<SymbolicSystem>, PolyhedraError> {
    let m = problem.m();
    let drop: Vec<usize> = (0..problem.n).collect();
    efficient_index_sets(problem)
        .into_iter()
        .map(|set| {
            let mut sys = with_image_rows(problem, true);
            for &t in &set {
                let mut lhs = rational::neg(&problem.rows[t]);
                lhs.extend(rational::zeros(problem.q()));
                sys.push(Row::new(lhs, AffineForm::coordinate(m, t).scale(&-Rational::one())));
            }
            project_coordinates(&sys, &drop)
        })
        .collect()
}

/// The scalar interval mapping `M(y) = [y, 2y]` for `y >= 0` and `{0}`
/// otherwise, or its epigraph `E_M(y) = M(y) + R_+`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct IntervalFixture {
    pub epigraph: bool,
}

impl SetMapping for IntervalFixture {
    fn parameter_dim(&self) -> usize {
        1
    }

    fn value_dim(&self) -> usize {
        1
    }

    fn norm(&self) -> NormKind {
        NormKind::Euclidean
    }

    fn value_at(&self, b: &[Rational]) -> Vec<Halfspaces> {
        let y = &b[0];
        let lo = if y.is_negative() { Rational::zero() } else { y.clone() };
        let mut h = Halfspaces::new(1);
        h.push(vec![-Rational::one()], -lo.clone());
        if !self.epigraph {
            h.push(vec![Rational::one()], lo * Rational::from_integer(2.into()));
        }
        vec![h]
    }
}

//! The parameterized multiobjective program and its text format.
//!
//! ```text
//! # minimize 2x1 + x2
//! n 2
//! q 1
//! objective 2,1
//! row -1,-1 <= b1
//! row -1,2 <= b2
//! nominal -2,1
//! decision_norm euclidean
//! image_norm euclidean
//! ```
//!
//! Each `row` line gives `a_t` and names the parameter `b_t` it is bounded
//! by; the indices must be a permutation of `1..=m`. Lines starting with
//! `#` are comments. Both norms default to euclidean.

use std::fmt::Write as _;

use num_traits::Zero;

use crate::error::ProblemError;
use crate::norm::{NormKind, NormSpec, Space};
use crate::rational::{self, fmt_list, RVector, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Problem {
    pub n: usize,
    pub objectives: Vec<RVector>,
    /// `a_t` for `t = 1..=m`, stored zero-based.
    pub rows: Vec<RVector>,
    pub nominal: RVector,
    pub decision_norm: NormSpec,
    pub image_norm: NormSpec,
}

impl Problem {
    /// Validates dimensions and builds a problem with euclidean norms.
    pub fn new(
        objectives: Vec<RVector>,
        rows: Vec<RVector>,
        nominal: RVector,
    ) -> Result<Self, ProblemError> {
        let n = rows
            .first()
            .or(objectives.first())
            .map_or(0, Vec::len);
        let p = Self {
            n,
            objectives,
            rows,
            nominal,
            decision_norm: NormSpec::new(NormKind::Euclidean, Space::Decision),
            image_norm: NormSpec::new(NormKind::Euclidean, Space::Image),
        };
        p.validate()?;
        Ok(p)
    }

    pub fn with_norms(mut self, decision: NormKind, image: NormKind) -> Self {
        self.decision_norm = NormSpec::new(decision, Space::Decision);
        self.image_norm = NormSpec::new(image, Space::Image);
        self
    }

    pub fn q(&self) -> usize {
        self.objectives.len()
    }

    pub fn m(&self) -> usize {
        self.rows.len()
    }

    pub fn validate(&self) -> Result<(), ProblemError> {
        if self.objectives.is_empty() {
            return Err(ProblemError::ZeroObjectives);
        }
        if self.n == 0 {
            return Err(ProblemError::DimensionMismatch("n must be at least 1".into()));
        }
        if self.rows.is_empty() {
            return Err(ProblemError::DimensionMismatch("at least one row is required".into()));
        }
        for (i, c) in self.objectives.iter().enumerate() {
            if c.len() != self.n {
                return Err(ProblemError::DimensionMismatch(format!(
                    "objective {} has {} entries, expected {}",
                    i + 1,
                    c.len(),
                    self.n
                )));
            }
            if rational::is_zero(c) {
                return Err(ProblemError::ZeroObjectiveVector(i + 1));
            }
        }
        for (t, a) in self.rows.iter().enumerate() {
            if a.len() != self.n {
                return Err(ProblemError::DimensionMismatch(format!(
                    "row {} has {} entries, expected {}",
                    t + 1,
                    a.len(),
                    self.n
                )));
            }
        }
        if self.nominal.len() != self.rows.len() {
            return Err(ProblemError::DimensionMismatch(format!(
                "nominal has {} entries, expected {}",
                self.nominal.len(),
                self.rows.len()
            )));
        }
        Ok(())
    }

    /// `C(x) = (<c_1,x>, ..., <c_q,x>)`.
    pub fn image(&self, x: &[Rational]) -> RVector {
        self.objectives.iter().map(|c| rational::dot(c, x)).collect()
    }

    /// `sum_i w_i c_i`.
    pub fn composite(&self, weights: &[Rational]) -> RVector {
        let mut out = rational::zeros(self.n);
        for (w, c) in weights.iter().zip(&self.objectives) {
            if !w.is_zero() {
                out = rational::axpy(&out, w, c);
            }
        }
        out
    }

    /// Whether `x` satisfies `<a_t,x> <= b_t` for every row.
    pub fn is_feasible(&self, b: &[Rational], x: &[Rational]) -> bool {
        self.rows
            .iter()
            .zip(b)
            .all(|(a, bt)| rational::dot(a, x) <= *bt)
    }

    /// Renders the problem in the text format accepted by [`parse_problem`].
    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "n {}", self.n);
        let _ = writeln!(s, "q {}", self.q());
        for c in &self.objectives {
            let _ = writeln!(s, "objective {}", fmt_list(c));
        }
        for (t, a) in self.rows.iter().enumerate() {
            let _ = writeln!(s, "row {} <= b{}", fmt_list(a), t + 1);
        }
        let _ = writeln!(s, "nominal {}", fmt_list(&self.nominal));
        let _ = writeln!(s, "decision_norm {}", self.decision_norm.kind);
        let _ = writeln!(s, "image_norm {}", self.image_norm.kind);
        s
    }
}

pub fn parse_problem(text: &str) -> Result<Problem, ProblemError> {
    let mut n: Option<usize> = None;
    let mut q: Option<usize> = None;
    let mut objectives = Vec::new();
    let mut rows: Vec<(usize, usize, RVector)> = Vec::new();
    let mut nominal: Option<RVector> = None;
    let mut decision = NormKind::Euclidean;
    let mut image = NormKind::Euclidean;

    for (idx, raw) in text.lines().enumerate() {
        let line_no = idx + 1;
        let line = raw.split('#').next().unwrap_or("").trim();
        if line.is_empty() {
            continue;
        }
        let bad = |message: String| ProblemError::MalformedSyntax {
            line: line_no,
            message,
        };
        let (key, rest) = line
            .split_once(char::is_whitespace)
            .map(|(k, r)| (k, r.trim()))
            .unwrap_or((line, ""));
        let vector = |s: &str| rational::parse_vector(s).map_err(|e| bad(e.to_string()));
        match key {
            "n" | "q" => {
                let v: usize = rest
                    .parse()
                    .map_err(|_| bad(format!("expected an integer after {key:?}")))?;
                let slot = if key == "n" { &mut n } else { &mut q };
                if slot.replace(v).is_some() {
                    return Err(bad(format!("duplicate {key:?} line")));
                }
            }
            "objective" => objectives.push(vector(rest)?),
            "row" => {
                let (lhs, rhs) = rest
                    .split_once("<=")
                    .ok_or_else(|| bad("expected `row <coefficients> <= b<t>`".into()))?;
                let t: usize = rhs
                    .trim()
                    .strip_prefix('b')
                    .and_then(|s| s.parse().ok())
                    .filter(|&t| t >= 1)
                    .ok_or_else(|| bad(format!("expected b<index>, found {:?}", rhs.trim())))?;
                rows.push((t, line_no, vector(lhs.trim())?));
            }
            "nominal" => {
                if nominal.replace(vector(rest)?).is_some() {
                    return Err(bad("duplicate nominal line".into()));
                }
            }
            "decision_norm" => decision = rest.parse().map_err(bad)?,
            "image_norm" => image = rest.parse().map_err(bad)?,
            other => return Err(bad(format!("unknown keyword {other:?}"))),
        }
    }

    let n = n.ok_or(ProblemError::MalformedSyntax {
        line: 0,
        message: "missing `n` line".into(),
    })?;
    let q = q.ok_or(ProblemError::MalformedSyntax {
        line: 0,
        message: "missing `q` line".into(),
    })?;
    if q == 0 {
        return Err(ProblemError::ZeroObjectives);
    }
    if objectives.len() != q {
        return Err(ProblemError::DimensionMismatch(format!(
            "q is {q} but {} objective lines were given",
            objectives.len()
        )));
    }
    let m = rows.len();
    let mut ordered: Vec<Option<RVector>> = vec![None; m];
    for (t, line, a) in rows {
        if t > m || ordered[t - 1].is_some() {
            return Err(ProblemError::MalformedSyntax {
                line,
                message: format!("row indices must be a permutation of b1..b{m}"),
            });
        }
        ordered[t - 1] = Some(a);
    }
    let nominal = nominal.ok_or(ProblemError::MalformedSyntax {
        line: 0,
        message: "missing `nominal` line".into(),
    })?;
    let problem = Problem {
        n,
        objectives,
        rows: ordered.into_iter().flatten().collect(),
        nominal,
        decision_norm: NormSpec::new(decision, Space::Decision),
        image_norm: NormSpec::new(image, Space::Image),
    };
    problem.validate()?;
    Ok(problem)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{ivec, rat};

    const SAMPLE: &str = "\
# sample
n 2
q 1
objective 2,1
row -1,-1 <= b1
row -1,2 <= b2
row -2,0 <= b3
row 3,1 <= b4
nominal -2,1,-2,7
decision_norm euclidean
";

    #[test]
    fn parses_sample() {
        let p = parse_problem(SAMPLE).unwrap();
        assert_eq!(p.n, 2);
        assert_eq!(p.q(), 1);
        assert_eq!(p.objectives, vec![ivec(&[2, 1])]);
        assert_eq!(p.rows[3], ivec(&[3, 1]));
        assert_eq!(p.nominal, ivec(&[-2, 1, -2, 7]));
        assert_eq!(p.image_norm.kind, NormKind::Euclidean);
        assert_eq!(parse_problem(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn keeps_fractions_exact() {
        let text = "n 1\nq 1\nobjective 1/3\nrow 1 <= b1\nnominal 0\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.objectives[0][0], rat(1, 3));
        assert!(p.to_text().contains("objective 1/3\n"));
    }

    #[test]
    fn rows_are_ordered_by_parameter_index() {
        let text = "n 1\nq 1\nobjective 1\nrow 2 <= b2\nrow 1 <= b1\nnominal 0,0\n";
        let p = parse_problem(text).unwrap();
        assert_eq!(p.rows, vec![ivec(&[1]), ivec(&[2])]);
    }

    #[test]
    fn rejects_bad_input() {
        let zero_q = "n 1\nq 0\nrow 1 <= b1\nnominal 0\n";
        assert_eq!(parse_problem(zero_q), Err(ProblemError::ZeroObjectives));
        let zero_c = "n 1\nq 1\nobjective 0\nrow 1 <= b1\nnominal 0\n";
        assert_eq!(parse_problem(zero_c), Err(ProblemError::ZeroObjectiveVector(1)));
        let short = "n 2\nq 1\nobjective 1\nrow 1,1 <= b1\nnominal 0\n";
        assert!(matches!(parse_problem(short), Err(ProblemError::DimensionMismatch(_))));
        let gap = "n 1\nq 1\nobjective 1\nrow 1 <= b2\nnominal 0\n";
        assert!(matches!(parse_problem(gap), Err(ProblemError::MalformedSyntax { .. })));
        let junk = "n 1\nq 1\nobjective x\nrow 1 <= b1\nnominal 0\n";
        assert!(matches!(
            parse_problem(junk),
            Err(ProblemError::MalformedSyntax { line: 3, .. })
        ));
    }
}

//! Two-phase dense tableau simplex with Bland's rule over exact rationals.
//!
//! [`Lp`] accepts free or nonnegative variables and `<=`, `>=`, `=`
//! constraints. Internally every free variable is split, slacks and
//! surpluses are added, and each row receives an artificial column that is
//! kept for the whole run so the final tableau carries `B^-1` for reading
//! off dual values and Farkas certificates.

use num_traits::{One, Signed, Zero};

use crate::rational::{self, RVector, Rational};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Relation {
    Le,
    Ge,
    Eq,
}

/// `minimize <objective, x>` subject to `constraints`.
#[derive(Debug, Clone)]
pub struct Lp {
    pub n: usize,
    pub objective: RVector,
    pub constraints: Vec<(RVector, Relation, Rational)>,
    pub nonneg: Vec<bool>,
}

/// Outcome of [`Lp::solve`].
///
/// Dual values follow the convention `value = <rhs, y>` with
/// `objective - sum_i y_i a_i` vanishing on free variables and being
/// nonnegative on nonnegative ones; `y_i <= 0` on `<=` rows and `y_i >= 0`
/// on `>=` rows.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LpResult {
    Optimal {
        x: RVector,
        value: Rational,
        y: RVector,
    },
    /// `y` proves infeasibility: `sum_i y_i a_i` vanishes on free variables
    /// and is nonpositive on nonnegative ones, while `<rhs, y> > 0`, with the
    /// same sign rules per relation as the optimal dual.
    Infeasible { y: RVector },
    /// A feasible point and a recession direction of negative cost.
    Unbounded { x: RVector, ray: RVector },
}

impl Lp {
    pub fn new(n: usize) -> Self {
        Self {
            n,
            objective: rational::zeros(n),
            constraints: Vec::new(),
            nonneg: vec![false; n],
        }
    }

    pub fn minimize(mut self, objective: RVector) -> Self {
        assert_eq!(objective.len(), self.n);
        self.objective = objective;
        self
    }

    pub fn maximize(self, objective: RVector) -> Self {
        let neg = rational::neg(&objective);
        self.minimize(neg)
    }

    pub fn nonnegative(mut self, j: usize) -> Self {
        self.nonneg[j] = true;
        self
    }

    pub fn all_nonnegative(mut self) -> Self {
        self.nonneg = vec![true; self.n];
        self
    }

    pub fn constrain(&mut self, a: RVector, rel: Relation, b: Rational) {
        assert_eq!(a.len(), self.n);
        self.constraints.push((a, rel, b));
    }

    pub fn le(&mut self, a: RVector, b: Rational) {
        self.constrain(a, Relation::Le, b);
    }

    pub fn ge(&mut self, a: RVector, b: Rational) {
        self.constrain(a, Relation::Ge, b);
    }

    pub fn eq(&mut self, a: RVector, b: Rational) {
        self.constrain(a, Relation::Eq, b);
    }

    pub fn solve(&self) -> LpResult {
        let m = self.constraints.len();
        // Column layout: structural (split free vars), then one slack per
        // inequality, then one artificial per row.
        let mut col_of: Vec<(usize, Option<usize>)> = Vec::with_capacity(self.n);
        let mut ncols = 0;
        for j in 0..self.n {
            if self.nonneg[j] {
                col_of.push((ncols, None));
                ncols += 1;
            } else {
                col_of.push((ncols, Some(ncols + 1)));
                ncols += 2;
            }
        }
        let structural = ncols;
        let mut slack_of = vec![None; m];
        for (i, (_, rel, _)) in self.constraints.iter().enumerate() {
            if *rel != Relation::Eq {
                slack_of[i] = Some(ncols);
                ncols += 1;
            }
        }
        let art0 = ncols;
        let total = ncols + m;

        let mut sigma = vec![true; m];
        let mut tab: Vec<RVector> = Vec::with_capacity(m);
        let mut rhs: RVector = Vec::with_capacity(m);
        for (i, (a, rel, b)) in self.constraints.iter().enumerate() {
            let mut row = rational::zeros(total);
            for (j, coef) in a.iter().enumerate() {
                if coef.is_zero() {
                    continue;
                }
                let (p, q) = col_of[j];
                row[p] = coef.clone();
                if let Some(q) = q {
                    row[q] = -coef.clone();
                }
            }
            if let Some(s) = slack_of[i] {
                row[s] = if *rel == Relation::Le {
                    Rational::one()
                } else {
                    -Rational::one()
                };
            }
            let mut b = b.clone();
            if b.is_negative() {
                sigma[i] = false;
                for v in row.iter_mut() {
                    *v = -v.clone();
                }
                b = -b;
            }
            row[art0 + i] = Rational::one();
            tab.push(row);
            rhs.push(b);
        }

        let mut t = Tableau {
            tab,
            rhs,
            basis: (art0..art0 + m).collect(),
            barred_from: total,
        };

        let mut phase1 = rational::zeros(total);
        for v in phase1.iter_mut().skip(art0) {
            *v = Rational::one();
        }
        // Phase I is bounded below by zero, so it always terminates optimal.
        let _ = t.run(&phase1, total);
        let infeas: Rational = (0..m)
            .filter(|&k| t.basis[k] >= art0)
            .map(|k| t.rhs[k].clone())
            .sum();
        let unflip = |yp: RVector| -> RVector {
            yp.into_iter()
                .zip(&sigma)
                .map(|(v, &s)| if s { v } else { -v })
                .collect()
        };
        if infeas.is_positive() {
            return LpResult::Infeasible {
                y: unflip(t.duals(&phase1, art0)),
            };
        }

        // Drive zero-level artificials out where a structural pivot exists.
        for k in 0..m {
            if t.basis[k] >= art0 {
                if let Some(j) = (0..art0).find(|&j| !t.tab[k][j].is_zero()) {
                    t.pivot(k, j);
                }
            }
        }

        let mut cost = rational::zeros(total);
        for j in 0..self.n {
            let (p, q) = col_of[j];
            cost[p] = self.objective[j].clone();
            if let Some(q) = q {
                cost[q] = -self.objective[j].clone();
            }
        }
        t.barred_from = art0;
        let unbounded = t.run(&cost, art0);
        let z = t.point(total);
        let to_x = |z: &[Rational]| -> RVector {
            col_of
                .iter()
                .map(|&(p, q)| match q {
                    Some(q) => &z[p] - &z[q],
                    None => z[p].clone(),
                })
                .collect()
        };
        let x = to_x(&z);
        debug_assert!(structural <= art0);
        if let Some(j) = unbounded {
            let mut dz = rational::zeros(total);
            dz[j] = Rational::one();
            for k in 0..m {
                dz[t.basis[k]] = -t.tab[k][j].clone();
            }
            return LpResult::Unbounded {
                x,
                ray: to_x(&dz),
            };
        }
        let value = rational::dot(&self.objective, &x);
        LpResult::Optimal {
            x,
            value,
            y: unflip(t.duals(&cost, art0)),
        }
    }
}

struct Tableau {
    tab: Vec<RVector>,
    rhs: RVector,
    basis: Vec<usize>,
    barred_from: usize,
}

impl Tableau {
    fn reduced_cost(&self, cost: &[Rational], j: usize) -> Rational {
        let mut r = cost[j].clone();
        for (k, &bk) in self.basis.iter().enumerate() {
            if !cost[bk].is_zero() && !self.tab[k][j].is_zero() {
                r -= &cost[bk] * &self.tab[k][j];
            }
        }
        r
    }

    /// Runs Bland's rule to optimality. Returns the entering column when the
    /// objective is unbounded below.
    fn run(&mut self, cost: &[Rational], limit: usize) -> Option<usize> {
        loop {
            let limit = limit.min(self.barred_from);
            let entering = (0..limit)
                .filter(|j| !self.basis.contains(j))
                .find(|&j| self.reduced_cost(cost, j).is_negative());
            let Some(j) = entering else {
                return None;
            };
            let mut leave: Option<(usize, Rational)> = None;
            for k in 0..self.tab.len() {
                let a = &self.tab[k][j];
                if !a.is_positive() {
                    continue;
                }
                let ratio = &self.rhs[k] / a;
                let better = match &leave {
                    None => true,
                    Some((kk, best)) => {
                        ratio < *best || (ratio == *best && self.basis[k] < self.basis[*kk])
                    }
                };
                if better {
                    leave = Some((k, ratio));
                }
            }
            match leave {
                Some((k, _)) => self.pivot(k, j),
                None => return Some(j),
            }
        }
    }

    fn pivot(&mut self, r: usize, c: usize) {
        let inv = Rational::one() / &self.tab[r][c];
        for v in self.tab[r].iter_mut() {
            if !v.is_zero() {
                *v *= &inv;
            }
        }
        self.rhs[r] *= &inv;
        let prow = self.tab[r].clone();
        let prhs = self.rhs[r].clone();
        for k in 0..self.tab.len() {
            if k == r || self.tab[k][c].is_zero() {
                continue;
            }
            let f = self.tab[k][c].clone();
            for (v, p) in self.tab[k].iter_mut().zip(&prow) {
                if !p.is_zero() {
                    *v -= &f * p;
                }
            }
            self.rhs[k] -= &f * &prhs;
        }
        self.basis[r] = c;
    }

    fn point(&self, total: usize) -> RVector {
        let mut z = rational::zeros(total);
        for (k, &bk) in self.basis.iter().enumerate() {
            z[bk] = self.rhs[k].clone();
        }
        z
    }

    /// `c_B^T B^-1`, read from the artificial block.
    fn duals(&self, cost: &[Rational], art0: usize) -> RVector {
        let m = self.tab.len();
        (0..m)
            .map(|i| {
                let mut s = Rational::zero();
                for (k, &bk) in self.basis.iter().enumerate() {
                    if !cost[bk].is_zero() {
                        s += &cost[bk] * &self.tab[k][art0 + i];
                    }
                }
                s
            })
            .collect()
    }
}

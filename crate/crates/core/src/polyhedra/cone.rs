//! Finitely generated cones and positive polars by double description.

use num_traits::{Signed, Zero};

use crate::linalg;
use crate::lp::{Lp, LpResult};
use crate::rational::{self, RVector, Rational};

/// `cone(rays) + span(lineality)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConeGenerators {
    pub n: usize,
    pub rays: Vec<RVector>,
    pub lineality: Vec<RVector>,
}

impl ConeGenerators {
    pub fn new(n: usize, rays: Vec<RVector>, lineality: Vec<RVector>) -> Self {
        Self {
            n,
            rays,
            lineality,
        }
    }

    /// The cone `{0}`.
    pub fn is_trivial(&self) -> bool {
        self.rays.is_empty() && self.lineality.is_empty()
    }

    /// Whether `y` is a nonnegative combination of the rays plus a lineality
    /// vector, decided by a feasibility LP.
    pub fn contains(&self, y: &[Rational]) -> bool {
        let (r, l) = (self.rays.len(), self.lineality.len());
        let mut lp = Lp::new(r + l);
        for k in 0..r {
            lp = lp.nonnegative(k);
        }
        for j in 0..self.n {
            let row: RVector = self
                .rays
                .iter()
                .chain(&self.lineality)
                .map(|g| g[j].clone())
                .collect();
            lp.eq(row, y[j].clone());
        }
        !matches!(lp.solve(), LpResult::Infeasible { .. })
    }

    /// All generators with lineality vectors listed in both orientations.
    pub fn all_generators(&self) -> Vec<RVector> {
        let mut out = self.rays.clone();
        for l in &self.lineality {
            out.push(l.clone());
            out.push(rational::neg(l));
        }
        out
    }
}

/// Generators of `{y | <y, v> >= 0 for every v in vectors}`.
///
/// Rays are returned orthogonal to the lineality space and every vector is
/// scaled to coprime integers.
pub fn polar_generators(n: usize, vectors: &[RVector]) -> ConeGenerators {
    let mut lineality: Vec<RVector> = (0..n).map(|i| rational::unit(n, i)).collect();
    let mut rays: Vec<RVector> = Vec::new();
    let mut processed: Vec<RVector> = Vec::new();

    for h in vectors {
        if rational::is_zero(h) {
            continue;
        }
        processed.push(h.clone());
        if let Some(pos) = lineality
            .iter()
            .position(|l| !rational::dot(h, l).is_zero())
        {
            let mut l0 = lineality.remove(pos);
            let mut hl0 = rational::dot(h, &l0);
            if hl0.is_negative() {
                l0 = rational::neg(&l0);
                hl0 = -hl0;
            }
            let reduce = |v: &RVector| -> RVector {
                let f = rational::dot(h, v) / &hl0;
                if f.is_zero() {
                    v.clone()
                } else {
                    rational::axpy(v, &-f, &l0)
                }
            };
            lineality = lineality.iter().map(reduce).collect();
            rays = rays.iter().map(reduce).collect();
            rays.push(l0);
        } else {
            let vals: Vec<Rational> = rays.iter().map(|r| rational::dot(h, r)).collect();
            let mut next: Vec<RVector> = rays
                .iter()
                .zip(&vals)
                .filter(|(_, v)| !v.is_negative())
                .map(|(r, _)| r.clone())
                .collect();
            for (p, vp) in rays.iter().zip(&vals) {
                if !vp.is_positive() {
                    continue;
                }
                for (q, vq) in rays.iter().zip(&vals) {
                    if !vq.is_negative() {
                        continue;
                    }
                    // <h, vp q - vq p> = 0 with vp > 0 > vq.
                    let combo = rational::sub(&rational::scale(q, vp), &rational::scale(p, vq));
                    next.push(combo);
                }
            }
            rays = next;
        }
        let ortho = gram_schmidt(&lineality);
        let target_rank = linalg::rank(&processed).saturating_sub(1);
        let mut kept: Vec<RVector> = Vec::new();
        for r in rays {
            let r = rational::primitive(&project_out(&r, &ortho));
            if rational::is_zero(&r) || kept.contains(&r) {
                continue;
            }
            let active: Vec<RVector> = processed
                .iter()
                .filter(|g| rational::dot(g, &r).is_zero())
                .cloned()
                .collect();
            if linalg::rank(&active) == target_rank {
                kept.push(r);
            }
        }
        rays = kept;
    }

    let lineality = tidy_basis(&lineality);
    ConeGenerators {
        n,
        rays,
        lineality,
    }
}

fn gram_schmidt(vs: &[RVector]) -> Vec<RVector> {
    let mut out: Vec<RVector> = Vec::new();
    for v in vs {
        let w = project_out(v, &out);
        if !rational::is_zero(&w) {
            out.push(w);
        }
    }
    out
}

/// `v` minus its orthogonal projection onto span of the orthogonal `basis`.
fn project_out(v: &[Rational], basis: &[RVector]) -> RVector {
    let mut w = v.to_vec();
    for e in basis {
        let f = rational::dot(&w, e) / rational::sq_l2(e);
        if !f.is_zero() {
            w = rational::axpy(&w, &-f, e);
        }
    }
    w
}

/// A primitive-integer basis of `span(vs)` in reduced echelon form.
fn tidy_basis(vs: &[RVector]) -> Vec<RVector> {
    if vs.is_empty() {
        return Vec::new();
    }
    let (red, pivots) = linalg::rref(vs);
    red.into_iter()
        .take(pivots.len())
        .map(|r| {
            let p = rational::primitive(&r);
            // Orientation: last nonzero entry positive.
            match p.iter().rev().find(|v| !v.is_zero()) {
                Some(v) if v.is_negative() => rational::neg(&p),
                _ => p,
            }
        })
        .collect()
}

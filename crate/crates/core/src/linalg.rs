//! Dense exact linear algebra: row reduction, rank, null spaces.

use num_traits::{One, Zero};

use crate::rational::{RVector, Rational};

pub type Matrix = Vec<RVector>;

/// Reduced row echelon form. Returns the reduced matrix and its pivot columns.
pub fn rref(m: &[RVector]) -> (Matrix, Vec<usize>) {
    let mut a: Matrix = m.to_vec();
    let rows = a.len();
    let cols = a.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = Rational::one() / &a[r][c];
        for v in a[r].iter_mut() {
            *v *= &inv;
        }
        for i in 0..rows {
            if i != r && !a[i][c].is_zero() {
                let f = a[i][c].clone();
                for j in c..cols {
                    let d = &f * &a[r][j];
                    a[i][j] -= d;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    (a, pivots)
}

pub fn rank(m: &[RVector]) -> usize {
    rref(m).1.len()
}

/// A basis of `{x | m x = 0}`, where `m` has `cols` columns.
pub fn null_space(m: &[RVector], cols: usize) -> Matrix {
    if m.is_empty() {
        return (0..cols).map(|i| crate::rational::unit(cols, i)).collect();
    }
    let (r, pivots) = rref(m);
    let free: Vec<usize> = (0..cols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = crate::rational::zeros(cols);
            v[f] = Rational::one();
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = -r[i][f].clone();
            }
            v
        })
        .collect()
}

/// Solves `m x = rhs` for square nonsingular `m`; `None` when singular.
pub fn solve_square(m: &[RVector], rhs: &[Rational]) -> Option<RVector> {
    let n = m.len();
    let aug: Matrix = m
        .iter()
        .zip(rhs)
        .map(|(row, r)| {
            let mut v = row.clone();
            v.push(r.clone());
            v
        })
        .collect();
    let (red, pivots) = rref(&aug);
    if pivots.len() != n || pivots.iter().any(|&p| p >= n) {
        return None;
    }
    Some(red.iter().map(|row| row[n].clone()).collect())
}

pub fn transpose(m: &[RVector], cols: usize) -> Matrix {
    (0..cols)
        .map(|j| m.iter().map(|row| row[j].clone()).collect())
        .collect()
}

//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use epilip::linalg;
use epilip::lp::{self, combinations};
use epilip::rational::{self, int, ivec, rat, RVector, Rational};
use epilip::Problem;
use num_traits::{Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub fn example_6_1() -> Problem {
    Problem::new(
        vec![ivec(&[2, 1])],
        vec![ivec(&[-1, -1]), ivec(&[-1, 2]), ivec(&[-2, 0]), ivec(&[3, 1])],
        ivec(&[-2, 1, -2, 7]),
    )
    .unwrap()
}

/// Separable example with `a = 2`, written as `-x <= b`.
pub fn example_5_1() -> Problem {
    Problem::new(
        vec![ivec(&[2, 0]), ivec(&[0, 1])],
        vec![ivec(&[-1, 0]), ivec(&[0, -1])],
        ivec(&[0, 0]),
    )
    .unwrap()
}

/// Example with a strict gap between the front and its epigraph, written
/// as `-x1 <= b1`, `-x1 - x2 <= b2`.
pub fn example_5_2() -> Problem {
    Problem::new(
        vec![ivec(&[1, 0]), ivec(&[0, 1])],
        vec![ivec(&[-1, 0]), ivec(&[-1, -1])],
        ivec(&[0, 0]),
    )
    .unwrap()
}

/// `x in F(b) + {y : Cy >= 0}` decided by one feasibility LP over `x'`:
/// `A x' <= b`, `C x' <= C x`.
pub fn epigraph_member(problem: &Problem, b: &[Rational], x: &[Rational]) -> bool {
    let mut rows = problem.rows.clone();
    let mut rhs = b.to_vec();
    for c in &problem.objectives {
        rows.push(c.clone());
        rhs.push(rational::dot(c, x));
    }
    lp::feasible(&rows, &rhs, problem.n)
}

/// Vertices of `{x : A x <= b}` by brute force over row subsets.
pub fn brute_vertices(rows: &[RVector], b: &[Rational], n: usize) -> Vec<RVector> {
    let mut out = Vec::new();
    for set in combinations(rows.len(), n) {
        let sub: Vec<RVector> = set.iter().map(|&t| rows[t].clone()).collect();
        let rhs: RVector = set.iter().map(|&t| b[t].clone()).collect();
        if let Some(v) = linalg::solve_square(&sub, &rhs) {
            if rows.iter().zip(b).all(|(a, bt)| rational::dot(a, &v) <= *bt) && !out.contains(&v) {
                out.push(v);
            }
        }
    }
    out
}

/// Whether some feasible point has image `<= C x0` and `!= C x0`, decided
/// by scanning the vertices and extreme rays of
/// `D = {x : A x <= b, C x <= C x0}` intersected with the orthogonal
/// complement of its lineality space through `x0`. On that pointed
/// polyhedron `sum_i <c_i, x>` is unbounded below iff some extreme ray
/// decreases it, and is otherwise minimized at a vertex.
pub fn brute_dominated(problem: &Problem, b: &[Rational], x0: &[Rational]) -> bool {
    let n = problem.n;
    let mut rows = problem.rows.clone();
    let mut rhs = b.to_vec();
    for c in &problem.objectives {
        rows.push(c.clone());
        rhs.push(rational::dot(c, x0));
    }
    let sum: RVector = (0..n)
        .map(|j| problem.objectives.iter().map(|c| c[j].clone()).sum())
        .collect();
    let f0 = rational::dot(&sum, x0);
    let lineality = linalg::null_space(&rows, n);
    let k = n - lineality.len();
    let lin_rhs: RVector = lineality.iter().map(|l| rational::dot(l, x0)).collect();
    for set in combinations(rows.len(), k) {
        let mut sub: Vec<RVector> = set.iter().map(|&t| rows[t].clone()).collect();
        let mut sub_rhs: RVector = set.iter().map(|&t| rhs[t].clone()).collect();
        sub.extend(lineality.iter().cloned());
        sub_rhs.extend(lin_rhs.iter().cloned());
        if let Some(v) = linalg::solve_square(&sub, &sub_rhs) {
            let feasible = rows.iter().zip(&rhs).all(|(a, bt)| rational::dot(a, &v) <= *bt);
            if feasible && rational::dot(&sum, &v) < f0 {
                return true;
            }
        }
    }
    if k == 0 {
        return false;
    }
    for set in combinations(rows.len(), k - 1) {
        let mut sub: Vec<RVector> = set.iter().map(|&t| rows[t].clone()).collect();
        sub.extend(lineality.iter().cloned());
        let null = linalg::null_space(&sub, n);
        if null.len() != 1 {
            continue;
        }
        for d in [null[0].clone(), rational::neg(&null[0])] {
            let recedes = rows.iter().all(|a| !rational::dot(a, &d).is_positive());
            if recedes && rational::dot(&sum, &d).is_negative() {
                return true;
            }
        }
    }
    false
}

/// Random problem with `n <= 3`, `m <= 5`, `q = q`, feasible and with a
/// bounded scalarization at its nominal parameter.
pub fn random_instance(seed: u64, q: usize) -> Problem {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    loop {
        let n = rng.random_range(1..=3);
        let m = rng.random_range(n..=5);
        let rows: Vec<RVector> = (0..m).map(|_| nonzero_vector(&mut rng, n, 3)).collect();
        let objectives: Vec<RVector> = (0..q).map(|_| nonzero_vector(&mut rng, n, 2)).collect();
        let x0: RVector = (0..n).map(|_| int(rng.random_range(-2..=2))).collect();
        let nominal: RVector = rows
            .iter()
            .map(|a| rational::dot(a, &x0) + int(rng.random_range(0..=2)))
            .collect();
        let Ok(p) = Problem::new(objectives, rows, nominal) else {
            continue;
        };
        if lp::in_dom_s(&p, &p.nominal) {
            return p;
        }
    }
}

fn nonzero_vector(rng: &mut ChaCha8Rng, n: usize, bound: i64) -> RVector {
    loop {
        let v: RVector = (0..n).map(|_| int(rng.random_range(-bound..=bound))).collect();
        if !rational::is_zero(&v) {
            return v;
        }
    }
}

/// `center + u`, `u` uniform on the `1/den` grid of `[-radius, radius]^k`.
pub fn grid_point(rng: &mut ChaCha8Rng, center: &[Rational], radius: i64, den: i64) -> RVector {
    center
        .iter()
        .map(|c| c + rat(rng.random_range(-radius * den..=radius * den), den))
        .collect()
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Whether `v` is zero or all its entries are `<= 0`.
pub fn nonpositive(v: &[Rational]) -> bool {
    v.iter().all(|x| x.is_zero() || x.is_negative())
}

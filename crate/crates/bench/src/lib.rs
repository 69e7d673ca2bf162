//! Benchmark fixtures.

use epilip::rational::{int, ivec};
use epilip::Problem;

/// One objective, four rows, two variables.
pub fn lp_fixture() -> Problem {
    Problem::new(
        vec![ivec(&[2, 1])],
        vec![ivec(&[-1, -1]), ivec(&[-1, 2]), ivec(&[-2, 0]), ivec(&[3, 1])],
        ivec(&[-2, 1, -2, 7]),
    )
    .unwrap()
}

/// Two separable objectives on the nonnegative orthant.
pub fn biobjective_fixture() -> Problem {
    Problem::new(
        vec![ivec(&[2, 0]), ivec(&[0, 1])],
        vec![ivec(&[-1, 0]), ivec(&[0, -1])],
        ivec(&[0, 0]),
    )
    .unwrap()
}

/// `q` objectives over a box in `R^n` cut by one diagonal row.
pub fn box_fixture(n: usize, q: usize) -> Problem {
    let mut rows = Vec::new();
    for i in 0..n {
        let mut up = vec![0; n];
        up[i] = 1;
        rows.push(ivec(&up));
        up[i] = -1;
        rows.push(ivec(&up));
    }
    rows.push(ivec(&vec![-1; n]));
    let objectives = (0..q)
        .map(|k| ivec(&(0..n).map(|j| if (j + k) % n == 0 { 2 } else { 1 }).collect::<Vec<_>>()))
        .collect();
    let mut nominal = ivec(&vec![1; 2 * n]);
    nominal.push(int(1));
    Problem::new(objectives, rows, nominal).unwrap()
}

use num_traits::{One, Signed, Zero};

use crate::error::VerifyError;
use crate::linalg;
use crate::lp::{self, Lp, LpResult};
use crate::norm::{NormKind, NormSpec, Root};
use crate::rational::{self, RVector, Rational};
use crate::system::Halfspaces;

/// Largest ambient dimension accepted by the euclidean projection.
pub const EUCLIDEAN_MAX_DIM: usize = 4;

/// A nearest point of a set together with its distance.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Nearest {
    pub point: RVector,
    pub distance: Root,
}

/// `d(z, set)` in the given norm, exactly.
pub fn distance_to_set(z: &[Rational], set: &Halfspaces, norm: NormSpec) -> Result<Root, VerifyError> {
    Ok(nearest_point(z, set, norm.kind)?.distance)
}

/// A point of `set` closest to `z`. Unique for the euclidean norm.
pub fn nearest_point(z: &[Rational], set: &Halfspaces, norm: NormKind) -> Result<Nearest, VerifyError> {
    let Some(set) = reduce(set) else {
        return Err(VerifyError::EmptySet);
    };
    if !lp::feasible(&set.a, &set.b, set.n) {
        return Err(VerifyError::EmptySet);
    }
    if set.contains(z) {
        return Ok(Nearest {
            point: z.to_vec(),
            distance: Root::zero(),
        });
    }
    match norm {
        NormKind::Euclidean => euclidean(z, &set),
        NormKind::L1 | NormKind::Linf => polyhedral(z, &set, norm),
    }
}

/// Nearest point over a finite union; empty members are ignored.
pub fn nearest_in_union(
    z: &[Rational],
    sets: &[Halfspaces],
    norm: NormKind,
) -> Result<Nearest, VerifyError> {
    let mut best: Option<Nearest> = None;
    for s in sets {
        match nearest_point(z, s, norm) {
            Ok(n) => {
                if best.as_ref().is_none_or(|b| n.distance < b.distance) {
                    best = Some(n);
                }
            }
            Err(VerifyError::EmptySet) => {}
            Err(e) => return Err(e),
        }
    }
    best.ok_or(VerifyError::EmptySet)
}

/// Drops tautological zero rows; `None` if a zero row is violated.
fn reduce(set: &Halfspaces) -> Option<Halfspaces> {
    let mut out = Halfspaces::new(set.n);
    for (a, b) in set.a.iter().zip(&set.b) {
        if rational::is_zero(a) {
            if b.is_negative() {
                return None;
            }
        } else {
            out.push(a.clone(), b.clone());
        }
    }
    Some(out)
}

fn polyhedral(z: &[Rational], set: &Halfspaces, norm: NormKind) -> Result<Nearest, VerifyError> {
    let n = set.n;
    // Variables: x (n), then one bound for linf or n bounds for l1.
    let extra = if norm == NormKind::Linf { 1 } else { n };
    let mut objective = rational::zeros(n);
    objective.extend(std::iter::repeat_n(Rational::one(), extra));
    let mut lp = Lp::new(n + extra).minimize(objective);
    for (a, b) in set.a.iter().zip(&set.b) {
        let mut v = a.clone();
        v.extend(rational::zeros(extra));
        lp.le(v, b.clone());
    }
    for j in 0..n {
        let k = if norm == NormKind::Linf { n } else { n + j };
        let mut up = rational::unit(n + extra, j);
        up[k] = -Rational::one();
        lp.le(up, z[j].clone());
        let mut down = rational::neg(&rational::unit(n + extra, j));
        down[k] = -Rational::one();
        lp.le(down, -z[j].clone());
    }
    match lp.solve() {
        LpResult::Optimal { x, value, .. } => Ok(Nearest {
            point: x[..n].to_vec(),
            distance: Root::from_rational(&value),
        }),
        _ => Err(VerifyError::EmptySet),
    }
}

/// Projection by enumerating candidate active sets. For an active set `S`
/// with independent rows the KKT system reads `x = z - A_S^T mu`,
/// `A_S A_S^T mu = A_S z - b_S`; the candidate is optimal iff `mu >= 0` and
/// `x` is feasible. Some independent support of a KKT multiplier always
/// exists, so the enumeration is complete.
fn euclidean(z: &[Rational], set: &Halfspaces) -> Result<Nearest, VerifyError> {
    let n = set.n;
    if n > EUCLIDEAN_MAX_DIM {
        return Err(VerifyError::DimensionTooLarge {
            got: n,
            max: EUCLIDEAN_MAX_DIM,
        });
    }
    let m = set.len();
    for k in 1..=n.min(m) {
        for s in lp::combinations(m, k) {
            let rows: Vec<RVector> = s.iter().map(|&i| set.a[i].clone()).collect();
            let gram: Vec<RVector> = rows
                .iter()
                .map(|r| rows.iter().map(|t| rational::dot(r, t)).collect())
                .collect();
            let rhs: RVector = s
                .iter()
                .zip(&rows)
                .map(|(&i, r)| rational::dot(r, z) - &set.b[i])
                .collect();
            let Some(mu) = linalg::solve_square(&gram, &rhs) else {
                continue;
            };
            if mu.iter().any(|v| v.is_negative()) {
                continue;
            }
            let mut x = z.to_vec();
            for (r, u) in rows.iter().zip(&mu) {
                if !u.is_zero() {
                    x = rational::axpy(&x, &-u.clone(), r);
                }
            }
            if set.contains(&x) {
                let d = rational::sq_l2(&rational::sub(&x, z));
                return Ok(Nearest {
                    point: x,
                    distance: Root::from_square(d),
                });
            }
        }
    }
    unreachable!("a nonempty polyhedron has a euclidean projection")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::norm::Space;
    use crate::rational::{int, ivec, rat};

    fn spec(kind: NormKind) -> NormSpec {
        NormSpec::new(kind, Space::Decision)
    }

    #[test]
    fn halfplane() {
        // x1 >= 1
        let set = Halfspaces::from_rows(2, vec![ivec(&[-1, 0])], ivec(&[-1]));
        let z = ivec(&[0, 0]);
        for kind in [NormKind::Linf, NormKind::L1, NormKind::Euclidean] {
            assert_eq!(distance_to_set(&z, &set, spec(kind)).unwrap(), Root::one());
        }
        assert!(distance_to_set(&ivec(&[3, 3]), &set, spec(NormKind::Euclidean))
            .unwrap()
            .is_zero());
    }

    #[test]
    fn corner() {
        // x1 >= 1, x2 >= 2
        let set = Halfspaces::from_rows(2, vec![ivec(&[-1, 0]), ivec(&[0, -1])], ivec(&[-1, -2]));
        let z = ivec(&[0, 0]);
        assert_eq!(distance_to_set(&z, &set, spec(NormKind::Linf)).unwrap(), Root::from_rational(&int(2)));
        assert_eq!(distance_to_set(&z, &set, spec(NormKind::L1)).unwrap(), Root::from_rational(&int(3)));
        let e = nearest_point(&z, &set, NormKind::Euclidean).unwrap();
        assert_eq!(e.point, ivec(&[1, 2]));
        assert_eq!(e.distance.square(), &int(5));
    }

    #[test]
    fn oblique_face() {
        // x1 + x2 >= 1: projection of the origin is (1/2, 1/2).
        let set = Halfspaces::from_rows(2, vec![ivec(&[-1, -1])], ivec(&[-1]));
        let e = nearest_point(&ivec(&[0, 0]), &set, NormKind::Euclidean).unwrap();
        assert_eq!(e.point, vec![rat(1, 2), rat(1, 2)]);
        assert_eq!(e.distance.square(), &rat(1, 2));
    }

    #[test]
    fn empty_and_oversized() {
        let set = Halfspaces::from_rows(1, vec![ivec(&[1]), ivec(&[-1])], ivec(&[0, -1]));
        assert_eq!(
            distance_to_set(&ivec(&[0]), &set, spec(NormKind::Euclidean)),
            Err(VerifyError::EmptySet)
        );
        let zero_row = Halfspaces::from_rows(1, vec![ivec(&[0])], ivec(&[-1]));
        assert_eq!(
            distance_to_set(&ivec(&[0]), &zero_row, spec(NormKind::L1)),
            Err(VerifyError::EmptySet)
        );
        let big = Halfspaces::from_rows(5, vec![ivec(&[-1, 0, 0, 0, 0])], ivec(&[-1]));
        assert!(matches!(
            distance_to_set(&rational::zeros(5), &big, spec(NormKind::Euclidean)),
            Err(VerifyError::DimensionTooLarge { got: 5, max: 4 })
        ));
        assert!(nearest_in_union(&ivec(&[0]), &[set], NormKind::L1).is_err());
    }

    /// Dense grid search over a shrinking box around the best point so far.
    fn grid_oracle(z: &[f64], set: &Halfspaces) -> f64 {
        let a: Vec<Vec<f64>> = set.a.iter().map(|r| r.iter().map(rational::to_f64).collect()).collect();
        let b: Vec<f64> = set.b.iter().map(rational::to_f64).collect();
        let feasible = |x: [f64; 2]| a.iter().zip(&b).all(|(r, bt)| r[0] * x[0] + r[1] * x[1] <= bt + 1e-13);
        let (mut center, mut half, mut best) = ([0.0, 0.0], 4.0, f64::INFINITY);
        for _ in 0..30 {
            let steps = 80;
            let mut next = center;
            for i in 0..=steps {
                for j in 0..=steps {
                    let x = [
                        center[0] - half + 2.0 * half * i as f64 / steps as f64,
                        center[1] - half + 2.0 * half * j as f64 / steps as f64,
                    ];
                    if feasible(x) {
                        let d = (x[0] - z[0]).powi(2) + (x[1] - z[1]).powi(2);
                        if d < best {
                            best = d;
                            next = x;
                        }
                    }
                }
            }
            center = next;
            half /= 4.0;
        }
        best
    }

    #[test]
    fn euclidean_matches_grid_search() {
        use rand::{Rng, SeedableRng};
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        let mut checked = 0;
        while checked < 6 {
            let mut set = Halfspaces::new(2);
            for _ in 0..3 {
                let a = vec![int(rng.random_range(-3..=3)), int(rng.random_range(-3..=3))];
                set.push(a, int(rng.random_range(-2..=2)));
            }
            // Keep the feasible region inside the searched box.
            for j in 0..2 {
                set.push(rational::unit(2, j), int(3));
                set.push(rational::neg(&rational::unit(2, j)), int(3));
            }
            let z = vec![int(rng.random_range(-2..=2)), int(rng.random_range(-2..=2))];
            let Ok(e) = nearest_point(&z, &set, NormKind::Euclidean) else {
                continue;
            };
            let exact = rational::to_f64(e.distance.square());
            let zf = [rational::to_f64(&z[0]), rational::to_f64(&z[1])];
            assert!((grid_oracle(&zf, &set) - exact).abs() <= 1e-6);
            checked += 1;
        }
    }
}

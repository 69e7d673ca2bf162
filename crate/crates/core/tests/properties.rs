mod common;

use epilip::lp::{self, Lp, LpResult};
use epilip::polyhedra::ConeGenerators;
use epilip::polyhedra::polar_generators;
use epilip::rational::{self, fmt_rational, parse_rational, rat, RVector, Rational};
use epilip::{parse_problem, AffineForm};
use num_traits::Signed;
use proptest::prelude::*;

fn small_rational() -> impl Strategy<Value = Rational> {
    (-40i64..=40, 1i64..=12).prop_map(|(n, d)| rat(n, d))
}

fn rvec(len: usize) -> impl Strategy<Value = RVector> {
    proptest::collection::vec(small_rational(), len)
}

fn int_vectors(n: usize, max: usize) -> impl Strategy<Value = Vec<RVector>> {
    proptest::collection::vec(
        proptest::collection::vec((-3i64..=3).prop_map(|v| rat(v, 1)), n),
        1..=max,
    )
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn affine_forms_are_affine(
        f in (rvec(3), small_rational()),
        g in (rvec(3), small_rational()),
        s in small_rational(),
        t in small_rational(),
        b in rvec(3),
    ) {
        let f = AffineForm::new(f.0, f.1);
        let g = AffineForm::new(g.0, g.1);
        let combined = f.combine(&s, &g, &t);
        prop_assert_eq!(combined.eval(&b), &s * f.eval(&b) + &t * g.eval(&b));
        prop_assert_eq!(f.add(&g).eval(&b), f.eval(&b) + g.eval(&b));
        prop_assert_eq!(f.scale(&s).eval(&b), &s * f.eval(&b));
    }

    #[test]
    fn rationals_round_trip(v in small_rational()) {
        prop_assert_eq!(parse_rational(&fmt_rational(&v)).unwrap(), v);
    }

    #[test]
    fn problems_round_trip(seed in 0u64..10_000, q in 1usize..=3) {
        let p = common::random_instance(seed, q);
        prop_assert_eq!(parse_problem(&p.to_text()).unwrap(), p);
    }

    #[test]
    fn polar_of_polar_is_the_cone(vectors in int_vectors(3, 4)) {
        let cone = ConeGenerators::new(3, vectors.clone(), Vec::new());
        let polar = polar_generators(3, &vectors);
        let bipolar = polar_generators(3, &polar.all_generators());
        for v in &vectors {
            prop_assert!(bipolar.contains(v), "{v:?} missing from the bipolar");
        }
        for g in bipolar.all_generators() {
            prop_assert!(cone.contains(&g), "{g:?} outside the cone");
        }
        for g in polar.all_generators() {
            for v in &vectors {
                prop_assert!(!rational::dot(&g, v).is_negative());
            }
        }
    }

    #[test]
    fn dual_face_matches_the_dual_program(seed in 0u64..10_000) {
        let p = common::random_instance(seed, 1);
        let c = &p.objectives[0];
        let b = &p.nominal;
        let Some(primal) = lp::solve(&p.rows, b, c).value().cloned() else {
            return Ok(());
        };
        let face = lp::dual_face(&p.rows, b, c).unwrap();
        prop_assert_eq!(&face.value, &primal);

        // max -<b, l> s.t. sum l_t a_t = -c, l >= 0, solved from scratch.
        let m = p.m();
        let mut dual = Lp::new(m).maximize(rational::neg(b)).all_nonnegative();
        for j in 0..p.n {
            dual.eq(p.rows.iter().map(|a| a[j].clone()).collect(), -c[j].clone());
        }
        match dual.solve() {
            LpResult::Optimal { x, value, .. } => {
                prop_assert_eq!(-value, primal);
                prop_assert!(face.contains(&x));
            }
            other => prop_assert!(false, "dual not optimal: {other:?}"),
        }
        for v in face.vertices() {
            prop_assert!(face.contains(&v));
        }
    }
}

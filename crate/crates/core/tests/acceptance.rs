//! Acceptance criteria. One PASS/FAIL line per criterion; exits nonzero if
//! any criterion fails.

mod common;

use std::time::{Duration, Instant};

use epilip::lp;
use epilip::pareto;
use epilip::polyhedra::{canonical_dedup, eliminate_cone_direction, eliminate_span_direction, epigraph_system};
use epilip::rational::{self, int, ivec, rat, RVector};
use epilip::sensitivity::{
    lip_modulus, lp_relations, lp_value_function, subdiff_f, subdiff_p, subdiff_p_lp, GridMode, Modulus,
    ModulusTarget, WeightGrid, WeightPoint,
};
use epilip::system::{AffineForm, Row, SymbolicSystem};
use epilip::verify::{
    convexity_check, empirical_lip, empirical_lip_of, sample_graph, subgradient_check_on, IntervalFixture,
    MappingKind, SampleConfig, SubgradientKind,
};
use epilip::{Root, Subgradient};
use rayon::prelude::*;

// Pinned tolerances and limits.
const GRID_TOL_5_1: f64 = 1e-4;
const IDENTITY_TOL: f64 = 1e-9;
const GRID_TOL_5_2: f64 = 1e-6;
const P_ESTIMATE_MIN: f64 = 2.0;
const EM_RANGE: (f64, f64) = (0.99, 1.0);
const M_RANGE: (f64, f64) = (1.9, 2.0);
const MONOTONE_SLACK: f64 = 1e-12;
const LIMIT_1: Duration = Duration::from_secs(1);
const LIMIT_2: Duration = Duration::from_secs(10);
const LIMIT_3: Duration = Duration::from_secs(5);
const LIMIT_5: Duration = Duration::from_secs(60);

type Outcome = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn form(coefficients: &[i64], constant: i64) -> AffineForm {
    AffineForm::new(ivec(coefficients), int(constant))
}

fn canonical_rows(rows: &[Row]) -> Vec<Row> {
    let mut v: Vec<Row> = rows.iter().map(Row::canonical).collect();
    v.sort_by_key(|r| r.to_string());
    v
}

fn same_rows(got: &[Row], expected: &[Row]) -> bool {
    canonical_rows(got) == canonical_rows(expected)
}

fn criterion_1() -> Outcome {
    let p = common::example_6_1();
    let b = p.nominal.clone();
    let sys = SymbolicSystem::from_problem(&p);

    // Cone step along (2,1): the three rows with <a_t,u> <= 0 and their
    // combinations with row 4 (<a_4,u> = 7).
    let sigma = eliminate_cone_direction(&sys, &ivec(&[2, 1])).map_err(|e| e.to_string())?;
    let expected = vec![
        Row::new(ivec(&[-1, -1]), form(&[1, 0, 0, 0], 0)),
        Row::new(ivec(&[-1, 2]), form(&[0, 1, 0, 0], 0)),
        Row::new(ivec(&[-2, 0]), form(&[0, 0, 1, 0], 0)),
        Row::new(ivec(&[2, -4]), form(&[7, 0, 0, 3], 0)),
        Row::new(ivec(&[-7, 14]), form(&[0, 7, 0, 0], 0)),
        Row::new(ivec(&[-2, 4]), form(&[0, 0, 7, 4], 0)),
    ];
    ensure(same_rows(&sigma.rows, &expected), format!("cone step rows:\n{sigma}"))?;
    ensure(
        sigma.rows.iter().any(|r| r.to_string() == "2x1 - 4x2 <= 7b1 + 3b4"),
        "row 2x1 - 4x2 <= 7b1 + 3b4 missing",
    )?;

    // Span step along (-1,2) after removing the duplicate of row 2.
    let reduced = canonical_dedup(&sigma);
    ensure(reduced.rows.len() == 5, "duplicate row not removed")?;
    let sigma2 = eliminate_span_direction(&reduced, &ivec(&[-1, 2])).map_err(|e| e.to_string())?;
    let expected_rows = vec![
        Row::new(ivec(&[-6, -3]), form(&[5, 1, 0, 0], 0)),
        Row::new(ivec(&[-4, -2]), form(&[2, 0, 1, 0], 0)),
        Row::new(ivec(&[-12, -6]), form(&[10, 0, 7, 4], 0)),
        Row::new(ivec(&[-16, -8]), form(&[14, 0, 10, 6], 0)),
    ];
    let expected_consistency = vec![
        Row::new(ivec(&[0, 0]), form(&[35, 10, 0, 15], 0)),
        Row::new(ivec(&[0, 0]), form(&[70, 0, 70, 70], 0)),
    ];
    ensure(same_rows(&sigma2.rows, &expected_rows), format!("span step rows:\n{sigma2}"))?;
    ensure(
        same_rows(&sigma2.consistency_rows, &expected_consistency),
        format!("span step consistency rows:\n{sigma2}"),
    )?;

    // Value function.
    let vf = lp_value_function(&p).map_err(|e| e.to_string())?;
    let piece = |c: &[i64], d: i64| AffineForm::new(c.iter().map(|&v| rat(v, d)).collect(), int(0));
    ensure(
        vf.pieces
            == vec![
                piece(&[-5, -1, 0, 0], 3),
                piece(&[-2, 0, -1, 0], 2),
                piece(&[-10, 0, -7, -4], 6),
                piece(&[-7, 0, -5, -3], 4),
            ],
        format!("pieces {:?}", vf.pieces.iter().map(|f| f.to_string()).collect::<Vec<_>>()),
    )?;
    ensure(
        vf.domain_conditions == vec![form(&[7, 2, 0, 3], 0), form(&[1, 0, 1, 1], 0)],
        "domain conditions",
    )?;
    ensure(vf.eval(&b) == Some(int(3)), "value at nominal")?;

    // Subdifferential and moduli.
    let expected_v = vec![
        vec![rat(-5, 3), rat(-1, 3), int(0), int(0)],
        vec![int(-1), int(0), rat(-1, 2), int(0)],
    ];
    let dp = subdiff_p_lp(&p, &b).map_err(|e| e.to_string())?;
    ensure(dp.pieces[0].vertices == expected_v, "value-function subdifferential")?;
    let grid = WeightGrid::new(&p, GridMode::ImageNormalized, 1);
    let mut faces = subdiff_p(&p, &b, &[int(3)], &grid).map_err(|e| e.to_string())?.pieces[0].vertices.clone();
    faces.sort();
    ensure(faces == expected_v, "dual-face subdifferential")?;

    let x_bar = lp::solve(&p.rows, &b, &p.objectives[0]).point().cloned().ok_or("no optimum")?;
    let ep = lip_modulus(&p, ModulusTarget::LipEP, &b, &[int(3)], 1).map_err(|e| e.to_string())?;
    let ef = lip_modulus(&p, ModulusTarget::LipEF, &b, &x_bar, 1).map_err(|e| e.to_string())?;
    let lp_ = lip_modulus(&p, ModulusTarget::LipP, &b, &[int(3)], 1).map_err(|e| e.to_string())?;
    let two = Modulus::Finite(Root::from_rational(&int(2)));
    ensure(ep.value == two, format!("lip E_P = {}", ep.value))?;
    ensure(ep.value_string() == "2 (exact)", ep.value_string())?;
    ensure(ef.value == Modulus::Finite(Root::from_square(rat(4, 5))), format!("lip E_F = {}", ef.value))?;
    ensure(lp_.value == two, format!("lip P = {}", lp_.value))?;

    // dP = ||c||_* dF as exact vertex sets.
    let rel = lp_relations(&p, &b, &x_bar).map_err(|e| e.to_string())?;
    ensure(rel.proportionality_ok, "proportionality")?;
    let df = subdiff_f(&p, &b, &x_bar, &WeightGrid::new(&p, GridMode::CompositeNormalized, 1))
        .map_err(|e| e.to_string())?;
    let piece_f = &df.pieces[0];
    ensure(piece_f.divisor == Root::from_square(int(5)), "dF divisor is sqrt(5)")?;
    let mut scaled = piece_f.vertices.clone();
    scaled.sort();
    ensure(scaled == expected_v, "dF numerators")?;
    Ok("rows, pieces, dP, lip E_P = 2, lip E_F^2 = 4/5, lip P = 2".into())
}

fn criterion_2() -> Outcome {
    let p = common::example_5_1();
    let z = ivec(&[0, 0]);
    let k = 2000;
    let ef = lip_modulus(&p, ModulusTarget::LipEF, &z, &z, k).map_err(|e| e.to_string())?;
    let ep = lip_modulus(&p, ModulusTarget::LipEP, &z, &z, k).map_err(|e| e.to_string())?;
    let (ef, ep) = (ef.value.to_f64(), ep.value.to_f64());
    let (s2, s5) = (2f64.sqrt(), 5f64.sqrt());
    ensure(ef >= s2 - GRID_TOL_5_1 && ef <= s2, format!("lip E_F = {ef}"))?;
    ensure(ep >= s5 - GRID_TOL_5_1 && ep <= s5, format!("lip E_P = {ep}"))?;

    let df = subdiff_f(&p, &z, &z, &WeightGrid::new(&p, GridMode::CompositeNormalized, k)).map_err(|e| e.to_string())?;
    let dp = subdiff_p(&p, &z, &z, &WeightGrid::new(&p, GridMode::ImageNormalized, k)).map_err(|e| e.to_string())?;
    let (yf, yp) = (df.subgradients(), dp.subgradients());
    ensure(yf.len() == k + 1 && yp.len() == k + 1, "one subgradient per weight")?;
    let pick = |v: &[Subgradient]| -> Vec<Vec<f64>> { (0..500).map(|i| v[i * 4].to_f64()).collect() };
    let worst_f = pick(&yf).iter().map(|y| (y[0] * y[0] + y[1] * y[1] - 1.0).abs()).fold(0.0, f64::max);
    let worst_p = pick(&yp).iter().map(|y| (y[0] * y[0] / 4.0 + y[1] * y[1] - 1.0).abs()).fold(0.0, f64::max);
    ensure(worst_f <= IDENTITY_TOL, format!("dF identity error {worst_f}"))?;
    ensure(worst_p <= IDENTITY_TOL, format!("dP identity error {worst_p}"))?;
    Ok(format!("lip E_F = {ef:.9}, lip E_P = {ep:.9}, identity errors {worst_f:.1e}/{worst_p:.1e}"))
}

fn criterion_3() -> Outcome {
    let p = common::example_5_2();
    let z = ivec(&[0, 0]);
    let ef = lip_modulus(&p, ModulusTarget::LipEF, &z, &z, 200).map_err(|e| e.to_string())?.value.to_f64();
    let ep = lip_modulus(&p, ModulusTarget::LipEP, &z, &z, 200).map_err(|e| e.to_string())?.value.to_f64();
    ensure((ef - 1.0).abs() <= GRID_TOL_5_2, format!("lip E_F = {ef}"))?;
    ensure((ep - 1.0).abs() <= GRID_TOL_5_2, format!("lip E_P = {ep}"))?;
    let cfg = SampleConfig::new(rat(1, 10), 10_000, 52);
    let est = empirical_lip(&p, MappingKind::P, &z, &z, &cfg).map_err(|e| e.to_string())?.to_f64();
    ensure(est > P_ESTIMATE_MIN, format!("empirical lip P = {est}"))?;
    Ok(format!("lip E_F = {ef}, lip E_P = {ep}, empirical lip P = {est:.6}"))
}

fn criterion_4() -> Outcome {
    let cfg = SampleConfig::new(rat(1, 10), 10_000, 21);
    let zero = [int(0)];
    let m = empirical_lip_of(&IntervalFixture { epigraph: false }, &zero, &zero, &cfg).map_err(|e| e.to_string())?;
    let e = empirical_lip_of(&IntervalFixture { epigraph: true }, &zero, &zero, &cfg).map_err(|e| e.to_string())?;
    let (m, e) = (m.to_f64(), e.to_f64());
    ensure(e >= EM_RANGE.0 && e <= EM_RANGE.1, format!("E_M estimate {e}"))?;
    ensure(m >= M_RANGE.0 && m <= M_RANGE.1, format!("M estimate {m}"))?;
    Ok(format!("E_M estimate {e}, M estimate {m}"))
}

/// Coverage counts of the oracle suite.
#[derive(Default)]
struct Coverage {
    members: usize,
    non_members: usize,
    subgradients: usize,
    dominated: usize,
    nondominated: usize,
    value_points: usize,
    convex_pairs: usize,
}

impl Coverage {
    fn add(&mut self, o: &Coverage) {
        self.members += o.members;
        self.non_members += o.non_members;
        self.subgradients += o.subgradients;
        self.dominated += o.dominated;
        self.nondominated += o.nondominated;
        self.value_points += o.value_points;
        self.convex_pairs += o.convex_pairs;
    }
}

/// One random instance through parts (a) to (f).
fn oracle_instance(index: u64) -> Result<Coverage, String> {
    let mut cov = Coverage::default();
    let q = 1 + (index % 2) as usize;
    let p = common::random_instance(1000 + index, q);
    let b_bar = p.nominal.clone();
    let fail = |part: &str, msg: String| format!("instance {index} ({part}): {msg}");
    let mut rng = common::rng(index);

    // (a) symbolic epigraph versus the membership LP.
    let sys = epigraph_system(&p).map_err(|e| fail("a", e.to_string()))?;
    for _ in 0..20 {
        let b = common::grid_point(&mut rng, &b_bar, 2, 4);
        let inst = sys.instantiate(&b);
        let anchor = pareto::pareto_point(&p, &b, &vec![int(1); q]).ok().and_then(|pt| pt.witness);
        for k in 0..20 {
            let x = match (&anchor, k % 2) {
                (Some(a), 0) => common::grid_point(&mut rng, a, 1, 4),
                _ => common::grid_point(&mut rng, &rational::zeros(p.n), 3, 4),
            };
            let member = common::epigraph_member(&p, &b, &x);
            if inst.contains(&x) != member {
                return Err(fail("a", format!("b = {b:?}, x = {x:?}")));
            }
            if member {
                cov.members += 1;
            } else {
                cov.non_members += 1;
            }
        }
    }

    // (b) every emitted subgradient satisfies its inequality on the graph.
    let weights = WeightGrid::new(&p, GridMode::ImageNormalized, 4);
    let w_bar = lp::bounded_weight(&p).ok_or_else(|| fail("b", "no bounded weight".into()))?;
    let x_bar = pareto::pareto_point(&p, &b_bar, &w_bar)
        .map_err(|e| fail("b", e.to_string()))?
        .witness
        .unwrap();
    let p_bar = p.image(&x_bar);
    let cfg = SampleConfig::new(int(1), 200, index);
    let samples = sample_graph(&p, &b_bar, &cfg);
    if samples.len() != 200 {
        return Err(fail("b", format!("{} graph samples", samples.len())));
    }
    let df = subdiff_f(&p, &b_bar, &x_bar, &WeightGrid::new(&p, GridMode::CompositeNormalized, 4))
        .map_err(|e| fail("b", e.to_string()))?;
    let dp = subdiff_p(&p, &b_bar, &p_bar, &weights).map_err(|e| fail("b", e.to_string()))?;
    for (kind, set, anchor) in [(SubgradientKind::F, &df, &x_bar), (SubgradientKind::P, &dp, &p_bar)] {
        for piece in set.active_pieces() {
            let w = WeightPoint {
                alpha: piece.weight.clone(),
                normalizer: piece.divisor.clone(),
            };
            let mut ys: Vec<RVector> = piece.vertices.clone();
            for v in &piece.vertices {
                for r in &piece.rays {
                    ys.push(rational::add(v, r));
                }
            }
            for y in ys {
                let y = Subgradient {
                    numerator: y,
                    divisor: piece.divisor.clone(),
                };
                let out = subgradient_check_on(&samples, &p, kind, &w, &y, &b_bar, anchor);
                if !out.holds {
                    return Err(fail("b", format!("{kind} subgradient {y} violated")));
                }
                cov.subgradients += 1;
            }
        }
    }

    // (c), (d) domination against the brute-force scan.
    let mut candidates = common::brute_vertices(&p.rows, &b_bar, p.n);
    candidates.truncate(6);
    let mids: Vec<RVector> = candidates
        .windows(2)
        .map(|w| rational::lerp(&w[0], &w[1], &rat(1, 2)))
        .collect();
    candidates.extend(mids);
    candidates.push(x_bar.clone());
    for x0 in &candidates {
        let fast = pareto::is_nondominated(&p, &b_bar, x0).map_err(|e| fail("c", e.to_string()))?;
        if fast == common::brute_dominated(&p, &b_bar, x0) {
            return Err(fail("c", format!("x0 = {x0:?}")));
        }
        if fast {
            cov.nondominated += 1;
        } else {
            cov.dominated += 1;
        }
        let out = pareto::dominate_to_nondominated(&p, &b_bar, x0).map_err(|e| fail("d", e.to_string()))?;
        let ok = p.is_feasible(&b_bar, &out)
            && !common::brute_dominated(&p, &b_bar, &out)
            && rational::le(&p.image(&out), &p.image(x0));
        if !ok {
            return Err(fail("d", format!("x0 = {x0:?} -> {out:?}")));
        }
    }

    // (e) value function versus the LP at in-domain parameters.
    if q == 1 {
        let vf = lp_value_function(&p).map_err(|e| fail("e", e.to_string()))?;
        let mut agreed = 0;
        for _ in 0..5000 {
            if agreed == 50 {
                break;
            }
            let b = common::grid_point(&mut rng, &b_bar, 3, 4);
            let solved = lp::solve(&p.rows, &b, &p.objectives[0]);
            match vf.eval(&b) {
                Some(v) => {
                    if solved.value() != Some(&v) {
                        return Err(fail("e", format!("b = {b:?}: {v} vs {:?}", solved.value())));
                    }
                    agreed += 1;
                }
                None => {
                    if solved.value().is_some() {
                        return Err(fail("e", format!("b = {b:?} solvable outside the domain")));
                    }
                }
            }
        }
        if agreed < 50 {
            return Err(fail("e", format!("only {agreed} in-domain parameters")));
        }
        cov.value_points += agreed;
    }

    // (f) convexity of the image epigraph graph.
    let out = convexity_check(&p, &SampleConfig::new(int(1), 500, index)).map_err(|e| fail("f", e.to_string()))?;
    if !out.holds {
        return Err(fail("f", format!("{:?}", out.witness)));
    }
    cov.convex_pairs += out.checked;
    Ok(cov)
}

fn criterion_5() -> Outcome {
    let results: Vec<Result<Coverage, String>> = (0..100u64).into_par_iter().map(oracle_instance).collect();
    let mut cov = Coverage::default();
    let mut failures = Vec::new();
    for r in results {
        match r {
            Ok(c) => cov.add(&c),
            Err(e) => failures.push(e),
        }
    }
    if !failures.is_empty() {
        return Err(format!("{} failing: {}", failures.len(), failures.join("; ")));
    }
    Ok(format!(
        "100 instances; (a) {} members / {} non-members, (b) {} subgradients, (c) {} dominated / {} nondominated, (e) {} parameters, (f) {} pairs",
        cov.members, cov.non_members, cov.subgradients, cov.dominated, cov.nondominated, cov.value_points, cov.convex_pairs
    ))
}

fn criterion_6() -> Outcome {
    let p = common::example_5_1();
    let z = ivec(&[0, 0]);
    let mut values = Vec::new();
    for k in [10, 50, 200, 1000] {
        let r = lip_modulus(&p, ModulusTarget::LipEP, &z, &z, k).map_err(|e| e.to_string())?;
        let v = r.value.finite().cloned().ok_or("infinite modulus")?;
        values.push(v);
    }
    ensure(values.windows(2).all(|w| w[0] <= w[1]), "not nondecreasing")?;
    let bound = 5f64.sqrt() + MONOTONE_SLACK;
    ensure(values.iter().all(|v| v.to_f64() <= bound), "exceeds sqrt(5)")?;
    Ok(values.iter().map(|v| format!("{:.12}", v.to_f64())).collect::<Vec<_>>().join(" <= "))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome, Option<Duration>); 6] = [
        ("1 single-objective example end-to-end", criterion_1, Some(LIMIT_1)),
        ("2 separable example, grid 2000", criterion_2, Some(LIMIT_2)),
        ("3 strict-gap example, grid 200 and empirical lip P", criterion_3, Some(LIMIT_3)),
        ("4 interval fixture estimates", criterion_4, None),
        ("5 oracle equivalence suite", criterion_5, Some(LIMIT_5)),
        ("6 monotone grid refinement", criterion_6, None),
    ];
    let mut failed = 0;
    for (name, run, limit) in criteria {
        let start = Instant::now();
        let mut outcome = run();
        let elapsed = start.elapsed();
        if let (Ok(_), Some(limit)) = (&outcome, limit) {
            if elapsed > limit {
                outcome = Err(format!("took {elapsed:.2?}, limit {limit:?}"));
            }
        }
        match outcome {
            Ok(detail) => println!("PASS [{name}] {detail} ({elapsed:.2?})"),
            Err(detail) => {
                failed += 1;
                println!("FAIL [{name}] {detail} ({elapsed:.2?})");
            }
        }
    }
    if failed > 0 {
        std::process::exit(1);
    }
}

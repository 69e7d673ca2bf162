//! The `epilip` command-line front end.
//!
//! [`run`] parses arguments, reads a problem file and writes a `key: value`
//! report. Exit codes: 0 on success, 1 on a domain error (reported by its
//! `module/name` code), 2 on a usage error.

mod args;
mod report;

use std::io::Write;
use std::path::Path;

use clap::Parser;
use epilip::lp::{self, LpOutcome};
use epilip::polyhedra::{add_cone, polar_generators, ConeGenerators, Pruning};
use epilip::rational::fmt_vector;
use epilip::sensitivity::{
    lip_modulus, lp_value_function, subdiff_f, subdiff_p, GridMode, ModulusReport, ModulusTarget,
    SubdiffSet, WeightGrid,
};
use epilip::verify::{convexity_check, empirical_lip, MappingKind, SampleConfig};
use epilip::{pareto, Domination, Error, ParetoError, Problem, RVector, SymbolicSystem};
use sha2::{Digest, Sha256};

pub use args::{Cli, Command};
use args::{ModulusArg, PruneArg, SubdiffTarget, VerifyTarget};
use report::{float, Report};

pub const EXIT_OK: i32 = 0;
pub const EXIT_DOMAIN: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

enum Failure {
    Usage(String),
    Domain(Error),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        Failure::Domain(e)
    }
}

macro_rules! domain {
    ($e:expr) => {
        $e.map_err(|e| Failure::Domain(Error::from(e)))
    };
}

/// Runs one invocation and returns its exit code.
pub fn run<I, T>(argv: I, out: &mut dyn Write, err: &mut dyn Write) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(argv) {
        Ok(cli) => cli,
        Err(e) => {
            if e.use_stderr() {
                let _ = write!(err, "{}", e.render());
                return EXIT_USAGE;
            }
            let _ = write!(out, "{}", e.render());
            return EXIT_OK;
        }
    };
    match execute(&cli.command) {
        Ok(report) => {
            let _ = write!(out, "{report}");
            EXIT_OK
        }
        Err(Failure::Usage(msg)) => {
            let _ = writeln!(err, "error: cli/usage: {msg}");
            EXIT_USAGE
        }
        Err(Failure::Domain(e)) => {
            let _ = writeln!(err, "error: {}: {e}", e.code());
            EXIT_DOMAIN
        }
    }
}

fn load(file: &Path, command: &str) -> Result<(Problem, Report), Failure> {
    let bytes = std::fs::read(file)
        .map_err(|e| Failure::Usage(format!("cannot read {}: {e}", file.display())))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| Failure::Usage(format!("{} is not UTF-8", file.display())))?;
    let problem = domain!(epilip::parse_problem(&text))?;
    let mut report = Report::new(command);
    report
        .field("input", file.display())
        .field("digest", format!("sha256:{:x}", Sha256::digest(&bytes)));
    Ok((problem, report))
}

fn execute(command: &Command) -> Result<Report, Failure> {
    match command {
        Command::Analyze { file } => analyze(file),
        Command::Eliminate {
            file,
            cone,
            span,
            prune,
        } => eliminate(file, cone, span, *prune),
        Command::ValueFunction { file } => value_function(file),
        Command::Subdiff {
            file,
            target,
            anchor_x,
            anchor_p,
            b,
            grid,
        } => subdiff(file, *target, anchor_x.as_ref(), anchor_p.as_ref(), b.as_ref(), *grid as usize),
        Command::Modulus {
            file,
            target,
            anchor,
            b,
            grid,
        } => modulus(file, *target, anchor.as_ref(), b.as_ref(), *grid as usize),
        Command::ParetoCheck { file, b, x } => pareto_check(file, b, x),
        Command::Dominate { file, b, x } => dominate(file, b, x),
        Command::Verify {
            file,
            target,
            radius,
            samples,
            seed,
            anchor,
        } => verify(file, *target, radius, *samples, *seed, anchor.as_ref()),
    }
}

/// A nondominated solution at `b` from the first bounded positive weight.
fn default_solution(problem: &Problem, b: &[epilip::Rational]) -> Result<RVector, Failure> {
    let w = lp::bounded_weight(problem).ok_or(Failure::Domain(ParetoError::NotInDomS.into()))?;
    let point = domain!(pareto::pareto_point(problem, b, &w))?;
    Ok(point.witness.expect("scalarized solutions carry a preimage"))
}

fn write_system(report: &mut Report, sys: &SymbolicSystem) {
    report.field("rows", sys.rows.len());
    for r in &sys.rows {
        report.field("row", r);
    }
    report.field("conditions", sys.consistency_rows.len());
    for r in &sys.consistency_rows {
        report.field("condition", format!("0 <= {}", r.rhs));
    }
}

fn analyze(file: &Path) -> Result<Report, Failure> {
    let (p, mut r) = load(file, "analyze")?;
    let b = &p.nominal;
    r.field("n", p.n)
        .field("q", p.q())
        .field("m", p.m())
        .field("decision_norm", p.decision_norm.kind)
        .field("image_norm", p.image_norm.kind)
        .field("nominal", fmt_vector(b))
        .field("feasible", lp::feasible(&p.rows, b, p.n));
    match lp::bounded_weight(&p) {
        Some(w) => r.field("bounded_weight", fmt_vector(&w)),
        None => r.field("bounded_weight", "none"),
    };
    r.field("in_domS", lp::in_dom_s(&p, b));
    if p.q() == 1 {
        match lp::solve(&p.rows, b, &p.objectives[0]) {
            LpOutcome::Optimal { value, x, .. } => {
                r.field("optimal_value", epilip::rational::fmt_rational(&value))
                    .field("optimal_point", fmt_vector(&x));
            }
            LpOutcome::Infeasible { .. } => {
                r.field("optimal_value", "infeasible");
            }
            LpOutcome::Unbounded { .. } => {
                r.field("optimal_value", "-inf");
            }
        }
    } else if lp::in_dom_s(&p, b) {
        let x = default_solution(&p, b)?;
        r.field("front_point", fmt_vector(&p.image(&x)))
            .field("front_preimage", fmt_vector(&x));
    }
    Ok(r)
}

fn eliminate(file: &Path, cone: &[RVector], span: &[RVector], prune: PruneArg) -> Result<Report, Failure> {
    let (p, mut r) = load(file, "eliminate")?;
    let pruning = match prune {
        PruneArg::Every => Pruning::EveryStep,
        PruneArg::KeepFinal => Pruning::KeepFinal,
    };
    if let Some(u) = cone.iter().chain(span).find(|u| u.len() != p.n) {
        return Err(Failure::Usage(format!(
            "direction {} has {} entries, expected {}",
            fmt_vector(u),
            u.len(),
            p.n
        )));
    }
    let theta = if cone.is_empty() && span.is_empty() {
        polar_generators(p.n, &p.objectives)
    } else {
        ConeGenerators::new(p.n, cone.to_vec(), span.to_vec())
    };
    for u in &theta.rays {
        r.field("cone", fmt_vector(u));
    }
    for u in &theta.lineality {
        r.field("span", fmt_vector(u));
    }
    let sys = domain!(add_cone(&SymbolicSystem::from_problem(&p), &theta, pruning))?;
    write_system(&mut r, &sys);
    Ok(r)
}

fn value_function(file: &Path) -> Result<Report, Failure> {
    let (p, mut r) = load(file, "value-function")?;
    let vf = domain!(lp_value_function(&p))?;
    r.field("pieces", vf.pieces.len());
    for piece in &vf.pieces {
        r.field("piece", piece);
    }
    r.field("domain_conditions", vf.domain_conditions.len());
    for g in &vf.domain_conditions {
        r.field("domain", format!("0 <= {g}"));
    }
    match vf.eval(&p.nominal) {
        Some(v) => r
            .field("value_at_nominal", epilip::rational::fmt_rational(&v))
            .field("active_pieces", format!("{:?}", vf.active(&p.nominal))),
        None => r.field("value_at_nominal", "outside domain"),
    };
    Ok(r)
}

fn parameter(p: &Problem, b: Option<&RVector>) -> Result<RVector, Failure> {
    let b = b.cloned().unwrap_or_else(|| p.nominal.clone());
    if b.len() != p.m() {
        return Err(Failure::Usage(format!("--b has {} entries, expected {}", b.len(), p.m())));
    }
    Ok(b)
}

fn write_subdiff(r: &mut Report, set: &SubdiffSet) {
    r.field("exactness", set.exactness);
    let active: Vec<_> = set.active_pieces().collect();
    r.field("pieces", active.len());
    for piece in &active {
        let mut ys: Vec<_> = piece.subgradients().collect();
        ys.sort_by(|a, b| a.numerator.cmp(&b.numerator));
        let points: Vec<String> = ys.iter().map(|y| y.to_string()).collect();
        let mut vrep = format!("conv{{{}}}", points.join(","));
        if !piece.rays.is_empty() {
            let rays: Vec<String> = piece.rays.iter().map(|d| fmt_vector(d)).collect();
            vrep.push_str(&format!(" + cone{{{}}}", rays.join(",")));
        }
        r.field("vrep", vrep);
    }
    r.field("plot_columns", "weight l1_max");
    for piece in &active {
        let l1 = match piece.max_l1() {
            Some((v, _)) => float(v.to_f64()),
            None => "inf".into(),
        };
        r.field("plot", format!("{} {l1}", fmt_vector(&piece.weight)));
    }
}

fn subdiff(
    file: &Path,
    target: SubdiffTarget,
    anchor_x: Option<&RVector>,
    anchor_p: Option<&RVector>,
    b: Option<&RVector>,
    grid: usize,
) -> Result<Report, Failure> {
    let (p, mut r) = load(file, "subdiff")?;
    let b = parameter(&p, b)?;
    r.field("b", fmt_vector(&b));
    let set = match target {
        SubdiffTarget::F => {
            if anchor_p.is_some() {
                return Err(Failure::Usage("--target f takes --anchor-x".into()));
            }
            let x = match anchor_x {
                Some(x) => x.clone(),
                None => default_solution(&p, &b)?,
            };
            r.field("target", "F").field("anchor_x", fmt_vector(&x));
            let g = WeightGrid::new(&p, GridMode::CompositeNormalized, grid);
            domain!(subdiff_f(&p, &b, &x, &g))?
        }
        SubdiffTarget::P => {
            let image = match (anchor_p, anchor_x) {
                (Some(v), _) => v.clone(),
                (None, Some(x)) if x.len() == p.n => p.image(x),
                (None, Some(_)) => return Err(Failure::Usage(format!("--anchor-x needs {} entries", p.n))),
                (None, None) => p.image(&default_solution(&p, &b)?),
            };
            r.field("target", "P").field("anchor_p", fmt_vector(&image));
            let g = WeightGrid::new(&p, GridMode::ImageNormalized, grid);
            domain!(subdiff_p(&p, &b, &image, &g))?
        }
    };
    write_subdiff(&mut r, &set);
    Ok(r)
}

fn write_modulus(r: &mut Report, m: &ModulusReport) {
    r.field("target", m.target.name())
        .field("value", m.value_string())
        .field("value_float", float(m.value.to_f64()));
    if let Some(w) = &m.attaining_weight {
        r.field("attaining_weight", fmt_vector(w));
    }
    if let Some(y) = &m.attaining_subgradient {
        r.field("attaining_subgradient", y);
    }
}

fn modulus_anchor(p: &Problem, target: ModulusTarget, b: &[epilip::Rational], anchor: Option<&RVector>) -> Result<RVector, Failure> {
    if let Some(a) = anchor {
        return Ok(a.clone());
    }
    let x = default_solution(p, b)?;
    Ok(match target {
        ModulusTarget::LipEF => x,
        _ => p.image(&x),
    })
}

fn modulus(file: &Path, target: ModulusArg, anchor: Option<&RVector>, b: Option<&RVector>, grid: usize) -> Result<Report, Failure> {
    let (p, mut r) = load(file, "modulus")?;
    let b = parameter(&p, b)?;
    let target = match target {
        ModulusArg::Ef => ModulusTarget::LipEF,
        ModulusArg::Ep => ModulusTarget::LipEP,
        ModulusArg::P => ModulusTarget::LipP,
    };
    if target == ModulusTarget::LipP && p.q() != 1 {
        return Err(Failure::Domain(epilip::SensitivityError::LipPUnsupported.into()));
    }
    let anchor = modulus_anchor(&p, target, &b, anchor)?;
    r.field("b", fmt_vector(&b)).field("anchor", fmt_vector(&anchor));
    let m = domain!(lip_modulus(&p, target, &b, &anchor, grid))?;
    write_modulus(&mut r, &m);
    Ok(r)
}

fn pareto_check(file: &Path, b: &RVector, x: &RVector) -> Result<Report, Failure> {
    let (p, mut r) = load(file, "pareto-check")?;
    r.field("b", fmt_vector(b)).field("x", fmt_vector(x));
    match domain!(pareto::domination(&p, b, x))? {
        Domination::Nondominated => {
            r.field("status", "nondominated");
        }
        Domination::DominatedBy(y) => {
            r.field("status", "dominated")
                .field("dominator", fmt_vector(&y))
                .field("dominator_image", fmt_vector(&p.image(&y)))
                .field("image", fmt_vector(&p.image(x)));
        }
    }
    Ok(r)
}

fn dominate(file: &Path, b: &RVector, x: &RVector) -> Result<Report, Failure> {
    let (p, mut r) = load(file, "dominate")?;
    r.field("b", fmt_vector(b)).field("x", fmt_vector(x));
    let y = domain!(pareto::dominate_to_nondominated(&p, b, x))?;
    r.field("image", fmt_vector(&p.image(x)))
        .field("nondominated", fmt_vector(&y))
        .field("nondominated_image", fmt_vector(&p.image(&y)))
        .field("moved", y != *x);
    Ok(r)
}

fn verify(
    file: &Path,
    target: VerifyTarget,
    radius: &epilip::Rational,
    samples: usize,
    seed: u64,
    anchor: Option<&RVector>,
) -> Result<Report, Failure> {
    let (p, mut r) = load(file, "verify")?;
    let cfg = SampleConfig::new(radius.clone(), samples, seed);
    domain!(cfg.validate())?;
    let b = p.nominal.clone();
    r.field("radius", epilip::rational::fmt_rational(radius))
        .field("samples", samples)
        .field("seed", seed);
    let (kind, modulus_target) = match target {
        VerifyTarget::Convexity => {
            r.field("target", "convexity");
            let out = domain!(convexity_check(&p, &cfg))?;
            r.field("holds", out.holds).field("checked", out.checked);
            if let Some(w) = &out.witness {
                r.field("witness_b1", fmt_vector(&w.b1))
                    .field("witness_p1", fmt_vector(&w.p1))
                    .field("witness_b2", fmt_vector(&w.b2))
                    .field("witness_p2", fmt_vector(&w.p2))
                    .field("witness_t", epilip::rational::fmt_rational(&w.t));
            }
            return Ok(r);
        }
        VerifyTarget::Ef => (MappingKind::EF, ModulusTarget::LipEF),
        VerifyTarget::Ep => (MappingKind::EP, ModulusTarget::LipEP),
        VerifyTarget::P => (MappingKind::P, ModulusTarget::LipP),
    };
    let anchor = modulus_anchor(&p, modulus_target, &b, anchor)?;
    r.field("target", kind).field("anchor", fmt_vector(&anchor));
    let est = domain!(empirical_lip(&p, kind, &b, &anchor, &cfg))?;
    r.field("estimate", &est.value)
        .field("estimate_float", float(est.to_f64()))
        .field("evaluated", est.evaluated)
        .field("skipped", est.skipped);
    if let Some(w) = &est.witness {
        r.field("witness_b", fmt_vector(&w.b))
            .field("witness_b_prime", fmt_vector(&w.b_prime))
            .field("witness_z", fmt_vector(&w.z));
    }
    if modulus_target != ModulusTarget::LipP || p.q() == 1 {
        let m = domain!(lip_modulus(&p, modulus_target, &b, &anchor, 8))?;
        r.field("modulus", m.value_string())
            .field("within_modulus", est.value.to_f64() <= m.value.to_f64() + 1e-9);
    }
    Ok(r)
}

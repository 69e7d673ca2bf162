use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use epilip::lp;
use epilip::polyhedra::epigraph_system;
use epilip::rational::{int, ivec, rat};
use epilip::sensitivity::{lip_modulus, lp_value_function, ModulusTarget};
use epilip::verify::{empirical_lip, MappingKind, SampleConfig};
use epilip_bench::{biobjective_fixture, box_fixture, lp_fixture};

fn simplex(c: &mut Criterion) {
    let p = box_fixture(4, 1);
    c.bench_function("simplex/box4", |b| {
        b.iter(|| lp::solve(black_box(&p.rows), black_box(&p.nominal), &p.objectives[0]))
    });
}

fn elimination(c: &mut Criterion) {
    let p = lp_fixture();
    c.bench_function("elimination/epigraph_lp", |b| b.iter(|| epigraph_system(black_box(&p))));
    c.bench_function("elimination/value_function", |b| b.iter(|| lp_value_function(black_box(&p))));
    let q = box_fixture(3, 2);
    c.bench_function("elimination/epigraph_box3_q2", |b| b.iter(|| epigraph_system(black_box(&q))));
}

fn moduli(c: &mut Criterion) {
    let p = lp_fixture();
    c.bench_function("modulus/ep_lp", |b| {
        b.iter(|| lip_modulus(&p, ModulusTarget::LipEP, &p.nominal, &[int(3)], 1))
    });
    let q = biobjective_fixture();
    let z = ivec(&[0, 0]);
    c.bench_function("modulus/ep_grid16", |b| {
        b.iter(|| lip_modulus(&q, ModulusTarget::LipEP, &z, &z, black_box(16)))
    });
}

fn sampling(c: &mut Criterion) {
    let q = biobjective_fixture();
    let z = ivec(&[0, 0]);
    let cfg = SampleConfig::new(rat(1, 10), 200, 1);
    c.bench_function("verify/empirical_ep_200", |b| {
        b.iter(|| empirical_lip(&q, MappingKind::EP, &z, &z, black_box(&cfg)))
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(20);
    targets = simplex, elimination, moduli, sampling
}
criterion_main!(benches);

//! Benchmarks for the hot paths: the Buchberger kernel, elimination,
//! saturation, and a full decomposition.

use std::sync::Arc;

use criterion::{black_box, criterion_group, criterion_main, Criterion};

use kempf_core::bb::{assemble_bb, BBOptions};
use kempf_core::coaction::{g_saturate, KempfOnePSG};
use kempf_core::elim::elimination_ideal;
use kempf_core::formal::truncate;
use kempf_core::grading::{GradedAlgebra, TorusAction, WeightMonoid, WeightVector};
use kempf_core::ideal::Ideal;
use kempf_core::poly::{parse_poly, MonomialOrder, PolyRing};
use kempf_core::presentations::{gl2, split_torus, Gl2Action};

fn w(v: &[i64]) -> WeightVector {
    WeightVector(v.to_vec())
}

fn katsura3(ring: &Arc<PolyRing>) -> Vec<kempf_core::MultiPoly> {
    [
        "x + 2*y + 2*z - 1",
        "x^2 + 2*y^2 + 2*z^2 - x",
        "2*x*y + 2*y*z - y",
    ]
    .iter()
    .map(|s| parse_poly(ring, s).unwrap())
    .collect()
}

fn bench_buchberger(c: &mut Criterion) {
    let ring = PolyRing::new(vec!["x", "y", "z"]).unwrap();
    let gens = katsura3(&ring);
    c.bench_function("buchberger katsura-3 grevlex", |b| {
        b.iter(|| {
            let ideal = Ideal::new(Arc::clone(&ring), gens.clone()).unwrap();
            black_box(ideal.groebner(MonomialOrder::GrevLex))
        })
    });
    c.bench_function("buchberger katsura-3 lex", |b| {
        b.iter(|| {
            let ideal = Ideal::new(Arc::clone(&ring), gens.clone()).unwrap();
            black_box(ideal.groebner(MonomialOrder::Lex))
        })
    });
}

fn bench_elimination(c: &mut Criterion) {
    let ring = PolyRing::new(vec!["t", "x", "y", "z"]).unwrap();
    let gens = vec![
        parse_poly(&ring, "x - t^2").unwrap(),
        parse_poly(&ring, "y - t^3").unwrap(),
        parse_poly(&ring, "z - t^4").unwrap(),
    ];
    c.bench_function("elimination twisted curve", |b| {
        b.iter(|| {
            let ideal = Ideal::new(Arc::clone(&ring), gens.clone()).unwrap();
            black_box(elimination_ideal(&ideal, &[0]).unwrap())
        })
    });
}

fn bench_saturation(c: &mut Criterion) {
    let (group, _) = gl2(Gl2Action::Standard).unwrap();
    let acted = PolyRing::new(vec!["v1", "v2"]).unwrap();
    let seed = Ideal::new(
        Arc::clone(&acted),
        vec![parse_poly(&acted, "v1^2 + v2").unwrap()],
    )
    .unwrap();
    c.bench_function("g_saturate gl2 inhomogeneous seed", |b| {
        b.iter(|| black_box(g_saturate(&seed, &group, 32).unwrap()))
    });
}

fn bench_assemble(c: &mut Criterion) {
    let (_, monoid) = gl2(Gl2Action::SumStandardDual).unwrap();
    let ring = PolyRing::new(vec!["v1", "v2", "v3", "v4"]).unwrap();
    let alg = GradedAlgebra::new(
        Arc::clone(&ring),
        Ideal::zero(Arc::clone(&ring)),
        TorusAction::new(2, vec![w(&[1, 0]), w(&[0, 1]), w(&[-1, 0]), w(&[0, -1])]).unwrap(),
    )
    .unwrap();
    let kempf = KempfOnePSG { cochar: w(&[1]) };
    c.bench_function("assemble_bb gl2 sum", |b| {
        b.iter(|| black_box(assemble_bb(&alg, &monoid, &kempf, BBOptions::default()).unwrap()))
    });

    let tbar = WeightMonoid::new(1, vec![w(&[1])]).unwrap();
    let (_, gm) = split_torus(&[w(&[1]), w(&[-1])], tbar).unwrap();
    let plane = PolyRing::new(vec!["x", "y"]).unwrap();
    let plane_alg = GradedAlgebra::new(
        Arc::clone(&plane),
        Ideal::zero(Arc::clone(&plane)),
        TorusAction::new(1, vec![w(&[1]), w(&[-1])]).unwrap(),
    )
    .unwrap();
    c.bench_function("assemble_bb gm plane", |b| {
        b.iter(|| black_box(assemble_bb(&plane_alg, &gm, &kempf, BBOptions::default()).unwrap()))
    });
}

fn bench_truncation(c: &mut Criterion) {
    let ring = PolyRing::new(vec!["x", "y"]).unwrap();
    let alg = GradedAlgebra::new(
        Arc::clone(&ring),
        Ideal::new(Arc::clone(&ring), vec![parse_poly(&ring, "x*y").unwrap()]).unwrap(),
        TorusAction::new(1, vec![w(&[1]), w(&[1])]).unwrap(),
    )
    .unwrap();
    c.bench_function("truncate crossing curves depth 6", |b| {
        b.iter(|| black_box(truncate(alg.clone(), w(&[1]), 6).unwrap()))
    });
}

criterion_group!(
    benches,
    bench_buchberger,
    bench_elimination,
    bench_saturation,
    bench_assemble,
    bench_truncation
);
criterion_main!(benches);

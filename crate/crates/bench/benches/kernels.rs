use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use g2star_bench::{dense_matrix, example_algebra};
use g2star_core::atlas::{epsilon_invariant, verify_bracket_table, BracketShape};
use g2star_core::g2core::{family, standard_gram, AFactor, FamilyName};
use g2star_core::geometry::{curvature, holonomy, levi_civita};
use g2star_core::linalg::{inverse, kernel, rref};
use g2star_core::repanalysis::{classify_type, curvature_space, Representation};

fn linear_algebra(c: &mut Criterion) {
    let m = dense_matrix(10);
    c.bench_function("rref 10x10", |b| b.iter(|| rref(black_box(&m))));
    c.bench_function("inverse 10x10", |b| {
        b.iter(|| inverse(black_box(&m)).unwrap())
    });
    c.bench_function("kernel 10x10", |b| b.iter(|| kernel(black_box(&m))));
}

fn geometry(c: &mut Criterion) {
    let m = example_algebra(1);
    c.bench_function("levi-civita", |b| b.iter(|| levi_civita(black_box(&m))));
    let conn = levi_civita(&m);
    c.bench_function("curvature", |b| b.iter(|| curvature(black_box(&m), &conn)));
    c.bench_function("holonomy", |b| {
        b.iter(|| holonomy(black_box(&m), &conn).unwrap())
    });
    c.bench_function("invariant", |b| {
        b.iter(|| epsilon_invariant(black_box(&m)).unwrap())
    });
}

fn representations(c: &mut Criterion) {
    let h = family(FamilyName::Tfk(AFactor::Gl2, 2)).clone();
    c.bench_function("classify gl2 x m(1,0,2)", |b| {
        b.iter(|| {
            let r = Representation::from_subspace(black_box(&h), standard_gram()).unwrap();
            classify_type(&r)
        })
    });
    let mut g = c.benchmark_group("slow");
    g.sample_size(10);
    let h3 = family(FamilyName::HIII).clone();
    g.bench_function("curvature space hIII", |b| {
        b.iter(|| curvature_space(black_box(&h3)))
    });
    g.bench_function("bracket table hIII", |b| {
        b.iter(|| verify_bracket_table(BracketShape::HIII))
    });
    g.finish();
}

criterion_group!(benches, linear_algebra, geometry, representations);
criterion_main!(benches);

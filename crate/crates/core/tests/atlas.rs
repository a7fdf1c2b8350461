use std::collections::BTreeMap;

use g2star_core::atlas::*;
use g2star_core::error::Error;
use g2star_core::g2core::{h_project, standard_gram};
use g2star_core::geometry::MetricLieAlgebra;
use g2star_core::liealg::{is_lie_homomorphism, LieAlgebraData};
use g2star_core::linalg::{inverse, unit, Matrix};
use g2star_core::scalars::{MultiPoly, QSqrt2, Ring};

fn p(s: &str) -> MultiPoly {
    MultiPoly::parse(s).unwrap()
}

fn q(n: i64, d: i64) -> QSqrt2 {
    QSqrt2::frac(n, d)
}

#[test]
fn bracket_tables_match_derivation() {
    for shape in [BracketShape::HIII, BracketShape::RDiag10] {
        let r = verify_bracket_table(shape);
        assert_eq!(r.entries.len(), 21);
        assert!(r.passed(), "{r}");
    }
}

#[test]
fn selected_bracket_entries() {
    let g = symbolic_connection(BracketShape::HIII).induced_bracket();
    assert_eq!(g.bracket_basis(0, 3)[0], p("r2*v1 - tr(A4)"));
    let c56 = g.bracket_basis(4, 5);
    assert_eq!(c56[4], p("tr(A6)"));
    assert_eq!(c56[3], p("-r2*v6"));

    let g = symbolic_connection(BracketShape::RDiag10).induced_bracket();
    let c15 = g.bracket_basis(0, 4);
    assert_eq!(c15[5], p("u12"));
    assert_eq!(c15[4], p("-a11 - a14"));
}

#[test]
fn corrupted_table_is_reported() {
    let mut table = reference_brackets(BracketShape::HIII);
    let mut v = table.bracket_basis(2, 4);
    v[0] = v[0].add_ref(&p("v1"));
    table.set_bracket(2, 4, v);
    let r = verify_bracket_table_against(BracketShape::HIII, &table);
    assert!(!r.passed());
    let bad = r.first_mismatch().unwrap();
    assert_eq!(bad.label, "[e3, e5]");
    assert_ne!(bad.expected, bad.derived);
    assert_eq!(r.entries.iter().filter(|e| !e.matches).count(), 1);
}

#[test]
fn curvature_table() {
    let r = verify_table1();
    assert!(r.passed(), "{r}");
    let dim = r.entries.iter().find(|e| e.label == "dimension").unwrap();
    assert_eq!(dim.derived, "16");
    assert_eq!(table1_parameters().len(), 16);

    let t = table1_tensor();
    assert_eq!(h_project(&t.get(4, 5)).unwrap().v, p("w1"));
    assert_eq!(h_project(&t.get(4, 6)).unwrap().v, p("w2"));
    let r45 = t.get(3, 4);
    let r67 = t.get(5, 6);
    let s = QSqrt2::sqrt2().inv().unwrap();
    assert_eq!(
        r67.neg(),
        r45.map(|x| x.mul_ref(&MultiPoly::constant(s.clone())))
    );
    assert_eq!(t.get(2, 6), t.get(0, 4).sub(&t.get(1, 5)));
}

#[test]
fn proof_identities_hold() {
    let r = verify_proof_identities();
    assert_eq!(r.entries.len(), 10);
    assert!(r.passed(), "{r}");
}

#[test]
fn bianchi_projection_with_vanishing_v() {
    let r = verify_proof_identities();
    let e = r
        .entries
        .iter()
        .find(|e| e.label == "pro_y(-(nabla_1 R)(e6,e7)) component 1")
        .unwrap();
    let rhs = p(&e.derived);
    let binding: BTreeMap<String, QSqrt2> = [("v1".to_string(), QSqrt2::zero())].into();
    let specialized = rhs.substitute(&binding);
    assert_eq!(specialized, p("(3*a11 + 2*a14)*w1 + a12*w2"));
}

#[test]
fn invariant_recovers_parameter() {
    for eps in [q(0, 1), q(1, 1), q(5, 1), q(-3, 2), QSqrt2::sqrt2()] {
        for signs in [SignConvention::Positive, SignConvention::Negative] {
            let f = epsilon_invariant_with(&g_eps(&eps).algebra, signs).unwrap();
            assert_eq!(f.value, eps.neg_ref(), "eps = {eps}");
        }
    }
    assert_eq!(
        epsilon_invariant(&g_eps(&q(5, 1)).algebra).unwrap(),
        q(-5, 1)
    );
    assert_eq!(
        epsilon_invariant(&g_eps(&q(0, 1)).algebra).unwrap(),
        q(0, 1)
    );
}

#[test]
fn invariant_frame_has_expected_shape() {
    let f = epsilon_invariant_with(&g_eps(&q(2, 1)).algebra, SignConvention::Positive).unwrap();
    // f4 = ±(e4 - 2 e2)
    let f4: Vec<QSqrt2> = (0..7).map(|i| f.f4[i].clone()).collect();
    let base = [
        q(0, 1),
        q(-2, 1),
        q(0, 1),
        q(1, 1),
        q(0, 1),
        q(0, 1),
        q(0, 1),
    ];
    assert!(f4 == base || f4 == base.map(|x| x.neg_ref()));
    // u = R e1
    assert!((1..7).all(|i| f.u[i].is_zero()));
    // f5 = e5 + (terms off e5), f6 = ±(e6 + 2 e4) + span{e1, e2}, f7 = ±e7 + span{e1, e2}
    assert_eq!(f.f5[4], q(1, 1));
    assert!(f.f6[5].abs() == q(1, 1) && f.f6[3] == f.f6[5].mul_ref(&q(2, 1)));
    assert!(f.f6[2].is_zero() && f.f6[4].is_zero() && f.f6[6].is_zero());
    assert_eq!(f.f7[6].abs(), q(1, 1));
    assert!((2..6).all(|i| f.f7[i].is_zero()));
}

/// Pushes the source algebra through `phi` onto the target's brackets,
/// carrying the source metric along.
fn transported(eps: &QSqrt2, eps2: &QSqrt2) -> MetricLieAlgebra {
    let phi = phi_iso(eps, eps2);
    let phi_inv = inverse(&phi).unwrap();
    let target = g_eps_brackets(eps2);
    assert!(is_lie_homomorphism(&phi, &g_eps_brackets(eps), &target));
    let gram = phi_inv
        .transpose()
        .matmul(&standard_gram())
        .matmul(&phi_inv);
    MetricLieAlgebra::new(target, gram).unwrap()
}

#[test]
fn invariant_sees_the_metric_not_the_coordinates() {
    for (a, b) in [(q(0, 1), q(1, 1)), (q(1, 1), q(2, 1)), (q(-1, 1), q(1, 1))] {
        let m = transported(&a, &b);
        assert_eq!(epsilon_invariant(&m).unwrap(), a.neg_ref(), "{a} -> {b}");
        assert_ne!(epsilon_invariant(&g_eps(&b).algebra).unwrap(), a.neg_ref());
    }
}

#[test]
fn invariant_rejects_other_algebras() {
    let abelian = MetricLieAlgebra::new(LieAlgebraData::abelian(7), standard_gram()).unwrap();
    match epsilon_invariant(&abelian) {
        Err(Error::Structure { step, .. }) => assert_eq!(step, "center"),
        other => panic!("{other:?}"),
    }
    // [e1, e5] = e3 only: center is 5-dimensional
    let lie = LieAlgebraData::abelian(7).with_bracket(0, 4, &[(2, QSqrt2::one())]);
    let m = MetricLieAlgebra::new(lie, standard_gram()).unwrap();
    assert!(matches!(
        epsilon_invariant(&m),
        Err(Error::Structure { step: "center", .. })
    ));
}

#[test]
fn printed_example_sign() {
    let g = g_eps_as_printed(&q(1, 1)).algebra;
    assert_eq!(
        g.lie().bracket_basis(2, 4),
        unit::<QSqrt2>(7, 2)
            .iter()
            .map(|x| x.mul_ref(&q(2, 1)))
            .collect::<Vec<_>>()
    );
    assert_eq!(g.lie().bracket_basis(5, 6)[1], QSqrt2::sqrt2().neg_ref());
    assert_eq!(Matrix::<QSqrt2>::identity(7), phi_iso(&q(3, 1), &q(3, 1)));
}

#[test]
fn all_suites_pass() {
    let suites = run_all_suites();
    assert_eq!(suites.len(), 5);
    for s in &suites {
        assert!(s.passed(), "{s}");
        assert_eq!(s.to_json()["passed"], true);
    }
}

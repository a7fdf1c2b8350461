use proptest::prelude::*;

use g2star_core::atlas::{epsilon_invariant, g_eps, g_eps_brackets, phi_iso};
use g2star_core::g2core::{
    family, g2_matrix, h_build, phi_t, phi_v, rho_action, standard_gram, FamilyName, G2Params,
    HParams,
};
use g2star_core::geometry::{
    curvature, holonomy, levi_civita, pair_symmetry_defects, MetricLieAlgebra,
};
use g2star_core::liealg::{is_ideal, is_lie_homomorphism};
use g2star_core::linalg::{determinant, inverse, Matrix};
use g2star_core::repanalysis::{berger_test, curvature_space};
use g2star_core::{QSqrt2, Ring};

fn scalar() -> impl Strategy<Value = QSqrt2> {
    (-6i64..=6, 1i64..=4, -2i64..=2).prop_map(|(a, d, b)| {
        QSqrt2::frac(a, d).add_ref(&QSqrt2::from_int(b).mul_ref(&QSqrt2::sqrt2()))
    })
}

fn rational() -> impl Strategy<Value = QSqrt2> {
    (-9i64..=9, 1i64..=5).prop_map(|(a, d)| QSqrt2::frac(a, d))
}

fn h_params() -> impl Strategy<Value = HParams<QSqrt2>> {
    proptest::collection::vec(scalar(), 9).prop_map(|s| {
        HParams::new(
            [s[0].clone(), s[1].clone(), s[2].clone(), s[3].clone()],
            s[4].clone(),
            [s[5].clone(), s[6].clone()],
            [s[7].clone(), s[8].clone()],
        )
    })
}

fn h3_params() -> impl Strategy<Value = HParams<QSqrt2>> {
    h_params().prop_map(|mut p| {
        p.u = [QSqrt2::zero(), QSqrt2::zero()];
        p
    })
}

fn comm_a(a: &[QSqrt2; 4], b: &[QSqrt2; 4]) -> [QSqrt2; 4] {
    let m = |x: &[QSqrt2; 4]| {
        Matrix::from_rows(vec![
            vec![x[0].clone(), x[1].clone()],
            vec![x[2].clone(), x[3].clone()],
        ])
    };
    let c = m(a).commutator(&m(b));
    [
        c[(0, 0)].clone(),
        c[(0, 1)].clone(),
        c[(1, 0)].clone(),
        c[(1, 1)].clone(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(32))]

    #[test]
    fn g2star_is_closed(p in proptest::collection::vec(scalar(), 14), r in proptest::collection::vec(scalar(), 14)) {
        let x = g2_matrix(&G2Params { s: std::array::from_fn(|k| p[k].clone()) });
        let y = g2_matrix(&G2Params { s: std::array::from_fn(|k| r[k].clone()) });
        prop_assert!(family(FamilyName::G2Star).contains_matrix(&x.commutator(&y)));
    }

    #[test]
    fn h_families_are_closed(p in h_params(), r in h_params()) {
        let c = h_build(&p).commutator(&h_build(&r));
        prop_assert!(family(FamilyName::HI).contains_matrix(&c));
        let mut p3 = p.clone();
        let mut r3 = r.clone();
        p3.u = [QSqrt2::zero(), QSqrt2::zero()];
        r3.u = [QSqrt2::zero(), QSqrt2::zero()];
        prop_assert!(family(FamilyName::HIII).contains_matrix(&h_build(&p3).commutator(&h_build(&r3))));
    }

    #[test]
    fn rho_is_a_representation(p in h_params(), r in h_params(), w in h_params()) {
        let act = |a: &[QSqrt2; 4], x: (QSqrt2, [QSqrt2; 2], [QSqrt2; 2])| rho_action(a, &x.0, &x.1, &x.2);
        let x = (w.v.clone(), w.u.clone(), w.y.clone());
        let ab = act(&p.a, act(&r.a, x.clone()));
        let ba = act(&r.a, act(&p.a, x.clone()));
        let lhs = act(&comm_a(&p.a, &r.a), x);
        prop_assert_eq!(lhs.0, ab.0.sub_ref(&ba.0));
        for k in 0..2 {
            prop_assert_eq!(&lhs.1[k], &ab.1[k].sub_ref(&ba.1[k]));
            prop_assert_eq!(&lhs.2[k], &ab.2[k].sub_ref(&ba.2[k]));
        }
    }

    #[test]
    fn conjugation_preserves_type_three(p in h3_params(), v in scalar(), t in proptest::collection::vec(rational(), 4)) {
        let x = h_build(&p);
        let h3 = family(FamilyName::HIII);
        let pv = phi_v(&v);
        let conj = pv.matmul(&x).matmul(&inverse(&pv).unwrap());
        prop_assert!(h3.contains_matrix(&conj));
        let t = Matrix::from_rows(vec![vec![t[0].clone(), t[1].clone()], vec![t[2].clone(), t[3].clone()]]);
        prop_assume!(!determinant(&t).is_zero());
        let pt = phi_t(&t).unwrap();
        let conj = pt.matmul(&x).matmul(&inverse(&pt).unwrap());
        prop_assert!(h3.contains_matrix(&conj));
    }

    #[test]
    fn example_isomorphisms(a in scalar(), b in scalar()) {
        let phi = phi_iso(&a, &b);
        let src = g_eps_brackets(&a);
        let dst = g_eps_brackets(&b);
        prop_assert!(is_lie_homomorphism(&phi, &src, &dst));
        let phi_inv = inverse(&phi).unwrap();
        let gram = phi_inv.transpose().matmul(&standard_gram()).matmul(&phi_inv);
        let m = MetricLieAlgebra::new(dst, gram).unwrap();
        prop_assert_eq!(epsilon_invariant(&m).unwrap(), a.neg_ref());
    }

    #[test]
    fn example_structure(eps in scalar()) {
        let m = g_eps(&eps).algebra;
        let lie = m.lie();
        prop_assert!(lie.jacobi_check().holds());
        prop_assert!(is_ideal(lie, &lie.center()));
        for d in lie.derived_series() {
            prop_assert!(is_ideal(lie, &d));
        }
        let c = levi_civita(&m);
        prop_assert!(c.is_metric(m.gram()) && c.is_torsion_free(lie));
        prop_assert!(c.maps().iter().all(|l| family(FamilyName::HIII).contains_matrix(l)));
        let r = curvature(&m, &c);
        prop_assert!(pair_symmetry_defects(m.gram(), &r).is_empty());
        let h = holonomy(&m, &c).unwrap();
        for (_, x) in r.pairs() {
            prop_assert!(h.contains_matrix(x));
        }
        for y in h.basis_matrices(7) {
            for l in c.maps() {
                prop_assert!(h.contains_matrix(&l.commutator(&y)));
            }
        }
        prop_assert_eq!(epsilon_invariant(&m).unwrap(), eps.neg_ref());
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(12))]

    #[test]
    fn formal_curvature_tensors_obey_bianchi(p in h3_params()) {
        let h = g2star_core::linalg::Subspace::from_vectors(49, [h_build(&p).into_flat()]);
        let k = curvature_space(&h);
        for r in &k.basis {
            prop_assert!(r.first_bianchi_defects().is_empty());
            prop_assert!(pair_symmetry_defects(&standard_gram(), r).is_empty());
        }
        let b = berger_test(&h);
        prop_assert!(h.contains_subspace(&b.generated));
    }
}

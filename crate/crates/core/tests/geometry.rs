use g2star_core::atlas::{g_eps, TIME_DIRECTION};
use g2star_core::g2core::{family, h_build, standard_form, FamilyName, HParams};
use g2star_core::geometry::*;
use g2star_core::liealg::LieAlgebraData;
use g2star_core::linalg::{unit, Matrix};
use g2star_core::scalars::{LaurentExp, QSqrt2, Ring};

fn q(n: i64, d: i64) -> QSqrt2 {
    QSqrt2::frac(n, d)
}

fn z() -> QSqrt2 {
    QSqrt2::zero()
}

fn h(a: [QSqrt2; 4], v: QSqrt2, y: [QSqrt2; 2]) -> Matrix<QSqrt2> {
    h_build(&HParams::type3(a, v, y))
}

/// The connection of the example family as displayed in closed form.
fn displayed_lambdas(eps: &QSqrt2) -> Vec<Matrix<QSqrt2>> {
    let za = || [z(), z(), z(), z()];
    vec![
        Matrix::zeros(7, 7),
        h(za(), z(), [q(1, 2), z()]),
        h(za(), z(), [z(), q(1, 2)]),
        h(za(), z(), [q(-1, 1), z()]),
        h([q(1, 1), z(), z(), q(-3, 2)], z(), [z(), z()]),
        h(za(), QSqrt2::sqrt2(), [eps.clone(), z()]),
        h(za(), z(), [z(), eps.clone()]),
    ]
}

fn sample_eps() -> Vec<QSqrt2> {
    vec![q(0, 1), q(1, 1), q(-2, 1), q(7, 3), QSqrt2::sqrt2()]
}

#[test]
fn example_connection_matches_closed_form() {
    for eps in sample_eps() {
        let m = g_eps(&eps).algebra;
        let c = levi_civita(&m);
        assert_eq!(c.maps(), &displayed_lambdas(&eps)[..], "eps = {eps}");
        assert!(c.is_metric(m.gram()));
        assert!(c.is_torsion_free(m.lie()));
        for l in c.maps() {
            assert!(family(FamilyName::HIII).contains_matrix(l));
            assert!(standard_form().endo_action(l).is_zero());
        }
    }
}

#[test]
fn example_holonomy_dichotomy() {
    for eps in sample_eps() {
        let m = g_eps(&eps).algebra;
        let c = levi_civita(&m);
        let hol = holonomy(&m, &c).unwrap();
        let expected = if eps.is_zero() {
            FamilyName::M101
        } else {
            FamilyName::M102
        };
        assert_eq!(&hol, family(expected), "eps = {eps}");
        let r = curvature(&m, &c);
        for (_, rij) in r.pairs() {
            assert!(hol.contains_matrix(rij));
        }
        for l in c.maps() {
            for x in hol.basis_matrices(7) {
                assert!(hol.contains_matrix(&l.commutator(&x)));
            }
        }
    }
    let m0 = g_eps(&z()).algebra;
    let r0 = curvature(&m0, &levi_civita(&m0));
    assert_eq!(r0.span().dim(), 2);
    assert_eq!(&r0.span(), family(FamilyName::M101));
}

#[test]
fn curvature_pair_symmetry_and_bianchi() {
    for eps in sample_eps() {
        let m = g_eps(&eps).algebra;
        let c = levi_civita(&m);
        let r = curvature(&m, &c);
        assert!(pair_symmetry_defects(m.gram(), &r).is_empty());
        assert!(second_bianchi(&m, &c, &r).values().all(Matrix::is_zero));
    }
}

#[test]
fn corrupted_connection_breaks_bianchi() {
    let m = g_eps(&q(1, 1)).algebra;
    let mut c = levi_civita(&m);
    // perturb the A block of the e5 map: diag(1, -3/2) -> diag(2, -3/2)
    let bump = h([q(1, 1), z(), z(), z()], z(), [z(), z()]);
    c.maps_mut()[4] = c.lambda(4).add(&bump);
    let r = curvature(&m, &c);
    let b = second_bianchi(&m, &c, &r);
    let first = b.iter().find(|(_, v)| !v.is_zero()).map(|(k, _)| *k);
    // e5, e6, e7
    assert_eq!(first, Some((4, 5, 6)));
}

#[test]
fn flat_abelian_case() {
    let m = MetricLieAlgebra::new(
        LieAlgebraData::abelian(7),
        g2star_core::g2core::standard_gram(),
    )
    .unwrap();
    let c = levi_civita(&m);
    let r = curvature(&m, &c);
    assert!(r.is_zero());
    assert!(holonomy(&m, &c).unwrap().is_zero());
    assert!(second_bianchi(&m, &c, &r).values().all(Matrix::is_zero));
}

#[test]
fn rescaled_socle_fields_are_parallel() {
    for eps in sample_eps() {
        let m = g_eps(&eps).algebra;
        let c = levi_civita(&m);
        for (i, k) in [(0, 1), (1, -2), (2, 3)] {
            let field = TDependentVector::along(7, i, LaurentExp::monomial(QSqrt2::one(), k));
            for l in 0..7 {
                assert!(
                    covariant_derivative_t(&m, &c, &field, l).is_zero(),
                    "e{} along e{}",
                    i + 1,
                    l + 1
                );
            }
            assert_eq!(field.at_t_zero(), unit::<QSqrt2>(7, i));
        }
    }
}

#[test]
fn constant_field_is_not_parallel() {
    let m = g_eps(&q(1, 1)).algebra;
    let c = levi_civita(&m);
    let e4 = TDependentVector::constant(&unit::<QSqrt2>(7, 3));
    let d = covariant_derivative_t(&m, &c, &e4, 5);
    assert_eq!(d.at_t_zero(), {
        let mut v = vec![z(); 7];
        v[0] = q(2, 1);
        v
    });
}

#[test]
fn time_derivative_only_along_declared_direction() {
    let m = g_eps(&q(1, 1)).algebra;
    assert_eq!(m.time_direction(), Some(TIME_DIRECTION));
    let c = levi_civita(&m);
    let w = TDependentForm(standard_form().map(|x| LaurentExp::monomial(x.clone(), 2)));
    for l in 0..7 {
        let d = covariant_derivative_t(&m, &c, &w, l);
        assert_eq!(d.is_zero(), l != TIME_DIRECTION, "direction e{}", l + 1);
    }
}

fn grid() -> Vec<QSqrt2> {
    vec![q(-1, 1), q(0, 1), q(1, 2), q(1, 1)]
}

#[test]
fn deformation_family_is_parallel() {
    let m = g_eps(&q(1, 1)).algebra;
    for a in grid() {
        for b in grid() {
            for cc in grid() {
                let rep = check_deformation_parallel(&m, &a, &b, &cc).unwrap();
                assert!(rep.is_parallel(), "({a}, {b}, {cc})");
                let e = |k| LaurentExp::monomial(QSqrt2::one(), k);
                let lb = LaurentExp::from_scalar(&b);
                let lc = LaurentExp::from_scalar(&cc);
                let two = LaurentExp::from_scalar(&q(2, 1));
                for (l, dl) in rep.d.iter().enumerate() {
                    if l != 5 {
                        assert!(dl.is_zero(), "D{}", l + 1);
                        continue;
                    }
                    let mut expected = Matrix::zeros(7, 7);
                    expected[(1, 4)] = two.mul_ref(&lb).mul_ref(&e(-2));
                    expected[(2, 4)] = two.mul_ref(&lc).mul_ref(&e(3));
                    expected[(0, 5)] = two.mul_ref(&lb).mul_ref(&e(-2)).neg_ref();
                    expected[(0, 6)] = two.mul_ref(&lc).mul_ref(&e(3)).neg_ref();
                    assert_eq!(dl, &expected);
                }
            }
        }
    }
}

#[test]
fn trivial_deformation() {
    let m = g_eps(&q(1, 1)).algebra;
    let rep = check_deformation_parallel(&m, &z(), &z(), &z()).unwrap();
    assert_eq!(rep.a, Matrix::identity(7));
    assert_eq!(rep.form, standard_form().map(LaurentExp::from_scalar));
    assert!(rep.is_parallel());
}

#[test]
fn deformation_needs_time_direction() {
    let m = MetricLieAlgebra::new(
        LieAlgebraData::abelian(7),
        g2star_core::g2core::standard_gram(),
    )
    .unwrap();
    assert!(check_deformation_parallel(&m, &z(), &z(), &z()).is_err());
}

#[test]
fn printed_bracket_sign_leaves_g2() {
    use g2star_core::atlas::g_eps_as_printed;
    let one = q(1, 1);
    let m = g_eps_as_printed(&one).algebra;
    assert_eq!(m.lie().bracket_basis(5, 6), {
        let mut v = vec![z(); 7];
        v[1] = QSqrt2::sqrt2().neg_ref();
        v
    });
    assert_eq!(m.lie().bracket_basis(2, 4)[2], q(2, 1));
    let c = levi_civita(&m);
    assert!(!family(FamilyName::G2Star).contains_matrix(c.lambda(5)));
    assert!(!standard_form().endo_action(c.lambda(5)).is_zero());
    let ok = g_eps(&one).algebra;
    assert_eq!(ok.lie().bracket_basis(5, 6)[1], QSqrt2::sqrt2());
}

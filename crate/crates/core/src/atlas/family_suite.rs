use super::examples::g_eps;
use super::invariant::{epsilon_invariant_with, SignConvention};
use super::tables::TableCheckResult;
use crate::g2core::{family, h_build, FamilyName, HParams};
use crate::geometry::{
    check_deformation_parallel, covariant_derivative_t, holonomy, levi_civita, TDependent,
    TDependentVector,
};
use crate::linalg::Matrix;
use crate::scalars::{LaurentExp, QSqrt2, Ring};

/// `Λ_1, ..., Λ_7` of the example family in closed form.
pub fn closed_form_connection(eps: &QSqrt2) -> Vec<Matrix<QSqrt2>> {
    let q = QSqrt2::frac;
    let z = QSqrt2::zero;
    let h = |a: [QSqrt2; 4], v: QSqrt2, y: [QSqrt2; 2]| h_build(&HParams::type3(a, v, y));
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

/// Connection, holonomy, parallel frame, invariant and deformation checks
/// on the example family.
pub fn verify_example_family() -> TableCheckResult {
    let q = QSqrt2::frac;
    let mut out = TableCheckResult::new("example family");
    for eps in [q(0, 1), q(1, 1), q(-2, 1), q(7, 3)] {
        let m = g_eps(&eps).algebra;
        let c = levi_civita(&m);
        for (i, expected) in closed_form_connection(&eps).iter().enumerate() {
            let got = c.lambda(i);
            out.push(
                format!("eps={eps}: Lambda_{}", i + 1),
                "closed form",
                if got == expected { "equal" } else { "differs" },
                got == expected,
            );
        }
        let hol = holonomy(&m, &c);
        let want = if eps.is_zero() {
            FamilyName::M101
        } else {
            FamilyName::M102
        };
        let (dim, ok) = match &hol {
            Ok(h) => (h.dim().to_string(), h == family(want)),
            Err(e) => (e.to_string(), false),
        };
        out.push(
            format!("eps={eps}: holonomy"),
            format!("{want}, dim {}", want.expected_dim()),
            format!("dim {dim}"),
            ok,
        );
    }
    let m = g_eps(&q(1, 1)).algebra;
    let c = levi_civita(&m);
    for (i, k) in [(0usize, 1i32), (1, -2), (2, 3)] {
        let field = TDependentVector::along(7, i, LaurentExp::monomial(QSqrt2::one(), k));
        let bad: Vec<usize> = (0..7)
            .filter(|&l| !covariant_derivative_t(&m, &c, &field, l).is_zero())
            .map(|l| l + 1)
            .collect();
        out.push(
            format!("E^{k} e{} parallel", i + 1),
            "[]",
            format!("{bad:?}"),
            bad.is_empty(),
        );
    }
    for eps in [q(0, 1), q(1, 1), q(5, 1), q(-3, 2)] {
        let m = g_eps(&eps).algebra;
        for signs in [SignConvention::Positive, SignConvention::Negative] {
            let label = format!("eps={eps}: invariant ({signs:?})");
            match epsilon_invariant_with(&m, signs) {
                Ok(f) => {
                    let ok = f.value == eps.neg_ref();
                    out.push(label, eps.neg_ref(), f.value, ok);
                }
                Err(e) => out.push(label, eps.neg_ref(), e, false),
            }
        }
    }
    let grid = [q(-1, 1), q(0, 1), q(1, 2), q(1, 1)];
    for a in &grid {
        for b in &grid {
            for cc in &grid {
                let label = format!("deformation ({a}, {b}, {cc}) parallel");
                match check_deformation_parallel(&m, a, b, cc) {
                    Ok(r) => out.push(label, true, r.is_parallel(), r.is_parallel()),
                    Err(e) => out.push(label, true, e, false),
                }
            }
        }
    }
    out
}

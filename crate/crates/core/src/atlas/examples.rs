use crate::g2core::standard_gram;
use crate::geometry::MetricLieAlgebra;
use crate::liealg::LieAlgebraData;
use crate::linalg::Matrix;
use crate::scalars::{QSqrt2, Ring};

/// Index of `e5 = d/dt` in the `R ⋉ N` splitting of the example family.
pub const TIME_DIRECTION: usize = 4;

/// A named metric Lie algebra with its parameters.
#[derive(Clone, Debug, PartialEq)]
pub struct ExampleSpec {
    pub name: String,
    pub parameters: Vec<(String, QSqrt2)>,
    pub algebra: MetricLieAlgebra,
}

/// Brackets of the one-parameter family, without a metric.
pub fn g_eps_brackets(eps: &QSqrt2) -> LieAlgebraData<QSqrt2> {
    brackets(eps, QSqrt2::sqrt2())
}

fn brackets(eps: &QSqrt2, c67: QSqrt2) -> LieAlgebraData<QSqrt2> {
    let q = QSqrt2::frac;
    let one = QSqrt2::one;
    let e = eps.clone();
    LieAlgebraData::abelian(7)
        .with_bracket(0, 4, &[(0, q(1, 2))])
        .with_bracket(1, 4, &[(1, q(-1, 2))])
        .with_bracket(1, 5, &[(0, q(-1, 2))])
        .with_bracket(2, 4, &[(2, q(2, 1))])
        .with_bracket(2, 6, &[(0, q(-1, 2))])
        .with_bracket(3, 4, &[(1, one().neg_ref())])
        .with_bracket(3, 5, &[(0, one().neg_ref())])
        .with_bracket(
            4,
            5,
            &[(1, e.neg_ref()), (3, q(-2, 1)), (5, one().neg_ref())],
        )
        .with_bracket(4, 6, &[(2, e.neg_ref()), (6, q(3, 2))])
        .with_bracket(5, 6, &[(1, c67)])
}

/// The family with the standard split metric and `e5` as time direction.
pub fn g_eps(eps: &QSqrt2) -> ExampleSpec {
    let algebra = MetricLieAlgebra::new(g_eps_brackets(eps), standard_gram())
        .expect("the example family satisfies Jacobi")
        .with_time_direction(TIME_DIRECTION);
    ExampleSpec {
        name: "g-eps".into(),
        parameters: vec![("eps".into(), eps.clone())],
        algebra,
    }
}

/// Variant with `[e6, e7] = -sqrt2 e2`. Still a Lie algebra, but its
/// Levi-Civita connection leaves `g2*`, so the standard form is not
/// parallel for it.
pub fn g_eps_as_printed(eps: &QSqrt2) -> ExampleSpec {
    let algebra = MetricLieAlgebra::new(brackets(eps, QSqrt2::sqrt2().neg_ref()), standard_gram())
        .expect("the variant satisfies Jacobi")
        .with_time_direction(TIME_DIRECTION);
    ExampleSpec {
        name: "g-eps-as-printed".into(),
        parameters: vec![("eps".into(), eps.clone())],
        algebra,
    }
}

/// Lie isomorphism between the members `eps` and `eps2`: fixes `e1..e5`,
/// `e6 -> e6 + 2/3 (eps2 - eps) e2`, `e7 -> e7 + 2/7 (eps - eps2) e3`.
/// Column `j` is the image of `e_j`.
pub fn phi_iso(eps: &QSqrt2, eps2: &QSqrt2) -> Matrix<QSqrt2> {
    let mut p = Matrix::identity(7);
    p[(1, 5)] = QSqrt2::frac(2, 3).mul_ref(&eps2.sub_ref(eps));
    p[(2, 6)] = QSqrt2::frac(2, 7).mul_ref(&eps.sub_ref(eps2));
    p
}

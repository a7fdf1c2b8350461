use super::{covariant_derivative_t, levi_civita, MetricLieAlgebra};
use crate::error::{Error, Result};
use crate::exterior::ThreeForm;
use crate::g2core::standard_form;
use crate::linalg::Matrix;
use crate::scalars::{LaurentExp, QSqrt2, Ring};

/// Outcome of deforming the standard form by `A = exp M(a,b,c)`.
#[derive(Clone, Debug)]
pub struct DeformationReport {
    pub generator: Matrix<LaurentExp>,
    pub a: Matrix<LaurentExp>,
    pub a_inv: Matrix<LaurentExp>,
    /// `M^3 = 0`
    pub nilpotent: bool,
    /// `A A^{-1} = I`
    pub inverse_ok: bool,
    /// `A^T G A = G`
    pub orthogonal: bool,
    /// `D_l = A ∘ ∇_{e_l} A^{-1}`
    pub d: Vec<Matrix<LaurentExp>>,
    /// `(l, D_l . w0)` for every direction where the action is nonzero.
    pub violations: Vec<(usize, ThreeForm<LaurentExp>)>,
    /// `A^* w0`
    pub form: ThreeForm<LaurentExp>,
}

impl DeformationReport {
    pub fn is_parallel(&self) -> bool {
        self.nilpotent && self.inverse_ok && self.orthogonal && self.violations.is_empty()
    }
}

/// `M(a,b,c)` with `E = e^{t/2}`: kills `e1, e2, e3`,
/// `e4 -> aE e1 + bE^-2 e2 + cE^3 e3`, `e5 -> aE e4`, `e6 -> bE^-2 e4`,
/// `e7 -> cE^3 e4`.
pub fn deformation_generator(a: &QSqrt2, b: &QSqrt2, c: &QSqrt2) -> Matrix<LaurentExp> {
    let fa = LaurentExp::monomial(a.clone(), 1);
    let fb = LaurentExp::monomial(b.clone(), -2);
    let fc = LaurentExp::monomial(c.clone(), 3);
    let mut m = Matrix::zeros(7, 7);
    m[(0, 3)] = fa.clone();
    m[(1, 3)] = fb.clone();
    m[(2, 3)] = fc.clone();
    m[(3, 4)] = fa;
    m[(3, 5)] = fb;
    m[(3, 6)] = fc;
    m
}

/// Requires a declared time direction on a 7-dimensional algebra.
pub fn check_deformation_parallel(
    m: &MetricLieAlgebra,
    a: &QSqrt2,
    b: &QSqrt2,
    c: &QSqrt2,
) -> Result<DeformationReport> {
    if m.dim() != 7 {
        return Err(Error::DimensionMismatch {
            expected: 7,
            found: m.dim(),
        });
    }
    if m.time_direction().is_none() {
        return Err(Error::Input("deformation needs a time direction".into()));
    }
    let conn = levi_civita(m);
    let gen = deformation_generator(a, b, c);
    let id = Matrix::<LaurentExp>::identity(7);
    let sq = gen.matmul(&gen);
    let half = LaurentExp::from_scalar(&QSqrt2::frac(1, 2));
    let half_sq = sq.scale_by(&half);
    let a_mat = id.add(&gen).add(&half_sq);
    let a_inv = id.sub(&gen).add(&half_sq);
    let nilpotent = sq.matmul(&gen).is_zero();
    let inverse_ok = a_mat.matmul(&a_inv) == id;
    let gram = m.gram().map(LaurentExp::from_scalar);
    let orthogonal = a_mat.transpose().matmul(&gram).matmul(&a_mat) == gram;

    let w0 = standard_form().map(LaurentExp::from_scalar);
    let mut d = Vec::with_capacity(7);
    let mut violations = Vec::new();
    for l in 0..7 {
        let dl = a_mat.matmul(&covariant_derivative_t(m, &conn, &a_inv, l));
        let acted = w0.endo_action(&dl);
        if !acted.is_zero() {
            violations.push((l, acted));
        }
        d.push(dl);
    }
    let form = w0.pullback(&a_mat);
    Ok(DeformationReport {
        generator: gen,
        a: a_mat,
        a_inv,
        nilpotent,
        inverse_ok,
        orthogonal,
        d,
        violations,
        form,
    })
}

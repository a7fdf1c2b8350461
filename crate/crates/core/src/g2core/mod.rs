//! The split G2 scaffolding in the fixed frame `e1..e7`: the standard
//! 3-form and metric, the 14-parameter matrix model of its stabilizer
//! algebra, the `h(A, v, u, y)` block constructor, named subalgebras and
//! the two basis changes `phi_t`, `phi_v`.

mod family;
mod hparams;

pub use family::{family, family_basis, tfk_list, AFactor, FamilyName};
pub use hparams::{h_build, h_project, rho_action, HParams};

use crate::error::{Error, Result};
use crate::exterior::ThreeForm;
use crate::linalg::{determinant, inverse, Matrix};
use crate::scalars::{QSqrt2, Ring};

pub const DIM: usize = 7;

/// `r2 (e^167 + e^235) - e^4 ^ (e^15 - e^26 - e^37)`.
pub fn standard_form() -> ThreeForm<QSqrt2> {
    let one = QSqrt2::one();
    let r2 = QSqrt2::sqrt2();
    ThreeForm::from_terms([
        ((0, 5, 6), r2.clone()),
        ((1, 2, 4), r2),
        ((3, 0, 4), one.neg_ref()),
        ((3, 1, 5), one.clone()),
        ((3, 2, 6), one),
    ])
}

/// `2(e^1 e^5 + e^2 e^6 + e^3 e^7) - (e^4)^2`.
pub fn standard_gram<T: Ring>() -> Matrix<T> {
    let mut g = Matrix::zeros(DIM, DIM);
    for (a, b) in [(0, 4), (1, 5), (2, 6)] {
        g[(a, b)] = T::one();
        g[(b, a)] = T::one();
    }
    g[(3, 3)] = T::one().neg_ref();
    g
}

pub fn standard_data() -> (ThreeForm<QSqrt2>, Matrix<QSqrt2>) {
    (standard_form(), standard_gram())
}

/// Coordinates `s1..s14` of the stabilizer algebra.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct G2Params<T> {
    pub s: [T; 14],
}

impl<T: Ring> G2Params<T> {
    pub fn zero() -> Self {
        G2Params {
            s: std::array::from_fn(|_| T::zero()),
        }
    }

    /// Only `s_{k+1}` equal to one.
    pub fn unit(k: usize) -> Self {
        let mut p = Self::zero();
        p.s[k] = T::one();
        p
    }
}

/// The displayed 7x7 matrix, linear in `s1..s14`.
pub fn g2_matrix<T: Ring>(p: &G2Params<T>) -> Matrix<T> {
    let s = |k: usize| p.s[k - 1].clone();
    let n = |k: usize| p.s[k - 1].neg_ref();
    let r = |k: usize| p.s[k - 1].scale(&QSqrt2::sqrt2());
    let z = T::zero;
    Matrix::from_rows(vec![
        vec![s(1).add_ref(&s(4)), n(10), s(9), r(6), z(), n(11), n(12)],
        vec![n(8), s(1), s(2), r(9), s(11), z(), s(6)],
        vec![s(7), s(3), s(4), r(10), s(12), n(6), z()],
        vec![r(5), r(7), r(8), z(), r(6), r(9), r(10)],
        vec![z(), s(13), s(14), r(5), n(1).sub_ref(&s(4)), s(8), n(7)],
        vec![n(13), z(), n(5), r(7), s(10), n(1), n(3)],
        vec![n(14), s(5), z(), r(8), n(9), n(2), n(4)],
    ])
}

/// The 14 single-parameter generators.
pub fn g2_generators() -> Vec<Matrix<QSqrt2>> {
    (0..14).map(|k| g2_matrix(&G2Params::unit(k))).collect()
}

/// `X^T G + G X`, zero iff `X` is skew for the Gram matrix `G`.
pub fn metric_defect<T: Ring>(x: &Matrix<T>, gram: &Matrix<T>) -> Matrix<T> {
    x.transpose().matmul(gram).add(&gram.matmul(x))
}

/// Exact `exp` of a nilpotent matrix as a finite power series.
pub fn exp_nilpotent<T: Ring>(x: &Matrix<T>) -> Result<Matrix<T>> {
    let n = x.rows();
    let mut term = Matrix::identity(n);
    let mut sum = Matrix::identity(n);
    for k in 1..=n {
        term = term.matmul(x).scale(&QSqrt2::frac(1, k as i64));
        if term.is_zero() {
            return Ok(sum);
        }
        sum = sum.add(&term);
    }
    Err(Error::NotNilpotent(n))
}

/// `diag(det T, T, 1, 1/det T, T^{-T})`.
pub fn phi_t(t: &Matrix<QSqrt2>) -> Result<Matrix<QSqrt2>> {
    if (t.rows(), t.cols()) != (2, 2) {
        return Err(Error::DimensionMismatch {
            expected: 2,
            found: t.rows(),
        });
    }
    let det = determinant(t);
    let inv_det = det.inv().map_err(|_| Error::Singular)?;
    let t_inv_tr = inverse(t)?.transpose();
    let mut m = Matrix::zeros(DIM, DIM);
    m[(0, 0)] = det;
    m[(3, 3)] = QSqrt2::one();
    m[(4, 4)] = inv_det;
    for r in 0..2 {
        for c in 0..2 {
            m[(1 + r, 1 + c)] = t[(r, c)].clone();
            m[(5 + r, 5 + c)] = t_inv_tr[(r, c)].clone();
        }
    }
    Ok(m)
}

/// `exp h(0, v, 0, 0)`.
pub fn phi_v<T: Ring>(v: &T) -> Matrix<T> {
    let h = h_build(&HParams {
        v: v.clone(),
        ..HParams::zero()
    });
    exp_nilpotent(&h).expect("h(0,v,0,0) is nilpotent")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::linalg::{gram_signature, rank, unit, Subspace};

    fn q(s: &str) -> QSqrt2 {
        QSqrt2::parse(s).unwrap()
    }

    #[test]
    fn standard_form_values() {
        let w = standard_form();
        let e = |i| unit::<QSqrt2>(7, i);
        assert_eq!(w.eval(&e(1), &e(2), &e(4)).unwrap(), QSqrt2::sqrt2());
        assert_eq!(w.eval(&e(0), &e(5), &e(6)).unwrap(), QSqrt2::sqrt2());
        assert_eq!(w.eval(&e(3), &e(0), &e(4)).unwrap(), q("-1"));
        let g: Matrix<QSqrt2> = standard_gram();
        assert_eq!(g[(3, 3)], q("-1"));
        // three positive and four negative directions, i.e. R^{4,3} when
        // the negative count is written first
        let sig = gram_signature(&g);
        assert_eq!(sig.as_tuple(), (3, 4, 0));
        assert_eq!(sig.negative_first(), (4, 3, 0));
    }

    #[test]
    fn generators_span_stabilizer() {
        let (w, g) = standard_data();
        let gens = g2_generators();
        let flat = Matrix::from_rows(gens.iter().map(|m| m.as_flat().to_vec()).collect());
        assert_eq!(rank(&flat), 14);
        for x in &gens {
            assert!(w.endo_action(x).is_zero());
            assert!(metric_defect(x, &g).is_zero());
        }
        assert_eq!(w.stabilizer_algebra(), Subspace::from_matrices(&gens));
    }

    #[test]
    fn s5_entries() {
        let m = g2_matrix(&G2Params::<QSqrt2>::unit(4));
        assert_eq!(m[(3, 0)], QSqrt2::sqrt2());
        assert_eq!(m[(5, 2)], q("-1"));
        assert_eq!(m[(6, 1)], q("1"));
        assert_eq!(m[(4, 3)], QSqrt2::sqrt2());
    }

    #[test]
    fn phi_maps_fix_structure() {
        assert_eq!(phi_t(&Matrix::identity(2)).unwrap(), Matrix::identity(7));
        let (w, g) = standard_data();
        let t = Matrix::from_rows(vec![vec![q("2"), q("r2")], vec![q("-1"), q("1/3")]]);
        let p = phi_t(&t).unwrap();
        assert_eq!(w.pullback(&p), w);
        assert_eq!(p.transpose().matmul(&g).matmul(&p), g);
        let pv = phi_v(&q("3/2"));
        assert_eq!(w.pullback(&pv), w);
        assert_eq!(pv.column(3)[0], q("3/2*r2"));
        assert!(phi_t(&Matrix::zeros(2, 2)).is_err());
    }

    #[test]
    fn exp_rejects_non_nilpotent() {
        assert_eq!(
            exp_nilpotent(&Matrix::<QSqrt2>::identity(3)),
            Err(Error::NotNilpotent(3))
        );
    }
}

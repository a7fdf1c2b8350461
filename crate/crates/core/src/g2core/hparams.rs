use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::scalars::{QSqrt2, Ring};

/// `(A, v, u, y)` with `A = (a1 a2; a3 a4)`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct HParams<T> {
    pub a: [T; 4],
    pub v: T,
    pub u: [T; 2],
    pub y: [T; 2],
}

impl<T: Ring> HParams<T> {
    pub fn zero() -> Self {
        HParams {
            a: std::array::from_fn(|_| T::zero()),
            v: T::zero(),
            u: std::array::from_fn(|_| T::zero()),
            y: std::array::from_fn(|_| T::zero()),
        }
    }

    pub fn new(a: [T; 4], v: T, u: [T; 2], y: [T; 2]) -> Self {
        HParams { a, v, u, y }
    }

    /// `h(A, v, y) = h(A, v, 0, y)`.
    pub fn type3(a: [T; 4], v: T, y: [T; 2]) -> Self {
        HParams {
            a,
            v,
            u: std::array::from_fn(|_| T::zero()),
            y,
        }
    }

    pub fn trace(&self) -> T {
        self.a[0].add_ref(&self.a[3])
    }

    pub fn a_matrix(&self) -> Matrix<T> {
        Matrix::from_flat(2, 2, self.a.to_vec())
    }

    pub fn map<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> HParams<U> {
        HParams {
            a: std::array::from_fn(|i| f(&self.a[i])),
            v: f(&self.v),
            u: std::array::from_fn(|i| f(&self.u[i])),
            y: std::array::from_fn(|i| f(&self.y[i])),
        }
    }

    pub fn add(&self, o: &Self) -> Self {
        HParams {
            a: std::array::from_fn(|i| self.a[i].add_ref(&o.a[i])),
            v: self.v.add_ref(&o.v),
            u: std::array::from_fn(|i| self.u[i].add_ref(&o.u[i])),
            y: std::array::from_fn(|i| self.y[i].add_ref(&o.y[i])),
        }
    }

    pub fn scale_by(&self, c: &T) -> Self {
        self.map(|x| x.mul_ref(c))
    }
}

/// The block matrix `h(A, v, u, y)`.
pub fn h_build<T: Ring>(p: &HParams<T>) -> Matrix<T> {
    let r2 = |x: &T| x.scale(&QSqrt2::sqrt2());
    let [a1, a2, a3, a4] = &p.a;
    let [u1, u2] = &p.u;
    let [y1, y2] = &p.y;
    let v = &p.v;
    let tr = p.trace();
    let z = T::zero;
    Matrix::from_rows(vec![
        vec![
            tr.clone(),
            u2.neg_ref(),
            u1.clone(),
            r2(v),
            z(),
            y1.neg_ref(),
            y2.neg_ref(),
        ],
        vec![
            z(),
            a1.clone(),
            a2.clone(),
            r2(u1),
            y1.clone(),
            z(),
            v.clone(),
        ],
        vec![
            z(),
            a3.clone(),
            a4.clone(),
            r2(u2),
            y2.clone(),
            v.neg_ref(),
            z(),
        ],
        vec![z(), z(), z(), z(), r2(v), r2(u1), r2(u2)],
        vec![z(), z(), z(), z(), tr.neg_ref(), z(), z()],
        vec![z(), z(), z(), z(), u2.clone(), a1.neg_ref(), a3.neg_ref()],
        vec![z(), z(), z(), z(), u1.neg_ref(), a2.neg_ref(), a4.neg_ref()],
    ])
}

/// Inverse of [`h_build`] on its image. Matrices outside report the first
/// entry (1-based) that disagrees with the reconstruction.
pub fn h_project<T: Ring>(m: &Matrix<T>) -> Result<HParams<T>> {
    if (m.rows(), m.cols()) != (7, 7) {
        return Err(Error::DimensionMismatch {
            expected: 7,
            found: m.rows(),
        });
    }
    let g = |r: usize, c: usize| m[(r, c)].clone();
    let p = HParams {
        a: [g(1, 1), g(1, 2), g(2, 1), g(2, 2)],
        v: g(1, 6),
        u: [g(0, 2), g(0, 1).neg_ref()],
        y: [g(1, 4), g(2, 4)],
    };
    let rebuilt = h_build(&p);
    for r in 0..7 {
        for c in 0..7 {
            if rebuilt[(r, c)] != m[(r, c)] {
                return Err(Error::NotInFamily {
                    row: r + 1,
                    col: c + 1,
                    found: m[(r, c)].to_string(),
                    expected: rebuilt[(r, c)].to_string(),
                });
            }
        }
    }
    Ok(p)
}

/// `rho(A)(v, u, y) = (tr(A) v, A u, (A + tr(A)) y)`.
pub fn rho_action<T: Ring>(a: &[T; 4], v: &T, u: &[T; 2], y: &[T; 2]) -> (T, [T; 2], [T; 2]) {
    let tr = a[0].add_ref(&a[3]);
    let apply = |w: &[T; 2]| -> [T; 2] {
        [
            a[0].mul_ref(&w[0]).add_ref(&a[1].mul_ref(&w[1])),
            a[2].mul_ref(&w[0]).add_ref(&a[3].mul_ref(&w[1])),
        ]
    };
    let ay = apply(y);
    (
        tr.mul_ref(v),
        apply(u),
        [
            ay[0].add_ref(&tr.mul_ref(&y[0])),
            ay[1].add_ref(&tr.mul_ref(&y[1])),
        ],
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> QSqrt2 {
        QSqrt2::from_int(n)
    }

    #[test]
    fn v_entries() {
        let h = h_build(&HParams {
            v: q(1),
            ..HParams::zero()
        });
        assert_eq!(h[(0, 3)], QSqrt2::sqrt2());
        assert_eq!(h[(1, 6)], q(1));
        assert_eq!(h[(2, 5)], q(-1));
        assert_eq!(h[(3, 4)], QSqrt2::sqrt2());
    }

    #[test]
    fn identity_block() {
        let h = h_build(&HParams {
            a: [q(1), q(0), q(0), q(1)],
            ..HParams::zero()
        });
        assert_eq!(h[(0, 0)], q(2));
        assert_eq!(h[(4, 4)], q(-2));
        assert_eq!(h[(1, 1)], q(1));
        assert_eq!(h[(6, 6)], q(-1));
    }

    #[test]
    fn projection_rejects_outsiders() {
        let mut m = Matrix::<QSqrt2>::zeros(7, 7);
        m[(4, 0)] = q(1);
        assert!(matches!(
            h_project(&m),
            Err(Error::NotInFamily { row: 5, col: 1, .. })
        ));
    }

    #[test]
    fn rho_on_identity() {
        let (v, u, y) = rho_action(
            &[q(1), q(0), q(0), q(1)],
            &q(1),
            &[q(0), q(0)],
            &[q(1), q(0)],
        );
        assert_eq!(v, q(2));
        assert_eq!(u, [q(0), q(0)]);
        assert_eq!(y, [q(3), q(0)]);
    }
}

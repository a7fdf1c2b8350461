use super::matrix::{Matrix, Vector};
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::scalars::{QSqrt2, Ring};

/// Result of Gauss-Jordan elimination.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix<QSqrt2>,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

/// Reduced row-echelon form. Pivots are normalized to one as soon as they
/// are chosen; zero entries are skipped throughout.
pub fn rref(m: &Matrix<QSqrt2>) -> Rref {
    let (rows, cols) = (m.rows(), m.cols());
    let mut a: Vec<Vec<QSqrt2>> = (0..rows).map(|r| m.row(r).to_vec()).collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(p) = (r..rows).find(|&i| !a[i][c].is_zero()) else {
            continue;
        };
        a.swap(r, p);
        let inv = a[r][c].inv().expect("nonzero pivot");
        for x in a[r].iter_mut().skip(c) {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        let pivot_row = std::mem::take(&mut a[r]);
        let support: Vec<usize> = (c..cols).filter(|&j| !pivot_row[j].is_zero()).collect();
        for (i, row) in a.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for &j in &support {
                row[j] = row[j].sub_ref(&f.mul_ref(&pivot_row[j]));
            }
        }
        a[r] = pivot_row;
        pivots.push(c);
        r += 1;
    }
    Rref {
        reduced: Matrix::from_rows(if rows == 0 { Vec::new() } else { a }).reshaped(rows, cols),
        rank: r,
        pivots,
    }
}

impl<T: Ring> Matrix<T> {
    fn reshaped(self, rows: usize, cols: usize) -> Self {
        if self.rows() == rows && self.cols() == cols {
            self
        } else {
            Matrix::zeros(rows, cols)
        }
    }
}

pub fn rank(m: &Matrix<QSqrt2>) -> usize {
    rref(m).rank
}

/// Exact null space `{x : m x = 0}`.
pub fn kernel(m: &Matrix<QSqrt2>) -> Subspace {
    let cols = m.cols();
    let Rref {
        reduced, pivots, ..
    } = rref(m);
    let mut is_pivot = vec![false; cols];
    for &p in &pivots {
        is_pivot[p] = true;
    }
    let vectors = (0..cols).filter(|&f| !is_pivot[f]).map(|f| {
        let mut v = vec![QSqrt2::zero(); cols];
        v[f] = QSqrt2::one();
        for (i, &p) in pivots.iter().enumerate() {
            v[p] = reduced[(i, f)].neg_ref();
        }
        v
    });
    Subspace::from_vectors(cols, vectors)
}

/// One solution of `m x = b`, if the system is consistent.
pub fn solve(m: &Matrix<QSqrt2>, b: &[QSqrt2]) -> Option<Vector<QSqrt2>> {
    assert_eq!(m.rows(), b.len());
    let cols = m.cols();
    let aug = Matrix::from_fn(m.rows(), cols + 1, |r, c| {
        if c < cols {
            m[(r, c)].clone()
        } else {
            b[r].clone()
        }
    });
    let Rref {
        reduced, pivots, ..
    } = rref(&aug);
    if pivots.last() == Some(&cols) {
        return None;
    }
    let mut x = vec![QSqrt2::zero(); cols];
    for (i, &p) in pivots.iter().enumerate() {
        x[p] = reduced[(i, cols)].clone();
    }
    Some(x)
}

pub fn inverse(m: &Matrix<QSqrt2>) -> Result<Matrix<QSqrt2>> {
    if !m.is_square() {
        return Err(Error::DimensionMismatch {
            expected: m.rows(),
            found: m.cols(),
        });
    }
    let n = m.rows();
    let aug = Matrix::from_fn(n, 2 * n, |r, c| {
        if c < n {
            m[(r, c)].clone()
        } else if c - n == r {
            QSqrt2::one()
        } else {
            QSqrt2::zero()
        }
    });
    let Rref {
        reduced,
        rank,
        pivots,
    } = rref(&aug);
    if rank < n || pivots[n - 1] != n - 1 {
        return Err(Error::Singular);
    }
    Ok(Matrix::from_fn(n, n, |r, c| reduced[(r, n + c)].clone()))
}

pub fn determinant(m: &Matrix<QSqrt2>) -> QSqrt2 {
    assert!(m.is_square());
    let n = m.rows();
    let mut a: Vec<Vec<QSqrt2>> = (0..n).map(|r| m.row(r).to_vec()).collect();
    let mut det = QSqrt2::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !a[i][c].is_zero()) else {
            return QSqrt2::zero();
        };
        if p != c {
            a.swap(p, c);
            det = det.neg_ref();
        }
        det = det.mul_ref(&a[c][c]);
        let inv = a[c][c].inv().expect("nonzero pivot");
        for i in c + 1..n {
            if a[i][c].is_zero() {
                continue;
            }
            let f = a[i][c].mul_ref(&inv);
            for j in c..n {
                let t = f.mul_ref(&a[c][j]);
                a[i][j] = a[i][j].sub_ref(&t);
            }
        }
    }
    det
}

use std::fmt;

use super::matrix::{is_zero_vec, Matrix, Vector};
use crate::scalars::{QSqrt2, Ring};

/// Subspace of `QSqrt2^n` kept as a basis in reduced row-echelon form.
///
/// The basis is canonical: two spanning sets of the same space produce
/// identical `Subspace` values, so `==` decides equality of spaces.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Subspace {
    ambient: usize,
    basis: Vec<Vector<QSqrt2>>,
    pivots: Vec<usize>,
}

impl Subspace {
    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Vec::new(),
            pivots: Vec::new(),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Self::from_vectors(ambient, (0..ambient).map(|i| super::unit(ambient, i)))
    }

    pub fn from_vectors<I>(ambient: usize, vectors: I) -> Self
    where
        I: IntoIterator<Item = Vector<QSqrt2>>,
    {
        let mut s = Self::zero(ambient);
        for v in vectors {
            s.insert(v);
        }
        s
    }

    /// Span of matrices, flattened row-major.
    pub fn from_matrices<'a, I>(mats: I) -> Self
    where
        I: IntoIterator<Item = &'a Matrix<QSqrt2>>,
    {
        let mut it = mats.into_iter().peekable();
        let ambient = it.peek().map_or(0, |m| m.rows() * m.cols());
        Self::from_vectors(ambient, it.map(|m| m.as_flat().to_vec()))
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_zero(&self) -> bool {
        self.basis.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.basis.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vector<QSqrt2>] {
        &self.basis
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Basis vectors reshaped into `n x n` matrices.
    pub fn basis_matrices(&self, n: usize) -> Vec<Matrix<QSqrt2>> {
        assert_eq!(self.ambient, n * n, "ambient is not n*n");
        self.basis
            .iter()
            .map(|v| Matrix::from_flat(n, n, v.clone()))
            .collect()
    }

    /// Residual of `v` after elimination against the basis; zero iff `v`
    /// lies in the subspace.
    pub fn reduce(&self, v: &[QSqrt2]) -> Vector<QSqrt2> {
        assert_eq!(v.len(), self.ambient, "vector length");
        let mut w = v.to_vec();
        for (row, &p) in self.basis.iter().zip(&self.pivots) {
            if w[p].is_zero() {
                continue;
            }
            let f = w[p].clone();
            for (x, r) in w.iter_mut().zip(row).skip(p) {
                if !r.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(r));
                }
            }
        }
        w
    }

    pub fn contains(&self, v: &[QSqrt2]) -> bool {
        is_zero_vec(&self.reduce(v))
    }

    pub fn contains_matrix(&self, m: &Matrix<QSqrt2>) -> bool {
        self.contains(m.as_flat())
    }

    pub fn contains_subspace(&self, other: &Subspace) -> bool {
        other.basis.iter().all(|v| self.contains(v))
    }

    /// Adds `v` to the span. Returns true when the dimension grew.
    pub fn insert(&mut self, v: Vector<QSqrt2>) -> bool {
        let mut w = self.reduce(&v);
        let Some(p) = w.iter().position(|x| !x.is_zero()) else {
            return false;
        };
        let inv = w[p].inv().expect("nonzero pivot");
        for x in w.iter_mut().skip(p) {
            if !x.is_zero() {
                *x = x.mul_ref(&inv);
            }
        }
        for row in &mut self.basis {
            if row[p].is_zero() {
                continue;
            }
            let f = row[p].clone();
            for (x, y) in row.iter_mut().zip(&w).skip(p) {
                if !y.is_zero() {
                    *x = x.sub_ref(&f.mul_ref(y));
                }
            }
        }
        let at = self.pivots.partition_point(|&q| q < p);
        self.pivots.insert(at, p);
        self.basis.insert(at, w);
        true
    }

    /// Coordinates of `v` in the RREF basis, or `None` if `v` is outside.
    pub fn coordinates(&self, v: &[QSqrt2]) -> Option<Vector<QSqrt2>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        let mut s = self.clone();
        for v in &other.basis {
            s.insert(v.clone());
        }
        s
    }

    pub fn intersection(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        // solve sum a_i u_i = sum b_j w_j
        let k = self.dim();
        let m = Matrix::from_fn(self.ambient, k + other.dim(), |r, c| {
            if c < k {
                self.basis[c][r].clone()
            } else {
                other.basis[c - k][r].neg_ref()
            }
        });
        let ker = super::kernel(&m);
        Subspace::from_vectors(
            self.ambient,
            ker.basis().iter().map(|coef| {
                let mut v = vec![QSqrt2::zero(); self.ambient];
                for (c, u) in coef[..k].iter().zip(&self.basis) {
                    for (x, y) in v.iter_mut().zip(u) {
                        x.mul_add_assign(c, y);
                    }
                }
                v
            }),
        )
    }

    /// Image of the subspace under a linear map.
    pub fn image(&self, m: &Matrix<QSqrt2>) -> Subspace {
        Subspace::from_vectors(m.rows(), self.basis.iter().map(|v| m.mul_vec(v)))
    }

    /// Greedy complement of `self` inside `outer`: basis vectors of
    /// `outer` that are not yet spanned, taken in RREF order.
    pub fn complement_in(&self, outer: &Subspace) -> Vec<Vector<QSqrt2>> {
        let mut acc = self.clone();
        let mut out = Vec::new();
        for v in outer.basis() {
            if acc.insert(v.clone()) {
                out.push(v.clone());
            }
        }
        out
    }
}

impl fmt::Display for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "span of {} vector(s) in dimension {}",
            self.dim(),
            self.ambient
        )?;
        for v in &self.basis {
            let parts: Vec<String> = v.iter().map(ToString::to_string).collect();
            write!(f, "\n  ({})", parts.join(", "))?;
        }
        Ok(())
    }
}

use std::collections::BTreeMap;

use super::{Connection, MetricLieAlgebra};
use crate::error::Result;
use crate::liealg::LieAlgebraData;
use crate::linalg::{bilinear, commutator, span_close_under, unit, Matrix, Subspace};
use crate::scalars::{QSqrt2, Ring};

/// `R_ij = R(e_i, e_j)` for `i < j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CurvatureTensor<T> {
    dim: usize,
    r: BTreeMap<(usize, usize), Matrix<T>>,
}

impl<T: Ring> CurvatureTensor<T> {
    pub fn from_pairs(dim: usize, r: BTreeMap<(usize, usize), Matrix<T>>) -> Self {
        assert!(r.keys().all(|&(i, j)| i < j && j < dim));
        CurvatureTensor { dim, r }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// `R(e_i, e_j)` for any order.
    pub fn get(&self, i: usize, j: usize) -> Matrix<T> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => Matrix::zeros(self.dim, self.dim),
            Less => self
                .r
                .get(&(i, j))
                .cloned()
                .unwrap_or_else(|| Matrix::zeros(self.dim, self.dim)),
            Greater => self.get(j, i).neg(),
        }
    }

    /// `R(x, y)` for vectors.
    pub fn eval(&self, x: &[T], y: &[T]) -> Matrix<T> {
        let n = self.dim;
        let mut out = Matrix::zeros(n, n);
        for i in 0..n {
            for j in i + 1..n {
                let c = x[i].mul_ref(&y[j]).sub_ref(&x[j].mul_ref(&y[i]));
                if c.is_zero() {
                    continue;
                }
                out = out.add(&self.get(i, j).scale_by(&c));
            }
        }
        out
    }

    pub fn pairs(&self) -> impl Iterator<Item = ((usize, usize), &Matrix<T>)> {
        self.r.iter().map(|(k, v)| (*k, v))
    }

    pub fn is_zero(&self) -> bool {
        self.r.values().all(Matrix::is_zero)
    }

    /// Triples `i < j < k` where `R_ij e_k + R_jk e_i + R_ki e_j != 0`.
    pub fn first_bianchi_defects(&self) -> Vec<(usize, usize, usize)> {
        let n = self.dim;
        let mut out = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    let s: Vec<T> = (0..n)
                        .map(|r| {
                            self.get(i, j)[(r, k)]
                                .add_ref(&self.get(j, k)[(r, i)])
                                .add_ref(&self.get(k, i)[(r, j)])
                        })
                        .collect();
                    if s.iter().any(|x| !x.is_zero()) {
                        out.push((i, j, k));
                    }
                }
            }
        }
        out
    }
}

impl CurvatureTensor<QSqrt2> {
    /// `span{R_ij}`.
    pub fn span(&self) -> Subspace {
        Subspace::from_vectors(
            self.dim * self.dim,
            self.r.values().map(|m| m.as_flat().to_vec()),
        )
    }
}

/// `R(X,Y) = [Λ(X), Λ(Y)] - Λ([X,Y])` for any brackets and connection.
pub fn curvature_of<T: Ring>(lie: &LieAlgebraData<T>, c: &Connection<T>) -> CurvatureTensor<T> {
    let n = lie.dim();
    let mut r = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            let rij = c
                .lambda(i)
                .commutator(c.lambda(j))
                .sub(&c.at(&lie.bracket_basis(i, j)));
            r.insert((i, j), rij);
        }
    }
    CurvatureTensor { dim: n, r }
}

pub fn curvature(m: &MetricLieAlgebra, c: &Connection<QSqrt2>) -> CurvatureTensor<QSqrt2> {
    curvature_of(m.lie(), c)
}

/// `B_ijk = sum over cyclic (i,j,k) of R(Λ_i e_j, e_k) + R(e_j, Λ_i e_k) - [Λ_i, R_jk]`
/// for `i < j < k`. Each term is `-(∇_i R)(e_j, e_k)`.
pub fn second_bianchi_of<T: Ring>(
    c: &Connection<T>,
    r: &CurvatureTensor<T>,
) -> BTreeMap<(usize, usize, usize), Matrix<T>> {
    let n = c.dim();
    let e = |m| unit::<T>(n, m);
    let term = |i: usize, j: usize, k: usize| {
        let l = c.lambda(i);
        r.eval(&l.column(j), &e(k))
            .add(&r.eval(&e(j), &l.column(k)))
            .sub(&l.commutator(&r.get(j, k)))
    };
    let mut out = BTreeMap::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                let b = term(i, j, k).add(&term(j, k, i)).add(&term(k, i, j));
                out.insert((i, j, k), b);
            }
        }
    }
    out
}

pub fn second_bianchi(
    _m: &MetricLieAlgebra,
    c: &Connection<QSqrt2>,
    r: &CurvatureTensor<QSqrt2>,
) -> BTreeMap<(usize, usize, usize), Matrix<QSqrt2>> {
    second_bianchi_of(c, r)
}

/// Closure of `span{R_ij}` under brackets with every `Λ_k`.
pub fn holonomy(m: &MetricLieAlgebra, c: &Connection<QSqrt2>) -> Result<Subspace> {
    let r = curvature(m, c);
    let seeds: Vec<Matrix<QSqrt2>> = r.pairs().map(|(_, x)| x.clone()).collect();
    let n = m.dim();
    if seeds.is_empty() {
        return Ok(Subspace::zero(n * n));
    }
    span_close_under(&seeds, c.maps(), commutator)
}

/// Index quadruples (0-based) where `<R_ij e_k, e_l> != <R_kl e_i, e_j>`.
pub fn pair_symmetry_defects(
    gram: &Matrix<QSqrt2>,
    r: &CurvatureTensor<QSqrt2>,
) -> Vec<(usize, usize, usize, usize)> {
    let n = r.dim();
    let e = |m| unit::<QSqrt2>(n, m);
    let mut out = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let rij = r.get(i, j);
            for k in 0..n {
                for l in 0..n {
                    let lhs = bilinear(gram, &rij.column(k), &e(l));
                    let rhs = bilinear(gram, &r.get(k, l).column(i), &e(j));
                    if lhs != rhs {
                        out.push((i, j, k, l));
                    }
                }
            }
        }
    }
    out
}

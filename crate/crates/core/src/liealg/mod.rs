//! Lie algebras given by structure constants.
//!
//! Basis indices are 0-based in the API; printed reports and the JSON file
//! format use 1-based indices `e1..en`.

mod io;
mod structure;

use std::fmt;

use crate::linalg::{Matrix, Vector};
use crate::scalars::Ring;

pub use structure::{is_ideal, is_lie_homomorphism};

/// Structure constants `[e_i, e_j] = sum_k c_ij^k e_k`, stored for `i < j`.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LieAlgebraData<T> {
    dim: usize,
    labels: Vec<String>,
    /// `pairs[pair_index(i, j)]` holds the bracket of `e_i, e_j` for `i < j`.
    pairs: Vec<Vector<T>>,
}

fn pair_index(n: usize, i: usize, j: usize) -> usize {
    debug_assert!(i < j && j < n);
    i * (2 * n - i - 1) / 2 + (j - i - 1)
}

impl<T: Ring> LieAlgebraData<T> {
    /// Abelian algebra of dimension `n`.
    pub fn abelian(n: usize) -> Self {
        LieAlgebraData {
            dim: n,
            labels: (1..=n).map(|i| format!("e{i}")).collect(),
            pairs: vec![vec![T::zero(); n]; n * n.saturating_sub(1) / 2],
        }
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.dim);
        self.labels = labels;
        self
    }

    /// Sets `[e_i, e_j]`; the opposite order is implied by antisymmetry.
    pub fn set_bracket(&mut self, i: usize, j: usize, value: Vector<T>) {
        assert_eq!(value.len(), self.dim, "bracket value length");
        assert_ne!(i, j, "[e_i, e_i] is always zero");
        if i < j {
            let p = pair_index(self.dim, i, j);
            self.pairs[p] = value;
        } else {
            let p = pair_index(self.dim, j, i);
            self.pairs[p] = value.iter().map(Ring::neg_ref).collect();
        }
    }

    /// Builder form of `set_bracket` taking sparse `(k, c)` terms.
    pub fn with_bracket(mut self, i: usize, j: usize, terms: &[(usize, T)]) -> Self {
        let mut v = vec![T::zero(); self.dim];
        for (k, c) in terms {
            v[*k] = v[*k].add_ref(c);
        }
        self.set_bracket(i, j, v);
        self
    }

    /// `[e_i, e_j]` as a coordinate vector.
    pub fn bracket_basis(&self, i: usize, j: usize) -> Vector<T> {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => vec![T::zero(); self.dim],
            Less => self.pairs[pair_index(self.dim, i, j)].clone(),
            Greater => self.pairs[pair_index(self.dim, j, i)]
                .iter()
                .map(Ring::neg_ref)
                .collect(),
        }
    }

    /// `c_ij^k`.
    pub fn constant(&self, i: usize, j: usize, k: usize) -> T {
        use std::cmp::Ordering::*;
        match i.cmp(&j) {
            Equal => T::zero(),
            Less => self.pairs[pair_index(self.dim, i, j)][k].clone(),
            Greater => self.pairs[pair_index(self.dim, j, i)][k].neg_ref(),
        }
    }

    pub fn bracket(&self, x: &[T], y: &[T]) -> Vector<T> {
        let n = self.dim;
        assert_eq!((x.len(), y.len()), (n, n), "bracket operand length");
        let mut out = vec![T::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if i == j || y[j].is_zero() {
                    continue;
                }
                let xy = x[i].mul_ref(&y[j]);
                let (row, sign) = if i < j {
                    (&self.pairs[pair_index(n, i, j)], false)
                } else {
                    (&self.pairs[pair_index(n, j, i)], true)
                };
                for (o, c) in out.iter_mut().zip(row) {
                    if c.is_zero() {
                        continue;
                    }
                    let t = xy.mul_ref(c);
                    if sign {
                        o.sub_assign_ref(&t);
                    } else {
                        o.add_assign_ref(&t);
                    }
                }
            }
        }
        out
    }

    /// Matrix of `ad(x) = [x, .]`; column `j` is `[x, e_j]`.
    pub fn ad(&self, x: &[T]) -> Matrix<T> {
        let n = self.dim;
        let cols: Vec<Vector<T>> = (0..n)
            .map(|j| self.bracket(x, &crate::linalg::unit(n, j)))
            .collect();
        Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
    }

    pub fn ad_basis(&self, i: usize) -> Matrix<T> {
        self.ad(&crate::linalg::unit(self.dim, i))
    }

    /// `J(e_i,e_j,e_k) = [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]`.
    pub fn jacobiator(&self, i: usize, j: usize, k: usize) -> Vector<T> {
        let n = self.dim;
        let e = |m| crate::linalg::unit::<T>(n, m);
        let a = self.bracket(&self.bracket_basis(i, j), &e(k));
        let b = self.bracket(&self.bracket_basis(j, k), &e(i));
        let c = self.bracket(&self.bracket_basis(k, i), &e(j));
        a.iter()
            .zip(&b)
            .zip(&c)
            .map(|((x, y), z)| x.add_ref(y).add_ref(z))
            .collect()
    }

    /// Evaluates every triple `i < j < k`.
    pub fn jacobi_check(&self) -> JacobiReport<T> {
        let n = self.dim;
        let mut violations = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                for k in j + 1..n {
                    for (l, r) in self.jacobiator(i, j, k).into_iter().enumerate() {
                        if !r.is_zero() {
                            violations.push(JacobiViolation {
                                i,
                                j,
                                k,
                                l,
                                residual: r,
                            });
                        }
                    }
                }
            }
        }
        JacobiReport { violations }
    }

    pub fn map_scalars<U: Ring>(&self, mut f: impl FnMut(&T) -> U) -> LieAlgebraData<U> {
        LieAlgebraData {
            dim: self.dim,
            labels: self.labels.clone(),
            pairs: self
                .pairs
                .iter()
                .map(|v| v.iter().map(&mut f).collect())
                .collect(),
        }
    }

    /// Structure constants in the basis given by the columns of `p`,
    /// which must be invertible with inverse `p_inv`.
    pub fn change_basis(&self, p: &Matrix<T>, p_inv: &Matrix<T>) -> Self {
        let n = self.dim;
        let cols: Vec<Vector<T>> = (0..n).map(|c| p.column(c)).collect();
        let mut out = Self::abelian(n);
        for i in 0..n {
            for j in i + 1..n {
                let b = self.bracket(&cols[i], &cols[j]);
                out.set_bracket(i, j, p_inv.mul_vec(&b));
            }
        }
        out.labels = self.labels.clone();
        out
    }

    /// Nonzero brackets `(i, j, [e_i, e_j])` with `i < j`.
    pub fn nonzero_brackets(&self) -> impl Iterator<Item = (usize, usize, &Vector<T>)> {
        let n = self.dim;
        (0..n)
            .flat_map(move |i| (i + 1..n).map(move |j| (i, j)))
            .map(move |(i, j)| (i, j, &self.pairs[pair_index(n, i, j)]))
            .filter(|(_, _, v)| v.iter().any(|c| !c.is_zero()))
    }
}

/// One nonzero component of a Jacobiator, 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiViolation<T> {
    pub i: usize,
    pub j: usize,
    pub k: usize,
    pub l: usize,
    pub residual: T,
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct JacobiReport<T> {
    pub violations: Vec<JacobiViolation<T>>,
}

impl<T> JacobiReport<T> {
    pub fn holds(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn first(&self) -> Option<&JacobiViolation<T>> {
        self.violations.first()
    }
}

impl<T: fmt::Display> fmt::Display for JacobiViolation<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "J(e{},e{},e{}) has e{}-component {}",
            self.i + 1,
            self.j + 1,
            self.k + 1,
            self.l + 1,
            self.residual
        )
    }
}

/// Brackets print one per line as `[e_i, e_j] = ...` with 1-based labels.
impl<T: Ring> fmt::Display for LieAlgebraData<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (i, j, v) in self.nonzero_brackets() {
            if !first {
                f.write_str("\n")?;
            }
            first = false;
            write!(
                f,
                "[{}, {}] = {}",
                self.labels[i],
                self.labels[j],
                self.format_vector(v)
            )?;
        }
        Ok(())
    }
}

impl<T: Ring> LieAlgebraData<T> {
    /// `c1*e1 + c2*e2 ...` using the basis labels.
    pub fn format_vector(&self, v: &[T]) -> String {
        format_vector(v, &self.labels)
    }
}

pub(crate) fn format_vector<T: Ring>(v: &[T], labels: &[String]) -> String {
    let parts: Vec<String> = v
        .iter()
        .zip(labels)
        .filter(|(c, _)| !c.is_zero())
        .map(|(c, l)| {
            if *c == T::one() {
                l.clone()
            } else {
                format!("({c})*{l}")
            }
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::QSqrt2;

    #[test]
    fn pair_indexing_is_dense() {
        let n = 7;
        let mut seen = Vec::new();
        for i in 0..n {
            for j in i + 1..n {
                seen.push(pair_index(n, i, j));
            }
        }
        assert_eq!(seen, (0..21).collect::<Vec<_>>());
    }

    #[test]
    fn heisenberg_brackets() {
        let h = LieAlgebraData::<QSqrt2>::abelian(3).with_bracket(0, 1, &[(2, QSqrt2::one())]);
        assert_eq!(
            h.bracket_basis(1, 0),
            vec![QSqrt2::zero(), QSqrt2::zero(), QSqrt2::from_int(-1)]
        );
        assert!(h.jacobi_check().holds());
        assert_eq!(h.to_string(), "[e1, e2] = e3");
    }
}

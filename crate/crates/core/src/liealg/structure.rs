use super::LieAlgebraData;
use crate::error::{Error, Result};
use crate::linalg::{is_zero_vec, kernel, solve, unit, Matrix, Subspace, Vector};
use crate::scalars::{QSqrt2, Ring};

impl LieAlgebraData<QSqrt2> {
    /// `{x : [x, e_j] = 0 for all j}`.
    pub fn center(&self) -> Subspace {
        let n = self.dim();
        // row (j, l), column i: c_ij^l
        let m = Matrix::from_fn(n * n, n, |r, i| self.constant(i, r / n, r % n));
        kernel(&m)
    }

    /// `[A, B]` for subspaces `A`, `B`.
    pub fn bracket_spaces(&self, a: &Subspace, b: &Subspace) -> Subspace {
        let mut out = Subspace::zero(self.dim());
        for x in a.basis() {
            for y in b.basis() {
                out.insert(self.bracket(x, y));
            }
        }
        out
    }

    /// `g, [g,g], [[g,g],[g,g]], ...` until two consecutive terms agree;
    /// the stable term is listed once.
    pub fn derived_series(&self) -> Vec<Subspace> {
        let mut series = vec![Subspace::full(self.dim())];
        loop {
            let last = series.last().expect("nonempty");
            let next = self.bracket_spaces(last, last);
            if &next == last {
                return series;
            }
            series.push(next);
        }
    }

    /// Smallest bracket-closed subspace containing `seeds`.
    pub fn subalgebra_generated(&self, seeds: &[Vector<QSqrt2>]) -> Subspace {
        let n = self.dim();
        let mut space = Subspace::zero(n);
        let mut frontier: Vec<Vector<QSqrt2>> = Vec::new();
        for s in seeds {
            if space.insert(s.clone()) {
                frontier.push(s.clone());
            }
        }
        // right-normed words [s, [s', [...]]] span the generated subalgebra
        while !frontier.is_empty() {
            let mut next = Vec::new();
            for x in &frontier {
                for s in seeds {
                    let y = self.bracket(s, x);
                    if space.insert(y.clone()) {
                        next.push(y);
                    }
                }
            }
            frontier = next;
        }
        space
    }

    /// `[g, s] ⊆ s`.
    pub fn is_ideal(&self, s: &Subspace) -> bool {
        is_ideal(self, s)
    }

    /// Matrix of `ad(actor)` on `inside / sub`, in the basis of `inside`
    /// vectors returned by [`Subspace::complement_in`].
    pub fn quotient_module(
        &self,
        sub: &Subspace,
        inside: &Subspace,
        actor: &[QSqrt2],
    ) -> Result<Matrix<QSqrt2>> {
        for s in sub.basis() {
            if !inside.contains(s) {
                return Err(Error::Input(format!(
                    "quotient: {} is not inside the ambient subspace",
                    self.format_vector(s)
                )));
            }
            let img = self.bracket(actor, s);
            if !sub.contains(&img) {
                return Err(Error::InvarianceViolation {
                    witness: self.format_vector(s),
                });
            }
        }
        let comp = sub.complement_in(inside);
        let m = comp.len();
        let n = self.dim();
        let mut cols: Vec<Vector<QSqrt2>> = comp.clone();
        cols.extend(sub.basis().iter().cloned());
        let basis = Matrix::from_fn(n, cols.len(), |r, c| cols[c][r].clone());
        let mut out = Matrix::zeros(m, m);
        for (j, c) in comp.iter().enumerate() {
            let img = self.bracket(actor, c);
            let coords = solve(&basis, &img).ok_or_else(|| Error::InvarianceViolation {
                witness: self.format_vector(c),
            })?;
            for i in 0..m {
                out[(i, j)] = coords[i].clone();
            }
        }
        Ok(out)
    }
}

pub fn is_ideal(g: &LieAlgebraData<QSqrt2>, s: &Subspace) -> bool {
    let n = g.dim();
    s.basis()
        .iter()
        .all(|x| (0..n).all(|i| s.contains(&g.bracket(&unit(n, i), x))))
}

/// `phi [e_i, e_j] = [phi e_i, phi e_j]` for all basis pairs, with `phi`
/// given by its columns.
pub fn is_lie_homomorphism(
    phi: &Matrix<QSqrt2>,
    source: &LieAlgebraData<QSqrt2>,
    target: &LieAlgebraData<QSqrt2>,
) -> bool {
    let n = source.dim();
    for i in 0..n {
        for j in i + 1..n {
            let lhs = phi.mul_vec(&source.bracket_basis(i, j));
            let rhs = target.bracket(&phi.column(i), &phi.column(j));
            let diff: Vec<QSqrt2> = lhs.iter().zip(&rhs).map(|(a, b)| a.sub_ref(b)).collect();
            if !is_zero_vec(&diff) {
                return false;
            }
        }
    }
    true
}

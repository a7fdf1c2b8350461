use crate::error::{Error, Result};
use crate::liealg::LieAlgebraData;
use crate::linalg::{bilinear, inverse, unit, Matrix, Vector};
use crate::scalars::{QSqrt2, Ring};

/// Lie algebra with a nondegenerate symmetric bilinear form.
#[derive(Clone, Debug, PartialEq)]
pub struct MetricLieAlgebra {
    lie: LieAlgebraData<QSqrt2>,
    gram: Matrix<QSqrt2>,
    gram_inv: Matrix<QSqrt2>,
    time_direction: Option<usize>,
}

impl MetricLieAlgebra {
    /// Rejects non-square, asymmetric or degenerate forms and brackets
    /// that violate the Jacobi identity.
    pub fn new(lie: LieAlgebraData<QSqrt2>, gram: Matrix<QSqrt2>) -> Result<Self> {
        let n = lie.dim();
        if gram.rows() != n || gram.cols() != n {
            return Err(Error::DimensionMismatch {
                expected: n,
                found: gram.rows(),
            });
        }
        if gram != gram.transpose() {
            return Err(Error::Input("gram matrix is not symmetric".into()));
        }
        let gram_inv = inverse(&gram).map_err(|_| Error::DegenerateMetric)?;
        if let Some(v) = lie.jacobi_check().first() {
            return Err(Error::JacobiViolation {
                i: v.i + 1,
                j: v.j + 1,
                k: v.k + 1,
                l: v.l + 1,
                residual: v.residual.to_string(),
            });
        }
        Ok(MetricLieAlgebra {
            lie,
            gram,
            gram_inv,
            time_direction: None,
        })
    }

    /// Declares the basis vector (0-based) that acts as `d/dt` on
    /// functions of the `R` factor of `R ⋉ N`.
    pub fn with_time_direction(mut self, index: usize) -> Self {
        assert!(index < self.dim());
        self.time_direction = Some(index);
        self
    }

    pub fn time_direction(&self) -> Option<usize> {
        self.time_direction
    }

    pub fn lie(&self) -> &LieAlgebraData<QSqrt2> {
        &self.lie
    }

    pub fn gram(&self) -> &Matrix<QSqrt2> {
        &self.gram
    }

    pub fn dim(&self) -> usize {
        self.lie.dim()
    }

    pub fn inner(&self, x: &[QSqrt2], y: &[QSqrt2]) -> QSqrt2 {
        bilinear(&self.gram, x, y)
    }
}

/// The maps `Λ_i = Λ(e_i)`; `Λ_i e_j` is column `j` of `maps[i]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Connection<T> {
    maps: Vec<Matrix<T>>,
}

impl<T: Ring> Connection<T> {
    pub fn new(maps: Vec<Matrix<T>>) -> Self {
        let n = maps.len();
        assert!(
            maps.iter().all(|m| m.rows() == n && m.cols() == n),
            "n maps of size n x n"
        );
        Connection { maps }
    }

    pub fn dim(&self) -> usize {
        self.maps.len()
    }

    pub fn lambda(&self, i: usize) -> &Matrix<T> {
        &self.maps[i]
    }

    pub fn maps(&self) -> &[Matrix<T>] {
        &self.maps
    }

    pub fn maps_mut(&mut self) -> &mut [Matrix<T>] {
        &mut self.maps
    }

    /// `Λ(x) = sum_k x_k Λ_k`.
    pub fn at(&self, x: &[T]) -> Matrix<T> {
        Matrix::combination(x, &self.maps)
    }

    /// Brackets determined by torsion-freeness: `[e_i, e_j] = Λ_i e_j - Λ_j e_i`.
    pub fn induced_bracket(&self) -> LieAlgebraData<T> {
        let n = self.dim();
        let mut g = LieAlgebraData::abelian(n);
        for i in 0..n {
            for j in i + 1..n {
                let v: Vector<T> = self.maps[i]
                    .column(j)
                    .iter()
                    .zip(self.maps[j].column(i))
                    .map(|(a, b)| a.sub_ref(&b))
                    .collect();
                g.set_bracket(i, j, v);
            }
        }
        g
    }

    pub fn is_metric(&self, gram: &Matrix<T>) -> bool {
        self.maps
            .iter()
            .all(|l| crate::g2core::metric_defect(l, gram).is_zero())
    }

    pub fn is_torsion_free(&self, lie: &LieAlgebraData<T>) -> bool {
        let ind = self.induced_bracket();
        let n = self.dim();
        lie.dim() == n
            && (0..n)
                .all(|i| (i + 1..n).all(|j| ind.bracket_basis(i, j) == lie.bracket_basis(i, j)))
    }
}

/// Koszul formula on left-invariant fields:
/// `2<Λ_x y, z> = <[x,y],z> - <[y,z],x> + <[z,x],y>`.
pub fn levi_civita(m: &MetricLieAlgebra) -> Connection<QSqrt2> {
    let n = m.dim();
    let g = &m.lie;
    let half = QSqrt2::frac(1, 2);
    let e = |i| unit::<QSqrt2>(n, i);
    let maps = (0..n)
        .map(|i| {
            let cols: Vec<Vector<QSqrt2>> = (0..n)
                .map(|j| {
                    let b: Vector<QSqrt2> = (0..n)
                        .map(|k| {
                            let t1 = m.inner(&g.bracket_basis(i, j), &e(k));
                            let t2 = m.inner(&g.bracket_basis(j, k), &e(i));
                            let t3 = m.inner(&g.bracket_basis(k, i), &e(j));
                            t1.sub_ref(&t2).add_ref(&t3).mul_ref(&half)
                        })
                        .collect();
                    m.gram_inv.mul_vec(&b)
                })
                .collect();
            Matrix::from_fn(n, n, |r, c| cols[c][r].clone())
        })
        .collect();
    Connection { maps }
}

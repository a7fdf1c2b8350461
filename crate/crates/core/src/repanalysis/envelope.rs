use crate::error::{Error, Result};
use crate::g2core::metric_defect;
use crate::linalg::{kernel, left_product, span_close_under, Matrix, Subspace};
use crate::scalars::QSqrt2;

/// A Lie algebra of metric-skew `n x n` matrices given by a spanning set.
#[derive(Clone, Debug, PartialEq)]
pub struct Representation {
    generators: Vec<Matrix<QSqrt2>>,
    gram: Matrix<QSqrt2>,
}

impl Representation {
    pub fn new(generators: Vec<Matrix<QSqrt2>>, gram: Matrix<QSqrt2>) -> Result<Self> {
        let n = gram.rows();
        for (k, g) in generators.iter().enumerate() {
            if (g.rows(), g.cols()) != (n, n) {
                return Err(Error::DimensionMismatch {
                    expected: n,
                    found: g.rows(),
                });
            }
            if !metric_defect(g, &gram).is_zero() {
                return Err(Error::Input(format!(
                    "generator {} is not metric-skew",
                    k + 1
                )));
            }
        }
        Ok(Representation { generators, gram })
    }

    /// Basis of a subspace of flattened `n x n` matrices.
    pub fn from_subspace(h: &Subspace, gram: Matrix<QSqrt2>) -> Result<Self> {
        let n = gram.rows();
        if h.ambient() != n * n {
            return Err(Error::DimensionMismatch {
                expected: n * n,
                found: h.ambient(),
            });
        }
        Self::new(h.basis_matrices(n), gram)
    }

    pub fn dim(&self) -> usize {
        self.gram.rows()
    }

    pub fn generators(&self) -> &[Matrix<QSqrt2>] {
        &self.generators
    }

    pub fn gram(&self) -> &Matrix<QSqrt2> {
        &self.gram
    }
}

/// Smallest unital matrix algebra containing the generators.
pub fn assoc_envelope(r: &Representation) -> Subspace {
    let n = r.dim();
    let mut seeds = vec![Matrix::identity(n)];
    seeds.extend(r.generators.iter().cloned());
    span_close_under(&seeds, &r.generators, left_product)
        .expect("an associative closure is bounded by n^2")
}

/// Jacobson radical of a unital matrix algebra in characteristic zero:
/// `{x in A : tr(xy) = 0 for all y in A}`.
pub fn radical(envelope: &Subspace) -> Subspace {
    let n = (envelope.ambient() as f64).sqrt() as usize;
    assert_eq!(n * n, envelope.ambient(), "square matrices");
    let b = envelope.basis_matrices(n);
    let d = b.len();
    let pairing = Matrix::from_fn(d, d, |i, j| b[i].matmul(&b[j]).trace());
    let coeffs = kernel(&pairing);
    Subspace::from_vectors(
        n * n,
        coeffs
            .basis()
            .iter()
            .map(|c| Matrix::combination(c, &b).into_flat()),
    )
}

/// Vectors killed by the radical of the envelope; this is the socle of
/// the module.
pub fn socle(r: &Representation) -> Subspace {
    let n = r.dim();
    let rad = radical(&assoc_envelope(r));
    let rows: Vec<Vec<QSqrt2>> = rad
        .basis_matrices(n)
        .iter()
        .flat_map(|m| (0..n).map(|i| m.row(i).to_vec()).collect::<Vec<_>>())
        .collect();
    if rows.is_empty() {
        return Subspace::full(n);
    }
    kernel(&Matrix::from_rows(rows))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::g2core::{family, g2_generators, standard_gram, FamilyName};

    fn rep(name: FamilyName) -> Representation {
        Representation::from_subspace(family(name), standard_gram()).unwrap()
    }

    #[test]
    fn zero_representation() {
        let r = Representation::new(vec![], standard_gram()).unwrap();
        let env = assoc_envelope(&r);
        assert_eq!(
            env,
            Subspace::from_vectors(49, [Matrix::<QSqrt2>::identity(7).into_flat()])
        );
        assert!(radical(&env).is_zero());
        assert!(socle(&r).is_full());
    }

    #[test]
    fn full_g2_is_irreducible() {
        let r = Representation::new(g2_generators(), standard_gram()).unwrap();
        let env = assoc_envelope(&r);
        assert_eq!(env.dim(), 49);
        assert!(radical(&env).is_zero());
        assert!(socle(&r).is_full());
    }

    #[test]
    fn abelian_radical_contains_generators() {
        let r = rep(FamilyName::M102);
        let env = assoc_envelope(&r);
        let rad = radical(&env);
        assert_eq!(env.dim(), rad.dim() + 1);
        for g in r.generators() {
            assert!(rad.contains_matrix(g));
        }
        // two-sided ideal, nilpotent of index at most 7
        let e = env.basis_matrices(7);
        let nb = rad.basis_matrices(7);
        for x in &e {
            for y in &nb {
                assert!(rad.contains_matrix(&x.matmul(y)));
                assert!(rad.contains_matrix(&y.matmul(x)));
            }
        }
        for y in &nb {
            assert!(y.pow(7).is_zero());
        }
    }

    #[test]
    fn non_skew_generator_is_rejected() {
        assert!(Representation::new(vec![Matrix::identity(7)], standard_gram()).is_err());
    }
}

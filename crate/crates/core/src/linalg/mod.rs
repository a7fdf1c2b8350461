//! Dense exact linear algebra. Elimination, kernels and spectra work over
//! `QSqrt2`; `Matrix` itself is generic so polynomial and Laurent entries
//! can be multiplied and compared.

mod eigen;
mod elim;
mod matrix;
mod signature;
mod span;
mod subspace;

pub use eigen::{char_poly, eigenlines, Spectrum, UniPoly};
pub use elim::{determinant, inverse, kernel, rank, rref, solve, Rref};
pub use matrix::{bilinear, dot, is_zero_vec, unit, vec_add, vec_scale, vec_sub, Matrix, Vector};
pub use signature::{gram_signature, Signature};
pub use span::{commutator, left_product, span_close, span_close_under, Product};
pub use subspace::Subspace;

#[cfg(test)]
mod proptests {
    use super::*;
    use crate::scalars::{rational, QSqrt2, Ring};
    use proptest::prelude::*;

    fn entry() -> impl Strategy<Value = QSqrt2> {
        prop_oneof![
            3 => Just((0i64, 0i64)),
            4 => (-3i64..4, 0i64..1),
            2 => (-3i64..4, -2i64..3),
        ]
        .prop_map(|(a, b)| QSqrt2::new(rational(a, 1), rational(b, 2)))
    }

    fn matrix(rows: usize, cols: usize) -> impl Strategy<Value = Matrix<QSqrt2>> {
        proptest::collection::vec(entry(), rows * cols)
            .prop_map(move |d| Matrix::from_flat(rows, cols, d))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn rank_plus_nullity(m in (1usize..6, 1usize..7).prop_flat_map(|(r, c)| matrix(r, c))) {
            let k = kernel(&m);
            prop_assert_eq!(rank(&m) + k.dim(), m.cols());
            for v in k.basis() {
                prop_assert!(is_zero_vec(&m.mul_vec(v)));
            }
        }

        #[test]
        fn subspace_equality_is_canonical(m in matrix(4, 5), s in matrix(4, 4)) {
            // rows of s*m span a subspace of the row space, equal when s is invertible
            let rows = |x: &Matrix<QSqrt2>| Subspace::from_vectors(5, (0..x.rows()).map(|r| x.row(r).to_vec()));
            let a = rows(&m);
            let b = rows(&s.matmul(&m));
            prop_assert!(a.contains_subspace(&b));
            if !determinant(&s).is_zero() {
                prop_assert_eq!(a, b);
            }
        }

        #[test]
        fn signature_is_congruence_invariant(g in matrix(5, 5), s in matrix(5, 5)) {
            let sym = g.add(&g.transpose());
            if !determinant(&s).is_zero() {
                let moved = s.transpose().matmul(&sym).matmul(&s);
                prop_assert_eq!(gram_signature(&moved), gram_signature(&sym));
            }
        }

        #[test]
        fn span_close_is_closed(a in matrix(3, 3), b in matrix(3, 3)) {
            let gens = [a, b];
            let s = span_close(&gens, commutator).unwrap();
            for x in s.basis_matrices(3) {
                for g in &gens {
                    prop_assert!(s.contains_matrix(&g.commutator(&x)));
                }
            }
        }

        #[test]
        fn eigenpairs_are_eigenpairs(m in matrix(4, 4)) {
            let spec = eigenlines(&m);
            let mut total = 0;
            for (l, space) in &spec.eigenpairs {
                prop_assert!(spec.char_poly.eval(l).is_zero());
                for v in space.basis() {
                    prop_assert_eq!(m.mul_vec(v), vec_scale(v, l));
                }
                total += 1;
            }
            prop_assert!(total <= 4);
        }
    }
}

//! Inputs shared by the benchmarks.

use g2star_core::atlas::g_eps;
use g2star_core::geometry::MetricLieAlgebra;
use g2star_core::linalg::{Matrix, Subspace};
use g2star_core::{QSqrt2, Ring};

pub fn example_algebra(eps: i64) -> MetricLieAlgebra {
    g_eps(&QSqrt2::from_int(eps)).algebra
}

/// Dense integer matrix with a few surds, full rank for `n <= 12`.
pub fn dense_matrix(n: usize) -> Matrix<QSqrt2> {
    Matrix::from_fn(n, n, |r, c| {
        let x = ((r * 7 + c * 3 + 1) % 11) as i64 - 5;
        if r == c {
            QSqrt2::from_int(x + 13)
        } else if (r + c) % 4 == 0 {
            QSqrt2::from_int(x).add_ref(&QSqrt2::sqrt2())
        } else {
            QSqrt2::from_int(x)
        }
    })
}

pub fn span_of(mats: &[Matrix<QSqrt2>]) -> Subspace {
    Subspace::from_vectors(49, mats.iter().map(|m| m.as_flat().to_vec()))
}

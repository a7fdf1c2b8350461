use std::collections::BTreeMap;

use crate::geometry::CurvatureTensor;
use crate::linalg::{kernel, Matrix, Subspace};
use crate::scalars::{QSqrt2, Ring};

/// Formal curvature tensors with values in `h`: skew bilinear maps
/// `R : V x V -> h` with `R(x,y)z + R(y,z)x + R(z,x)y = 0`.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureSpace {
    pub h_basis: Vec<Matrix<QSqrt2>>,
    /// Coefficients of `R_ij` on `h_basis`, pair-major over `i < j`.
    pub coordinates: Subspace,
    pub basis: Vec<CurvatureTensor<QSqrt2>>,
}

impl CurvatureSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

fn pairs(n: usize) -> Vec<(usize, usize)> {
    (0..n)
        .flat_map(|i| (i + 1..n).map(move |j| (i, j)))
        .collect()
}

/// `h` is a subspace of flattened `n x n` matrices.
pub fn curvature_space(h: &Subspace) -> CurvatureSpace {
    let n = (h.ambient() as f64).sqrt() as usize;
    assert_eq!(n * n, h.ambient(), "square matrices");
    let hb = h.basis_matrices(n);
    let d = hb.len();
    let pr = pairs(n);
    let pidx: BTreeMap<(usize, usize), usize> =
        pr.iter().enumerate().map(|(p, &ij)| (ij, p)).collect();
    let unknowns = pr.len() * d;
    if unknowns == 0 {
        return CurvatureSpace {
            h_basis: hb,
            coordinates: Subspace::zero(0),
            basis: vec![],
        };
    }
    let mut rows: Vec<Vec<QSqrt2>> = Vec::new();
    for i in 0..n {
        for j in i + 1..n {
            for k in j + 1..n {
                // R_ij e_k + R_jk e_i - R_ik e_j
                let terms = [((i, j), k, 1i64), ((j, k), i, 1), ((i, k), j, -1)];
                for r in 0..n {
                    let mut row = vec![QSqrt2::zero(); unknowns];
                    for &(pair, col, sign) in &terms {
                        let p = pidx[&pair];
                        for (a, b) in hb.iter().enumerate() {
                            let entry = &b[(r, col)];
                            if !entry.is_zero() {
                                row[p * d + a] =
                                    row[p * d + a].add_ref(&entry.scale(&QSqrt2::from_int(sign)));
                            }
                        }
                    }
                    if row.iter().any(|x| !x.is_zero()) {
                        rows.push(row);
                    }
                }
            }
        }
    }
    let coordinates = if rows.is_empty() {
        Subspace::full(unknowns)
    } else {
        kernel(&Matrix::from_rows(rows))
    };
    let basis = coordinates
        .basis()
        .iter()
        .map(|c| {
            let map = pr
                .iter()
                .enumerate()
                .map(|(p, &ij)| (ij, Matrix::combination(&c[p * d..(p + 1) * d], &hb)))
                .collect();
            CurvatureTensor::from_pairs(n, map)
        })
        .collect();
    CurvatureSpace {
        h_basis: hb,
        coordinates,
        basis,
    }
}

#[derive(Clone, Debug, PartialEq)]
pub struct BergerResult {
    /// `span{R(x,y) : R in K(h)}`
    pub generated: Subspace,
    pub is_berger: bool,
}

pub fn berger_test(h: &Subspace) -> BergerResult {
    let k = curvature_space(h);
    let generated = Subspace::from_vectors(
        h.ambient(),
        k.basis.iter().flat_map(|r| {
            r.pairs()
                .map(|(_, m)| m.as_flat().to_vec())
                .collect::<Vec<_>>()
        }),
    );
    let is_berger = &generated == h;
    BergerResult {
        generated,
        is_berger,
    }
}

use super::matrix::Matrix;
use crate::scalars::{QSqrt2, Ring};

/// Inertia `(positive, negative, zero)` of a symmetric form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct Signature {
    pub positive: usize,
    pub negative: usize,
    pub zero: usize,
}

impl Signature {
    /// `(positive, negative, zero)`.
    pub fn as_tuple(self) -> (usize, usize, usize) {
        (self.positive, self.negative, self.zero)
    }

    /// `(negative, positive, zero)`, the order in which `R^{p,q}` names
    /// the split metrics here.
    pub fn negative_first(self) -> (usize, usize, usize) {
        (self.negative, self.positive, self.zero)
    }
}

/// Sylvester inertia by symmetric elimination: each step applies the same
/// row and column operation, so only congruences are used.
pub fn gram_signature(g: &Matrix<QSqrt2>) -> Signature {
    assert!(g.is_square(), "gram matrix must be square");
    debug_assert_eq!(g, &g.transpose(), "gram matrix must be symmetric");
    let n = g.rows();
    let mut a: Vec<Vec<QSqrt2>> = (0..n).map(|r| g.row(r).to_vec()).collect();
    let mut sig = Signature {
        positive: 0,
        negative: 0,
        zero: 0,
    };
    let mut live: Vec<usize> = (0..n).collect();
    while let Some(&i) = live.first() {
        if a[i][i].is_zero() {
            if let Some(&j) = live.iter().find(|&&j| !a[j][j].is_zero()) {
                swap_sym(&mut a, i, j);
            } else if let Some(&j) = live.iter().find(|&&j| !a[i][j].is_zero()) {
                // row_i += row_j and col_i += col_j; new a_ii = 2 a_ij
                add_sym(&mut a, i, j, &QSqrt2::one());
            } else {
                sig.zero += 1;
                live.remove(0);
                continue;
            }
        }
        let p = a[i][i].clone();
        match p.signum() {
            1 => sig.positive += 1,
            _ => sig.negative += 1,
        }
        let inv = p.inv().expect("nonzero pivot");
        live.remove(0);
        for &r in &live {
            if a[r][i].is_zero() {
                continue;
            }
            let f = a[r][i].mul_ref(&inv).neg_ref();
            add_sym(&mut a, r, i, &f);
        }
    }
    sig
}

fn swap_sym(a: &mut [Vec<QSqrt2>], i: usize, j: usize) {
    a.swap(i, j);
    for row in a.iter_mut() {
        row.swap(i, j);
    }
}

/// row_r += f*row_s then col_r += f*col_s.
fn add_sym(a: &mut [Vec<QSqrt2>], r: usize, s: usize, f: &QSqrt2) {
    let n = a.len();
    for c in 0..n {
        let t = a[s][c].mul_ref(f);
        a[r][c] = a[r][c].add_ref(&t);
    }
    for row in a.iter_mut() {
        let t = row[s].mul_ref(f);
        row[r] = row[r].add_ref(&t);
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn trivial_cases() {
        assert_eq!(gram_signature(&Matrix::identity(7)).as_tuple(), (7, 0, 0));
        assert_eq!(gram_signature(&Matrix::zeros(7, 7)).as_tuple(), (0, 0, 7));
    }

    #[test]
    fn hyperbolic_plane() {
        let h = Matrix::from_rows(vec![
            vec![QSqrt2::zero(), QSqrt2::one()],
            vec![QSqrt2::one(), QSqrt2::zero()],
        ]);
        assert_eq!(gram_signature(&h).as_tuple(), (1, 1, 0));
    }
}

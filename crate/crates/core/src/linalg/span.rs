use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::error::{Error, Result};
use crate::scalars::QSqrt2;

/// Bilinear product used to grow a span.
pub type Product = fn(&Matrix<QSqrt2>, &Matrix<QSqrt2>) -> Matrix<QSqrt2>;

pub fn commutator(a: &Matrix<QSqrt2>, b: &Matrix<QSqrt2>) -> Matrix<QSqrt2> {
    a.commutator(b)
}

pub fn left_product(a: &Matrix<QSqrt2>, b: &Matrix<QSqrt2>) -> Matrix<QSqrt2> {
    a.matmul(b)
}

/// Smallest subspace containing `generators` and closed under
/// `x -> product(g, x)` for every generator `g`.
///
/// For the commutator this is the subalgebra generated, since every
/// bracket word can be rewritten as a right-normed one.
pub fn span_close(generators: &[Matrix<QSqrt2>], product: Product) -> Result<Subspace> {
    span_close_under(generators, generators, product)
}

/// Closure of `span(seeds)` under `x -> product(a, x)` for all `actors`.
pub fn span_close_under(
    seeds: &[Matrix<QSqrt2>],
    actors: &[Matrix<QSqrt2>],
    product: Product,
) -> Result<Subspace> {
    let Some(first) = seeds.first().or(actors.first()) else {
        return Ok(Subspace::zero(0));
    };
    let n = first.rows();
    let ambient = n * first.cols();
    let mut space = Subspace::zero(ambient);
    let mut frontier: Vec<Matrix<QSqrt2>> = Vec::new();
    for s in seeds {
        if space.insert(s.as_flat().to_vec()) {
            frontier.push(s.clone());
        }
    }
    let cap = ambient + 1;
    for _ in 0..cap {
        if frontier.is_empty() {
            return Ok(space);
        }
        let mut next = Vec::new();
        for x in &frontier {
            for a in actors {
                let y = product(a, x);
                if space.insert(y.as_flat().to_vec()) {
                    next.push(y);
                }
            }
        }
        frontier = next;
    }
    if frontier.is_empty() {
        Ok(space)
    } else {
        Err(Error::ClosureDidNotStabilize(cap))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalars::Ring;

    #[test]
    fn zero_generator_spans_nothing() {
        let z = Matrix::<QSqrt2>::zeros(3, 3);
        assert!(span_close(&[z], commutator).unwrap().is_zero());
    }

    #[test]
    fn strictly_upper_triangular_closure() {
        let mut e12 = Matrix::<QSqrt2>::zeros(3, 3);
        e12[(0, 1)] = QSqrt2::one();
        let mut e23 = Matrix::<QSqrt2>::zeros(3, 3);
        e23[(1, 2)] = QSqrt2::one();
        let lie = span_close(&[e12.clone(), e23.clone()], commutator).unwrap();
        assert_eq!(lie.dim(), 3);
        let assoc = span_close_under(
            &[Matrix::identity(3), e12.clone(), e23.clone()],
            &[e12, e23],
            left_product,
        )
        .unwrap();
        assert_eq!(assoc.dim(), 4);
    }
}

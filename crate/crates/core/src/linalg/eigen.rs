use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::elim::kernel;
use super::matrix::Matrix;
use super::subspace::Subspace;
use crate::scalars::{QSqrt2, Rational, Ring};

/// Largest constant or leading coefficient whose divisors are enumerated
/// when searching rational roots.
const DIVISOR_SEARCH_LIMIT: u64 = 1 << 40;

/// Univariate polynomial over Q(sqrt 2), coefficients from degree 0 up.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct UniPoly {
    coeffs: Vec<QSqrt2>,
}

impl UniPoly {
    pub fn new(mut coeffs: Vec<QSqrt2>) -> Self {
        while coeffs.last().is_some_and(Ring::is_zero) {
            coeffs.pop();
        }
        UniPoly { coeffs }
    }

    pub fn coeffs(&self) -> &[QSqrt2] {
        &self.coeffs
    }

    /// Degree, with the zero polynomial reported as degree 0.
    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn eval(&self, x: &QSqrt2) -> QSqrt2 {
        let mut acc = QSqrt2::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc.mul_ref(x).add_ref(c);
        }
        acc
    }

    /// Quotient by `x - r`; the caller guarantees `r` is a root.
    fn deflate(&self, r: &QSqrt2) -> UniPoly {
        let n = self.coeffs.len();
        let mut out = vec![QSqrt2::zero(); n - 1];
        let mut carry = QSqrt2::zero();
        for k in (1..n).rev() {
            carry = carry.mul_ref(r).add_ref(&self.coeffs[k]);
            out[k - 1] = carry.clone();
        }
        UniPoly::new(out)
    }
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.coeffs.is_empty() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            let coef = if c.is_rational() || c.rational_part().is_zero() {
                c.to_string()
            } else {
                format!("({c})")
            };
            match k {
                0 => write!(f, "{coef}")?,
                1 => write!(f, "{coef}*x")?,
                _ => write!(f, "{coef}*x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Eigen-data over Q(sqrt 2).
#[derive(Clone, Debug, PartialEq)]
pub struct Spectrum {
    pub char_poly: UniPoly,
    /// Distinct eigenvalues in increasing order with their eigenspaces.
    pub eigenpairs: Vec<(QSqrt2, Subspace)>,
    /// Factor of the characteristic polynomial with no root found.
    pub unresolved: Option<UniPoly>,
}

impl Spectrum {
    pub fn eigenvalues(&self) -> Vec<QSqrt2> {
        self.eigenpairs.iter().map(|(l, _)| l.clone()).collect()
    }

    pub fn eigenspace(&self, lambda: &QSqrt2) -> Option<&Subspace> {
        self.eigenpairs
            .iter()
            .find(|(l, _)| l == lambda)
            .map(|(_, s)| s)
    }
}

/// Monic characteristic polynomial `det(x I - m)` by Faddeev-LeVerrier.
pub fn char_poly(m: &Matrix<QSqrt2>) -> UniPoly {
    assert!(m.is_square());
    let n = m.rows();
    let mut coeffs = vec![QSqrt2::zero(); n + 1];
    coeffs[n] = QSqrt2::one();
    let mut mk = Matrix::<QSqrt2>::zeros(n, n);
    let id = Matrix::<QSqrt2>::identity(n);
    for k in 1..=n {
        // M_k = m (M_{k-1} + c_{n-k+1} I)
        let shifted = mk.add(&id.scale(&coeffs[n - k + 1]));
        mk = m.matmul(&shifted);
        let c = mk.trace().neg_ref().mul_ref(&QSqrt2::frac(1, k as i64));
        coeffs[n - k] = c;
    }
    UniPoly::new(coeffs)
}

/// Eigenvalues in Q(sqrt 2) with their eigenspaces.
pub fn eigenlines(m: &Matrix<QSqrt2>) -> Spectrum {
    let cp = char_poly(m);
    let mut roots: Vec<QSqrt2> = Vec::new();
    let mut rest = cp.clone();
    while rest.degree() > 0 {
        if let Some(r) = find_root(&rest) {
            rest = rest.deflate(&r);
            if !roots.contains(&r) {
                roots.push(r);
            }
        } else {
            break;
        }
    }
    roots.sort();
    let n = m.rows();
    let eigenpairs = roots
        .into_iter()
        .map(|l| {
            let shifted = m.sub(&Matrix::identity(n).scale(&l));
            let space = kernel(&shifted);
            (l, space)
        })
        .collect();
    Spectrum {
        char_poly: cp,
        eigenpairs,
        unresolved: (rest.degree() > 0).then_some(rest),
    }
}

fn find_root(p: &UniPoly) -> Option<QSqrt2> {
    let c = p.coeffs();
    if c[0].is_zero() {
        return Some(QSqrt2::zero());
    }
    match p.degree() {
        1 => return Some(c[0].neg_ref().mul_ref(&c[1].inv().ok()?)),
        2 => return quadratic_root(c),
        _ => {}
    }
    rational_root(p)
}

/// Smaller root of `c2 x^2 + c1 x + c0` when the discriminant is a square.
fn quadratic_root(c: &[QSqrt2]) -> Option<QSqrt2> {
    let disc = c[1]
        .mul_ref(&c[1])
        .sub_ref(&QSqrt2::from_int(4).mul_ref(&c[2]).mul_ref(&c[0]));
    let s = disc.sqrt()?;
    let denom = c[2].mul_ref(&QSqrt2::from_int(2)).inv().ok()?;
    let r1 = c[1].neg_ref().sub_ref(&s).mul_ref(&denom);
    let r2 = c[1].neg_ref().add_ref(&s).mul_ref(&denom);
    Some(r1.min(r2))
}

/// A rational root must kill both the rational and the surd parts of the
/// polynomial; candidates come from the rational root theorem applied to
/// whichever part is nonzero.
fn rational_root(p: &UniPoly) -> Option<QSqrt2> {
    let ra: Vec<Rational> = p
        .coeffs()
        .iter()
        .map(|c| c.rational_part().clone())
        .collect();
    let rb: Vec<Rational> = p.coeffs().iter().map(|c| c.surd_part().clone()).collect();
    let part = if ra.iter().any(|x| !x.is_zero()) {
        &ra
    } else {
        &rb
    };
    let ints = clear_denominators(part);
    let lo = ints.iter().position(|x| !x.is_zero())?;
    let hi = ints.iter().rposition(|x| !x.is_zero())?;
    if lo == hi {
        return None;
    }
    let nums = divisors(&ints[lo])?;
    let dens = divisors(&ints[hi])?;
    let mut candidates: Vec<Rational> = Vec::new();
    for a in &nums {
        for b in &dens {
            let r = Rational::new(a.clone(), b.clone());
            candidates.push(r.clone());
            candidates.push(-r);
        }
    }
    candidates.sort();
    candidates.dedup();
    candidates
        .into_iter()
        .map(QSqrt2::from_rational)
        .find(|r| p.eval(r).is_zero())
}

fn clear_denominators(c: &[Rational]) -> Vec<BigInt> {
    let l = c.iter().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    c.iter()
        .map(|x| (x * Rational::from_integer(l.clone())).to_integer())
        .collect()
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs().to_u64().filter(|&v| v <= DIVISOR_SEARCH_LIMIT)?;
    let mut out = Vec::new();
    let mut d = 1u64;
    while d * d <= n {
        if n % d == 0 {
            out.push(BigInt::from(d));
            if d * d != n {
                out.push(BigInt::from(n / d));
            }
        }
        d += 1;
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(s: &str) -> QSqrt2 {
        QSqrt2::parse(s).unwrap()
    }

    #[test]
    fn diagonal_spectrum() {
        let s = eigenlines(&Matrix::diag(&[q("1"), q("-3/2")]));
        assert_eq!(s.eigenvalues(), vec![q("-3/2"), q("1")]);
        assert!(s.unresolved.is_none());
    }

    #[test]
    fn rotation_is_unresolved() {
        let rot = Matrix::from_rows(vec![vec![q("0"), q("-1")], vec![q("1"), q("0")]]);
        let s = eigenlines(&rot);
        assert!(s.eigenpairs.is_empty());
        assert_eq!(s.unresolved.unwrap().coeffs(), &[q("1"), q("0"), q("1")]);
    }

    #[test]
    fn repeated_eigenvalue() {
        let s = eigenlines(&Matrix::diag(&[q("2"), q("2")]));
        assert_eq!(s.eigenpairs.len(), 1);
        assert_eq!(s.eigenpairs[0].0, q("2"));
        assert_eq!(s.eigenpairs[0].1.dim(), 2);
    }

    #[test]
    fn surd_eigenvalues() {
        // [[0, 2], [1, 0]] has eigenvalues +-sqrt 2
        let m = Matrix::from_rows(vec![vec![q("0"), q("2")], vec![q("1"), q("0")]]);
        assert_eq!(eigenlines(&m).eigenvalues(), vec![q("-r2"), q("r2")]);
        let m3 = Matrix::diag(&[q("1 + r2"), q("3"), q("-1/2"), q("r2")]);
        assert_eq!(
            eigenlines(&m3).eigenvalues(),
            vec![q("-1/2"), q("r2"), q("1 + r2"), q("3")]
        );
    }

    #[test]
    fn char_poly_of_companion() {
        let m = Matrix::from_rows(vec![
            vec![q("0"), q("0"), q("6")],
            vec![q("1"), q("0"), q("-11")],
            vec![q("0"), q("1"), q("6")],
        ]);
        assert_eq!(char_poly(&m).coeffs(), &[q("-6"), q("11"), q("-6"), q("1")]);
        assert_eq!(eigenlines(&m).eigenvalues(), vec![q("1"), q("2"), q("3")]);
    }
}

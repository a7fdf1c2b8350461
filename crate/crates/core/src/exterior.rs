//! Alternating 3-forms on a 7-dimensional space.

use std::fmt;

use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::linalg::{kernel, Matrix, Subspace};
use crate::scalars::{QSqrt2, Ring};

pub const DIM: usize = 7;

/// Sorted triples `i < j < k` in lexicographic order; slot `s` of a form
/// holds the coefficient of `e^{ijk}` for `TRIPLES[s]`.
const TRIPLES: [(usize, usize, usize); 35] = triples();

const fn triples() -> [(usize, usize, usize); 35] {
    let mut out = [(0, 0, 0); 35];
    let mut s = 0;
    let mut i = 0;
    while i < DIM {
        let mut j = i + 1;
        while j < DIM {
            let mut k = j + 1;
            while k < DIM {
                out[s] = (i, j, k);
                s += 1;
                k += 1;
            }
            j += 1;
        }
        i += 1;
    }
    out
}

fn slot(i: usize, j: usize, k: usize) -> usize {
    TRIPLES
        .iter()
        .position(|&t| t == (i, j, k))
        .expect("sorted triple")
}

/// Sorts three distinct indices, returning the permutation sign.
fn sort3(i: usize, j: usize, k: usize) -> Option<(i8, (usize, usize, usize))> {
    if i == j || j == k || i == k {
        return None;
    }
    let mut t = [i, j, k];
    let mut sign = 1i8;
    for a in 0..3 {
        for b in 0..2 - a {
            if t[b] > t[b + 1] {
                t.swap(b, b + 1);
                sign = -sign;
            }
        }
    }
    Some((sign, (t[0], t[1], t[2])))
}

/// Dense 3-form: 35 coefficients over a scalar ring, indices 0-based.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct ThreeForm<T> {
    coeffs: Vec<T>,
}

impl<T: Ring> ThreeForm<T> {
    pub fn zero() -> Self {
        ThreeForm {
            coeffs: vec![T::zero(); TRIPLES.len()],
        }
    }

    /// Sum of `c * e^{ijk}` terms; indices may come in any order.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = ((usize, usize, usize), T)>,
    {
        let mut w = Self::zero();
        for ((i, j, k), c) in terms {
            if let Some((sign, (a, b, d))) = sort3(i, j, k) {
                let s = slot(a, b, d);
                let c = if sign < 0 { c.neg_ref() } else { c };
                w.coeffs[s] = w.coeffs[s].add_ref(&c);
            }
        }
        w
    }

    /// `w(e_i, e_j, e_k)` for any index order.
    pub fn component(&self, i: usize, j: usize, k: usize) -> T {
        match sort3(i, j, k) {
            None => T::zero(),
            Some((sign, (a, b, c))) => {
                let v = &self.coeffs[slot(a, b, c)];
                if sign < 0 {
                    v.neg_ref()
                } else {
                    v.clone()
                }
            }
        }
    }

    /// Nonzero `(sorted triple, coefficient)` pairs.
    pub fn terms(&self) -> impl Iterator<Item = ((usize, usize, usize), &T)> {
        TRIPLES
            .iter()
            .zip(&self.coeffs)
            .filter(|(_, c)| !c.is_zero())
            .map(|(&t, c)| (t, c))
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(Ring::is_zero)
    }

    pub fn add(&self, other: &Self) -> Self {
        ThreeForm {
            coeffs: self
                .coeffs
                .iter()
                .zip(&other.coeffs)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        }
    }

    pub fn scale_by(&self, c: &T) -> Self {
        ThreeForm {
            coeffs: self.coeffs.iter().map(|a| a.mul_ref(c)).collect(),
        }
    }

    pub fn map<U: Ring>(&self, f: impl FnMut(&T) -> U) -> ThreeForm<U> {
        ThreeForm {
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }

    pub fn eval(&self, x: &[T], y: &[T], z: &[T]) -> Result<T> {
        for v in [x, y, z] {
            if v.len() != DIM {
                return Err(Error::DimensionMismatch {
                    expected: DIM,
                    found: v.len(),
                });
            }
        }
        let mut acc = T::zero();
        for (&(i, j, k), c) in TRIPLES.iter().zip(&self.coeffs) {
            if c.is_zero() {
                continue;
            }
            let det = det3(
                [&x[i], &x[j], &x[k]],
                [&y[i], &y[j], &y[k]],
                [&z[i], &z[j], &z[k]],
            );
            acc.mul_add_assign(c, &det);
        }
        Ok(acc)
    }

    /// Infinitesimal action `(X.w)(a,b,c) = -w(Xa,b,c) - w(a,Xb,c) - w(a,b,Xc)`.
    pub fn endo_action(&self, x: &Matrix<T>) -> Self {
        assert_eq!((x.rows(), x.cols()), (DIM, DIM), "7x7 endomorphism");
        let mut out = Self::zero();
        for (s, &(i, j, k)) in TRIPLES.iter().enumerate() {
            let mut acc = T::zero();
            for m in 0..DIM {
                acc.mul_add_assign(&x[(m, i)], &self.component(m, j, k));
                acc.mul_add_assign(&x[(m, j)], &self.component(i, m, k));
                acc.mul_add_assign(&x[(m, k)], &self.component(i, j, m));
            }
            out.coeffs[s] = acc.neg_ref();
        }
        out
    }

    /// `(P^* w)(a,b,c) = w(Pa, Pb, Pc)`.
    pub fn pullback(&self, p: &Matrix<T>) -> Self {
        assert_eq!((p.rows(), p.cols()), (DIM, DIM), "7x7 matrix");
        let mut out = Self::zero();
        for (s, &(i, j, k)) in TRIPLES.iter().enumerate() {
            let mut acc = T::zero();
            for (&(a, b, c), w) in TRIPLES.iter().zip(&self.coeffs) {
                if w.is_zero() {
                    continue;
                }
                let minor = det3(
                    [&p[(a, i)], &p[(a, j)], &p[(a, k)]],
                    [&p[(b, i)], &p[(b, j)], &p[(b, k)]],
                    [&p[(c, i)], &p[(c, j)], &p[(c, k)]],
                );
                acc.mul_add_assign(w, &minor);
            }
            out.coeffs[s] = acc;
        }
        out
    }
}

fn det3<T: Ring>(r0: [&T; 3], r1: [&T; 3], r2: [&T; 3]) -> T {
    let m = |a: &T, b: &T, c: &T, d: &T| a.mul_ref(d).sub_ref(&b.mul_ref(c));
    let t0 = r0[0].mul_ref(&m(r1[1], r1[2], r2[1], r2[2]));
    let t1 = r0[1].mul_ref(&m(r1[0], r1[2], r2[0], r2[2]));
    let t2 = r0[2].mul_ref(&m(r1[0], r1[1], r2[0], r2[1]));
    t0.sub_ref(&t1).add_ref(&t2)
}

impl ThreeForm<QSqrt2> {
    /// Annihilator `{X : X.w = 0}` inside all 7x7 matrices, flattened
    /// row-major.
    pub fn stabilizer_algebra(&self) -> Subspace {
        let columns: Vec<ThreeForm<QSqrt2>> = (0..DIM * DIM)
            .map(|e| {
                let mut x = Matrix::zeros(DIM, DIM);
                x[(e / DIM, e % DIM)] = QSqrt2::one();
                self.endo_action(&x)
            })
            .collect();
        let map = Matrix::from_fn(TRIPLES.len(), DIM * DIM, |s, e| {
            columns[e].coeffs[s].clone()
        });
        kernel(&map)
    }

    /// Reads `[{"ijk": [i,j,k], "c": token}, ...]` with 1-based indices.
    pub fn from_json(v: &Value) -> Result<Self> {
        let items = v
            .as_array()
            .ok_or_else(|| Error::Input("3-form must be a JSON array".into()))?;
        let mut terms = Vec::new();
        for item in items {
            let ijk = item
                .get("ijk")
                .and_then(Value::as_array)
                .filter(|a| a.len() == 3)
                .ok_or_else(|| Error::Input(format!("bad `ijk` in {item}")))?;
            let mut idx = [0usize; 3];
            for (slot, x) in idx.iter_mut().zip(ijk) {
                let n = x
                    .as_u64()
                    .filter(|&n| (1..=DIM as u64).contains(&n))
                    .ok_or_else(|| Error::Input(format!("index out of range in {item}")))?;
                *slot = n as usize - 1;
            }
            let c = match item.get("c") {
                Some(Value::String(s)) => QSqrt2::parse(s)?,
                Some(Value::Number(n)) => QSqrt2::parse(&n.to_string())?,
                _ => return Err(Error::Input(format!("bad `c` in {item}"))),
            };
            terms.push(((idx[0], idx[1], idx[2]), c));
        }
        Ok(Self::from_terms(terms))
    }
}

impl<T: Ring> ThreeForm<T> {
    pub fn to_json(&self) -> Value {
        Value::Array(
            self.terms()
                .map(|((i, j, k), c)| json!({"ijk": [i + 1, j + 1, k + 1], "c": c.to_string()}))
                .collect(),
        )
    }
}

/// Prints as `c*e^{ijk}` terms with 1-based indices.
impl<T: Ring> fmt::Display for ThreeForm<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for ((i, j, k), c) in self.terms() {
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            write!(f, "({c})*e^{}{}{}", i + 1, j + 1, k + 1)?;
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

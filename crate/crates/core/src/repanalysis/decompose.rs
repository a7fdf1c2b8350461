use std::fmt;

use super::envelope::{assoc_envelope, radical, socle, Representation};
use crate::linalg::{
    bilinear, eigenlines, kernel, left_product, rank, span_close_under, Matrix, Subspace,
};
use crate::scalars::{QSqrt2, Ring};

/// Whether the module splits into orthogonal invariant pieces.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Indecomposability {
    Indecomposable,
    /// A proper nonzero invariant subspace on which the metric is
    /// nondegenerate.
    Decomposable(Subspace),
    Inconclusive,
}

impl fmt::Display for Indecomposability {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Indecomposability::Indecomposable => f.write_str("indecomposable"),
            Indecomposability::Decomposable(w) => write!(f, "decomposable, witness {w}"),
            Indecomposability::Inconclusive => f.write_str("inconclusive"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum HolonomyType {
    Irreducible,
    I,
    II,
    III,
    NotApplicable,
}

impl fmt::Display for HolonomyType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            HolonomyType::Irreducible => "irreducible",
            HolonomyType::I => "I",
            HolonomyType::II => "II",
            HolonomyType::III => "III",
            HolonomyType::NotApplicable => "n/a",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RepReport {
    pub envelope_dim: usize,
    pub socle: Subspace,
    pub socle_isotropic: bool,
    pub indecomposability: Indecomposability,
    pub kind: HolonomyType,
}

fn restricted_gram(gram: &Matrix<QSqrt2>, s: &Subspace) -> Matrix<QSqrt2> {
    let b = s.basis();
    Matrix::from_fn(b.len(), b.len(), |i, j| bilinear(gram, &b[i], &b[j]))
}

fn is_nondegenerate(gram: &Matrix<QSqrt2>, s: &Subspace) -> bool {
    rank(&restricted_gram(gram, s)) == s.dim()
}

fn is_invariant(r: &Representation, s: &Subspace) -> bool {
    r.generators()
        .iter()
        .all(|g| s.basis().iter().all(|v| s.contains(&g.mul_vec(v))))
}

fn common_kernel(r: &Representation) -> Subspace {
    let n = r.dim();
    let rows: Vec<Vec<QSqrt2>> = r
        .generators()
        .iter()
        .flat_map(|g| (0..n).map(|i| g.row(i).to_vec()).collect::<Vec<_>>())
        .collect();
    if rows.is_empty() {
        return Subspace::full(n);
    }
    kernel(&Matrix::from_rows(rows))
}

/// `{X : X^T G = G X, [X, g] = 0 for every generator}`.
fn self_adjoint_commutant(r: &Representation) -> Subspace {
    let n = r.dim();
    let gram = r.gram();
    let images: Vec<Vec<QSqrt2>> = (0..n * n)
        .map(|e| {
            let mut x = Matrix::zeros(n, n);
            x[(e / n, e % n)] = QSqrt2::one();
            let mut out = x.transpose().matmul(gram).sub(&gram.matmul(&x)).into_flat();
            for g in r.generators() {
                out.extend(x.commutator(g).into_flat());
            }
            out
        })
        .collect();
    let m = Matrix::from_fn(images[0].len(), n * n, |i, j| images[j][i].clone());
    kernel(&m)
}

fn non_isotropic_line(gram: &Matrix<QSqrt2>, k: &Subspace) -> Option<Subspace> {
    let b = k.basis();
    let mut candidates: Vec<Vec<QSqrt2>> = b.to_vec();
    for i in 0..b.len() {
        for j in i + 1..b.len() {
            candidates.push(b[i].iter().zip(&b[j]).map(|(x, y)| x.add_ref(y)).collect());
        }
    }
    candidates
        .into_iter()
        .find(|v| !bilinear(gram, v, v).is_zero())
        .map(|v| Subspace::from_vectors(gram.rows(), [v]))
}

/// Generalized eigenspaces of a self-adjoint commuting map are invariant
/// and mutually orthogonal, so any proper one is a witness.
fn spectral_witness(r: &Representation, x: &Matrix<QSqrt2>) -> Option<Subspace> {
    let n = r.dim();
    let spec = eigenlines(x);
    for lambda in spec.eigenvalues() {
        let shifted = x.sub(&Matrix::identity(n).scale(&lambda)).pow(n as u32);
        let w = kernel(&shifted);
        if !w.is_zero() && !w.is_full() && is_invariant(r, &w) && is_nondegenerate(r.gram(), &w) {
            return Some(w);
        }
    }
    None
}

pub fn indecomposability(r: &Representation) -> Indecomposability {
    let n = r.dim();
    let gram = r.gram();
    if n > 1 {
        if let Some(line) = non_isotropic_line(gram, &common_kernel(r)) {
            return Indecomposability::Decomposable(line);
        }
    }
    let c = self_adjoint_commutant(r);
    let cb = c.basis_matrices(n);
    let id = Matrix::identity(n);
    if c.dim() == 1 && c.contains_matrix(&id) {
        return Indecomposability::Indecomposable;
    }
    let mut trials: Vec<Matrix<QSqrt2>> = cb.clone();
    for i in 0..cb.len() {
        for j in i + 1..cb.len() {
            trials.push(cb[i].add(&cb[j]));
        }
    }
    for x in &trials {
        if let Some(w) = spectral_witness(r, x) {
            return Indecomposability::Decomposable(w);
        }
    }
    // An orthogonal splitting gives a nontrivial idempotent in the
    // commutant; a local algebra has none.
    let mut seeds = vec![id];
    seeds.extend(cb.iter().cloned());
    if let Ok(alg) = span_close_under(&seeds, &cb, left_product) {
        if radical(&alg).dim() + 1 == alg.dim() {
            return Indecomposability::Indecomposable;
        }
    }
    Indecomposability::Inconclusive
}

pub fn classify_type(r: &Representation) -> RepReport {
    let n = r.dim();
    let envelope_dim = assoc_envelope(r).dim();
    let soc = socle(r);
    let socle_isotropic = restricted_gram(r.gram(), &soc).is_zero();
    let indec = indecomposability(r);
    let kind = if envelope_dim == n * n {
        HolonomyType::Irreducible
    } else if indec == Indecomposability::Indecomposable && socle_isotropic {
        match soc.dim() {
            1 => HolonomyType::I,
            2 => HolonomyType::II,
            3 => HolonomyType::III,
            _ => HolonomyType::NotApplicable,
        }
    } else {
        HolonomyType::NotApplicable
    };
    RepReport {
        envelope_dim,
        socle: soc,
        socle_isotropic,
        indecomposability: indec,
        kind,
    }
}

use crate::error::{Error, Result};
use crate::geometry::MetricLieAlgebra;
use crate::linalg::{eigenlines, kernel, unit, vec_add, vec_scale, Matrix, Subspace, Vector};
use crate::scalars::{QSqrt2, Ring};

/// Sign choices left open by the normalizations: the sign of the first
/// nonzero coordinate of `f4`, and the sign of `<f6, f4>`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SignConvention {
    #[default]
    Positive,
    Negative,
}

impl SignConvention {
    fn apply(self, v: Vector<QSqrt2>, current: i8) -> Vector<QSqrt2> {
        let want = match self {
            SignConvention::Positive => 1,
            SignConvention::Negative => -1,
        };
        if current == want {
            v
        } else {
            vec_scale(&v, &QSqrt2::from_int(-1))
        }
    }
}

/// The vectors chosen along the way and the resulting value
/// `<[f5, f7], f7>`.
#[derive(Clone, Debug, PartialEq)]
pub struct InvariantFrame {
    pub f4: Vector<QSqrt2>,
    pub u: Vector<QSqrt2>,
    pub f5: Vector<QSqrt2>,
    pub f6: Vector<QSqrt2>,
    pub f7: Vector<QSqrt2>,
    pub value: QSqrt2,
}

fn fail(step: &'static str, detail: impl Into<String>) -> Error {
    Error::Structure {
        step,
        detail: detail.into(),
    }
}

fn first_sign(v: &[QSqrt2]) -> i8 {
    v.iter().map(QSqrt2::signum).find(|s| *s != 0).unwrap_or(0)
}

/// Subspaces on which every `ad(e_i)` acts by a scalar, with the scalars.
fn weight_spaces(m: &MetricLieAlgebra) -> Vec<(Vec<QSqrt2>, Subspace)> {
    let lie = m.lie();
    let n = m.dim();
    let mut parts = vec![(Vec::new(), Subspace::full(n))];
    for i in 0..n {
        let ad = lie.ad_basis(i);
        let spectrum = eigenlines(&ad);
        let mut next = Vec::new();
        for (weights, space) in &parts {
            for (lambda, eig) in &spectrum.eigenpairs {
                let common = space.intersection(eig);
                if !common.is_zero() {
                    let mut w: Vec<QSqrt2> = weights.clone();
                    w.push(lambda.clone());
                    next.push((w, common));
                }
            }
        }
        parts = next;
    }
    parts
}

fn orthogonal_complement(m: &MetricLieAlgebra, s: &Subspace) -> Subspace {
    if s.is_zero() {
        return Subspace::full(m.dim());
    }
    let rows = s.basis().iter().map(|b| m.gram().mul_vec(b)).collect();
    kernel(&Matrix::from_rows(rows))
}

/// Isometry invariant of the one-parameter family: equals `-ε` on `g_ε`.
pub fn epsilon_invariant(m: &MetricLieAlgebra) -> Result<QSqrt2> {
    epsilon_invariant_with(m, SignConvention::Positive).map(|f| f.value)
}

/// Same, exposing the chosen vectors. Every step only uses the bracket
/// and the inner product; any missing structure is reported with the
/// step that failed.
pub fn epsilon_invariant_with(
    m: &MetricLieAlgebra,
    signs: SignConvention,
) -> Result<InvariantFrame> {
    let lie = m.lie();
    let n = m.dim();

    let center = lie.center();
    if center.dim() != 1 {
        return Err(fail(
            "center",
            format!("expected a line, found dimension {}", center.dim()),
        ));
    }
    let z = center.basis()[0].clone();
    let norm = m.inner(&z, &z).neg_ref();
    if norm.signum() <= 0 {
        return Err(fail("normalize f4", "center is not timelike"));
    }
    let root = norm
        .sqrt()
        .ok_or_else(|| fail("normalize f4", format!("sqrt({norm}) is not in Q(sqrt 2)")))?;
    let f4 = vec_scale(&z, &root.inv()?);
    let f4 = signs.apply(f4.clone(), first_sign(&f4));

    let others: Vec<_> = weight_spaces(m)
        .into_iter()
        .filter(|(w, _)| w.iter().any(|x| !x.is_zero()))
        .collect();
    if others.len() != 1 || others[0].1.dim() != 1 {
        let dims: Vec<usize> = others.iter().map(|(_, s)| s.dim()).collect();
        return Err(fail(
            "invariant line",
            format!(
                "expected one further invariant line, found weight spaces of dimensions {dims:?}"
            ),
        ));
    }
    let (weights, line) = &others[0];
    let u = line.basis()[0].clone();
    let i = weights
        .iter()
        .position(|x| !x.is_zero())
        .expect("nonzero weight");
    // [e_i, u] = weights[i] u
    let f5 = vec_scale(
        &unit(n, i),
        &QSqrt2::frac(-1, 2).mul_ref(&weights[i].inv()?),
    );

    let d1 = lie.bracket_spaces(&Subspace::full(n), &Subspace::full(n));
    let d2 = lie.bracket_spaces(&d1, &d1);
    let action = lie.quotient_module(&d2, &d1, &f5)?;
    let spectrum = eigenlines(&action);
    let lifts = d2.complement_in(&d1);
    let lift = |lambda: QSqrt2| -> Result<Vector<QSqrt2>> {
        let space = spectrum
            .eigenspace(&lambda)
            .filter(|s| s.dim() == 1)
            .ok_or_else(|| {
                fail(
                    "quotient spectrum",
                    format!("no simple eigenvalue {lambda}"),
                )
            })?;
        let w = &space.basis()[0];
        Ok(lifts
            .iter()
            .zip(w)
            .fold(vec![QSqrt2::zero(); n], |acc, (c, k)| {
                vec_add(&acc, &vec_scale(c, k))
            }))
    };
    if action.rows() != 3 {
        return Err(fail(
            "quotient spectrum",
            format!("quotient has dimension {}", action.rows()),
        ));
    }
    let x3 = lift(QSqrt2::from_int(-2))?;
    let x6 = lift(QSqrt2::from_int(-1))?;
    lift(QSqrt2::frac(3, 2))?;

    let p64 = m.inner(&x6, &f4);
    if p64.is_zero() {
        return Err(fail("normalize f6", "eigenvector is orthogonal to f4"));
    }
    let f6 = vec_scale(&x6, &QSqrt2::from_int(4).mul_ref(&p64.abs().inv()?));
    let f6 = signs.apply(f6.clone(), m.inner(&f6, &f4).signum());

    let v = d1.intersection(&orthogonal_complement(m, &d2));
    if !v.contains_subspace(&d2) {
        return Err(fail(
            "isotropic complement",
            "second derived term is not isotropic",
        ));
    }
    let f6_perp = orthogonal_complement(m, &Subspace::from_vectors(n, [f6.clone()]));
    let p = v.intersection(&f6_perp).sum(&d2);
    if p.dim() != d2.dim() + 2 || !p.contains(&x3) {
        return Err(fail(
            "isotropic complement",
            "orthogonal of E(-1) is not a plane containing E(-2)",
        ));
    }
    if !m.inner(&x3, &x3).is_zero() {
        return Err(fail("isotropic complement", "E(-2) is not isotropic"));
    }
    let y = d2
        .sum(&Subspace::from_vectors(n, [x3.clone()]))
        .complement_in(&p)
        .into_iter()
        .next()
        .expect("plane minus line");
    let yx = m.inner(&y, &x3);
    if yx.is_zero() {
        return Err(fail("isotropic complement", "induced form is degenerate"));
    }
    let s = m
        .inner(&y, &y)
        .neg_ref()
        .mul_ref(&QSqrt2::from_int(2).mul_ref(&yx).inv()?);
    let zc = vec_add(&y, &vec_scale(&x3, &s));

    let k = m.inner(&lie.bracket(&f6, &zc), &f6);
    if k.is_zero() {
        return Err(fail("normalize f7", "<[f6, f7], f6> vanishes"));
    }
    let f7 = vec_scale(&zc, &QSqrt2::sqrt2().neg_ref().mul_ref(&k.inv()?));
    let value = m.inner(&lie.bracket(&f5, &f7), &f7);
    Ok(InvariantFrame {
        f4,
        u,
        f5,
        f6,
        f7,
        value,
    })
}

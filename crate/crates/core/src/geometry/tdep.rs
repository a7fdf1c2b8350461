use super::{Connection, MetricLieAlgebra};
use crate::exterior::ThreeForm;
use crate::linalg::{Matrix, Vector};
use crate::scalars::{LaurentExp, QSqrt2, Ring};

/// Tensor fields on `R ⋉ N` whose frame components depend on `t` only.
pub trait TDependent: Sized {
    type AtZero;

    /// Componentwise `d/dt`.
    fn ddt(&self) -> Self;

    /// Action of `Λ_l` as a derivation.
    fn act(&self, lambda: &Matrix<LaurentExp>) -> Self;

    fn add(&self, other: &Self) -> Self;

    fn is_zero(&self) -> bool;

    fn at_t_zero(&self) -> Self::AtZero;
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TDependentVector(pub Vector<LaurentExp>);

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TDependentForm(pub ThreeForm<LaurentExp>);

impl TDependentVector {
    /// `f(t) e_i` in dimension `n`.
    pub fn along(n: usize, i: usize, f: LaurentExp) -> Self {
        let mut v = vec![LaurentExp::zero(); n];
        v[i] = f;
        TDependentVector(v)
    }

    pub fn constant(v: &[QSqrt2]) -> Self {
        TDependentVector(v.iter().map(LaurentExp::from_scalar).collect())
    }
}

impl TDependent for TDependentVector {
    type AtZero = Vector<QSqrt2>;

    fn ddt(&self) -> Self {
        TDependentVector(self.0.iter().map(LaurentExp::ddt).collect())
    }

    fn act(&self, lambda: &Matrix<LaurentExp>) -> Self {
        TDependentVector(lambda.mul_vec(&self.0))
    }

    fn add(&self, other: &Self) -> Self {
        TDependentVector(
            self.0
                .iter()
                .zip(&other.0)
                .map(|(a, b)| a.add_ref(b))
                .collect(),
        )
    }

    fn is_zero(&self) -> bool {
        self.0.iter().all(Ring::is_zero)
    }

    fn at_t_zero(&self) -> Vector<QSqrt2> {
        self.0.iter().map(LaurentExp::at_t_zero).collect()
    }
}

impl TDependent for TDependentForm {
    type AtZero = ThreeForm<QSqrt2>;

    fn ddt(&self) -> Self {
        TDependentForm(self.0.map(LaurentExp::ddt))
    }

    fn act(&self, lambda: &Matrix<LaurentExp>) -> Self {
        TDependentForm(self.0.endo_action(lambda))
    }

    fn add(&self, other: &Self) -> Self {
        TDependentForm(self.0.add(&other.0))
    }

    fn is_zero(&self) -> bool {
        self.0.is_zero()
    }

    fn at_t_zero(&self) -> ThreeForm<QSqrt2> {
        self.0.map(LaurentExp::at_t_zero)
    }
}

/// Endomorphism fields; `Λ_l` acts by commutator.
impl TDependent for Matrix<LaurentExp> {
    type AtZero = Matrix<QSqrt2>;

    fn ddt(&self) -> Self {
        self.map(LaurentExp::ddt)
    }

    fn act(&self, lambda: &Matrix<LaurentExp>) -> Self {
        lambda.commutator(self)
    }

    fn add(&self, other: &Self) -> Self {
        Matrix::add(self, other)
    }

    fn is_zero(&self) -> bool {
        Matrix::is_zero(self)
    }

    fn at_t_zero(&self) -> Matrix<QSqrt2> {
        self.map(LaurentExp::at_t_zero)
    }
}

/// `∇_{e_l} T = δ_{l,time} dT/dt + Λ_l . T`. Without a declared time
/// direction every field is treated as left-invariant.
pub fn covariant_derivative_t<X: TDependent>(
    m: &MetricLieAlgebra,
    c: &Connection<QSqrt2>,
    field: &X,
    l: usize,
) -> X {
    let lambda = c.lambda(l).map(LaurentExp::from_scalar);
    let acted = field.act(&lambda);
    if m.time_direction() == Some(l) {
        acted.add(&field.ddt())
    } else {
        acted
    }
}

use std::fmt;

use super::QSqrt2;

/// Commutative ring with unit over which matrices, forms and structure
/// constants are built.
///
/// The by-reference methods avoid cloning bignum-backed values in hot
/// loops. Every ring here is a `QSqrt2`-algebra, which `from_scalar`
/// witnesses.
pub trait Ring: Clone + PartialEq + fmt::Debug + fmt::Display + Send + Sync + 'static {
    fn zero() -> Self;
    fn one() -> Self;
    fn is_zero(&self) -> bool;
    fn add_ref(&self, rhs: &Self) -> Self;
    fn sub_ref(&self, rhs: &Self) -> Self;
    fn mul_ref(&self, rhs: &Self) -> Self;
    fn neg_ref(&self) -> Self;
    fn from_scalar(c: &QSqrt2) -> Self;

    fn scale(&self, c: &QSqrt2) -> Self {
        self.mul_ref(&Self::from_scalar(c))
    }

    fn add_assign_ref(&mut self, rhs: &Self) {
        *self = self.add_ref(rhs);
    }

    fn sub_assign_ref(&mut self, rhs: &Self) {
        *self = self.sub_ref(rhs);
    }

    /// `self += a * b`
    fn mul_add_assign(&mut self, a: &Self, b: &Self) {
        if a.is_zero() || b.is_zero() {
            return;
        }
        self.add_assign_ref(&a.mul_ref(b));
    }

    fn from_i64(n: i64) -> Self {
        Self::from_scalar(&QSqrt2::from_int(n))
    }
}

use std::collections::BTreeMap;
use std::fmt;

use super::poly::fmt_term;
use super::{QSqrt2, Ring};
use crate::error::Result;

/// Laurent polynomial in `E = exp(t/2)` with `QSqrt2` coefficients.
///
/// `exp(-t) = E^-2`, `exp(3t/2) = E^3`. The time derivative acts on
/// monomials by `d/dt E^k = (k/2) E^k`.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct LaurentExp {
    terms: BTreeMap<i32, QSqrt2>,
}

impl LaurentExp {
    /// `c * E^k`
    pub fn monomial(c: QSqrt2, k: i32) -> Self {
        let mut out = LaurentExp::default();
        if !c.is_zero() {
            out.terms.insert(k, c);
        }
        out
    }

    pub fn coeff(&self, k: i32) -> QSqrt2 {
        self.terms.get(&k).cloned().unwrap_or_default()
    }

    pub fn terms(&self) -> impl Iterator<Item = (i32, &QSqrt2)> {
        self.terms.iter().map(|(k, c)| (*k, c))
    }

    fn add_term(&mut self, k: i32, c: QSqrt2) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(k).or_default();
        slot.add_assign_ref(&c);
        if slot.is_zero() {
            self.terms.remove(&k);
        }
    }

    /// Derivative with respect to `t`.
    pub fn ddt(&self) -> Self {
        let mut out = LaurentExp::default();
        for (k, c) in &self.terms {
            out.add_term(*k, c.mul_ref(&QSqrt2::frac(*k as i64, 2)));
        }
        out
    }

    /// Value at `t = 0`, i.e. `E = 1`.
    pub fn at_t_zero(&self) -> QSqrt2 {
        let mut acc = QSqrt2::zero();
        for c in self.terms.values() {
            acc.add_assign_ref(c);
        }
        acc
    }

    pub fn as_constant(&self) -> Option<QSqrt2> {
        match self.terms.len() {
            0 => Some(QSqrt2::zero()),
            1 => self.terms.get(&0).cloned(),
            _ => None,
        }
    }

    /// Single-term value `(c, k)`, if the element is a monomial.
    pub fn as_monomial(&self) -> Option<(QSqrt2, i32)> {
        if self.terms.len() == 1 {
            let (k, c) = self.terms.iter().next().unwrap();
            Some((c.clone(), *k))
        } else {
            None
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_expr::<LaurentExp>(s)
    }
}

impl Ring for LaurentExp {
    fn zero() -> Self {
        LaurentExp::default()
    }
    fn one() -> Self {
        LaurentExp::monomial(QSqrt2::one(), 0)
    }
    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        out.add_assign_ref(rhs);
        out
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &rhs.terms {
            out.add_term(*k, c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = LaurentExp::default();
        for (k1, c1) in &self.terms {
            for (k2, c2) in &rhs.terms {
                out.add_term(k1 + k2, c1.mul_ref(c2));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        LaurentExp {
            terms: self.terms.iter().map(|(k, c)| (*k, c.neg_ref())).collect(),
        }
    }
    fn from_scalar(c: &QSqrt2) -> Self {
        LaurentExp::monomial(c.clone(), 0)
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (k, c) in &rhs.terms {
            self.add_term(*k, c.clone());
        }
    }
}

impl fmt::Display for LaurentExp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (n, (k, c)) in self.terms.iter().enumerate() {
            let rest = if *k == 0 {
                String::new()
            } else {
                format!("E^{k}")
            };
            fmt_term(c, &rest, n == 0, f)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn l(s: &str) -> LaurentExp {
        LaurentExp::parse(s).unwrap()
    }

    #[test]
    fn derivative_examples() {
        assert_eq!(l("E^1").ddt(), l("1/2*E^1"));
        assert_eq!(l("E^-2").ddt(), l("-E^-2"));
        assert_eq!(l("7").ddt(), LaurentExp::zero());
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "E^-2", "-3/2*E^3", "1 + (1 + r2)*E^1", "r2*E^-1 - E^4"] {
            assert_eq!(l(s).to_string(), s);
        }
    }

    #[test]
    fn value_at_zero() {
        assert_eq!(l("E^1 + 2*E^-2").at_t_zero(), QSqrt2::from_int(3));
    }
}

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use super::{QSqrt2, Ring};
use crate::error::{Error, Result};

/// A named polynomial variable. Variables order by name, which fixes the
/// global lexicographic monomial order.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Var(Arc<str>);

impl Var {
    pub fn new(name: &str) -> Self {
        Var(Arc::from(name))
    }

    pub fn name(&self) -> &str {
        &self.0
    }
}

/// Sorted list of `(variable, exponent)` with positive exponents.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct Monomial(Vec<(Var, u32)>);

impl Monomial {
    pub fn one() -> Self {
        Monomial(Vec::new())
    }

    pub fn var(v: Var) -> Self {
        Monomial(vec![(v, 1)])
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|(_, e)| e).sum()
    }

    pub fn factors(&self) -> &[(Var, u32)] {
        &self.0
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = Vec::with_capacity(self.0.len() + other.0.len());
        let (mut i, mut j) = (0, 0);
        while i < self.0.len() && j < other.0.len() {
            match self.0[i].0.cmp(&other.0[j].0) {
                std::cmp::Ordering::Less => {
                    out.push(self.0[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push(other.0[j].clone());
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    out.push((self.0[i].0.clone(), self.0[i].1 + other.0[j].1));
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.0[i..]);
        out.extend_from_slice(&other.0[j..]);
        Monomial(out)
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return f.write_str("1");
        }
        for (k, (v, e)) in self.0.iter().enumerate() {
            if k > 0 {
                f.write_str("*")?;
            }
            if *e == 1 {
                write!(f, "{}", v.name())?;
            } else {
                write!(f, "{}^{}", v.name(), e)?;
            }
        }
        Ok(())
    }
}

/// Multivariate polynomial with `QSqrt2` coefficients. Zero coefficients
/// are never stored.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct MultiPoly {
    terms: BTreeMap<Monomial, QSqrt2>,
}

impl MultiPoly {
    pub fn constant(c: QSqrt2) -> Self {
        let mut p = MultiPoly::default();
        if !c.is_zero() {
            p.terms.insert(Monomial::one(), c);
        }
        p
    }

    pub fn var(name: &str) -> Self {
        let mut p = MultiPoly::default();
        p.terms.insert(Monomial::var(Var::new(name)), QSqrt2::one());
        p
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &QSqrt2)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn variables(&self) -> BTreeSet<Var> {
        self.terms
            .keys()
            .flat_map(|m| m.0.iter().map(|(v, _)| v.clone()))
            .collect()
    }

    /// Constant value, if the polynomial has degree <= 0.
    pub fn as_constant(&self) -> Option<QSqrt2> {
        match self.terms.len() {
            0 => Some(QSqrt2::zero()),
            1 => self.terms.get(&Monomial::one()).cloned(),
            _ => None,
        }
    }

    /// Coefficient of the given monomial.
    pub fn coeff(&self, m: &Monomial) -> QSqrt2 {
        self.terms.get(m).cloned().unwrap_or_default()
    }

    fn add_term(&mut self, m: Monomial, c: QSqrt2) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                e.get_mut().add_assign_ref(&c);
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = MultiPoly::one();
        for _ in 0..e {
            acc = acc.mul_ref(self);
        }
        acc
    }

    /// Ring-homomorphic partial evaluation; variables absent from
    /// `binding` survive.
    pub fn substitute(&self, binding: &BTreeMap<String, QSqrt2>) -> MultiPoly {
        let mut out = MultiPoly::default();
        for (m, c) in &self.terms {
            let mut coeff = c.clone();
            let mut rest = Vec::new();
            for (v, e) in &m.0 {
                match binding.get(v.name()) {
                    Some(val) => {
                        for _ in 0..*e {
                            coeff = coeff.mul_ref(val);
                        }
                    }
                    None => rest.push((v.clone(), *e)),
                }
            }
            out.add_term(Monomial(rest), coeff);
        }
        out
    }

    /// Full evaluation; every variable must be bound.
    pub fn evaluate(&self, binding: &BTreeMap<String, QSqrt2>) -> Result<QSqrt2> {
        if let Some(v) = self
            .variables()
            .into_iter()
            .find(|v| !binding.contains_key(v.name()))
        {
            return Err(Error::UnboundVariable(v.name().to_string()));
        }
        Ok(self
            .substitute(binding)
            .as_constant()
            .expect("fully bound polynomial is constant"))
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_expr::<MultiPoly>(s)
    }
}

impl Ring for MultiPoly {
    fn zero() -> Self {
        MultiPoly::default()
    }
    fn one() -> Self {
        MultiPoly::constant(QSqrt2::one())
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
        for (m, c) in &rhs.terms {
            out.add_term(m.clone(), c.neg_ref());
        }
        out
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        let mut out = MultiPoly::default();
        for (m1, c1) in &self.terms {
            for (m2, c2) in &rhs.terms {
                out.add_term(m1.mul(m2), c1.mul_ref(c2));
            }
        }
        out
    }
    fn neg_ref(&self) -> Self {
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, c)| (m.clone(), c.neg_ref()))
                .collect(),
        }
    }
    fn from_scalar(c: &QSqrt2) -> Self {
        MultiPoly::constant(c.clone())
    }
    fn scale(&self, c: &QSqrt2) -> Self {
        if c.is_zero() {
            return MultiPoly::default();
        }
        MultiPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, x)| (m.clone(), x.mul_ref(c)))
                .collect(),
        }
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        for (m, c) in &rhs.terms {
            self.add_term(m.clone(), c.clone());
        }
    }
}

/// Writes `coeff*rest` for one term in a signed sum. Returns the sign that
/// should join it to the preceding term.
pub(crate) fn fmt_term(
    coeff: &QSqrt2,
    rest: &str,
    first: bool,
    f: &mut fmt::Formatter<'_>,
) -> fmt::Result {
    let (neg, mag) = if !coeff.is_compound() && coeff.signum() < 0 {
        (true, coeff.neg_ref())
    } else {
        (false, coeff.clone())
    };
    if first {
        if neg {
            f.write_str("-")?;
        }
    } else {
        f.write_str(if neg { " - " } else { " + " })?;
    }
    let c = if mag.is_compound() {
        format!("({mag})")
    } else {
        mag.to_string()
    };
    match (rest.is_empty(), c.as_str()) {
        (true, _) => f.write_str(&c),
        (false, "1") => f.write_str(rest),
        (false, _) => write!(f, "{c}*{rest}"),
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (m, c)) in self.terms.iter().enumerate() {
            let rest = if m.is_one() {
                String::new()
            } else {
                m.to_string()
            };
            fmt_term(c, &rest, k == 0, f)?;
        }
        Ok(())
    }
}

impl Add for MultiPoly {
    type Output = MultiPoly;
    fn add(mut self, rhs: MultiPoly) -> MultiPoly {
        self.add_assign_ref(&rhs);
        self
    }
}

impl Sub for MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: MultiPoly) -> MultiPoly {
        self.sub_ref(&rhs)
    }
}

impl Mul for MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: MultiPoly) -> MultiPoly {
        self.mul_ref(&rhs)
    }
}

impl Neg for MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.neg_ref()
    }
}

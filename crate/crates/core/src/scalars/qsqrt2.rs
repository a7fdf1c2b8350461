use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::rational::{fmt_rational, rational_sqrt, Rational};
use super::Ring;
use crate::error::{Error, Result};

/// Exact element `a + b*sqrt(2)` of the real quadratic field Q(sqrt 2).
///
/// The pair `(a, b)` is the unique representation, so derived equality
/// and hashing are value equality.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct QSqrt2 {
    a: Rational,
    b: Rational,
}

impl QSqrt2 {
    pub fn new(a: Rational, b: Rational) -> Self {
        QSqrt2 { a, b }
    }

    pub fn from_rational(a: Rational) -> Self {
        QSqrt2 {
            a,
            b: Rational::zero(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        Self::from_rational(Rational::from_integer(BigInt::from(n)))
    }

    /// `num/den` as a rational element. Panics if `den == 0`.
    pub fn frac(num: i64, den: i64) -> Self {
        Self::from_rational(Rational::new(BigInt::from(num), BigInt::from(den)))
    }

    pub fn sqrt2() -> Self {
        QSqrt2 {
            a: Rational::zero(),
            b: Rational::one(),
        }
    }

    /// Rational part `a`.
    pub fn rational_part(&self) -> &Rational {
        &self.a
    }

    /// Coefficient `b` of sqrt(2).
    pub fn surd_part(&self) -> &Rational {
        &self.b
    }

    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }

    /// Galois conjugate `a - b*sqrt(2)`.
    pub fn conj(&self) -> Self {
        QSqrt2 {
            a: self.a.clone(),
            b: -self.b.clone(),
        }
    }

    /// Field norm `a^2 - 2 b^2`.
    pub fn norm(&self) -> Rational {
        &self.a * &self.a - Rational::from_integer(BigInt::from(2)) * &self.b * &self.b
    }

    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::Domain("inverse of zero in Q(sqrt 2)".into()));
        }
        let n = self.norm();
        Ok(QSqrt2 {
            a: &self.a / &n,
            b: -(&self.b / &n),
        })
    }

    /// Sign under the real embedding with sqrt(2) > 0, computed exactly.
    pub fn signum(&self) -> i8 {
        let sa = rat_sign(&self.a);
        let sb = rat_sign(&self.b);
        match (sa, sb) {
            (0, s) | (s, 0) => s,
            (1, 1) => 1,
            (-1, -1) => -1,
            _ => {
                // mixed signs: the larger of a^2 and 2b^2 wins
                let a2 = &self.a * &self.a;
                let b2 = Rational::from_integer(BigInt::from(2)) * &self.b * &self.b;
                match a2.cmp(&b2) {
                    Ordering::Greater => sa,
                    Ordering::Less => sb,
                    Ordering::Equal => 0,
                }
            }
        }
    }

    pub fn abs(&self) -> Self {
        if self.signum() < 0 {
            -self
        } else {
            self.clone()
        }
    }

    /// Square root inside Q(sqrt 2), if one exists. The non-negative root
    /// is returned.
    pub fn sqrt(&self) -> Option<Self> {
        match self.signum() {
            0 => return Some(QSqrt2::zero()),
            -1 => return None,
            _ => {}
        }
        let two = Rational::from_integer(BigInt::from(2));
        if self.b.is_zero() {
            if let Some(r) = rational_sqrt(&self.a) {
                return Some(QSqrt2::from_rational(r));
            }
            // a = 2 d^2
            return rational_sqrt(&(&self.a / &two)).map(|d| QSqrt2::new(Rational::zero(), d));
        }
        // (c + d sqrt2)^2 = c^2 + 2 d^2 + 2 c d sqrt2
        let disc = rational_sqrt(&self.norm())?;
        for s in [&self.a + &disc, &self.a - &disc] {
            let c2 = s / &two;
            if c2.is_zero() {
                continue;
            }
            if let Some(c) = rational_sqrt(&c2) {
                let d = &self.b / (&two * &c);
                let root = QSqrt2::new(c, d);
                if &(&root * &root) == self {
                    return Some(root.abs());
                }
            }
        }
        None
    }

    /// Floating approximation, for non-authoritative display hints only.
    pub fn approx(&self) -> f64 {
        self.a.to_f64().unwrap_or(f64::NAN) + self.b.to_f64().unwrap_or(f64::NAN) * 2f64.sqrt()
    }

    pub fn parse(s: &str) -> Result<Self> {
        super::parse::parse_expr::<QSqrt2>(s)
    }

    /// True when the textual form has more than one summand; callers use
    /// this to decide on parentheses.
    pub(crate) fn is_compound(&self) -> bool {
        !self.a.is_zero() && !self.b.is_zero()
    }
}

fn rat_sign(r: &Rational) -> i8 {
    if r.is_zero() {
        0
    } else if r.is_positive() {
        1
    } else {
        -1
    }
}

impl PartialOrd for QSqrt2 {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for QSqrt2 {
    fn cmp(&self, other: &Self) -> Ordering {
        (self - other).signum().cmp(&0)
    }
}

impl fmt::Display for QSqrt2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return f.write_str(&fmt_rational(&self.a));
        }
        let surd = |b: &Rational| -> String {
            if b.is_one() {
                "r2".to_string()
            } else {
                format!("{}*r2", fmt_rational(b))
            }
        };
        if self.a.is_zero() {
            if self.b.is_negative() {
                return write!(f, "-{}", surd(&-self.b.clone()));
            }
            return f.write_str(&surd(&self.b));
        }
        if self.b.is_negative() {
            write!(f, "{} - {}", fmt_rational(&self.a), surd(&-self.b.clone()))
        } else {
            write!(f, "{} + {}", fmt_rational(&self.a), surd(&self.b))
        }
    }
}

impl Ring for QSqrt2 {
    fn zero() -> Self {
        QSqrt2::default()
    }
    fn one() -> Self {
        QSqrt2::from_rational(Rational::one())
    }
    fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }
    fn add_ref(&self, rhs: &Self) -> Self {
        QSqrt2 {
            a: &self.a + &rhs.a,
            b: &self.b + &rhs.b,
        }
    }
    fn sub_ref(&self, rhs: &Self) -> Self {
        QSqrt2 {
            a: &self.a - &rhs.a,
            b: &self.b - &rhs.b,
        }
    }
    fn mul_ref(&self, rhs: &Self) -> Self {
        if self.b.is_zero() && rhs.b.is_zero() {
            return QSqrt2::from_rational(&self.a * &rhs.a);
        }
        let two = Rational::from_integer(BigInt::from(2));
        QSqrt2 {
            a: &self.a * &rhs.a + two * &self.b * &rhs.b,
            b: &self.a * &rhs.b + &self.b * &rhs.a,
        }
    }
    fn neg_ref(&self) -> Self {
        QSqrt2 {
            a: -self.a.clone(),
            b: -self.b.clone(),
        }
    }
    fn from_scalar(c: &QSqrt2) -> Self {
        c.clone()
    }
    fn add_assign_ref(&mut self, rhs: &Self) {
        self.a += &rhs.a;
        self.b += &rhs.b;
    }
    fn sub_assign_ref(&mut self, rhs: &Self) {
        self.a -= &rhs.a;
        self.b -= &rhs.b;
    }
}

macro_rules! forward_binop {
    ($tr:ident, $m:ident, $inner:ident) => {
        impl $tr<&QSqrt2> for &QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: &QSqrt2) -> QSqrt2 {
                self.$inner(rhs)
            }
        }
        impl $tr<QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: QSqrt2) -> QSqrt2 {
                (&self).$inner(&rhs)
            }
        }
        impl $tr<&QSqrt2> for QSqrt2 {
            type Output = QSqrt2;
            fn $m(self, rhs: &QSqrt2) -> QSqrt2 {
                (&self).$inner(rhs)
            }
        }
    };
}

forward_binop!(Add, add, add_ref);
forward_binop!(Sub, sub, sub_ref);
forward_binop!(Mul, mul, mul_ref);

impl Div<&QSqrt2> for &QSqrt2 {
    type Output = QSqrt2;
    /// Panics on division by zero, like the rational division it wraps.
    fn div(self, rhs: &QSqrt2) -> QSqrt2 {
        self * &rhs.inv().expect("division by zero in Q(sqrt 2)")
    }
}

impl Div for QSqrt2 {
    type Output = QSqrt2;
    fn div(self, rhs: QSqrt2) -> QSqrt2 {
        &self / &rhs
    }
}

impl Neg for QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        QSqrt2 {
            a: -self.a,
            b: -self.b,
        }
    }
}

impl Neg for &QSqrt2 {
    type Output = QSqrt2;
    fn neg(self) -> QSqrt2 {
        self.neg_ref()
    }
}

impl From<i64> for QSqrt2 {
    fn from(n: i64) -> Self {
        QSqrt2::from_int(n)
    }
}

impl From<Rational> for QSqrt2 {
    fn from(r: Rational) -> Self {
        QSqrt2::from_rational(r)
    }
}

//! Exact scalar rings: Q, Q(sqrt 2), multivariate polynomials over
//! Q(sqrt 2), and Laurent polynomials in `E = exp(t/2)`.
//!
//! Text form: rationals print as `p` or `p/q`, elements of Q(sqrt 2) as
//! `a + b*r2` where `r2` stands for sqrt(2), Laurent monomials as `c*E^k`.
//! Every printed value parses back to itself.

mod laurent;
pub(crate) mod parse;
mod poly;
mod qsqrt2;
mod rational;
mod ring;

pub use laurent::LaurentExp;
pub use poly::{Monomial, MultiPoly, Var};
pub use qsqrt2::QSqrt2;
pub use rational::{rational, Rational};
pub use ring::Ring;

#[cfg(test)]
mod proptests {
    use super::*;
    use proptest::prelude::*;

    fn small_q() -> impl Strategy<Value = QSqrt2> {
        (-20i64..20, 1i64..7, -20i64..20, 1i64..7)
            .prop_map(|(a, da, b, db)| QSqrt2::new(rational(a, da), rational(b, db)))
    }

    fn laurent() -> impl Strategy<Value = LaurentExp> {
        proptest::collection::vec((small_q(), -4i32..5), 0..4).prop_map(|ts| {
            let mut acc = LaurentExp::zero();
            for (c, k) in ts {
                acc = acc.add_ref(&LaurentExp::monomial(c, k));
            }
            acc
        })
    }

    proptest! {
        #[test]
        fn field_axioms(x in small_q(), y in small_q(), z in small_q()) {
            prop_assert_eq!((&x * &y) * &z, &x * &(&y * &z));
            prop_assert_eq!(&x * &(&y + &z), &x * &y + &x * &z);
            prop_assert_eq!(&x + &y, &y + &x);
            if !x.is_zero() {
                prop_assert_eq!(&x * &x.inv().unwrap(), QSqrt2::one());
            }
        }

        #[test]
        fn sign_is_multiplicative(x in small_q(), y in small_q()) {
            prop_assert_eq!((&x * &y).signum(), x.signum() * y.signum());
        }

        #[test]
        fn sign_agrees_with_float_when_far_from_zero(x in small_q()) {
            let f = x.approx();
            if f.abs() > 1e-9 {
                prop_assert_eq!(x.signum(), if f > 0.0 { 1 } else { -1 });
            }
        }

        #[test]
        fn ddt_is_a_derivation(p in laurent(), q in laurent()) {
            let lhs = p.mul_ref(&q).ddt();
            let rhs = p.ddt().mul_ref(&q).add_ref(&p.mul_ref(&q.ddt()));
            prop_assert_eq!(lhs, rhs);
        }

        #[test]
        fn printed_scalars_parse_back(x in small_q()) {
            prop_assert_eq!(QSqrt2::parse(&x.to_string()).unwrap(), x);
        }

        #[test]
        fn printed_laurent_parses_back(p in laurent()) {
            prop_assert_eq!(LaurentExp::parse(&p.to_string()).unwrap(), p);
        }
    }
}

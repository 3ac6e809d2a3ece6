//! Exact arithmetic: big rationals, sparse polynomials in `t`, `q`, `alpha`,
//! polynomials in `x` over that ring, and q-integers.

mod encoding;
mod poly;
mod xpoly;

pub use encoding::TermRecord;
pub use num_rational::BigRational as Rational;
pub use poly::{parse_rational, Bindings, ExactPoly, Monomial, Var};
pub use xpoly::XPoly;

use num_bigint::BigInt;
use num_traits::One;

/// `[n]_q = 1 + q + ... + q^(n-1)`; zero for `n = 0`.
pub fn q_integer(n: u32) -> ExactPoly {
    ExactPoly::from_terms((0..n).map(|j| (Rational::one(), Monomial::var(Var::Q, j))))
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial(n: u32) -> ExactPoly {
    (1..=n).fold(ExactPoly::one(), |acc, j| &acc * &q_integer(j))
}

pub fn rational(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

pub fn factorial(n: u32) -> BigInt {
    (1..=n).fold(BigInt::one(), |acc, j| acc * BigInt::from(j))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q_poly(coeffs: &[i64]) -> ExactPoly {
        ExactPoly::from_terms(coeffs.iter().enumerate().map(|(j, &c)| {
            (
                Rational::from_integer(c.into()),
                Monomial::var(Var::Q, j as u32),
            )
        }))
    }

    #[test]
    fn q_integers() {
        assert!(q_integer(0).is_zero());
        assert!(q_integer(1).is_one());
        assert_eq!(q_integer(3), q_poly(&[1, 1, 1]));
    }

    #[test]
    fn q_factorials() {
        assert!(q_factorial(0).is_one());
        assert_eq!(q_factorial(2), q_poly(&[1, 1]));
        assert_eq!(q_factorial(3), q_poly(&[1, 2, 2, 1]));
    }

    #[test]
    fn q_factorial_specializations() {
        let at_one = Bindings::new().with_int(Var::Q, 1);
        let at_zero = Bindings::new().with_int(Var::Q, 0);
        assert_eq!(q_factorial(2).substitute(&at_one), ExactPoly::from_int(2));
        assert!(q_factorial(3).substitute(&at_zero).is_one());
        for n in 0..=12 {
            assert_eq!(
                q_factorial(n).substitute(&at_one),
                ExactPoly::from_bigint(factorial(n)),
                "n = {n}"
            );
        }
    }
}

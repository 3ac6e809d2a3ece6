//! Polynomials in `x` whose coefficients are [`ExactPoly`] values.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use super::poly::{Bindings, ExactPoly};

/// `coeffs[d]` is the coefficient of `x^d`; trailing zeros are trimmed.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct XPoly {
    coeffs: Vec<ExactPoly>,
}

impl XPoly {
    pub fn zero() -> Self {
        XPoly::default()
    }

    pub fn one() -> Self {
        XPoly::constant(ExactPoly::one())
    }

    pub fn x() -> Self {
        XPoly::from_coeffs(vec![ExactPoly::zero(), ExactPoly::one()])
    }

    pub fn x_pow(d: usize) -> Self {
        let mut coeffs = vec![ExactPoly::zero(); d + 1];
        coeffs[d] = ExactPoly::one();
        XPoly { coeffs }
    }

    pub fn constant(c: ExactPoly) -> Self {
        XPoly::from_coeffs(vec![c])
    }

    pub fn from_coeffs(coeffs: Vec<ExactPoly>) -> Self {
        let mut p = XPoly { coeffs };
        p.trim();
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(ExactPoly::is_zero) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn coeffs(&self) -> &[ExactPoly] {
        &self.coeffs
    }

    pub fn coeff(&self, d: usize) -> ExactPoly {
        self.coeffs.get(d).cloned().unwrap_or_default()
    }

    pub fn leading_coeff(&self) -> Option<&ExactPoly> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading_coeff().is_some_and(ExactPoly::is_one)
    }

    pub fn mul_x(&self) -> XPoly {
        if self.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(ExactPoly::zero());
        coeffs.extend(self.coeffs.iter().cloned());
        XPoly { coeffs }
    }

    pub fn scale(&self, c: &ExactPoly) -> XPoly {
        if c.is_zero() {
            return XPoly::zero();
        }
        if c.is_one() {
            return self.clone();
        }
        XPoly::from_coeffs(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn substitute(&self, bindings: &Bindings) -> XPoly {
        XPoly::from_coeffs(self.coeffs.iter().map(|c| c.substitute(bindings)).collect())
    }

    pub fn pow(&self, e: u32) -> XPoly {
        (0..e).fold(XPoly::one(), |acc, _| &acc * self)
    }
}

impl fmt::Debug for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "XPoly({self})")
    }
}

impl fmt::Display for XPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (d, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let xpart = match d {
                0 => String::new(),
                1 => "x".to_string(),
                _ => format!("x^{d}"),
            };
            let text = c.to_string();
            let single = c.len() == 1;
            let (neg, body) = if single && text.starts_with('-') {
                (true, text[1..].to_string())
            } else {
                (false, text)
            };
            let body = match (d, body.as_str(), single) {
                (0, _, true) => body,
                (0, _, false) => format!("({body})"),
                (_, "1", _) => xpart,
                (_, _, true) => format!("{body}*{xpart}"),
                (_, _, false) => format!("({body})*{xpart}"),
            };
            match (first, neg) {
                (true, true) => write!(f, "-{body}")?,
                (true, false) => write!(f, "{body}")?,
                (false, true) => write!(f, " - {body}")?,
                (false, false) => write!(f, " + {body}")?,
            }
            first = false;
        }
        Ok(())
    }
}

impl Add<&XPoly> for &XPoly {
    type Output = XPoly;
    fn add(self, rhs: &XPoly) -> XPoly {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n)
            .map(|d| match (self.coeffs.get(d), rhs.coeffs.get(d)) {
                (Some(a), Some(b)) => a + b,
                (Some(a), None) | (None, Some(a)) => a.clone(),
                (None, None) => unreachable!(),
            })
            .collect();
        XPoly::from_coeffs(coeffs)
    }
}

impl Add for XPoly {
    type Output = XPoly;
    fn add(self, rhs: XPoly) -> XPoly {
        &self + &rhs
    }
}

impl Neg for &XPoly {
    type Output = XPoly;
    fn neg(self) -> XPoly {
        XPoly {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl Sub<&XPoly> for &XPoly {
    type Output = XPoly;
    fn sub(self, rhs: &XPoly) -> XPoly {
        self + &(-rhs)
    }
}

impl Sub for XPoly {
    type Output = XPoly;
    fn sub(self, rhs: XPoly) -> XPoly {
        &self - &rhs
    }
}

impl Mul<&XPoly> for &XPoly {
    type Output = XPoly;
    fn mul(self, rhs: &XPoly) -> XPoly {
        if self.is_zero() || rhs.is_zero() {
            return XPoly::zero();
        }
        let mut coeffs = vec![ExactPoly::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        XPoly::from_coeffs(coeffs)
    }
}

impl Mul for XPoly {
    type Output = XPoly;
    fn mul(self, rhs: XPoly) -> XPoly {
        &self * &rhs
    }
}

impl std::iter::Sum for XPoly {
    fn sum<I: Iterator<Item = XPoly>>(iter: I) -> Self {
        iter.fold(XPoly::zero(), |acc, p| &acc + &p)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x2_minus_t() -> XPoly {
        XPoly::from_coeffs(vec![-ExactPoly::t(), ExactPoly::zero(), ExactPoly::one()])
    }

    #[test]
    fn product_examples() {
        assert_eq!(&XPoly::x() * &XPoly::x(), XPoly::x_pow(2));
        assert_eq!(&x2_minus_t() * &XPoly::one(), x2_minus_t());
        let expected = XPoly::from_coeffs(vec![
            ExactPoly::zero(),
            -ExactPoly::t(),
            ExactPoly::zero(),
            ExactPoly::one(),
        ]);
        assert_eq!(&XPoly::x() * &x2_minus_t(), expected);
    }

    #[test]
    fn cancellation_trims() {
        let p = &x2_minus_t() - &x2_minus_t();
        assert!(p.is_zero());
        assert_eq!(p.degree(), None);
    }

    #[test]
    fn rendering() {
        assert_eq!(x2_minus_t().to_string(), "x^2 - t");
        let p = XPoly::from_coeffs(vec![
            ExactPoly::zero(),
            ExactPoly::one() + ExactPoly::q(),
            ExactPoly::from_int(-2),
            ExactPoly::one(),
        ]);
        assert_eq!(p.to_string(), "x^3 - 2*x^2 + (q + 1)*x");
    }
}

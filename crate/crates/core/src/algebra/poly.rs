//! Sparse polynomials over the rationals in the three indeterminates `t`, `q`, `alpha`.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;
use std::iter::Sum;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use super::Rational;
use crate::error::{Error, Result};

/// One of the three coefficient-ring indeterminates.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Var {
    T,
    Q,
    Alpha,
}

impl Var {
    pub const ALL: [Var; 3] = [Var::T, Var::Q, Var::Alpha];

    pub fn name(self) -> &'static str {
        match self {
            Var::T => "t",
            Var::Q => "q",
            Var::Alpha => "alpha",
        }
    }

    pub fn parse(name: &str) -> Result<Var> {
        match name {
            "t" => Ok(Var::T),
            "q" => Ok(Var::Q),
            "alpha" | "a" => Ok(Var::Alpha),
            other => Err(Error::Parse(format!("unknown indeterminate `{other}`"))),
        }
    }
}

/// Exponent triple `t^t * q^q * alpha^alpha`.
///
/// Ordered graded-lexicographically: total degree first, then `t > q > alpha`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Monomial {
    pub t: u32,
    pub q: u32,
    pub alpha: u32,
}

impl Monomial {
    pub const ONE: Monomial = Monomial {
        t: 0,
        q: 0,
        alpha: 0,
    };

    pub fn new(t: u32, q: u32, alpha: u32) -> Self {
        Monomial { t, q, alpha }
    }

    pub fn var(v: Var, exp: u32) -> Self {
        let mut m = Monomial::ONE;
        *m.exp_mut(v) = exp;
        m
    }

    pub fn degree(&self) -> u32 {
        self.t + self.q + self.alpha
    }

    pub fn exp(&self, v: Var) -> u32 {
        match v {
            Var::T => self.t,
            Var::Q => self.q,
            Var::Alpha => self.alpha,
        }
    }

    fn exp_mut(&mut self, v: Var) -> &mut u32 {
        match v {
            Var::T => &mut self.t,
            Var::Q => &mut self.q,
            Var::Alpha => &mut self.alpha,
        }
    }

    pub fn is_one(&self) -> bool {
        *self == Monomial::ONE
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial {
            t: self.t + other.t,
            q: self.q + other.q,
            alpha: self.alpha + other.alpha,
        }
    }

    /// `self / other` if `other` divides `self`.
    pub fn checked_div(&self, other: &Monomial) -> Option<Monomial> {
        Some(Monomial {
            t: self.t.checked_sub(other.t)?,
            q: self.q.checked_sub(other.q)?,
            alpha: self.alpha.checked_sub(other.alpha)?,
        })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then(self.t.cmp(&other.t))
            .then(self.q.cmp(&other.q))
            .then(self.alpha.cmp(&other.alpha))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for v in Var::ALL {
            let e = self.exp(v);
            if e == 0 {
                continue;
            }
            if !first {
                f.write_str("*")?;
            }
            first = false;
            f.write_str(v.name())?;
            if e > 1 {
                write!(f, "^{e}")?;
            }
        }
        if first {
            f.write_str("1")?;
        }
        Ok(())
    }
}

/// Sparse polynomial in `t`, `q`, `alpha` with rational coefficients.
///
/// Zero coefficients are never stored, so structural equality is
/// mathematical equality.
#[derive(Clone, Default, PartialEq, Eq, Hash)]
pub struct ExactPoly {
    terms: BTreeMap<Monomial, Rational>,
}

impl ExactPoly {
    pub fn zero() -> Self {
        ExactPoly::default()
    }

    pub fn one() -> Self {
        ExactPoly::constant(Rational::one())
    }

    pub fn constant(c: Rational) -> Self {
        ExactPoly::term(c, Monomial::ONE)
    }

    pub fn from_int(c: i64) -> Self {
        ExactPoly::constant(Rational::from_integer(BigInt::from(c)))
    }

    pub fn from_bigint(c: BigInt) -> Self {
        ExactPoly::constant(Rational::from_integer(c))
    }

    pub fn term(c: Rational, m: Monomial) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        ExactPoly { terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        ExactPoly::term(Rational::one(), m)
    }

    pub fn var(v: Var) -> Self {
        ExactPoly::monomial(Monomial::var(v, 1))
    }

    pub fn t() -> Self {
        ExactPoly::var(Var::T)
    }

    pub fn q() -> Self {
        ExactPoly::var(Var::Q)
    }

    pub fn alpha() -> Self {
        ExactPoly::var(Var::Alpha)
    }

    /// Builds a polynomial from `(coefficient, monomial)` pairs, merging duplicates.
    pub fn from_terms<I>(terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut p = ExactPoly::zero();
        for (c, m) in terms {
            p.add_term(c, m);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .get(&Monomial::ONE)
                .map(|c| c.is_one())
                .unwrap_or(false)
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms.get(m).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn leading_term(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// The constant value, if the polynomial has no indeterminates.
    pub fn as_constant(&self) -> Option<Rational> {
        match self.terms.len() {
            0 => Some(Rational::zero()),
            1 => self.terms.get(&Monomial::ONE).cloned(),
            _ => None,
        }
    }

    pub fn degree_in(&self, v: Var) -> Option<u32> {
        self.terms.keys().map(|m| m.exp(v)).max()
    }

    /// True if every coefficient is a nonnegative integer.
    pub fn has_nonnegative_integer_coeffs(&self) -> bool {
        self.terms
            .values()
            .all(|c| c.is_integer() && !c.is_negative())
    }

    pub fn add_term(&mut self, c: Rational, m: Monomial) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    pub fn scale(&self, c: &Rational) -> ExactPoly {
        if c.is_zero() {
            return ExactPoly::zero();
        }
        ExactPoly {
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Multiplies by a monomial.
    pub fn shift(&self, by: &Monomial) -> ExactPoly {
        ExactPoly {
            terms: self
                .terms
                .iter()
                .map(|(m, v)| (m.mul(by), v.clone()))
                .collect(),
        }
    }

    pub fn pow(&self, mut e: u32) -> ExactPoly {
        let mut base = self.clone();
        let mut acc = ExactPoly::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Exact quotient `self / divisor`.
    ///
    /// Multivariate long division under graded-lex order; any nonzero
    /// remainder is reported as [`Error::InexactDivision`].
    pub fn exact_div(&self, divisor: &ExactPoly) -> Result<ExactPoly> {
        let inexact = || Error::InexactDivision {
            dividend: self.to_string(),
            divisor: divisor.to_string(),
        };
        let (lead_m, lead_c) = divisor.leading_term().ok_or_else(inexact)?;
        let mut rem = self.clone();
        let mut quot = ExactPoly::zero();
        while let Some((rm, rc)) = rem.leading_term() {
            let m = rm.checked_div(lead_m).ok_or_else(inexact)?;
            let c = rc / lead_c;
            let step = ExactPoly::term(c.clone(), m);
            rem -= &(divisor * &step);
            quot.add_term(c, m);
        }
        Ok(quot)
    }

    /// Replaces the bound indeterminates; unbound ones are left as they are.
    pub fn substitute(&self, bindings: &Bindings) -> ExactPoly {
        if bindings.is_empty() {
            return self.clone();
        }
        let mut powers: HashMap<(Var, u32), ExactPoly> = HashMap::new();
        let mut out = ExactPoly::zero();
        for (m, c) in &self.terms {
            let mut kept = Monomial::ONE;
            let mut factor = ExactPoly::constant(c.clone());
            for v in Var::ALL {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                match bindings.get(v) {
                    Some(value) => {
                        let p = powers.entry((v, e)).or_insert_with(|| value.pow(e));
                        factor = &factor * p;
                    }
                    None => *kept.exp_mut(v) = e,
                }
            }
            out += &factor.shift(&kept);
        }
        out
    }
}

/// A partial assignment of the indeterminates to polynomial (or constant) values.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Bindings {
    t: Option<ExactPoly>,
    q: Option<ExactPoly>,
    alpha: Option<ExactPoly>,
}

impl Bindings {
    pub fn new() -> Self {
        Bindings::default()
    }

    pub fn with(mut self, v: Var, value: ExactPoly) -> Self {
        self.set(v, value);
        self
    }

    pub fn with_int(self, v: Var, value: i64) -> Self {
        self.with(v, ExactPoly::from_int(value))
    }

    pub fn set(&mut self, v: Var, value: ExactPoly) {
        match v {
            Var::T => self.t = Some(value),
            Var::Q => self.q = Some(value),
            Var::Alpha => self.alpha = Some(value),
        }
    }

    pub fn get(&self, v: Var) -> Option<&ExactPoly> {
        match v {
            Var::T => self.t.as_ref(),
            Var::Q => self.q.as_ref(),
            Var::Alpha => self.alpha.as_ref(),
        }
    }

    pub fn is_empty(&self) -> bool {
        self.t.is_none() && self.q.is_none() && self.alpha.is_none()
    }

    /// Parses `q=1,t=3/2,alpha=0`.
    pub fn parse(spec: &str) -> Result<Bindings> {
        let mut b = Bindings::new();
        for item in spec.split(',').map(str::trim).filter(|s| !s.is_empty()) {
            let (name, value) = item
                .split_once('=')
                .ok_or_else(|| Error::Parse(format!("expected NAME=VALUE, got `{item}`")))?;
            let v = Var::parse(name.trim())?;
            let r = parse_rational(value.trim())?;
            b.set(v, ExactPoly::constant(r));
        }
        Ok(b)
    }
}

pub fn parse_rational(s: &str) -> Result<Rational> {
    let bad = || Error::Parse(format!("not a rational number: `{s}`"));
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n.trim(), d.trim()),
        None => (s, "1"),
    };
    let n: BigInt = n.parse().map_err(|_| bad())?;
    let d: BigInt = d.parse().map_err(|_| bad())?;
    if d.is_zero() {
        return Err(bad());
    }
    Ok(Rational::new(n, d))
}

impl fmt::Debug for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "ExactPoly({self})")
    }
}

/// Canonical text form: terms in descending graded-lex order, e.g. `t^2*q + 2*t`.
impl fmt::Display for ExactPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            match (i, neg) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let mag = c.abs();
            if m.is_one() {
                write!(f, "{mag}")?;
            } else if mag.is_one() {
                write!(f, "{m}")?;
            } else {
                write!(f, "{mag}*{m}")?;
            }
        }
        Ok(())
    }
}

impl From<Rational> for ExactPoly {
    fn from(c: Rational) -> Self {
        ExactPoly::constant(c)
    }
}

impl From<i64> for ExactPoly {
    fn from(c: i64) -> Self {
        ExactPoly::from_int(c)
    }
}

impl AddAssign<&ExactPoly> for ExactPoly {
    fn add_assign(&mut self, rhs: &ExactPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(c.clone(), *m);
        }
    }
}

impl AddAssign for ExactPoly {
    fn add_assign(&mut self, rhs: ExactPoly) {
        if self.terms.len() < rhs.terms.len() {
            let lhs = std::mem::replace(self, rhs);
            *self += &lhs;
        } else {
            for (m, c) in rhs.terms {
                self.add_term(c, m);
            }
        }
    }
}

impl SubAssign<&ExactPoly> for ExactPoly {
    fn sub_assign(&mut self, rhs: &ExactPoly) {
        for (m, c) in &rhs.terms {
            self.add_term(-c.clone(), *m);
        }
    }
}

impl Add<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn add(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = self.clone();
        out += rhs;
        out
    }
}

impl Add for ExactPoly {
    type Output = ExactPoly;
    fn add(mut self, rhs: ExactPoly) -> ExactPoly {
        self += rhs;
        self
    }
}

impl Sub<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn sub(self, rhs: &ExactPoly) -> ExactPoly {
        let mut out = self.clone();
        out -= rhs;
        out
    }
}

impl Sub for ExactPoly {
    type Output = ExactPoly;
    fn sub(mut self, rhs: ExactPoly) -> ExactPoly {
        self -= &rhs;
        self
    }
}

impl Neg for &ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        ExactPoly {
            terms: self.terms.iter().map(|(m, c)| (*m, -c.clone())).collect(),
        }
    }
}

impl Neg for ExactPoly {
    type Output = ExactPoly;
    fn neg(self) -> ExactPoly {
        -&self
    }
}

impl Mul<&ExactPoly> for &ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: &ExactPoly) -> ExactPoly {
        if self.is_zero() || rhs.is_zero() {
            return ExactPoly::zero();
        }
        let mut acc: HashMap<Monomial, Rational> =
            HashMap::with_capacity(self.terms.len() * rhs.terms.len());
        for (ma, ca) in &self.terms {
            for (mb, cb) in &rhs.terms {
                let c = ca * cb;
                match acc.entry(ma.mul(mb)) {
                    std::collections::hash_map::Entry::Vacant(e) => {
                        e.insert(c);
                    }
                    std::collections::hash_map::Entry::Occupied(mut e) => *e.get_mut() += c,
                }
            }
        }
        ExactPoly {
            terms: acc.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }
}

impl Mul for ExactPoly {
    type Output = ExactPoly;
    fn mul(self, rhs: ExactPoly) -> ExactPoly {
        &self * &rhs
    }
}

impl MulAssign<&ExactPoly> for ExactPoly {
    fn mul_assign(&mut self, rhs: &ExactPoly) {
        *self = &*self * rhs;
    }
}

impl Sum for ExactPoly {
    fn sum<I: Iterator<Item = ExactPoly>>(iter: I) -> Self {
        iter.fold(ExactPoly::zero(), |acc, p| acc + p)
    }
}

impl<'a> Sum<&'a ExactPoly> for ExactPoly {
    fn sum<I: Iterator<Item = &'a ExactPoly>>(iter: I) -> Self {
        iter.fold(ExactPoly::zero(), |mut acc, p| {
            acc += p;
            acc
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn ring_examples() {
        let t = ExactPoly::t();
        let q = ExactPoly::q();
        assert_eq!(&(&t + &q) + &(-&q), t);
        assert_eq!(&t * &q, ExactPoly::monomial(Monomial::new(1, 1, 0)));
        assert!((&t * &ExactPoly::zero()).is_zero());
    }

    #[test]
    fn division_examples() {
        let t2 = ExactPoly::t().pow(2);
        let a = &t2 + &(&t2 * &ExactPoly::q());
        let b = ExactPoly::one() + ExactPoly::q();
        assert_eq!(a.exact_div(&b).unwrap(), t2);
        assert_eq!(
            ExactPoly::t().pow(3).exact_div(&ExactPoly::t()).unwrap(),
            t2
        );
        assert!(matches!(
            ExactPoly::t().exact_div(&ExactPoly::q()),
            Err(Error::InexactDivision { .. })
        ));
        assert!(ExactPoly::t().exact_div(&ExactPoly::zero()).is_err());
    }

    #[test]
    fn zero_divided_is_zero() {
        assert!(ExactPoly::zero()
            .exact_div(&ExactPoly::t())
            .unwrap()
            .is_zero());
    }

    #[test]
    fn substitution_examples() {
        let p = &(&ExactPoly::t() * &ExactPoly::q()) + &ExactPoly::alpha();
        let out = p.substitute(&Bindings::new().with_int(Var::Alpha, 0));
        assert_eq!(out, &ExactPoly::t() * &ExactPoly::q());
        // q -> t + 1 inside t*q^2
        let p = ExactPoly::monomial(Monomial::new(1, 2, 0));
        let out = p.substitute(&Bindings::new().with(Var::Q, ExactPoly::t() + ExactPoly::one()));
        let tp1 = ExactPoly::t() + ExactPoly::one();
        assert_eq!(out, &ExactPoly::t() * &(&tp1 * &tp1));
    }

    #[test]
    fn rendering() {
        let p = ExactPoly::from_terms([
            (r(1, 1), Monomial::new(2, 1, 0)),
            (r(2, 1), Monomial::new(1, 0, 0)),
        ]);
        assert_eq!(p.to_string(), "t^2*q + 2*t");
        let p = ExactPoly::from_terms([
            (r(-1, 1), Monomial::new(1, 0, 0)),
            (r(3, 2), Monomial::ONE),
            (r(-2, 1), Monomial::new(0, 0, 2)),
        ]);
        assert_eq!(p.to_string(), "-2*alpha^2 - t + 3/2");
        assert_eq!(ExactPoly::zero().to_string(), "0");
        assert_eq!(ExactPoly::from_int(-4).to_string(), "-4");
    }

    #[test]
    fn graded_lex_order() {
        let a = Monomial::new(0, 0, 3);
        let b = Monomial::new(2, 0, 0);
        let c = Monomial::new(1, 1, 1);
        assert!(b < a && a < c);
        assert!(Monomial::new(0, 2, 0) > Monomial::new(0, 1, 1));
    }

    #[test]
    fn parse_bindings() {
        let b = Bindings::parse("q=1, t=3/2,alpha=-2").unwrap();
        assert_eq!(b.get(Var::T), Some(&ExactPoly::constant(r(3, 2))));
        assert_eq!(b.get(Var::Alpha), Some(&ExactPoly::from_int(-2)));
        assert!(Bindings::parse("z=1").is_err());
        assert!(Bindings::parse("q=1/0").is_err());
        assert!(Bindings::parse("q").is_err());
    }
}

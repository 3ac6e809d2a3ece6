//! The seven monic orthogonal polynomial families, each given by its
//! three-term recurrence `x P_m = P_{m+1} + b(m) P_m + c(m) P_{m-1}`.

use std::fmt;
use std::str::FromStr;

use crate::algebra::{q_integer, rational, Bindings, ExactPoly, Var, XPoly};
use crate::cumulant;
use crate::error::{Error, Result};
use crate::limits::Limits;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Hermite,
    Charlier,
    Chebyshev2,
    FreeCharlier,
    QHermite,
    BigQHermite,
    Interp,
}

impl Family {
    pub const ALL: [Family; 7] = [
        Family::Hermite,
        Family::Charlier,
        Family::Chebyshev2,
        Family::FreeCharlier,
        Family::QHermite,
        Family::BigQHermite,
        Family::Interp,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Family::Hermite => "hermite",
            Family::Charlier => "charlier",
            Family::Chebyshev2 => "chebyshev2",
            Family::FreeCharlier => "free_charlier",
            Family::QHermite => "q_hermite",
            Family::BigQHermite => "big_q_hermite",
            Family::Interp => "interp",
        }
    }

    pub fn spec(self) -> FamilySpec {
        let (q_mode, cumulants) = match self {
            Family::Hermite => (QMode::FixedOne, CumulantKind::Gaussian),
            Family::Charlier => (QMode::FixedOne, CumulantKind::Poisson),
            Family::Chebyshev2 => (QMode::FixedZero, CumulantKind::Gaussian),
            Family::FreeCharlier => (QMode::FixedZero, CumulantKind::Poisson),
            Family::QHermite => (QMode::Symbolic, CumulantKind::Gaussian),
            Family::BigQHermite => (QMode::Symbolic, CumulantKind::Poisson),
            Family::Interp => (QMode::Symbolic, CumulantKind::Interpolating),
        };
        FamilySpec {
            family: self,
            q_mode,
            cumulants,
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Family> {
        let key = s.trim().to_ascii_lowercase().replace('-', "_");
        Family::ALL
            .into_iter()
            .find(|f| f.name() == key)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

/// How the q-weight `q^rc(π)` is evaluated for a family.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum QMode {
    Symbolic,
    /// Classical independence: `q := 1`.
    FixedOne,
    /// Free independence: `q := 0`, which kills every crossing partition.
    FixedZero,
}

/// Cumulant pattern `R_m(t)` for `m >= 2` (every family is centered, `R_1 = 0`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum CumulantKind {
    /// `R_2 = t`, higher cumulants vanish.
    Gaussian,
    /// `R_m = t` for every `m >= 2`.
    Poisson,
    /// `R_m = alpha^(m-2) t`.
    Interpolating,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct FamilySpec {
    pub family: Family,
    pub q_mode: QMode,
    pub cumulants: CumulantKind,
}

pub fn family_spec(name: &str) -> Result<FamilySpec> {
    Ok(name.parse::<Family>()?.spec())
}

impl FamilySpec {
    pub fn name(&self) -> &'static str {
        self.family.name()
    }

    /// Diagonal recurrence coefficient `b(m)`.
    pub fn b(&self, m: usize) -> ExactPoly {
        let m32 = m as u32;
        match self.family {
            Family::Hermite | Family::Chebyshev2 | Family::QHermite => ExactPoly::zero(),
            Family::Charlier => ExactPoly::from_int(m as i64),
            Family::FreeCharlier => {
                if m == 0 {
                    ExactPoly::zero()
                } else {
                    ExactPoly::one()
                }
            }
            Family::BigQHermite => q_integer(m32),
            Family::Interp => &ExactPoly::alpha() * &q_integer(m32),
        }
    }

    /// Off-diagonal recurrence coefficient `c(m)`, used for `m >= 1`.
    pub fn c(&self, m: usize) -> ExactPoly {
        let t = ExactPoly::t();
        match self.family {
            Family::Hermite | Family::Charlier => t.scale(&rational(m as i64)),
            Family::Chebyshev2 | Family::FreeCharlier => t,
            Family::QHermite | Family::BigQHermite | Family::Interp => &t * &q_integer(m as u32),
        }
    }

    /// Bindings that realize the q-mode on a symbolic expression.
    pub fn q_bindings(&self) -> Bindings {
        match self.q_mode {
            QMode::Symbolic => Bindings::new(),
            QMode::FixedOne => Bindings::new().with_int(Var::Q, 1),
            QMode::FixedZero => Bindings::new().with_int(Var::Q, 0),
        }
    }

    /// `q^k` under the family's q-mode.
    pub fn q_power(&self, k: usize) -> ExactPoly {
        match (self.q_mode, k) {
            (QMode::Symbolic, k) => ExactPoly::q().pow(k as u32),
            (QMode::FixedOne, _) | (QMode::FixedZero, 0) => ExactPoly::one(),
            (QMode::FixedZero, _) => ExactPoly::zero(),
        }
    }
}

/// `P_0, ..., P_upto` generated by the recurrence.
pub fn polynomials(f: &FamilySpec, upto: usize, limits: &Limits) -> Result<Vec<XPoly>> {
    limits.check_degree(upto)?;
    let mut out = Vec::with_capacity(upto + 1);
    out.push(XPoly::one());
    let bindings = f.q_bindings();
    for m in 0..upto {
        let prev = if m == 0 {
            XPoly::zero()
        } else {
            out[m - 1].clone()
        };
        let cur = &out[m];
        let b = f.b(m).substitute(&bindings);
        let next = &(&cur.mul_x() - &cur.scale(&b))
            - &if m == 0 {
                XPoly::zero()
            } else {
                prev.scale(&f.c(m).substitute(&bindings))
            };
        out.push(next);
    }
    Ok(out)
}

/// The monic degree-`m` polynomial of the family.
pub fn polynomial(f: &FamilySpec, m: usize, limits: &Limits) -> Result<XPoly> {
    Ok(polynomials(f, m, limits)?.pop().expect("nonempty"))
}

/// `h_m = c(1) c(2) ... c(m)`, the squared norm of the monic `P_m`.
pub fn norm_squared(f: &FamilySpec, m: usize) -> ExactPoly {
    let bindings = f.q_bindings();
    (1..=m).fold(ExactPoly::one(), |acc, j| {
        &acc * &f.c(j).substitute(&bindings)
    })
}

/// `∫ p dμ_f`, by replacing `x^d` with the `d`-th moment.
pub fn integrate(f: &FamilySpec, p: &XPoly, limits: &Limits) -> Result<ExactPoly> {
    let Some(deg) = p.degree() else {
        return Ok(ExactPoly::zero());
    };
    limits.check_moment(deg)?;
    let mut total = ExactPoly::zero();
    for (d, coeff) in p.coeffs().iter().enumerate() {
        if coeff.is_zero() {
            continue;
        }
        let moment = cumulant::moment(f, d, limits)?;
        if !moment.is_zero() {
            total += &(coeff * &moment);
        }
    }
    Ok(total)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::q_factorial;

    fn xp(coeffs: Vec<ExactPoly>) -> XPoly {
        XPoly::from_coeffs(coeffs)
    }

    fn int(c: i64) -> ExactPoly {
        ExactPoly::from_int(c)
    }

    #[test]
    fn recurrence_coefficients() {
        let h = family_spec("hermite").unwrap();
        assert!(h.b(3).is_zero());
        assert_eq!(h.c(3), ExactPoly::t().scale(&rational(3)));
        let big = family_spec("big_q_hermite").unwrap();
        assert_eq!(big.b(2), q_integer(2));
        assert_eq!(big.c(3), &ExactPoly::t() * &q_integer(3));
        let interp = family_spec("interp").unwrap();
        assert_eq!(interp.b(2), &ExactPoly::alpha() * &q_integer(2));
        assert_eq!(interp.c(2), &ExactPoly::t() * &q_integer(2));
        let fc = family_spec("free_charlier").unwrap();
        assert!(fc.b(0).is_zero());
        assert!(fc.b(1).is_one() && fc.b(5).is_one());
        assert!(matches!(
            family_spec("laguerre"),
            Err(Error::UnknownFamily(_))
        ));
    }

    #[test]
    fn q_modes() {
        assert_eq!(Family::Hermite.spec().q_mode, QMode::FixedOne);
        assert_eq!(Family::Charlier.spec().q_mode, QMode::FixedOne);
        assert_eq!(Family::Chebyshev2.spec().q_mode, QMode::FixedZero);
        assert_eq!(Family::FreeCharlier.spec().q_mode, QMode::FixedZero);
        for f in [Family::QHermite, Family::BigQHermite, Family::Interp] {
            assert_eq!(f.spec().q_mode, QMode::Symbolic);
        }
    }

    #[test]
    fn small_polynomials() {
        let l = Limits::default();
        let t = ExactPoly::t();
        let hermite = polynomial(&Family::Hermite.spec(), 2, &l).unwrap();
        assert_eq!(hermite, xp(vec![-&t, int(0), int(1)]));
        let charlier = polynomial(&Family::Charlier.spec(), 2, &l).unwrap();
        assert_eq!(charlier, xp(vec![-&t, int(-1), int(1)]));
        let cheb = polynomial(&Family::Chebyshev2.spec(), 3, &l).unwrap();
        assert_eq!(
            cheb,
            xp(vec![int(0), t.scale(&rational(-2)), int(0), int(1)])
        );
        let big = polynomial(&Family::BigQHermite.spec(), 1, &l).unwrap();
        assert_eq!(big, XPoly::x());
    }

    #[test]
    fn degree_cap() {
        let l = Limits::default();
        assert!(matches!(
            polynomial(&Family::Hermite.spec(), 17, &l),
            Err(Error::DegreeLimit {
                degree: 17,
                cap: 16
            })
        ));
    }

    #[test]
    fn monic_of_exact_degree() {
        let l = Limits::default();
        for f in Family::ALL {
            for (m, p) in polynomials(&f.spec(), 8, &l).unwrap().iter().enumerate() {
                assert_eq!(p.degree(), Some(m), "{f} m={m}");
                assert!(p.is_monic(), "{f} m={m}");
            }
        }
    }

    #[test]
    fn norm_formulas() {
        let t = ExactPoly::t();
        assert_eq!(
            norm_squared(&Family::Hermite.spec(), 3),
            t.pow(3).scale(&rational(6))
        );
        assert_eq!(norm_squared(&Family::Chebyshev2.spec(), 3), t.pow(3));
        assert_eq!(
            norm_squared(&Family::QHermite.spec(), 2),
            &q_factorial(2) * &t.pow(2)
        );
        assert!(norm_squared(&Family::Interp.spec(), 0).is_one());
    }

    #[test]
    fn integrate_examples() {
        let l = Limits::default();
        let h = Family::Hermite.spec();
        let t = ExactPoly::t();
        assert_eq!(integrate(&h, &XPoly::x_pow(2), &l).unwrap(), t);
        assert_eq!(
            integrate(&h, &XPoly::x_pow(4), &l).unwrap(),
            t.pow(2).scale(&rational(3))
        );
        for f in Family::ALL {
            assert!(integrate(&f.spec(), &XPoly::one(), &l).unwrap().is_one());
            assert!(integrate(&f.spec(), &XPoly::zero(), &l).unwrap().is_zero());
        }
        assert!(matches!(
            integrate(&h, &XPoly::x_pow(15), &l),
            Err(Error::DegreeLimit { .. })
        ));
    }

    #[test]
    fn orthogonality_small() {
        let l = Limits::default();
        for f in Family::ALL {
            let spec = f.spec();
            let ps = polynomials(&spec, 5, &l).unwrap();
            for m in 0..=5 {
                for j in 0..m {
                    let v = integrate(&spec, &(&ps[m] * &ps[j]), &l).unwrap();
                    assert!(v.is_zero(), "{f}: <P{m} P{j}> = {v}");
                }
                let sq = integrate(&spec, &(&ps[m] * &ps[m]), &l).unwrap();
                assert_eq!(sq, norm_squared(&spec, m), "{f} m={m}");
            }
        }
    }
}

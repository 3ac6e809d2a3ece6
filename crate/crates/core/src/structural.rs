//! Products `∏_j P_{n_j}(x)` written directly in the orthogonal basis as sums
//! of partition statistics, before any expectation is taken.
//!
//! Only families with a known closed statistic formula are supported.

use std::collections::HashMap;

use num_integer::binomial;

use crate::algebra::{rational, ExactPoly, XPoly};
use crate::error::{Error, Result};
use crate::family::{polynomials, Family, FamilySpec};
use crate::limits::Limits;
use crate::partition::{Composition, Constraints, PartitionStats, Partitions};

/// Which statistic supplies the power of `t` in the q-Hermite expansion.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub(crate) enum PowerOfT {
    /// Number of two-element blocks. Agrees with the polynomial product.
    PairBlocks,
    /// Singleton depth. Fails already for `(1,1)`; kept for reporting.
    SingletonDepth,
}

fn domain(f: Family) -> Result<Constraints> {
    let base = Constraints::default();
    match f {
        Family::Hermite | Family::QHermite => Ok(base.max_block(2)),
        Family::Chebyshev2 => Ok(base.max_block(2).noncrossing().no_inner_singletons()),
        Family::Charlier => Ok(base),
        Family::FreeCharlier => Ok(base.noncrossing().no_inner_singletons()),
        other => Err(Error::UnsupportedFamily(other.name().into())),
    }
}

fn stat_counts(c: &Composition, cons: Constraints) -> HashMap<PartitionStats, u64> {
    let mut counts = HashMap::new();
    if c.is_empty() {
        counts.insert(PartitionStats::default(), 1);
        return counts;
    }
    for p in Partitions::new(c, cons) {
        *counts.entry(p.stats()).or_insert(0) += 1;
    }
    counts
}

fn add(coeffs: &mut [ExactPoly], index: usize, term: ExactPoly, count: u64) {
    coeffs[index] += &term.scale(&rational(count as i64));
}

fn t_pow(k: usize) -> ExactPoly {
    ExactPoly::t().pow(k as u32)
}

pub(crate) fn coefficients_with(
    f: &FamilySpec,
    c: &Composition,
    power: PowerOfT,
    limits: &Limits,
) -> Result<Vec<ExactPoly>> {
    let cons = domain(f.family)?;
    limits.check_n(c.n())?;
    let mut coeffs = vec![ExactPoly::zero(); c.n() + 1];
    for (st, count) in stat_counts(c, cons) {
        match f.family {
            Family::Hermite | Family::Chebyshev2 => {
                add(&mut coeffs, st.singletons, t_pow(st.pair_blocks), count);
            }
            Family::QHermite => {
                let t_exp = match power {
                    PowerOfT::PairBlocks => st.pair_blocks,
                    PowerOfT::SingletonDepth => st.singleton_depth,
                };
                let w = &f.q_power(st.restricted_crossings + st.singleton_depth) * &t_pow(t_exp);
                add(&mut coeffs, st.singletons, w, count);
            }
            Family::Charlier => {
                let free = st.block_count - st.singletons;
                for l in 0..=free {
                    let w = t_pow(l).scale(&rational(binomial(free as i64, l as i64)));
                    add(&mut coeffs, st.block_count - l, w, count);
                }
            }
            Family::FreeCharlier => {
                let free = st.outer + st.inner_singletons - st.singletons;
                for l in 0..=free {
                    let w = t_pow(st.inner + l).scale(&rational(binomial(free as i64, l as i64)));
                    add(&mut coeffs, st.outer - l, w, count);
                }
            }
            _ => unreachable!("domain rejects unsupported families"),
        }
    }
    Ok(coeffs)
}

/// Basis coefficients of `∏_j P_{n_j}` read off from partition statistics;
/// index `m` multiplies `P_m`.
pub fn structural_coefficients(
    f: &FamilySpec,
    c: &Composition,
    limits: &Limits,
) -> Result<Vec<ExactPoly>> {
    coefficients_with(f, c, PowerOfT::PairBlocks, limits)
}

pub(crate) fn assemble(f: &FamilySpec, coeffs: &[ExactPoly], limits: &Limits) -> Result<XPoly> {
    let basis = polynomials(f, coeffs.len().saturating_sub(1), limits)?;
    Ok(coeffs.iter().zip(&basis).map(|(w, p)| p.scale(w)).sum())
}

/// `∏_j P_{n_j}(x)` as the statistic-weighted sum of basis polynomials.
pub fn product_expansion_statistic(
    f: &FamilySpec,
    c: &Composition,
    limits: &Limits,
) -> Result<XPoly> {
    let coeffs = structural_coefficients(f, c, limits)?;
    assemble(f, &coeffs, limits)
}

/// Families with a statistic expansion.
pub const SUPPORTED: [Family; 5] = [
    Family::Hermite,
    Family::Charlier,
    Family::Chebyshev2,
    Family::FreeCharlier,
    Family::QHermite,
];

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::polynomial;

    fn comp(parts: &[usize]) -> Composition {
        Composition::new(parts.to_vec()).unwrap()
    }

    fn product(f: &FamilySpec, c: &Composition, l: &Limits) -> XPoly {
        c.parts()
            .iter()
            .map(|&d| polynomial(f, d, l).unwrap())
            .fold(XPoly::one(), |a, p| &a * &p)
    }

    #[test]
    fn small_examples() {
        let l = Limits::default();
        let t = ExactPoly::t();
        let c11 = comp(&[1, 1]);
        assert_eq!(
            structural_coefficients(&Family::Hermite.spec(), &c11, &l).unwrap(),
            vec![t.clone(), ExactPoly::zero(), ExactPoly::one()]
        );
        assert_eq!(
            structural_coefficients(&Family::Charlier.spec(), &c11, &l).unwrap(),
            vec![t.clone(), ExactPoly::one(), ExactPoly::one()]
        );
        let qh = Family::QHermite.spec();
        let coeffs = structural_coefficients(&qh, &comp(&[1, 2]), &l).unwrap();
        assert_eq!(coeffs[1], &(ExactPoly::one() + ExactPoly::q()) * &t);
        assert!(coeffs[3].is_one());
        assert_eq!(
            product_expansion_statistic(&qh, &comp(&[1, 2]), &l).unwrap(),
            XPoly::x_pow(3) - XPoly::x().scale(&t)
        );
    }

    #[test]
    fn singleton_depth_power_breaks_on_two_singletons() {
        let l = Limits::default();
        let qh = Family::QHermite.spec();
        let c = comp(&[1, 1]);
        let printed = assemble(
            &qh,
            &coefficients_with(&qh, &c, PowerOfT::SingletonDepth, &l).unwrap(),
            &l,
        )
        .unwrap();
        // H_{q,2} + 1 instead of H_{q,2} + t.
        assert_eq!(
            printed,
            XPoly::x_pow(2) - XPoly::constant(ExactPoly::t()) + XPoly::one()
        );
        assert_ne!(printed, product(&qh, &c, &l));
    }

    #[test]
    fn matches_product_up_to_six() {
        let l = Limits::default();
        for f in SUPPORTED {
            let spec = f.spec();
            for c in Composition::all_up_to(6) {
                assert_eq!(
                    product_expansion_statistic(&spec, &c, &l).unwrap(),
                    product(&spec, &c, &l),
                    "{f} {c}"
                );
            }
        }
    }

    #[test]
    fn unsupported_families() {
        let l = Limits::default();
        for f in [Family::BigQHermite, Family::Interp] {
            assert!(matches!(
                product_expansion_statistic(&f.spec(), &comp(&[1]), &l),
                Err(Error::UnsupportedFamily(_))
            ));
        }
    }
}

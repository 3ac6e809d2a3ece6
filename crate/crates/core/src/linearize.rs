//! Linearization coefficients `⟨P_{n_1} ⋯ P_{n_k}⟩` by two independent
//! routes, and expansions of products in the orthogonal basis.
//!
//! The partition route sums `q^rc(π) ∏ R_|B|` over the inhomogeneous
//! partitions `P(n_1, ..., n_k)`. The oracle route builds each `P_{n_j}`
//! from its recurrence, multiplies them out, and integrates.

use std::fmt;

use crate::algebra::{ExactPoly, XPoly};
use crate::cumulant::{support, weight_histogram};
use crate::error::Result;
use crate::family::{integrate, norm_squared, polynomials, Family, FamilySpec};
use crate::limits::Limits;
use crate::partition::Composition;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Method {
    PartitionSum,
    Oracle,
}

impl Method {
    pub fn name(self) -> &'static str {
        match self {
            Method::PartitionSum => "partition",
            Method::Oracle => "oracle",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LinearizationResult {
    pub family: Family,
    pub composition: Composition,
    pub value: ExactPoly,
    pub method: Method,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExpansionResult {
    pub family: Family,
    pub composition: Composition,
    /// `coeffs[m]` multiplies `P_m`.
    pub coeffs: Vec<ExactPoly>,
}

impl ExpansionResult {
    /// `Σ_m coeffs[m] P_m`.
    pub fn reconstruct(&self, limits: &Limits) -> Result<XPoly> {
        let basis = polynomials(
            &self.family.spec(),
            self.coeffs.len().saturating_sub(1),
            limits,
        )?;
        Ok(self
            .coeffs
            .iter()
            .zip(&basis)
            .map(|(c, p)| p.scale(c))
            .sum())
    }
}

fn partition_sum_capped(f: &FamilySpec, c: &Composition, cap: usize) -> Result<ExactPoly> {
    crate::limits::check_size(c.n(), cap)?;
    if c.is_empty() {
        return Ok(ExactPoly::one());
    }
    Ok(weight_histogram(c, support(f)).evaluate(f))
}

/// `Σ_{π ∈ P(n_1, ..., n_k)} q^rc(π) ∏_B R_|B|`.
pub fn linearize_partition_sum(
    f: &FamilySpec,
    c: &Composition,
    limits: &Limits,
) -> Result<ExactPoly> {
    partition_sum_capped(f, c, limits.max_n)
}

/// `∫ ∏_j P_{n_j} dμ_f`, with every `P_{n_j}` generated by the recurrence.
pub fn linearize_oracle(f: &FamilySpec, c: &Composition, limits: &Limits) -> Result<ExactPoly> {
    limits.check_n(c.n())?;
    let top = c.parts().iter().copied().max().unwrap_or(0);
    let basis = polynomials(f, top, limits)?;
    let product = c
        .parts()
        .iter()
        .fold(XPoly::one(), |acc, &d| &acc * &basis[d]);
    integrate(f, &product, limits)
}

pub fn linearize(
    f: &FamilySpec,
    c: &Composition,
    method: Method,
    limits: &Limits,
) -> Result<LinearizationResult> {
    let value = match method {
        Method::PartitionSum => linearize_partition_sum(f, c, limits)?,
        Method::Oracle => linearize_oracle(f, c, limits)?,
    };
    Ok(LinearizationResult {
        family: f.family,
        composition: c.clone(),
        value,
        method,
    })
}

/// Coefficients of `∏_j P_{n_j}` in the basis `P_0, ..., P_n`:
/// `coeffs[m] = ⟨P_{n_1} ⋯ P_{n_k} P_m⟩ / h_m`.
///
/// The extended composition `(n_1, ..., n_k, m)` may total up to twice the
/// input; it is enumerated under a cap of `2 * limits.max_n`.
pub fn expansion_coefficients(
    f: &FamilySpec,
    c: &Composition,
    limits: &Limits,
) -> Result<ExpansionResult> {
    limits.check_n(c.n())?;
    let n = c.n();
    let mut coeffs = Vec::with_capacity(n + 1);
    for m in 0..=n {
        let numerator = partition_sum_capped(f, &c.extended(m), 2 * limits.max_n)?;
        let coeff = numerator.exact_div(&norm_squared(f, m))?;
        coeffs.push(coeff);
    }
    Ok(ExpansionResult {
        family: f.family,
        composition: c.clone(),
        coeffs,
    })
}

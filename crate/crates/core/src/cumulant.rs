//! Cumulant sequences, the q-weighted partition functional
//! `R_π = q^rc(π) ∏_B R_|B|`, and moments through the moment-cumulant formula.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_bigint::BigInt;

use crate::algebra::ExactPoly;
use crate::error::Result;
use crate::family::{CumulantKind, FamilySpec};
use crate::limits::Limits;
use crate::partition::{Composition, Constraints, Partitions, SetPartition};

/// `R_m(t)`. Cumulants carry no `q`; the deformation lives entirely in the
/// crossing weight.
pub fn cumulant(f: &FamilySpec, m: usize) -> ExactPoly {
    if m < 2 {
        return ExactPoly::zero();
    }
    match f.cumulants {
        CumulantKind::Gaussian if m == 2 => ExactPoly::t(),
        CumulantKind::Gaussian => ExactPoly::zero(),
        CumulantKind::Poisson => ExactPoly::t(),
        CumulantKind::Interpolating => &ExactPoly::alpha().pow(m as u32 - 2) * &ExactPoly::t(),
    }
}

/// `q^rc(p) ∏_B R_|B|` under the family's q-mode.
pub fn weighted_cumulant_product(f: &FamilySpec, p: &SetPartition) -> ExactPoly {
    let mut acc = ExactPoly::one();
    for size in p.block_sizes() {
        let r = cumulant(f, size);
        if r.is_zero() {
            return ExactPoly::zero();
        }
        acc = &acc * &r;
    }
    &acc * &f.q_power(p.restricted_crossings())
}

/// The smallest enumeration filter outside of which every weight vanishes.
pub fn support(f: &FamilySpec) -> Constraints {
    let c = Constraints::default().no_singletons();
    match f.cumulants {
        CumulantKind::Gaussian => c.max_block(2),
        CumulantKind::Poisson | CumulantKind::Interpolating => c,
    }
}

/// `E[X^n] = Σ_{π ∈ P(n)} R_π`; 1 for `n = 0`.
pub fn moment_from_cumulants(f: &FamilySpec, n: usize, limits: &Limits) -> Result<ExactPoly> {
    limits.check_moment(n)?;
    if n == 0 {
        return Ok(ExactPoly::one());
    }
    Ok(weight_histogram(&Composition::ones(n), support(f)).evaluate(f))
}

pub(crate) fn moment(f: &FamilySpec, n: usize, limits: &Limits) -> Result<ExactPoly> {
    moment_from_cumulants(f, n, limits)
}

/// Counts of partitions grouped by restricted crossings and block-size multiset.
///
/// Every weight `R_π` is a function of exactly these two statistics, so one
/// histogram serves every family that shares an enumeration filter.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeightHistogram {
    /// Key layout: `rc` as two little-endian bytes, then block sizes ascending.
    entries: HashMap<Box<[u8]>, u64>,
}

const KEY_CAP: usize = 2 + crate::limits::ABSOLUTE_MAX_N;

impl WeightHistogram {
    fn record(&mut self, key: &[u8], count: u64) {
        if let Some(slot) = self.entries.get_mut(key) {
            *slot += count;
        } else {
            self.entries.insert(key.into(), count);
        }
    }

    fn merge(mut self, other: WeightHistogram) -> WeightHistogram {
        let (mut big, small) = if self.entries.len() >= other.entries.len() {
            (std::mem::take(&mut self), other)
        } else {
            (other, self)
        };
        for (k, v) in small.entries {
            big.record(&k, v);
        }
        big
    }

    /// Number of partitions recorded.
    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// `(rc, sorted block sizes, count)` triples.
    pub fn entries(&self) -> impl Iterator<Item = (usize, &[u8], u64)> + '_ {
        self.entries.iter().map(|(k, &v)| {
            let rc = u16::from_le_bytes([k[0], k[1]]) as usize;
            (rc, &k[2..], v)
        })
    }

    /// `Σ count · q^rc · ∏ R_size` for the family.
    pub fn evaluate(&self, f: &FamilySpec) -> ExactPoly {
        let mut cumulants: Vec<Option<ExactPoly>> = Vec::new();
        let mut total = ExactPoly::zero();
        for (rc, sizes, count) in self.entries() {
            let mut w = f.q_power(rc);
            for &s in sizes {
                if w.is_zero() {
                    break;
                }
                let s = s as usize;
                if cumulants.len() <= s {
                    cumulants.resize(s + 1, None);
                }
                let r = cumulants[s].get_or_insert_with(|| cumulant(f, s));
                w = &w * r;
            }
            if !w.is_zero() {
                total += &w.scale(&BigInt::from(count).into());
            }
        }
        total
    }
}

type CacheKey = (Composition, Constraints);

fn cache() -> &'static Mutex<HashMap<CacheKey, Arc<WeightHistogram>>> {
    static CACHE: OnceLock<Mutex<HashMap<CacheKey, Arc<WeightHistogram>>>> = OnceLock::new();
    CACHE.get_or_init(Default::default)
}

/// Histogram of `P(c)` restricted to `cons`, memoized process-wide.
///
/// Callers enforce size caps before asking.
pub fn weight_histogram(c: &Composition, cons: Constraints) -> Arc<WeightHistogram> {
    let key = (c.clone(), cons);
    if let Some(h) = cache().lock().expect("histogram cache poisoned").get(&key) {
        return Arc::clone(h);
    }
    let h = Arc::new(build_histogram(c, cons));
    cache()
        .lock()
        .expect("histogram cache poisoned")
        .entry(key)
        .or_insert(h)
        .clone()
}

/// Drops every memoized histogram.
pub fn clear_cache() {
    cache().lock().expect("histogram cache poisoned").clear();
}

fn build_histogram(c: &Composition, cons: Constraints) -> WeightHistogram {
    Partitions::par_fold(
        c,
        cons,
        WeightHistogram::default,
        |mut acc, leaf| {
            let mut key = [0u8; KEY_CAP];
            let rc = u16::try_from(leaf.restricted_crossings()).expect("rc fits in u16");
            key[..2].copy_from_slice(&rc.to_le_bytes());
            let mut len = 2;
            for size in leaf.block_sizes() {
                key[len] = size as u8;
                len += 1;
            }
            key[2..len].sort_unstable();
            acc.record(&key[..len], 1);
            acc
        },
        WeightHistogram::merge,
    )
}

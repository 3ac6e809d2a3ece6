use crate::error::{Error, Result};

/// Environment variable that overrides [`Limits::max_n`].
pub const MAX_N_ENV: &str = "LINCO_MAX_N";

/// Hard ceiling on any enumerated ground set; block group masks are `u64`.
pub const ABSOLUTE_MAX_N: usize = 64;

/// Size caps. Exceeding one is an error, never a silent truncation.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Limits {
    /// Largest composition total accepted by the partition-sum routes.
    pub max_n: usize,
    /// Largest polynomial degree generated from a recurrence.
    pub max_degree: usize,
    /// Largest moment order used by integration.
    pub max_moment: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            max_n: 12,
            max_degree: 16,
            max_moment: 14,
        }
    }
}

impl Limits {
    /// Defaults, with `max_n` taken from `LINCO_MAX_N` when set. The moment and
    /// degree caps grow with it so the oracle can still reach every admitted size.
    pub fn from_env() -> Result<Self> {
        let mut limits = Limits::default();
        if let Ok(raw) = std::env::var(MAX_N_ENV) {
            let n: usize = raw
                .trim()
                .parse()
                .map_err(|_| Error::Parse(format!("{MAX_N_ENV}={raw} is not a size")))?;
            limits.max_n = n.min(ABSOLUTE_MAX_N);
            limits.max_moment = limits.max_moment.max(limits.max_n);
            limits.max_degree = limits.max_degree.max(limits.max_n);
        }
        Ok(limits)
    }

    pub fn with_max_n(mut self, n: usize) -> Self {
        self.max_n = n;
        self
    }

    pub fn check_n(&self, n: usize) -> Result<()> {
        check_size(n, self.max_n)
    }

    pub fn check_degree(&self, d: usize) -> Result<()> {
        if d > self.max_degree {
            return Err(Error::DegreeLimit {
                degree: d,
                cap: self.max_degree,
            });
        }
        Ok(())
    }

    pub fn check_moment(&self, d: usize) -> Result<()> {
        if d > self.max_moment {
            return Err(Error::DegreeLimit {
                degree: d,
                cap: self.max_moment,
            });
        }
        Ok(())
    }
}

pub(crate) fn check_size(n: usize, cap: usize) -> Result<()> {
    let cap = cap.min(ABSOLUTE_MAX_N);
    if n > cap {
        return Err(Error::SizeLimit { n, cap });
    }
    Ok(())
}

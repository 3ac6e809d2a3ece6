//! Set partitions of `{1, ..., n}`, compositions, and the statistics the
//! linearization formulas are written in.

mod enumerate;
mod stats;

pub use enumerate::{
    enumerate_inhomogeneous, enumerate_partitions, Constraints, PartitionFilter, Partitions,
};
pub use stats::PartitionStats;

use std::fmt;

use crate::error::{Error, Result};

/// A set partition in canonical form: elements ascending inside each block,
/// blocks ordered by their minimum. Elements are 1-based.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl SetPartition {
    /// Validates and canonicalizes raw blocks covering `{1, ..., n}`.
    pub fn canonicalize<I, B>(raw_blocks: I, n: usize) -> Result<SetPartition>
    where
        I: IntoIterator<Item = B>,
        B: IntoIterator<Item = usize>,
    {
        if n == 0 {
            return Err(Error::MalformedPartition(
                "ground set must be nonempty".into(),
            ));
        }
        let mut seen = vec![false; n];
        let mut blocks = Vec::new();
        for raw in raw_blocks {
            let mut block: Vec<usize> = raw.into_iter().collect();
            if block.is_empty() {
                return Err(Error::MalformedPartition("empty block".into()));
            }
            block.sort_unstable();
            for &e in &block {
                if e == 0 || e > n {
                    return Err(Error::MalformedPartition(format!(
                        "element {e} outside 1..={n}"
                    )));
                }
                if std::mem::replace(&mut seen[e - 1], true) {
                    return Err(Error::MalformedPartition(format!(
                        "element {e} appears twice"
                    )));
                }
            }
            blocks.push(block);
        }
        if let Some(missing) = seen.iter().position(|s| !s) {
            return Err(Error::MalformedPartition(format!(
                "element {} is not covered",
                missing + 1
            )));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(SetPartition { n, blocks })
    }

    /// Builds the partition encoded by a restricted growth string
    /// (`rgs[i]` is the 0-based block label of element `i + 1`).
    pub fn from_rgs(rgs: &[u8]) -> SetPartition {
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for (i, &label) in rgs.iter().enumerate() {
            let label = label as usize;
            debug_assert!(label <= blocks.len(), "not a restricted growth string");
            if label == blocks.len() {
                blocks.push(Vec::new());
            }
            blocks[label].push(i + 1);
        }
        SetPartition {
            n: rgs.len(),
            blocks,
        }
    }

    /// The partition into singletons, `0̂`.
    pub fn finest(n: usize) -> SetPartition {
        SetPartition {
            n,
            blocks: (1..=n).map(|i| vec![i]).collect(),
        }
    }

    /// The one-block partition, `1̂`.
    pub fn coarsest(n: usize) -> SetPartition {
        SetPartition {
            n,
            blocks: vec![(1..=n).collect()],
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(Vec::len)
    }

    /// The restricted growth string of this partition.
    pub fn rgs(&self) -> Vec<u8> {
        let mut labels = vec![0u8; self.n];
        for (b, block) in self.blocks.iter().enumerate() {
            for &e in block {
                labels[e - 1] = b as u8;
            }
        }
        labels
    }

    /// True iff no block holds two elements of the same consecutive group of `c`.
    pub fn is_inhomogeneous(&self, c: &Composition) -> Result<bool> {
        if self.n != c.n() {
            return Err(Error::DimensionMismatch {
                partition: self.n,
                composition: c.n(),
            });
        }
        // Groups are intervals, so along a sorted block they never decrease;
        // a repeat must show up between neighbours.
        let group = c.group_of();
        Ok(self
            .blocks
            .iter()
            .all(|block| block.windows(2).all(|w| group[w[0] - 1] != group[w[1] - 1])))
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for block in &self.blocks {
            f.write_str("(")?;
            for (i, e) in block.iter().enumerate() {
                if i > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{e}")?;
            }
            f.write_str(")")?;
        }
        Ok(())
    }
}

/// The degree tuple `(n_1, ..., n_k)`; every part is at least 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Composition {
    parts: Vec<usize>,
}

impl Composition {
    pub fn new(parts: Vec<usize>) -> Result<Composition> {
        if parts.contains(&0) {
            return Err(Error::InvalidComposition(format!(
                "parts must be positive, got {parts:?}"
            )));
        }
        Ok(Composition { parts })
    }

    /// `(1, 1, ..., 1)`: the composition whose inhomogeneous partitions are all of `P(n)`.
    pub fn ones(n: usize) -> Composition {
        Composition { parts: vec![1; n] }
    }

    /// Parses `2,2,1`. An empty string is the empty composition.
    pub fn parse(s: &str) -> Result<Composition> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(Composition::default());
        }
        let parts = s
            .split(',')
            .map(|p| {
                p.trim()
                    .parse::<usize>()
                    .map_err(|_| Error::Parse(format!("bad degree `{p}` in `{s}`")))
            })
            .collect::<Result<Vec<_>>>()?;
        Composition::new(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.parts
    }

    pub fn len(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    pub fn n(&self) -> usize {
        self.parts.iter().sum()
    }

    /// `(n_1, ..., n_k, m)`; an `m` of zero leaves the composition unchanged.
    pub fn extended(&self, m: usize) -> Composition {
        let mut parts = self.parts.clone();
        if m > 0 {
            parts.push(m);
        }
        Composition { parts }
    }

    /// 0-based group index of every element.
    pub fn group_of(&self) -> Vec<u8> {
        self.parts
            .iter()
            .enumerate()
            .flat_map(|(g, &len)| std::iter::repeat_n(g as u8, len))
            .collect()
    }

    /// The interval partition `π_{n_1, ..., n_k}`.
    pub fn interval_partition(&self) -> Option<SetPartition> {
        let mut start = 1;
        let blocks: Vec<Vec<usize>> = self
            .parts
            .iter()
            .map(|&len| {
                let b = (start..start + len).collect();
                start += len;
                b
            })
            .collect();
        SetPartition::canonicalize(blocks, self.n()).ok()
    }

    /// All `2^(n-1)` compositions of `n` (the empty one for `n = 0`).
    pub fn all_of(n: usize) -> Vec<Composition> {
        if n == 0 {
            return vec![Composition::default()];
        }
        (0u64..1 << (n - 1))
            .map(|cuts| {
                let mut parts = Vec::new();
                let mut len = 1;
                for i in 0..n - 1 {
                    if cuts >> i & 1 == 1 {
                        parts.push(len);
                        len = 1;
                    } else {
                        len += 1;
                    }
                }
                parts.push(len);
                Composition { parts }
            })
            .collect()
    }

    /// All compositions with total between 1 and `max_n`.
    pub fn all_up_to(max_n: usize) -> Vec<Composition> {
        (1..=max_n).flat_map(Composition::all_of).collect()
    }
}

impl fmt::Display for Composition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                f.write_str(",")?;
            }
            write!(f, "{p}")?;
        }
        f.write_str(")")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonicalize_reorders() {
        let p = SetPartition::canonicalize(vec![vec![2, 4], vec![3, 1]], 4).unwrap();
        assert_eq!(p.blocks(), &[vec![1, 3], vec![2, 4]]);
        let p = SetPartition::canonicalize(vec![vec![1], vec![2], vec![3]], 3).unwrap();
        assert_eq!(p, SetPartition::finest(3));
    }

    #[test]
    fn canonicalize_rejects_malformed() {
        let err = |blocks: Vec<Vec<usize>>, n| SetPartition::canonicalize(blocks, n).unwrap_err();
        assert!(matches!(
            err(vec![vec![1, 2], vec![2, 3]], 3),
            Error::MalformedPartition(_)
        ));
        assert!(matches!(
            err(vec![vec![1], vec![3]], 3),
            Error::MalformedPartition(_)
        ));
        assert!(matches!(
            err(vec![vec![1, 4]], 3),
            Error::MalformedPartition(_)
        ));
        assert!(matches!(
            err(vec![vec![1], vec![]], 1),
            Error::MalformedPartition(_)
        ));
        assert!(matches!(
            err(vec![vec![0, 1]], 1),
            Error::MalformedPartition(_)
        ));
    }

    #[test]
    fn rgs_round_trip() {
        let p = SetPartition::canonicalize(vec![vec![1, 4], vec![2, 6], vec![3, 5]], 6).unwrap();
        assert_eq!(p.rgs(), vec![0, 1, 2, 0, 2, 1]);
        assert_eq!(SetPartition::from_rgs(&p.rgs()), p);
        assert_eq!(p.to_string(), "(1,4)(2,6)(3,5)");
    }

    #[test]
    fn inhomogeneity() {
        let c = Composition::new(vec![2, 2]).unwrap();
        let crossing = SetPartition::canonicalize(vec![vec![1, 3], vec![2, 4]], 4).unwrap();
        let adjacent = SetPartition::canonicalize(vec![vec![1, 2], vec![3, 4]], 4).unwrap();
        assert!(crossing.is_inhomogeneous(&c).unwrap());
        assert!(!adjacent.is_inhomogeneous(&c).unwrap());
        assert!(SetPartition::coarsest(4)
            .is_inhomogeneous(&Composition::ones(4))
            .unwrap());
        assert!(matches!(
            crossing.is_inhomogeneous(&Composition::ones(3)),
            Err(Error::DimensionMismatch { .. })
        ));
    }

    #[test]
    fn compositions() {
        assert_eq!(Composition::all_of(4).len(), 8);
        assert_eq!(Composition::all_up_to(4).len(), 1 + 2 + 4 + 8);
        assert!(Composition::all_of(5).iter().all(|c| c.n() == 5));
        assert_eq!(Composition::parse("2, 2").unwrap().parts(), &[2, 2]);
        assert!(Composition::parse("2,0").is_err());
        assert!(Composition::parse("2,x").is_err());
        assert!(Composition::parse("").unwrap().is_empty());
        assert_eq!(
            Composition::new(vec![1, 2]).unwrap().group_of(),
            vec![0, 1, 1]
        );
    }
}

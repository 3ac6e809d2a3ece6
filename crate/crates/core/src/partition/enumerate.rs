//! Streaming enumeration of inhomogeneous set partitions by restricted
//! growth strings, with filters pushed into the search.
//!
//! Element `x` (0-based) may join an existing block only if no element of its
//! composition group is already there, so `P(n)` itself is the case
//! `c = (1, ..., 1)`. Partial strings are pruned as soon as they cannot be
//! completed into a partition passing the filter. Output is in
//! lexicographic order of the restricted growth string, and any prefix of
//! that order can be enumerated on its own, which is how parallel sums split
//! the work.

use std::fmt;

use rayon::prelude::*;

use super::{Composition, SetPartition};
use crate::error::{Error, Result};
use crate::limits::Limits;

/// Named partition subsets.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum PartitionFilter {
    All,
    NoSingletons,
    /// Perfect matchings `P₂`.
    Pair,
    /// Blocks of size one or two, `P_{1,2}`.
    Matchings,
    Noncrossing,
    NoncrossingNoInnerSingletons,
    NoncrossingMatchings,
    NoncrossingPair,
}

impl PartitionFilter {
    pub const ALL: [PartitionFilter; 8] = [
        PartitionFilter::All,
        PartitionFilter::NoSingletons,
        PartitionFilter::Pair,
        PartitionFilter::Matchings,
        PartitionFilter::Noncrossing,
        PartitionFilter::NoncrossingNoInnerSingletons,
        PartitionFilter::NoncrossingMatchings,
        PartitionFilter::NoncrossingPair,
    ];

    pub fn name(self) -> &'static str {
        match self {
            PartitionFilter::All => "all",
            PartitionFilter::NoSingletons => "no-singletons",
            PartitionFilter::Pair => "pair",
            PartitionFilter::Matchings => "matchings",
            PartitionFilter::Noncrossing => "noncrossing",
            PartitionFilter::NoncrossingNoInnerSingletons => "noncrossing-no-inner-singletons",
            PartitionFilter::NoncrossingMatchings => "noncrossing-matchings",
            PartitionFilter::NoncrossingPair => "noncrossing-pair",
        }
    }

    pub fn parse(name: &str) -> Result<PartitionFilter> {
        let name = name.trim();
        if name == "pair-partitions" || name == "pairs" {
            return Ok(PartitionFilter::Pair);
        }
        PartitionFilter::ALL
            .into_iter()
            .find(|f| f.name() == name)
            .ok_or_else(|| Error::UnknownFilter(name.to_string()))
    }

    pub fn constraints(self) -> Constraints {
        let c = Constraints::default();
        match self {
            PartitionFilter::All => c,
            PartitionFilter::NoSingletons => c.no_singletons(),
            PartitionFilter::Pair => c.max_block(2).no_singletons(),
            PartitionFilter::Matchings => c.max_block(2),
            PartitionFilter::Noncrossing => c.noncrossing(),
            PartitionFilter::NoncrossingNoInnerSingletons => c.noncrossing().no_inner_singletons(),
            PartitionFilter::NoncrossingMatchings => c.noncrossing().max_block(2),
            PartitionFilter::NoncrossingPair => c.noncrossing().max_block(2).no_singletons(),
        }
    }

    /// Reference post-filter, computed from the partition statistics.
    pub fn accepts(self, p: &SetPartition) -> bool {
        self.constraints().accepts(p)
    }
}

impl fmt::Display for PartitionFilter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// Conjunction of structural restrictions understood by the enumerator.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct Constraints {
    pub max_block: Option<usize>,
    pub no_singletons: bool,
    pub noncrossing: bool,
    pub no_inner_singletons: bool,
}

impl Constraints {
    pub fn max_block(mut self, size: usize) -> Self {
        self.max_block = Some(size);
        self
    }

    pub fn no_singletons(mut self) -> Self {
        self.no_singletons = true;
        self
    }

    pub fn noncrossing(mut self) -> Self {
        self.noncrossing = true;
        self
    }

    pub fn no_inner_singletons(mut self) -> Self {
        self.no_inner_singletons = true;
        self
    }

    pub fn accepts(&self, p: &SetPartition) -> bool {
        let s = p.stats();
        self.max_block
            .is_none_or(|m| p.block_sizes().all(|size| size <= m))
            && (!self.no_singletons || s.singletons == 0)
            && (!self.noncrossing || s.noncrossing)
            && (!self.no_inner_singletons || s.inner_singletons == 0)
    }
}

#[derive(Clone, Copy, Debug)]
struct Block {
    min: u8,
    max: u8,
    size: u8,
    groups: u64,
}

/// What undoing a placement must restore.
#[derive(Clone, Copy, Debug)]
enum Undo {
    NewBlock,
    Joined { prev_max: u8, rc_added: u32 },
}

/// Streaming enumerator over partitions inhomogeneous for a composition.
///
/// Implements [`Iterator`] yielding [`SetPartition`]; [`Partitions::next_leaf`]
/// is the allocation-free path used by the partition sums.
#[derive(Clone, Debug)]
pub struct Partitions {
    n: usize,
    group: Vec<u8>,
    cons: Constraints,
    rgs: Vec<u8>,
    undo: Vec<Undo>,
    choice: Vec<u8>,
    blocks: Vec<Block>,
    /// Successor arcs `(i, k)` present in the current prefix, in creation order.
    arcs: Vec<(u8, u8)>,
    rc: u32,
    singles: usize,
    floor: usize,
    target: usize,
    pending_pop: bool,
    done: bool,
}

/// A complete partition as seen by the enumerator.
#[derive(Debug)]
pub struct Leaf<'a> {
    rgs: &'a [u8],
    blocks: &'a [Block],
    rc: u32,
}

impl Leaf<'_> {
    pub fn rgs(&self) -> &[u8] {
        self.rgs
    }

    pub fn restricted_crossings(&self) -> usize {
        self.rc as usize
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn block_sizes(&self) -> impl Iterator<Item = usize> + '_ {
        self.blocks.iter().map(|b| b.size as usize)
    }

    pub fn to_partition(&self) -> SetPartition {
        SetPartition::from_rgs(self.rgs)
    }
}

/// Every partition of `{1, ..., n}`, in restricted-growth-string order.
pub fn enumerate_partitions(n: usize, limits: &Limits) -> Result<Partitions> {
    if n == 0 {
        return Err(Error::InvalidComposition(
            "ground set must be nonempty".into(),
        ));
    }
    limits.check_n(n)?;
    Ok(Partitions::new(
        &Composition::ones(n),
        PartitionFilter::All.constraints(),
    ))
}

/// The members of `P(n_1, ..., n_k)` passing `filter`.
pub fn enumerate_inhomogeneous(
    c: &Composition,
    filter: PartitionFilter,
    limits: &Limits,
) -> Result<Partitions> {
    limits.check_n(c.n())?;
    Ok(Partitions::new(c, filter.constraints()))
}

impl Partitions {
    /// Unchecked constructor; callers enforce the size cap.
    pub fn new(c: &Composition, cons: Constraints) -> Partitions {
        let n = c.n();
        assert!(n <= crate::limits::ABSOLUTE_MAX_N, "ground set too large");
        Partitions {
            n,
            group: c.group_of(),
            cons,
            rgs: Vec::with_capacity(n),
            undo: Vec::with_capacity(n),
            choice: vec![0; n + 1],
            blocks: Vec::with_capacity(n),
            arcs: Vec::with_capacity(n),
            rc: 0,
            singles: 0,
            floor: 0,
            target: n,
            pending_pop: false,
            done: false,
        }
    }

    /// Enumerates only completions of `prefix`.
    pub fn from_prefix(c: &Composition, cons: Constraints, prefix: &[u8]) -> Result<Partitions> {
        let mut p = Partitions::new(c, cons);
        if prefix.len() > p.n {
            return Err(Error::MalformedPartition(
                "prefix longer than ground set".into(),
            ));
        }
        for &label in prefix {
            if !p.try_place(label) {
                return Err(Error::MalformedPartition(format!(
                    "prefix {prefix:?} admits no completion"
                )));
            }
        }
        p.floor = prefix.len();
        Ok(p)
    }

    /// All viable restricted-growth prefixes of length `len`, in order.
    pub fn prefixes(c: &Composition, cons: Constraints, len: usize) -> Vec<Vec<u8>> {
        let mut p = Partitions::new(c, cons);
        p.target = len.min(p.n);
        let mut out = Vec::new();
        while let Some(leaf) = p.next_leaf() {
            out.push(leaf.rgs.to_vec());
        }
        out
    }

    pub fn n(&self) -> usize {
        self.n
    }

    fn try_place(&mut self, label: u8) -> bool {
        let x = self.rgs.len();
        let remaining = self.n - x - 1;
        let gbit = 1u64 << self.group[x];
        if label as usize == self.blocks.len() {
            if self.cons.no_singletons && self.singles + 1 > remaining {
                return false;
            }
            self.blocks.push(Block {
                min: x as u8,
                max: x as u8,
                size: 1,
                groups: gbit,
            });
            self.singles += 1;
            self.undo.push(Undo::NewBlock);
        } else {
            let b = self.blocks[label as usize];
            if b.groups & gbit != 0 {
                return false;
            }
            if self.cons.max_block.is_some_and(|m| b.size as usize >= m) {
                return false;
            }
            let singles = if b.size == 1 {
                self.singles - 1
            } else {
                self.singles
            };
            if self.cons.no_singletons && singles > remaining {
                return false;
            }
            if self.cons.noncrossing
                && self
                    .blocks
                    .iter()
                    .enumerate()
                    .any(|(j, c)| j != label as usize && c.max > b.max && c.min < b.max)
            {
                return false;
            }
            // The new arc (b.max, x) ends last, so it is the second arc of
            // exactly the crossings with arcs (i, k) where i < b.max < k.
            let rc_added = self
                .arcs
                .iter()
                .filter(|&&(i, k)| i < b.max && b.max < k)
                .count() as u32;
            self.arcs.push((b.max, x as u8));
            self.rc += rc_added;
            self.singles = singles;
            let blk = &mut self.blocks[label as usize];
            blk.max = x as u8;
            blk.size += 1;
            blk.groups |= gbit;
            self.undo.push(Undo::Joined {
                prev_max: b.max,
                rc_added,
            });
        }
        self.rgs.push(label);
        true
    }

    fn pop(&mut self) {
        let x = self.rgs.len() - 1;
        let label = self.rgs.pop().expect("pop on empty prefix") as usize;
        match self.undo.pop().expect("undo stack out of sync") {
            Undo::NewBlock => {
                self.blocks.pop();
                self.singles -= 1;
            }
            Undo::Joined { prev_max, rc_added } => {
                self.arcs.pop();
                self.rc -= rc_added;
                let blk = &mut self.blocks[label];
                blk.max = prev_max;
                blk.size -= 1;
                blk.groups &= !(1u64 << self.group[x]);
                if blk.size == 1 {
                    self.singles += 1;
                }
            }
        }
    }

    fn leaf_ok(&self) -> bool {
        if self.target < self.n {
            return true;
        }
        if self.cons.no_singletons && self.singles > 0 {
            return false;
        }
        if self.cons.no_inner_singletons && self.singles > 0 {
            let covered = self
                .blocks
                .iter()
                .filter(|s| s.size == 1)
                .any(|s| self.blocks.iter().any(|c| c.min < s.min && s.min < c.max));
            if covered {
                return false;
            }
        }
        true
    }

    /// Advances to the next accepted partition.
    pub fn next_leaf(&mut self) -> Option<Leaf<'_>> {
        loop {
            if self.done {
                return None;
            }
            if self.pending_pop {
                self.pending_pop = false;
                if self.rgs.len() == self.floor {
                    self.done = true;
                    return None;
                }
                self.pop();
            }
            if self.rgs.len() == self.target {
                self.pending_pop = true;
                if self.leaf_ok() {
                    return Some(Leaf {
                        rgs: &self.rgs,
                        blocks: &self.blocks,
                        rc: self.rc,
                    });
                }
                continue;
            }
            let d = self.rgs.len();
            let limit = self.blocks.len() as u8;
            let mut placed = false;
            while self.choice[d] <= limit {
                let label = self.choice[d];
                self.choice[d] += 1;
                if self.try_place(label) {
                    placed = true;
                    break;
                }
            }
            if placed {
                self.choice[d + 1] = 0;
                continue;
            }
            if d == self.floor {
                self.done = true;
                return None;
            }
            self.pop();
        }
    }

    /// Parallel fold over every accepted partition of `P(c)` under `cons`.
    ///
    /// The search is split on restricted-growth prefixes; `reduce` must be
    /// associative and commutative for the result to be order independent.
    pub fn par_fold<T, ID, F, R>(
        c: &Composition,
        cons: Constraints,
        identity: ID,
        fold: F,
        reduce: R,
    ) -> T
    where
        T: Send,
        ID: Fn() -> T + Sync + Send,
        F: Fn(T, &Leaf<'_>) -> T + Sync + Send,
        R: Fn(T, T) -> T + Sync + Send,
    {
        let n = c.n();
        let split = n.min(SPLIT_DEPTH);
        if n < PARALLEL_MIN_N || rayon::current_num_threads() == 1 {
            let mut it = Partitions::new(c, cons);
            let mut acc = identity();
            while let Some(leaf) = it.next_leaf() {
                acc = fold(acc, &leaf);
            }
            return acc;
        }
        Partitions::prefixes(c, cons, split)
            .into_par_iter()
            .map(|prefix| {
                let mut it = Partitions::from_prefix(c, cons, &prefix)
                    .expect("prefix produced by the same enumerator");
                let mut acc = identity();
                while let Some(leaf) = it.next_leaf() {
                    acc = fold(acc, &leaf);
                }
                acc
            })
            .reduce(&identity, &reduce)
    }
}

const SPLIT_DEPTH: usize = 6;
const PARALLEL_MIN_N: usize = 9;

impl Iterator for Partitions {
    type Item = SetPartition;

    fn next(&mut self) -> Option<SetPartition> {
        self.next_leaf().map(|leaf| leaf.to_partition())
    }
}

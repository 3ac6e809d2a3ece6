use super::SetPartition;

/// Every statistic a linearization formula is expressed in.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash)]
pub struct PartitionStats {
    /// `|π|`
    pub block_count: usize,
    /// `s(π)`
    pub singletons: usize,
    /// `s₂(π)`
    pub pair_blocks: usize,
    /// `rc(π)`
    pub restricted_crossings: usize,
    /// `sd(π)`
    pub singleton_depth: usize,
    /// `o(π)`
    pub outer: usize,
    /// `i(π)`
    pub inner: usize,
    /// `si(π)`
    pub inner_singletons: usize,
    pub noncrossing: bool,
}

fn span(block: &[usize]) -> (usize, usize) {
    (block[0], block[block.len() - 1])
}

/// `outer` strictly covers `inner`: it has elements on both sides of the whole of `inner`.
fn covers(outer: &[usize], inner: &[usize]) -> bool {
    let (a, b) = span(outer);
    let (lo, hi) = span(inner);
    a < lo && hi < b
}

/// Merged run count of two disjoint sorted blocks; four or more runs means
/// an `a < b < c < d` interleaving.
fn interleaves(a: &[usize], b: &[usize]) -> bool {
    let (mut i, mut j) = (0, 0);
    let mut runs = 0;
    let mut last = None;
    while i < a.len() || j < b.len() {
        let from_a = j == b.len() || (i < a.len() && a[i] < b[j]);
        if from_a {
            i += 1;
        } else {
            j += 1;
        }
        if last != Some(from_a) {
            runs += 1;
            if runs >= 4 {
                return true;
            }
            last = Some(from_a);
        }
    }
    false
}

impl SetPartition {
    /// No `i < j < k < l` with `i ~ k`, `j ~ l` and `i ≁ j`.
    pub fn is_noncrossing(&self) -> bool {
        let blocks = self.blocks();
        blocks
            .iter()
            .enumerate()
            .all(|(x, a)| blocks[x + 1..].iter().all(|b| !interleaves(a, b)))
    }

    /// Crossings between successor arcs: `i < j < k < l` with `k` the next
    /// element of `i`'s block after `i`, and `l` the next of `j`'s block after `j`.
    pub fn restricted_crossings(&self) -> usize {
        let arcs: Vec<(usize, usize)> = self
            .blocks()
            .iter()
            .flat_map(|b| b.windows(2).map(|w| (w[0], w[1])))
            .collect();
        let mut count = 0;
        for &(i, k) in &arcs {
            for &(j, l) in &arcs {
                if i < j && j < k && k < l {
                    count += 1;
                }
            }
        }
        count
    }

    /// Sum over singleton blocks of the number of blocks whose span strictly contains it.
    pub fn singleton_depth(&self) -> usize {
        let blocks = self.blocks();
        blocks
            .iter()
            .filter(|b| b.len() == 1)
            .map(|s| blocks.iter().filter(|c| covers(c, s)).count())
            .sum()
    }

    fn is_inner_block(&self, index: usize) -> bool {
        let blocks = self.blocks();
        let b = &blocks[index];
        blocks
            .iter()
            .enumerate()
            .any(|(j, c)| j != index && covers(c, b))
    }

    pub fn stats(&self) -> PartitionStats {
        let blocks = self.blocks();
        let mut s = PartitionStats {
            block_count: blocks.len(),
            restricted_crossings: self.restricted_crossings(),
            singleton_depth: self.singleton_depth(),
            noncrossing: self.is_noncrossing(),
            ..PartitionStats::default()
        };
        for (index, b) in blocks.iter().enumerate() {
            match b.len() {
                1 => s.singletons += 1,
                2 => s.pair_blocks += 1,
                _ => {}
            }
            if self.is_inner_block(index) {
                s.inner += 1;
                if b.len() == 1 {
                    s.inner_singletons += 1;
                }
            } else {
                s.outer += 1;
            }
        }
        s
    }
}

mod common;

use std::collections::BTreeSet;

use linco::partition::{
    enumerate_inhomogeneous, enumerate_partitions, Composition, PartitionFilter, SetPartition,
};
use linco::Limits;
use proptest::prelude::*;

use common::*;

fn composition(max_n: usize) -> impl Strategy<Value = Composition> {
    prop::collection::vec(1usize..=4, 1..=4)
        .prop_filter("total within bound", move |p| {
            p.iter().sum::<usize>() <= max_n
        })
        .prop_map(|p| Composition::new(p).unwrap())
}

/// A random set partition of `1..=n` from a restricted growth string.
fn set_partition(max_n: usize) -> impl Strategy<Value = SetPartition> {
    (1..=max_n)
        .prop_flat_map(|n| prop::collection::vec(0u8..8, n))
        .prop_map(|raw| {
            let mut rgs = Vec::with_capacity(raw.len());
            let mut top = 0u8;
            for (i, r) in raw.into_iter().enumerate() {
                let v = if i == 0 { 0 } else { r % (top + 2) };
                top = top.max(v);
                rgs.push(v);
            }
            SetPartition::from_rgs(&rgs)
        })
}

#[test]
fn bell_numbers() {
    let limits = Limits::default();
    for (n, &expected) in bell(10).iter().enumerate().skip(1) {
        assert_eq!(
            enumerate_partitions(n, &limits).unwrap().count() as u64,
            expected,
            "n = {n}"
        );
    }
}

#[test]
fn reference_enumeration_agrees() {
    let limits = Limits::default();
    for n in 1..=7 {
        let ours: BTreeSet<SetPartition> = enumerate_partitions(n, &limits).unwrap().collect();
        let reference: BTreeSet<SetPartition> = all_partitions(n)
            .into_iter()
            .map(|b| to_set_partition(b, n))
            .collect();
        assert_eq!(ours, reference, "n = {n}");
    }
}

#[test]
fn size_cap_is_enforced() {
    let limits = Limits::default();
    assert!(enumerate_partitions(13, &limits).is_err());
    assert!(enumerate_partitions(0, &limits).is_err());
    assert!(enumerate_partitions(13, &limits.with_max_n(13)).is_ok());
}

#[test]
fn malformed_partitions_are_rejected() {
    assert!(SetPartition::canonicalize(vec![vec![1, 2], vec![2, 3]], 3).is_err());
    assert!(SetPartition::canonicalize(vec![vec![1], vec![3]], 3).is_err());
    assert!(SetPartition::canonicalize(vec![vec![1, 4]], 3).is_err());
    assert!(Composition::parse("2,0").is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn inhomogeneous_equals_filtered_full_set(c in composition(8)) {
        let limits = Limits::default();
        for filter in PartitionFilter::ALL {
            let ours: BTreeSet<SetPartition> = enumerate_inhomogeneous(&c, filter, &limits).unwrap().collect();
            let reference: BTreeSet<SetPartition> = enumerate_partitions(c.n(), &limits)
                .unwrap()
                .filter(|p| p.is_inhomogeneous(&c).unwrap() && filter.accepts(p))
                .collect();
            prop_assert_eq!(&ours, &reference, "{} {}", c, filter.name());
        }
    }

    #[test]
    fn restricted_crossings_match_brute_force(p in set_partition(8)) {
        prop_assert_eq!(p.restricted_crossings(), brute_rc(&p));
        prop_assert_eq!(p.restricted_crossings() == 0, brute_noncrossing(&p));
    }

    #[test]
    fn statistics_are_consistent(p in set_partition(9)) {
        let s = p.stats();
        let sizes: Vec<usize> = p.block_sizes().collect();
        prop_assert_eq!(s.block_count, sizes.len());
        prop_assert_eq!(s.singletons, sizes.iter().filter(|&&k| k == 1).count());
        prop_assert_eq!(s.pair_blocks, sizes.iter().filter(|&&k| k == 2).count());
        prop_assert_eq!(s.outer + s.inner, s.block_count);
        prop_assert!(s.inner_singletons <= s.singletons.min(s.inner));
        prop_assert!(s.outer >= 1);
        prop_assert_eq!(s.noncrossing, brute_noncrossing(&p));
        if s.inner_singletons == 0 {
            prop_assert_eq!(s.singleton_depth, 0);
        }
        prop_assert_eq!(SetPartition::from_rgs(&p.rgs()), p.clone());
        let rebuilt = SetPartition::canonicalize(p.blocks().iter().rev().cloned().collect::<Vec<_>>(), p.n()).unwrap();
        prop_assert_eq!(rebuilt, p);
    }

    #[test]
    fn prefix_split_covers_everything(c in composition(8), depth in 1usize..5) {
        use linco::partition::Partitions;
        let cons = PartitionFilter::NoSingletons.constraints();
        let whole: Vec<SetPartition> = Partitions::new(&c, cons).collect();
        let mut pieces = Vec::new();
        for prefix in Partitions::prefixes(&c, cons, depth.min(c.n())) {
            pieces.extend(Partitions::from_prefix(&c, cons, &prefix).unwrap());
        }
        prop_assert_eq!(pieces, whole);
    }
}

//! Shared proptest strategies.

use proptest::prelude::*;

use crate::model::{Partition, SpanningForest};

/// Random `(partition, forest)` with 2..=5 parts of size 1..=4.
pub(crate) fn instance() -> impl Strategy<Value = (Partition, SpanningForest)> {
    instance_with(2..=5, 1..=4)
}

pub(crate) fn instance_with(
    parts: std::ops::RangeInclusive<usize>,
    sizes: std::ops::RangeInclusive<usize>,
) -> impl Strategy<Value = (Partition, SpanningForest)> {
    prop::collection::vec(sizes, parts)
        .prop_flat_map(|parts| {
            let p = Partition::new(parts).unwrap();
            let edges = p.cross_edges();
            let n = p.order();
            (Just(p), Just(edges).prop_shuffle(), 0..n)
        })
        .prop_map(|(p, order, target)| {
            let f = SpanningForest::greedy(&p, order, target);
            (p, f)
        })
}

//! Counting and distributions fanned out over fixed prefixes with rayon.
//!
//! Results are sums over a partition of the search tree, so they do not
//! depend on the split depth or on scheduling.

use invpat_core::enumerate::{count_with_prefix, for_each_avoider, prefixes, Histogram};
use invpat_core::stats::Statistic;
use invpat_core::Pattern;
use num_bigint::BigUint;
use rayon::prelude::*;

/// Prefix length used to split the work at length `n`.
fn split_depth(n: usize) -> usize {
    n.saturating_sub(4).min(5)
}

/// `|I_n(patterns)|`.
pub fn count(n: usize, patterns: &[Pattern]) -> BigUint {
    count_at_depth(n, patterns, split_depth(n))
}

/// `|I_n(patterns)|` with an explicit split depth.
pub fn count_at_depth(n: usize, patterns: &[Pattern], depth: usize) -> BigUint {
    prefixes(n, patterns, depth)
        .par_iter()
        .map(|p| BigUint::from(count_with_prefix(n, patterns, p)))
        .reduce(BigUint::default, |a, b| a + b)
}

/// Histogram of `statistic` over `I_n(patterns)`.
pub fn distribution(n: usize, patterns: &[Pattern], statistic: Statistic) -> Histogram {
    prefixes(n, patterns, split_depth(n))
        .par_iter()
        .map(|p| {
            let mut h = Histogram::new(n, statistic.name());
            for_each_avoider(n, patterns, p, |e| h.record(statistic.eval(e)));
            h
        })
        .reduce(
            || Histogram::new(n, statistic.name()),
            |mut a, b| {
                a.merge(&b);
                a
            },
        )
}

/// Terms `|I_1(p)|, ..., |I_{n_max}(p)|`.
pub fn avoidance_sequence(patterns: &[Pattern], n_max: usize) -> Vec<BigUint> {
    (1..=n_max).map(|n| count(n, patterns)).collect()
}

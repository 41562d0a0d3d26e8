//! Exhaustive generation of `I_n` and `I_n(p)`.
//!
//! Generation is depth-first: a prefix `e_1..e_m` is extended by
//! `e_{m+1} = 0, 1, ..., m` in turn, so leaves come out in lexicographic
//! order. A new occurrence of a forbidden pattern must use the newly added
//! entry, so only occurrences ending there are tested, and a prefix that
//! contains a pattern is never extended.

use alloc::collections::BTreeMap;
use alloc::string::String;
use alloc::vec::Vec;

use num_bigint::BigUint;
use num_traits::Zero;

use crate::stats::Statistic;
use crate::word::{contains, ends_with_occurrence, InversionSequence, Pattern};

/// True iff appending the last letter of `word` created an occurrence of
/// one of `patterns`.
#[inline]
pub fn creates_occurrence(word: &[usize], patterns: &[Pattern]) -> bool {
    patterns.iter().any(|p| ends_with_last(word, p))
}

fn ends_with_last(word: &[usize], p: &Pattern) -> bool {
    let m = word.len();
    match *p.letters() {
        [a, b, c] if m >= 3 => {
            let x = word[m - 1];
            let bc = b.cmp(&c);
            let ab = a.cmp(&b);
            let ac = a.cmp(&c);
            for j in 1..m - 1 {
                let y = word[j];
                if y.cmp(&x) != bc {
                    continue;
                }
                if word[..j].iter().any(|&w| w.cmp(&y) == ab && w.cmp(&x) == ac) {
                    return true;
                }
            }
            false
        }
        [_, _, _] => false,
        _ => ends_with_occurrence(word, p),
    }
}

/// Lexicographic stream of the sequences in `I_n` avoiding every pattern
/// in a set, optionally restricted to those extending a fixed prefix.
#[derive(Debug, Clone)]
pub struct Avoiders {
    n: usize,
    patterns: Vec<Pattern>,
    current: Vec<usize>,
    floor: usize,
    state: State,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum State {
    Fresh,
    Running,
    Done,
}

impl Avoiders {
    /// All of `I_n(patterns)`; with no patterns, all `n!` sequences.
    pub fn new(n: usize, patterns: &[Pattern]) -> Self {
        Self::with_prefix(n, patterns, &[])
    }

    /// The members of `I_n(patterns)` whose first entries are `prefix`.
    /// Yields nothing if the prefix is invalid or already contains a pattern.
    pub fn with_prefix(n: usize, patterns: &[Pattern], prefix: &[usize]) -> Self {
        let valid = prefix.len() <= n
            && prefix.iter().enumerate().all(|(i, &v)| v <= i)
            && !patterns.iter().any(|p| contains(prefix, p));
        Self {
            n,
            patterns: patterns.to_vec(),
            current: prefix.to_vec(),
            floor: prefix.len(),
            state: if valid { State::Fresh } else { State::Done },
        }
    }

    /// Moves to the next leaf, trying `value` first at the current depth.
    fn advance(&mut self, mut value: usize) -> bool {
        loop {
            let pos = self.current.len();
            if pos == self.n {
                return true;
            }
            if value > pos {
                if pos == self.floor {
                    return false;
                }
                value = self.current.pop().expect("above floor") + 1;
                continue;
            }
            self.current.push(value);
            if creates_occurrence(&self.current, &self.patterns) {
                self.current.pop();
                value += 1;
                continue;
            }
            if self.current.len() == self.n {
                return true;
            }
            value = 0;
        }
    }
}

impl Iterator for Avoiders {
    type Item = InversionSequence;

    fn next(&mut self) -> Option<Self::Item> {
        let found = match self.state {
            State::Done => return None,
            State::Fresh => {
                self.state = State::Running;
                self.advance(0)
            }
            State::Running => {
                if self.current.len() == self.floor {
                    false
                } else {
                    let last = self.current.pop().expect("nonempty leaf");
                    self.advance(last + 1)
                }
            }
        };
        if found {
            Some(InversionSequence::from_vec_unchecked(self.current.clone()))
        } else {
            self.state = State::Done;
            None
        }
    }
}

/// Calls `visit` on every member of `I_n(patterns)` extending `prefix`,
/// in lexicographic order, without allocating per sequence.
pub fn for_each_avoider<F: FnMut(&[usize])>(
    n: usize,
    patterns: &[Pattern],
    prefix: &[usize],
    mut visit: F,
) {
    if prefix.len() > n
        || prefix.iter().enumerate().any(|(i, &v)| v > i)
        || patterns.iter().any(|p| contains(prefix, p))
    {
        return;
    }
    let mut word = prefix.to_vec();
    word.reserve(n - prefix.len());
    walk(n, patterns, &mut word, &mut visit);
}

fn walk<F: FnMut(&[usize])>(n: usize, patterns: &[Pattern], word: &mut Vec<usize>, visit: &mut F) {
    if word.len() == n {
        visit(word);
        return;
    }
    let pos = word.len();
    for v in 0..=pos {
        word.push(v);
        if !creates_occurrence(word, patterns) {
            walk(n, patterns, word, visit);
        }
        word.pop();
    }
}

/// `|I_n(patterns)|` restricted to sequences extending `prefix`.
pub fn count_with_prefix(n: usize, patterns: &[Pattern], prefix: &[usize]) -> u64 {
    let mut count = 0u64;
    for_each_avoider(n, patterns, prefix, |_| count += 1);
    count
}

/// `|I_n(patterns)|` by exhaustive generation.
pub fn count(n: usize, patterns: &[Pattern]) -> BigUint {
    BigUint::from(count_with_prefix(n, patterns, &[]))
}

/// All pattern-avoiding prefixes of length `min(depth, n)`, in lexicographic
/// order. Counting each subtree and summing gives `|I_n(patterns)|`
/// regardless of `depth`.
pub fn prefixes(n: usize, patterns: &[Pattern], depth: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    for_each_avoider(depth.min(n), patterns, &[], |w| out.push(w.to_vec()));
    out
}

/// `|I_1(p)|, ..., |I_{n_max}(p)|`.
pub fn avoidance_sequence(patterns: &[Pattern], n_max: usize) -> Vec<BigUint> {
    (1..=n_max).map(|n| count(n, patterns)).collect()
}

/// Distribution of a statistic over a set of sequences.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Histogram {
    /// Length of the sequences counted.
    pub n: usize,
    /// Name of the statistic.
    pub statistic: String,
    /// Statistic value to number of sequences.
    pub bins: BTreeMap<i64, BigUint>,
}

impl Histogram {
    /// Empty histogram.
    pub fn new(n: usize, statistic: impl Into<String>) -> Self {
        Self { n, statistic: statistic.into(), bins: BTreeMap::new() }
    }

    /// Adds one object with statistic value `v`.
    pub fn record(&mut self, v: i64) {
        *self.bins.entry(v).or_insert_with(BigUint::zero) += 1u32;
    }

    /// Number of objects counted with value `v`.
    pub fn get(&self, v: i64) -> BigUint {
        self.bins.get(&v).cloned().unwrap_or_default()
    }

    /// Sum of all bins.
    pub fn total(&self) -> BigUint {
        self.bins.values().sum()
    }

    /// Adds every bin of `other` into `self`.
    pub fn merge(&mut self, other: &Histogram) {
        for (k, v) in &other.bins {
            *self.bins.entry(*k).or_insert_with(BigUint::zero) += v;
        }
    }
}

/// `bins[v] = #{e in I_n(patterns) : statistic(e) = v}`.
pub fn distribution(n: usize, patterns: &[Pattern], statistic: Statistic) -> Histogram {
    let mut h = Histogram::new(n, statistic.name());
    for_each_avoider(n, patterns, &[], |e| h.record(statistic.eval(e)));
    h
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn pats(list: &[&str]) -> Vec<Pattern> {
        list.iter().map(|s| s.parse().unwrap()).collect()
    }

    #[test]
    fn length_three_all() {
        let all: Vec<_> = Avoiders::new(3, &[]).map(|e| e.into_vec()).collect();
        assert_eq!(
            all,
            vec![vec![0, 0, 0], vec![0, 0, 1], vec![0, 0, 2], vec![0, 1, 0], vec![0, 1, 1], vec![0, 1, 2]]
        );
    }

    #[test]
    fn factorial_cardinality() {
        let mut f = 1u64;
        for n in 0..=9u64 {
            if n > 0 {
                f *= n;
            }
            assert_eq!(count_with_prefix(n as usize, &[], &[]), f, "n = {n}");
        }
        assert_eq!(Avoiders::new(0, &[]).count(), 1);
    }

    #[test]
    fn seventh_terms_from_summary_table() {
        assert_eq!(count(7, &pats(&["021"])), BigUint::from(1806u32));
        assert_eq!(count(7, &pats(&["000"])), BigUint::from(1385u32));
        assert_eq!(Avoiders::new(7, &pats(&["021"])).count(), 1806);
    }

    #[test]
    fn in_text_sequences() {
        let expect = |p: &str, terms: &[u64]| {
            let got = avoidance_sequence(&pats(&[p]), terms.len());
            let want: Vec<BigUint> = terms.iter().map(|&t| BigUint::from(t)).collect();
            assert_eq!(got, want, "pattern {p}");
        };
        expect("120", &[1, 2, 6, 23, 103, 515, 2803, 16334]);
        expect("010", &[1, 2, 5, 15, 53, 215, 979, 4922]);
        expect("100", &[1, 2, 6, 23, 106, 565, 3399, 22678]);
    }

    #[test]
    fn pruning_matches_filtering() {
        for p in crate::LENGTH_THREE_PATTERNS {
            let ps = pats(&[p]);
            for n in 0..=7 {
                let pruned: Vec<_> = Avoiders::new(n, &ps).collect();
                let filtered: Vec<_> = Avoiders::new(n, &[]).filter(|e| e.avoids(&ps[0])).collect();
                assert_eq!(pruned, filtered, "pattern {p}, n = {n}");
            }
        }
    }

    #[test]
    fn prefix_partition_sums_to_total() {
        let ps = pats(&["102"]);
        let total = count_with_prefix(8, &ps, &[]);
        for depth in 0..=5 {
            let split: u64 = prefixes(8, &ps, depth).iter().map(|pre| count_with_prefix(8, &ps, pre)).sum();
            assert_eq!(split, total, "depth {depth}");
        }
        let via_stream: usize =
            prefixes(8, &ps, 3).iter().map(|pre| Avoiders::with_prefix(8, &ps, pre).count()).sum();
        assert_eq!(via_stream as u64, total);
    }

    #[test]
    fn bad_prefixes_yield_nothing() {
        assert_eq!(Avoiders::with_prefix(4, &[], &[0, 2]).count(), 0);
        assert_eq!(Avoiders::with_prefix(4, &pats(&["01"]), &[0, 1]).count(), 0);
        assert_eq!(Avoiders::with_prefix(2, &[], &[0, 1, 0]).count(), 0);
        assert_eq!(Avoiders::with_prefix(2, &[], &[0, 1]).count(), 1);
    }

    #[test]
    fn distributions() {
        let h = distribution(4, &pats(&["011"]), Statistic::Zeros);
        let bins: Vec<(i64, u32)> = h.bins.iter().map(|(k, v)| (*k, v.try_into().unwrap())).collect();
        assert_eq!(bins, vec![(1, 1), (2, 7), (3, 6), (4, 1)]);
        assert_eq!(h.total(), BigUint::from(15u32));

        let h = distribution(3, &pats(&["021"]), Statistic::Ascents);
        for k in 0..=2 {
            assert_eq!(h.get(k), h.get(2 - k));
        }
        assert_eq!(h.total(), BigUint::from(6u32));

        for p in ["000", "120"] {
            let h = distribution(1, &pats(&[p]), Statistic::Zeros);
            assert_eq!(h.bins.len(), 1);
            assert_eq!(h.get(1), BigUint::from(1u32));
        }
    }

    #[test]
    fn longer_patterns_and_sets() {
        // 2-letter pattern 10 on inversion sequences: weakly increasing ones,
        // counted by Catalan numbers.
        let catalan = [1u64, 1, 2, 5, 14, 42, 132];
        for (n, &c) in catalan.iter().enumerate() {
            assert_eq!(count_with_prefix(n, &pats(&["10"]), &[]), c);
        }
        // avoiding both 012 and 021 leaves positive entries constant
        let both = pats(&["012", "021"]);
        for e in Avoiders::new(6, &both) {
            let mut pos = e.as_slice().iter().filter(|&&v| v > 0);
            let first = pos.next();
            assert!(pos.all(|v| Some(v) == first));
        }
    }

    proptest! {
        #[test]
        fn stream_is_deterministic_and_sorted(n in 0usize..7, idx in 0usize..13) {
            let ps = pats(&[crate::LENGTH_THREE_PATTERNS[idx]]);
            let a: Vec<_> = Avoiders::new(n, &ps).collect();
            let b: Vec<_> = Avoiders::new(n, &ps).collect();
            prop_assert_eq!(&a, &b);
            prop_assert!(a.windows(2).all(|w| w[0] < w[1]));
        }
    }
}

//! Exhaustive checks of the structural descriptions of the length-3 classes,
//! plus property tests on statistics and block decompositions.

use invpat_core::blocks::blocks;
use invpat_core::enumerate::Avoiders;
use invpat_core::stats::{stats, weak_left_to_right_maxima};
use invpat_core::word::contains;
use invpat_core::{InversionSequence, Pattern};
use proptest::prelude::*;

fn pat(s: &str) -> Pattern {
    s.parse().unwrap()
}

fn positives(e: &[usize]) -> Vec<usize> {
    e.iter().copied().filter(|&x| x > 0).collect()
}

fn weakly_increasing(xs: &[usize]) -> bool {
    xs.windows(2).all(|w| w[0] <= w[1])
}

/// Checks `avoids(p) <=> prop` on every inversion sequence of length <= 8.
fn check(p: &str, prop: impl Fn(&[usize]) -> bool) {
    let p = pat(p);
    for n in 0..=8 {
        for e in Avoiders::new(n, &[]) {
            let e = e.as_slice();
            assert_eq!(!contains(e, &p), prop(e), "pattern {p}, e = {e:?}");
        }
    }
}

#[test]
fn avoiding_012_means_positive_entries_weakly_decrease() {
    check("012", |e| positives(e).windows(2).all(|w| w[0] >= w[1]));
}

#[test]
fn avoiding_021_means_positive_entries_weakly_increase() {
    check("021", |e| weakly_increasing(&positives(e)));
}

#[test]
fn avoiding_210_means_two_weakly_increasing_parts() {
    check("210", |e| {
        let maxima = weak_left_to_right_maxima(e);
        let rest: Vec<usize> = (1..=e.len()).filter(|j| !maxima.contains(j)).map(|j| e[j - 1]).collect();
        weakly_increasing(&rest)
    });
}

#[test]
fn avoiding_001_means_rise_then_weak_fall() {
    check("001", |e| {
        (0..=e.len()).any(|t| {
            e[..t].windows(2).all(|w| w[0] < w[1]) && e[t.saturating_sub(1)..].windows(2).all(|w| w[0] >= w[1])
        })
    });
}

#[test]
fn avoiding_011_means_distinct_positive_entries() {
    check("011", |e| {
        let mut p = positives(e);
        let len = p.len();
        p.sort_unstable();
        p.dedup();
        p.len() == len
    });
}

#[test]
fn avoiding_000_means_no_value_thrice() {
    check("000", |e| (0..e.len()).all(|v| e.iter().filter(|&&x| x == v).count() <= 2));
}

fn inversion_sequence(max_len: usize) -> impl Strategy<Value = Vec<usize>> {
    (0..=max_len).prop_flat_map(|n| (0..n).map(|i| 0..=i).collect::<Vec<_>>())
}

proptest! {
    #[test]
    fn stat_record_identities(e in inversion_sequence(14)) {
        let s = stats(&e);
        let n = e.len();
        prop_assert_eq!(s.zeros, s.late_zeros + s.leading_zeros);
        prop_assert!(s.ascents <= n.saturating_sub(1));
        prop_assert_eq!(s.maximal_entries >= 1, n >= 1);
        prop_assert_eq!(s.bottom == -1, weakly_increasing(&e));
    }

    #[test]
    fn blocks_concatenate_back(e in inversion_sequence(14)) {
        let p = pat("021");
        match blocks(&e) {
            Ok(d) => {
                prop_assert!(!contains(&e, &p));
                prop_assert_eq!(d.concat(), e.clone());
                let nonzero = d.blocks.iter().filter(|b| b.value > 0 && !b.entries.is_empty()).count();
                prop_assert_eq!(nonzero, stats(&e).distinct_nonzero_values);
                for b in &d.blocks {
                    prop_assert!(b.entries.iter().all(|&x| x == 0 || x == b.value));
                    if let Some(start) = b.start {
                        prop_assert_eq!(e[start - 1], b.value);
                        prop_assert_eq!(b.maximal, start == b.value + 1);
                    }
                }
            }
            Err(_) => prop_assert!(contains(&e, &p)),
        }
    }

    #[test]
    fn text_form_round_trips(e in inversion_sequence(20)) {
        let seq = InversionSequence::new(e).unwrap();
        prop_assert_eq!(seq.to_string().parse::<InversionSequence>().unwrap(), seq);
    }
}

//! Permutations of `[n]` and the avoidance predicates used for the
//! cross-family checks.

use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::word::{self, parse_comma_separated, write_comma_separated, Pattern};
use crate::{Error, Result};

/// A permutation `pi_1..pi_n` of `1..n`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation(Vec<usize>);

impl Permutation {
    /// Validates that every value of `1..n` appears once.
    pub fn new(values: Vec<usize>) -> Result<Self> {
        let n = values.len();
        let mut seen = vec![false; n + 1];
        for &v in &values {
            if v == 0 || v > n || seen[v] {
                return Err(Error::InvalidPermutation(alloc::format!(
                    "{} is not a permutation of 1..{n}",
                    word::join_comma(&values)
                )));
            }
            seen[v] = true;
        }
        Ok(Self(values))
    }

    pub(crate) fn from_vec_unchecked(values: Vec<usize>) -> Self {
        Self(values)
    }

    /// The identity of length `n`.
    pub fn identity(n: usize) -> Self {
        Self((1..=n).collect())
    }

    /// The values.
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Length.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty permutation.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The permutation as a reduced word pattern (values shifted to start at 0).
    pub fn to_pattern(&self) -> Result<Pattern> {
        Pattern::new(self.0.iter().map(|v| v - 1).collect())
    }

    /// Classical containment of a permutation pattern.
    pub fn contains_classical(&self, sigma: &Permutation) -> bool {
        match sigma.to_pattern() {
            Ok(p) => word::contains(&self.0, &p),
            Err(_) => true,
        }
    }

    /// Avoids every pattern in `sigmas`.
    pub fn avoids_classical(&self, sigmas: &[Permutation]) -> bool {
        sigmas.iter().all(|s| !self.contains_classical(s))
    }

    /// No `i < j < k` with `pi_i < pi_j < pi_{j+1} < pi_k`.
    pub fn avoids_1_23_4(&self) -> bool {
        let p = &self.0;
        let n = p.len();
        for j in 1..n.saturating_sub(2) {
            if p[j] >= p[j + 1] {
                continue;
            }
            let low = p[..j].iter().any(|&x| x < p[j]);
            let high = p[j + 2..].iter().any(|&x| x > p[j + 1]);
            if low && high {
                return false;
            }
        }
        true
    }

    /// No double descent after deleting `n`, then `n-1`, and so on.
    pub fn is_simsun(&self) -> bool {
        let mut rest = self.0.clone();
        for k in (1..=self.0.len()).rev() {
            if rest.windows(3).any(|w| w[0] > w[1] && w[1] > w[2]) {
                return false;
            }
            rest.retain(|&x| x != k);
        }
        true
    }

    /// `pi_1 > pi_2 < pi_3 > ...`.
    pub fn is_down_up(&self) -> bool {
        self.0
            .windows(2)
            .enumerate()
            .all(|(i, w)| if i % 2 == 0 { w[0] > w[1] } else { w[0] < w[1] })
    }

    /// Number of `i` with `pi_i > pi_{i+1}`.
    pub fn descents(&self) -> usize {
        self.0.windows(2).filter(|w| w[0] > w[1]).count()
    }

    /// All permutations of `[n]` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<usize> = (1..=n).collect();
        let mut out = vec![Self(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Self(cur.clone()));
        }
        out
    }

    /// All down/up permutations of `[n]`, lexicographically.
    pub fn all_down_up(n: usize) -> Vec<Permutation> {
        fn go(n: usize, cur: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Permutation>) {
            if cur.len() == n {
                out.push(Permutation(cur.clone()));
                return;
            }
            for v in 1..=n {
                if used[v] {
                    continue;
                }
                if let Some(&last) = cur.last() {
                    let need_down = cur.len() % 2 == 1;
                    if need_down != (last > v) {
                        continue;
                    }
                }
                used[v] = true;
                cur.push(v);
                go(n, cur, used, out);
                cur.pop();
                used[v] = false;
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::with_capacity(n), &mut vec![false; n + 1], &mut out);
        out
    }
}

/// Advances to the next permutation in lexicographic order; false at the end.
fn next_permutation(a: &mut [usize]) -> bool {
    let n = a.len();
    if n < 2 {
        return false;
    }
    let mut i = n - 1;
    while i > 0 && a[i - 1] >= a[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = n - 1;
    while a[j] <= a[i - 1] {
        j -= 1;
    }
    a.swap(i - 1, j);
    a[i..].reverse();
    true
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.0)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    /// Comma form, or a bare digit string such as `25637814`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let values = if !s.contains(',') && !s.is_empty() && s.bytes().all(|b| b.is_ascii_digit()) {
            s.bytes().map(|b| usize::from(b - b'0')).collect()
        } else {
            parse_comma_separated(s)?
        };
        Self::new(values)
    }
}

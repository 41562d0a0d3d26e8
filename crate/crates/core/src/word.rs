//! Inversion sequences, word patterns and containment.
//!
//! Positions are 1-based in documentation and in every text form, matching
//! `e = (e_1, ..., e_n)`. Storage is an ordinary 0-based `Vec`.

use alloc::string::{String, ToString};
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// A word `(e_1, ..., e_n)` with `0 <= e_i < i`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct InversionSequence(Vec<usize>);

impl InversionSequence {
    /// Validates `entries` and wraps them.
    pub fn new(entries: Vec<usize>) -> Result<Self> {
        if let Some((i, &v)) = entries.iter().enumerate().find(|&(i, &v)| v > i) {
            return Err(Error::NotInversionSequence { position: i + 1, value: v });
        }
        Ok(Self(entries))
    }

    /// Wraps `entries` without validation. Callers must uphold `e_i < i`.
    pub(crate) fn from_vec_unchecked(entries: Vec<usize>) -> Self {
        debug_assert!(entries.iter().enumerate().all(|(i, &v)| v <= i));
        Self(entries)
    }

    /// The all-zero sequence of length `n`.
    pub fn zeros(n: usize) -> Self {
        Self(alloc::vec![0; n])
    }

    /// Entries as a slice (0-based storage of `e_1..e_n`).
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Consumes the sequence, returning the entries.
    pub fn into_vec(self) -> Vec<usize> {
        self.0
    }

    /// Length `n`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// True for the empty sequence.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// `e_i` for 1-based `i`.
    pub fn get(&self, i: usize) -> Option<usize> {
        i.checked_sub(1).and_then(|j| self.0.get(j).copied())
    }

    /// True iff some subsequence reduces to `p`.
    pub fn contains(&self, p: &Pattern) -> bool {
        contains(&self.0, p)
    }

    /// Negation of [`InversionSequence::contains`].
    pub fn avoids(&self, p: &Pattern) -> bool {
        !self.contains(p)
    }
}

impl fmt::Display for InversionSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.0)
    }
}

impl FromStr for InversionSequence {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_comma_separated(s)?)
    }
}

/// A reduced word: its distinct letters are exactly `{0, 1, ..., m}`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Pattern(Vec<usize>);

impl Pattern {
    /// Wraps `letters`, which must already be nonempty and reduced.
    pub fn new(letters: Vec<usize>) -> Result<Self> {
        if letters.is_empty() {
            return Err(Error::EmptyWord);
        }
        let reduced = reduce(&letters)?;
        if reduced.0 != letters {
            return Err(Error::NotReduced(join_comma(&letters)));
        }
        Ok(reduced)
    }

    /// Letters of the pattern.
    pub fn letters(&self) -> &[usize] {
        &self.0
    }

    /// Pattern length `k`.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    /// Always false; patterns are nonempty.
    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.iter().all(|&d| d <= 9) {
            for d in &self.0 {
                write!(f, "{d}")?;
            }
            Ok(())
        } else {
            write_comma_separated(f, &self.0)
        }
    }
}

impl FromStr for Pattern {
    type Err = Error;

    /// Accepts a digit string (`021`) or a comma-separated list (`0,10,2,...`).
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let letters = if s.contains(',') {
            parse_comma_separated(s)?
        } else {
            s.chars()
                .map(|c| {
                    c.to_digit(10)
                        .map(|d| d as usize)
                        .ok_or_else(|| Error::Parse(alloc::format!("bad pattern letter {c:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(letters)
    }
}

/// Replaces the `i`-th smallest letters of `word` by `i - 1`.
///
/// ```
/// # use invpat_core::word::reduce;
/// assert_eq!(reduce(&[3, 0, 5, 2, 6, 6, 2]).unwrap().letters(), &[2, 0, 3, 1, 4, 4, 1]);
/// ```
pub fn reduce(word: &[usize]) -> Result<Pattern> {
    if word.is_empty() {
        return Err(Error::EmptyWord);
    }
    let mut distinct: Vec<usize> = word.to_vec();
    distinct.sort_unstable();
    distinct.dedup();
    let letters = word
        .iter()
        .map(|v| distinct.binary_search(v).expect("letter present"))
        .collect();
    Ok(Pattern(letters))
}

/// True iff some subsequence of `word` is order-isomorphic to `p`.
///
/// Works on any word, so it also serves classical permutation patterns.
pub fn contains(word: &[usize], p: &Pattern) -> bool {
    let mut chosen = Vec::with_capacity(p.len());
    search(word, 0, &p.0, None, &mut chosen)
}

/// True iff some occurrence of `p` in `word` uses the last letter of `word`.
///
/// Appending one letter to a `p`-avoiding word creates an occurrence exactly
/// when this returns true, which is what the pruned enumerator relies on.
pub fn ends_with_occurrence(word: &[usize], p: &Pattern) -> bool {
    let Some((&last, prefix)) = word.split_last() else {
        return false;
    };
    let (&tail_letter, head) = p.0.split_last().expect("patterns are nonempty");
    let mut chosen = Vec::with_capacity(head.len());
    search(prefix, 0, head, Some((last, tail_letter)), &mut chosen)
}

/// Backtracking over index sets `i_1 < i_2 < ...`; `chosen` holds the values
/// picked so far for `pat[..chosen.len()]`. `tail` fixes one extra letter that
/// every choice must also be consistent with.
fn search(
    word: &[usize],
    start: usize,
    pat: &[usize],
    tail: Option<(usize, usize)>,
    chosen: &mut Vec<usize>,
) -> bool {
    let t = chosen.len();
    if t == pat.len() {
        return true;
    }
    let remaining = pat.len() - t;
    if word.len() < start + remaining {
        return false;
    }
    for i in start..=word.len() - remaining {
        let v = word[i];
        let fits_tail = tail.is_none_or(|(tv, tl)| v.cmp(&tv) == pat[t].cmp(&tl));
        let fits = fits_tail
            && chosen
                .iter()
                .zip(pat)
                .all(|(&w, &q)| w.cmp(&v) == q.cmp(&pat[t]));
        if fits {
            chosen.push(v);
            if search(word, i + 1, pat, tail, chosen) {
                return true;
            }
            chosen.pop();
        }
    }
    false
}

/// `sigma_t`: zeros stay, positive entries move by `t`.
///
/// Applies to arbitrary substrings, so the output is a plain word.
pub fn shift_positive(word: &[usize], t: isize) -> Result<Vec<usize>> {
    word.iter()
        .map(|&v| {
            if v == 0 {
                return Ok(0);
            }
            let shifted = v as isize + t;
            if shifted <= 0 {
                Err(Error::ShiftNonPositive)
            } else {
                Ok(shifted as usize)
            }
        })
        .collect()
}

/// Parses `"0,1,0,2"`; surrounding whitespace is ignored and the empty
/// string gives the empty word.
pub fn parse_comma_separated(s: &str) -> Result<Vec<usize>> {
    let s = s.trim();
    if s.is_empty() {
        return Ok(Vec::new());
    }
    s.split(',')
        .map(|tok| {
            tok.trim()
                .parse::<usize>()
                .map_err(|_| Error::Parse(alloc::format!("bad integer {:?}", tok.trim())))
        })
        .collect()
}

pub(crate) fn write_comma_separated(f: &mut fmt::Formatter<'_>, xs: &[usize]) -> fmt::Result {
    for (i, x) in xs.iter().enumerate() {
        if i > 0 {
            f.write_str(",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

pub(crate) fn join_comma(xs: &[usize]) -> String {
    xs.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")
}

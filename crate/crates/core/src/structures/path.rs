//! Schröder paths: `U = (1,1)`, `D = (1,-1)`, `F = (2,0)`, from `(0,0)` to
//! `(2n,0)` without going below the axis.

use alloc::string::String;
use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::{Error, Result};

/// One step of a Schröder path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Step {
    /// Up step `(1, 1)`.
    U,
    /// Down step `(1, -1)`.
    D,
    /// Flat step `(2, 0)`.
    F,
}

impl Step {
    fn letter(self) -> char {
        match self {
            Step::U => 'U',
            Step::D => 'D',
            Step::F => 'F',
        }
    }
}

/// A valid Schröder path. Its size `n` is `#U + #F`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct SchroderPath(Vec<Step>);

/// Statistics read off a path.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct PathStats {
    /// Number of `F` steps.
    pub flats: usize,
    /// Occurrences of `UD`.
    pub peaks: usize,
    /// Occurrences of `DU`.
    pub valleys: usize,
    /// Length of the initial run of `U` steps.
    pub initial_up_run: usize,
    /// Number of maximal runs of `U` steps.
    pub ascents: usize,
    /// `F` steps at height zero.
    pub flats_at_height0: usize,
    /// Letters `U` left in the valley word (`#U - valleys`).
    pub valley_word_u_count: usize,
}

/// Letter of a valley word: a path word with every `DU` replaced by `V`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum ValleyLetter {
    /// Up step not preceded by a down step.
    U,
    /// Down step not followed by an up step.
    D,
    /// Flat step.
    F,
    /// A valley `DU`.
    V,
}

impl SchroderPath {
    /// Validates a step word.
    pub fn new(steps: Vec<Step>) -> Result<Self> {
        let mut height: i64 = 0;
        for (i, s) in steps.iter().enumerate() {
            match s {
                Step::U => height += 1,
                Step::D => height -= 1,
                Step::F => {}
            }
            if height < 0 {
                return Err(Error::InvalidPath(alloc::format!("goes below the axis at step {}", i + 1)));
            }
        }
        if height != 0 {
            return Err(Error::InvalidPath(alloc::format!("ends at height {height}")));
        }
        Ok(Self(steps))
    }

    pub(crate) fn from_steps_unchecked(steps: Vec<Step>) -> Self {
        Self(steps)
    }

    /// The empty path (size 0).
    pub fn empty() -> Self {
        Self(Vec::new())
    }

    /// Steps of the path.
    pub fn steps(&self) -> &[Step] {
        &self.0
    }

    /// Size `n`: the path ends at `(2n, 0)`.
    pub fn size(&self) -> usize {
        self.0.iter().filter(|&&s| s != Step::D).count()
    }

    /// Computes every [`PathStats`] field.
    pub fn stats(&self) -> PathStats {
        let s = &self.0;
        let ups = s.iter().filter(|&&x| x == Step::U).count();
        let pairs = |a: Step, b: Step| s.windows(2).filter(|w| w[0] == a && w[1] == b).count();
        let valleys = pairs(Step::D, Step::U);
        let ascents = s
            .iter()
            .enumerate()
            .filter(|&(i, &x)| x == Step::U && (i == 0 || s[i - 1] != Step::U))
            .count();
        let mut height = 0i64;
        let mut flats_at_height0 = 0;
        for &x in s {
            match x {
                Step::U => height += 1,
                Step::D => height -= 1,
                Step::F if height == 0 => flats_at_height0 += 1,
                Step::F => {}
            }
        }
        PathStats {
            flats: s.iter().filter(|&&x| x == Step::F).count(),
            peaks: pairs(Step::U, Step::D),
            valleys,
            initial_up_run: s.iter().take_while(|&&x| x == Step::U).count(),
            ascents,
            flats_at_height0,
            valley_word_u_count: ups - valleys,
        }
    }

    /// Replaces each `DU`, left to right, by `V`.
    pub fn valley_word(&self) -> Vec<ValleyLetter> {
        let s = &self.0;
        let mut out = Vec::with_capacity(s.len());
        let mut i = 0;
        while i < s.len() {
            if s[i] == Step::D && s.get(i + 1) == Some(&Step::U) {
                out.push(ValleyLetter::V);
                i += 2;
                continue;
            }
            out.push(match s[i] {
                Step::U => ValleyLetter::U,
                Step::D => ValleyLetter::D,
                Step::F => ValleyLetter::F,
            });
            i += 1;
        }
        out
    }

    /// Expands a valley word back into a path (`V` becomes `DU`).
    pub fn from_valley_word(word: &[ValleyLetter]) -> Result<Self> {
        let mut steps = Vec::with_capacity(word.len() * 2);
        for &l in word {
            match l {
                ValleyLetter::U => steps.push(Step::U),
                ValleyLetter::D => steps.push(Step::D),
                ValleyLetter::F => steps.push(Step::F),
                ValleyLetter::V => steps.extend([Step::D, Step::U]),
            }
        }
        Self::new(steps)
    }

    /// Swaps every `UD` with `F` and every `F` with `UD`.
    ///
    /// This is a size-preserving involution exchanging flats and peaks.
    pub fn peak_flat_involution(&self) -> Self {
        let s = &self.0;
        let mut out = Vec::with_capacity(s.len() + self.stats().flats);
        let mut i = 0;
        while i < s.len() {
            match s[i] {
                Step::U if s.get(i + 1) == Some(&Step::D) => {
                    out.push(Step::F);
                    i += 2;
                }
                Step::F => {
                    out.extend([Step::U, Step::D]);
                    i += 1;
                }
                x => {
                    out.push(x);
                    i += 1;
                }
            }
        }
        Self(out)
    }

    /// Every Schröder path of the given size, built by first-return
    /// decomposition: `F B` or `U A D B`.
    pub fn all(size: usize) -> Vec<SchroderPath> {
        let mut by_size: Vec<Vec<Vec<Step>>> = vec![vec![Vec::new()]];
        for m in 1..=size {
            let mut paths = Vec::new();
            for b in &by_size[m - 1] {
                let mut p = vec![Step::F];
                p.extend_from_slice(b);
                paths.push(p);
            }
            for i in 0..m {
                for a in &by_size[i] {
                    for b in &by_size[m - 1 - i] {
                        let mut p = Vec::with_capacity(a.len() + b.len() + 2);
                        p.push(Step::U);
                        p.extend_from_slice(a);
                        p.push(Step::D);
                        p.extend_from_slice(b);
                        paths.push(p);
                    }
                }
            }
            by_size.push(paths);
        }
        by_size.swap_remove(size).into_iter().map(SchroderPath).collect()
    }
}

impl fmt::Display for SchroderPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for s in &self.0 {
            write!(f, "{}", s.letter())?;
        }
        Ok(())
    }
}

impl FromStr for SchroderPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let steps = s
            .trim()
            .chars()
            .map(|c| match c.to_ascii_uppercase() {
                'U' => Ok(Step::U),
                'D' => Ok(Step::D),
                'F' => Ok(Step::F),
                _ => Err(Error::Parse(alloc::format!("bad step {c:?}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(steps)
    }
}

/// Text form of a valley word.
pub fn valley_word_string(word: &[ValleyLetter]) -> String {
    word.iter()
        .map(|l| match l {
            ValleyLetter::U => 'U',
            ValleyLetter::D => 'D',
            ValleyLetter::F => 'F',
            ValleyLetter::V => 'V',
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    const FIGURE: &str = "UUDUFUDUFDDDUUDUDDUUUFDDD";

    fn path(s: &str) -> SchroderPath {
        s.parse().unwrap()
    }

    #[test]
    fn figure_path_statistics() {
        let p = path(FIGURE);
        assert_eq!(p.size(), 14);
        let s = p.stats();
        assert_eq!((s.flats, s.valleys, s.initial_up_run), (3, 5, 2));
        assert_eq!(valley_word_string(&p.valley_word()), "UUVFUVFDDVUVDVUUFDDD");
        assert_eq!(s.valley_word_u_count, 6);
    }

    #[test]
    fn tiny_paths() {
        let s = path("F").stats();
        assert_eq!((s.flats, s.flats_at_height0, s.peaks), (1, 1, 0));
        let s = path("UD").stats();
        assert_eq!((s.peaks, s.valleys, s.ascents), (1, 0, 1));
        assert_eq!(valley_word_string(&path("UD").valley_word()), "UD");
        assert_eq!(valley_word_string(&path("UDUD").valley_word()), "UVD");
        assert_eq!(SchroderPath::empty().stats(), PathStats::default());
    }

    #[test]
    fn involution_examples() {
        assert_eq!(path("F").peak_flat_involution(), path("UD"));
        assert_eq!(path("UD").peak_flat_involution(), path("F"));
        assert_eq!(path("UUDD").peak_flat_involution(), path("UFD"));
    }

    #[test]
    fn rejects_bad_words() {
        assert!("DU".parse::<SchroderPath>().is_err());
        assert!("UUD".parse::<SchroderPath>().is_err());
        assert!("UXD".parse::<SchroderPath>().is_err());
        assert!(SchroderPath::from_valley_word(&[ValleyLetter::V]).is_err());
    }

    #[test]
    fn schroder_counts_and_involution() {
        let r = [1usize, 2, 6, 22, 90, 394, 1806, 8558, 41586];
        for (n, &rn) in r.iter().enumerate() {
            let all = SchroderPath::all(n);
            assert_eq!(all.len(), rn);
            if n <= 6 {
                for p in &all {
                    let q = p.peak_flat_involution();
                    assert_eq!(q.size(), n);
                    assert_eq!(q.peak_flat_involution(), *p);
                    assert_eq!(q.stats().flats, p.stats().peaks);
                    assert_eq!(q.stats().peaks, p.stats().flats);
                    assert!(SchroderPath::new(q.steps().to_vec()).is_ok());
                }
            }
            for p in &all {
                let s = p.stats();
                let ups = p.steps().iter().filter(|&&x| x == Step::U).count();
                assert_eq!(2 * s.flats + 2 * ups, 2 * n);
                assert_eq!(s.ascents >= 1, ups >= 1);
                assert_eq!(SchroderPath::from_valley_word(&p.valley_word()).unwrap(), *p);
            }
        }
    }

    /// Prefix-sum oracle for validity of arbitrary step words.
    #[test]
    fn validity_matches_prefix_sums() {
        let letters = [Step::U, Step::D, Step::F];
        for len in 0..=7u32 {
            for code in 0..3usize.pow(len) {
                let mut c = code;
                let steps: Vec<Step> = (0..len)
                    .map(|_| {
                        let s = letters[c % 3];
                        c /= 3;
                        s
                    })
                    .collect();
                let sums: Vec<i64> = steps
                    .iter()
                    .scan(0i64, |h, s| {
                        *h += match s {
                            Step::U => 1,
                            Step::D => -1,
                            Step::F => 0,
                        };
                        Some(*h)
                    })
                    .collect();
                let ok = sums.iter().all(|&h| h >= 0) && sums.last().copied().unwrap_or(0) == 0;
                assert_eq!(SchroderPath::new(steps).is_ok(), ok);
            }
        }
    }
}

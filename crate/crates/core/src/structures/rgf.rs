//! Restricted growth functions and the set partitions they encode.

use alloc::vec::Vec;
use core::fmt;
use core::str::FromStr;

use crate::word::{join_comma, parse_comma_separated, write_comma_separated};
use crate::{Error, Result};

/// `v_1 = 1` and `v_i <= 1 + max(v_1..v_{i-1})`. The empty word is allowed.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Rgf(Vec<usize>);

impl Rgf {
    /// Validates the growth condition.
    pub fn new(v: Vec<usize>) -> Result<Self> {
        let mut max = 0;
        for (i, &x) in v.iter().enumerate() {
            if x == 0 || x > max + 1 {
                return Err(Error::InvalidRgf(alloc::format!(
                    "v_{} = {x} with prefix maximum {max}",
                    i + 1
                )));
            }
            max = max.max(x);
        }
        Ok(Self(v))
    }

    pub(crate) fn from_vec_unchecked(v: Vec<usize>) -> Self {
        Self(v)
    }

    /// The letters.
    pub fn as_slice(&self) -> &[usize] {
        &self.0
    }

    /// Number of distinct letters, i.e. blocks of the encoded partition.
    pub fn num_blocks(&self) -> usize {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `i` goes in block `B_{v_i}`; blocks come out ordered by minimum.
    pub fn to_partition(&self) -> SetPartition {
        let mut blocks: Vec<Vec<usize>> = (0..self.num_blocks()).map(|_| Vec::new()).collect();
        for (i, &b) in self.0.iter().enumerate() {
            blocks[b - 1].push(i + 1);
        }
        SetPartition(blocks)
    }

    /// Every restricted growth function of length `n`, lexicographically.
    pub fn all(n: usize) -> Vec<Rgf> {
        fn go(n: usize, cur: &mut Vec<usize>, max: usize, out: &mut Vec<Rgf>) {
            if cur.len() == n {
                out.push(Rgf(cur.clone()));
                return;
            }
            for v in 1..=max + 1 {
                cur.push(v);
                go(n, cur, max.max(v), out);
                cur.pop();
            }
        }
        let mut out = Vec::new();
        go(n, &mut Vec::with_capacity(n), 0, &mut out);
        out
    }
}

impl fmt::Display for Rgf {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_comma_separated(f, &self.0)
    }
}

impl FromStr for Rgf {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::new(parse_comma_separated(s)?)
    }
}

/// A set partition of `[n]`, blocks sorted internally and ordered by minimum.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SetPartition(Vec<Vec<usize>>);

impl SetPartition {
    /// Validates and normalizes the block order.
    pub fn new(mut blocks: Vec<Vec<usize>>) -> Result<Self> {
        let mut seen: Vec<usize> = Vec::new();
        for b in &mut blocks {
            if b.is_empty() {
                return Err(Error::InvalidPartition("empty block".into()));
            }
            b.sort_unstable();
            seen.extend_from_slice(b);
        }
        seen.sort_unstable();
        if seen.iter().enumerate().any(|(i, &x)| x != i + 1) {
            return Err(Error::InvalidPartition("blocks must cover 1..n exactly once".into()));
        }
        blocks.sort_unstable_by_key(|b| b[0]);
        Ok(Self(blocks))
    }

    /// Blocks, each sorted, ordered by their minima.
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.0
    }

    /// The restricted growth function of the partition.
    pub fn to_rgf(&self) -> Rgf {
        let n = self.0.iter().map(Vec::len).sum();
        let mut v = alloc::vec![0; n];
        for (b, block) in self.0.iter().enumerate() {
            for &i in block {
                v[i - 1] = b + 1;
            }
        }
        Rgf(v)
    }
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, b) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("|")?;
            }
            write!(f, "{{{}}}", join_comma(b))?;
        }
        Ok(())
    }
}

impl FromStr for SetPartition {
    type Err = Error;

    /// Parses `{1,4}|{2,6,12}|...`.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Self::new(Vec::new());
        }
        let blocks = s
            .split('|')
            .map(|part| {
                let inner = part
                    .trim()
                    .strip_prefix('{')
                    .and_then(|p| p.strip_suffix('}'))
                    .ok_or_else(|| Error::Parse(alloc::format!("bad block {part:?}")))?;
                parse_comma_separated(inner)
            })
            .collect::<Result<Vec<_>>>()?;
        Self::new(blocks)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::string::ToString;
    use alloc::vec;

    #[test]
    fn worked_example() {
        let v = Rgf::new(vec![1, 2, 3, 1, 3, 2, 4, 5, 6, 3, 4, 2]).unwrap();
        let p = v.to_partition();
        assert_eq!(p.to_string(), "{1,4}|{2,6,12}|{3,5,10}|{7,11}|{8}|{9}");
        assert_eq!(p.to_rgf(), v);
        assert_eq!(p.to_string().parse::<SetPartition>().unwrap(), p);
        assert_eq!(v.num_blocks(), 6);
    }

    #[test]
    fn trivial_partitions() {
        assert_eq!(Rgf::new(vec![1, 1, 1]).unwrap().to_partition().to_string(), "{1,2,3}");
        assert_eq!(Rgf::new(vec![1, 2, 3]).unwrap().to_partition().to_string(), "{1}|{2}|{3}");
    }

    #[test]
    fn invalid_inputs() {
        assert!(Rgf::new(vec![2]).is_err());
        assert!(Rgf::new(vec![1, 3]).is_err());
        assert!(Rgf::new(vec![1, 0]).is_err());
        assert!(SetPartition::new(vec![vec![1], vec![3]]).is_err());
        assert!(SetPartition::new(vec![vec![1, 2], vec![2]]).is_err());
        assert!("{1,2".parse::<SetPartition>().is_err());
        // block order is normalized
        let p = SetPartition::new(vec![vec![3, 2], vec![1]]).unwrap();
        assert_eq!(p.to_string(), "{1}|{2,3}");
    }

    #[test]
    fn bell_numbers_and_round_trips() {
        let bell = [1usize, 1, 2, 5, 15, 52, 203, 877];
        for (n, &b) in bell.iter().enumerate() {
            let all = Rgf::all(n);
            assert_eq!(all.len(), b);
            for v in &all {
                let p = v.to_partition();
                assert_eq!(p.blocks().len(), v.num_blocks());
                assert_eq!(p.to_rgf(), *v);
            }
        }
    }
}

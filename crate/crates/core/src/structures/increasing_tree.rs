//! Increasing trees on `{0, ..., n}` rooted at 0 in which every vertex has
//! at most two children, stored as the parent array `p_1..p_n`.

use alloc::vec;
use alloc::vec::Vec;

use crate::{Error, Result};

/// A 0-1-2 increasing tree given by its parents.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct IncreasingTree {
    parents: Vec<usize>,
}

impl IncreasingTree {
    /// True iff `p_i < i` for all `i` and no label is a parent more than twice.
    pub fn is_valid(parents: &[usize]) -> bool {
        let mut children = vec![0u8; parents.len() + 1];
        parents.iter().enumerate().all(|(i, &p)| {
            if p > i {
                return false;
            }
            children[p] += 1;
            children[p] <= 2
        })
    }

    /// Validating constructor.
    pub fn new(parents: Vec<usize>) -> Result<Self> {
        if Self::is_valid(&parents) {
            Ok(Self { parents })
        } else {
            Err(Error::InvalidTree(crate::word::join_comma(&parents)))
        }
    }

    /// Parent array `p_1..p_n`.
    pub fn parents(&self) -> &[usize] {
        &self.parents
    }

    /// Number of non-root vertices.
    pub fn len(&self) -> usize {
        self.parents.len()
    }

    /// True for the single-vertex tree.
    pub fn is_empty(&self) -> bool {
        self.parents.is_empty()
    }

    /// Children of `v`, in increasing order.
    pub fn children(&self, v: usize) -> Vec<usize> {
        self.parents
            .iter()
            .enumerate()
            .filter(|&(_, &p)| p == v)
            .map(|(i, _)| i + 1)
            .collect()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert!(IncreasingTree::is_valid(&[0, 1, 0, 3, 2, 1, 2, 4, 6, 4]));
        assert!(!IncreasingTree::is_valid(&[0, 0, 0]));
        assert!(IncreasingTree::is_valid(&[0, 1, 2]));
        assert!(!IncreasingTree::is_valid(&[1]));
        assert!(IncreasingTree::new(vec![0, 0, 0]).is_err());
        let t = IncreasingTree::new(vec![0, 1, 0, 3, 2, 1, 2, 4, 6, 4]).unwrap();
        assert_eq!(t.children(0), [1, 3]);
        assert_eq!(t.children(4), [8, 10]);
        assert!(t.children(5).is_empty());
    }
}

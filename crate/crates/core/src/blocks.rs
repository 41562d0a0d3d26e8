//! Block factorization `e = b_0 b_1 ... b_{n-1}` of a 021-avoider.
//!
//! Block `b_k` starts at the first occurrence of `k` and holds only the
//! letters `k` and `0`; `b_0` is the run of leading zeros. Blocks of values
//! that never occur are empty.

use alloc::vec::Vec;

use crate::word::{contains, Pattern};
use crate::{Error, Result};

/// One factor `b_k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// The value `k` labelling the block.
    pub value: usize,
    /// 1-based position of the first entry, `None` for an empty block.
    pub start: Option<usize>,
    /// The entries of the block (each `k` or `0`).
    pub entries: Vec<usize>,
    /// True iff the block begins at position `k + 1`.
    pub maximal: bool,
}

/// The `n` blocks of a 021-avoiding sequence of length `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BlockDecomposition {
    /// `b_0, ..., b_{n-1}`, indexed by value.
    pub blocks: Vec<Block>,
}

impl BlockDecomposition {
    /// Concatenates the blocks back into the sequence.
    pub fn concat(&self) -> Vec<usize> {
        self.blocks.iter().flat_map(|b| b.entries.iter().copied()).collect()
    }

    /// Values of the maximal blocks, in increasing order.
    pub fn maximal_values(&self) -> Vec<usize> {
        self.blocks.iter().filter(|b| b.maximal).map(|b| b.value).collect()
    }

    /// Nonempty blocks, in order.
    pub fn nonempty(&self) -> impl Iterator<Item = &Block> {
        self.blocks.iter().filter(|b| !b.entries.is_empty())
    }
}

/// Factors `e` into blocks. Fails if `e` contains 021.
pub fn blocks(e: &[usize]) -> Result<BlockDecomposition> {
    let p021 = Pattern::new(alloc::vec![0, 2, 1]).expect("reduced");
    if contains(e, &p021) {
        return Err(Error::BlocksUndefined);
    }
    let n = e.len();
    let mut out: Vec<Block> = (0..n)
        .map(|value| Block { value, start: None, entries: Vec::new(), maximal: false })
        .collect();
    let mut current = 0;
    for (i, &v) in e.iter().enumerate() {
        if v != 0 && v != current {
            current = v;
        }
        let block = &mut out[current];
        if block.start.is_none() {
            block.start = Some(i + 1);
            block.maximal = i == current;
        }
        block.entries.push(v);
    }
    Ok(BlockDecomposition { blocks: out })
}

//! Bijection from Schröder paths of size `n - 1` to `I_n(021)`, read off the
//! valley word.
//!
//! The sequence is kept as its blocks `b_0, b_1, ...` together with a stack
//! `M` of block labels, starting from `e = (0)` and `M = [0]`:
//!
//! * `U`: with `l = |e|`, append `l` to `e` as a new block `b_l` and push `l`;
//! * `D`: pop `M`;
//! * `V`: append `0` to the block named by the top of `M`;
//! * `F`: append the top `j` of `M` to `b_j`.
//!
//! Appending to a block inserts inside `e` when later blocks exist.

use alloc::vec::Vec;

use super::require_avoids;
use crate::structures::path::{SchroderPath, ValleyLetter};
use crate::{Error, InversionSequence, Result};

struct Block {
    label: usize,
    entries: Vec<usize>,
}

/// Runs the valley-word interpreter.
pub fn phi(p: &SchroderPath) -> InversionSequence {
    let mut blocks = alloc::vec![Block { label: 0, entries: alloc::vec![0] }];
    // stack of indices into `blocks`
    let mut stack = alloc::vec![0usize];
    let mut len = 1;
    for letter in p.valley_word() {
        let top = *stack.last().expect("stack never empties on a valid path");
        match letter {
            ValleyLetter::U => {
                blocks.push(Block { label: len, entries: alloc::vec![len] });
                stack.push(blocks.len() - 1);
                len += 1;
            }
            ValleyLetter::D => {
                stack.pop();
            }
            ValleyLetter::V => {
                blocks[top].entries.push(0);
                len += 1;
            }
            ValleyLetter::F => {
                let label = blocks[top].label;
                blocks[top].entries.push(label);
                len += 1;
            }
        }
    }
    let e = blocks.into_iter().flat_map(|b| b.entries).collect();
    InversionSequence::from_vec_unchecked(e)
}

/// Replays the construction: a new block is opened exactly when `|e|`
/// reaches its label, the open block is filled next, and otherwise the
/// stack is popped.
pub fn phi_inv(e: &InversionSequence) -> Result<SchroderPath> {
    let e = e.as_slice();
    if e.is_empty() {
        return Err(Error::EmptyWord);
    }
    require_avoids(e, "021")?;
    let target = split_blocks(e);
    let mut filled = alloc::vec![0usize; target.len()];
    filled[0] = 1;
    let mut stack = alloc::vec![0usize];
    let mut next = 1;
    let mut len = 1;
    let mut word = Vec::new();
    while len < e.len() {
        if next < target.len() && target[next].label == len {
            word.push(ValleyLetter::U);
            filled[next] = 1;
            stack.push(next);
            next += 1;
            len += 1;
            continue;
        }
        let top = *stack.last().expect("root block stays on the stack");
        if filled[top] < target[top].entries.len() {
            let x = target[top].entries[filled[top]];
            word.push(if x == 0 && top != 0 { ValleyLetter::V } else { ValleyLetter::F });
            filled[top] += 1;
            len += 1;
        } else if stack.len() > 1 {
            word.push(ValleyLetter::D);
            stack.pop();
        } else {
            unreachable!("a 021-avoider always has a block to open or fill");
        }
    }
    word.extend(core::iter::repeat_n(ValleyLetter::D, stack.len() - 1));
    Ok(SchroderPath::from_valley_word(&word).expect("replay yields a valid path"))
}

/// Blocks of a 021-avoider in order: leading zeros, then one block per
/// distinct positive value.
fn split_blocks(e: &[usize]) -> Vec<Block> {
    let mut blocks = alloc::vec![Block { label: 0, entries: Vec::new() }];
    for &x in e {
        let current = blocks.last().expect("nonempty").label;
        if x != 0 && x != current {
            blocks.push(Block { label: x, entries: Vec::new() });
        }
        blocks.last_mut().expect("nonempty").entries.push(x);
    }
    blocks
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Avoiders;
    use crate::stats::stats;
    use crate::structures::path::valley_word_string;

    fn path_from_valley(s: &str) -> SchroderPath {
        let word: Vec<ValleyLetter> = s
            .chars()
            .map(|c| match c {
                'U' => ValleyLetter::U,
                'D' => ValleyLetter::D,
                'F' => ValleyLetter::F,
                _ => ValleyLetter::V,
            })
            .collect();
        SchroderPath::from_valley_word(&word).unwrap()
    }

    #[test]
    fn worked_example() {
        let p = path_from_valley("UUVFUVFDDVUVDVUUFDDD");
        let e = phi(&p);
        assert_eq!(e.as_slice(), &[0, 1, 0, 0, 2, 0, 2, 5, 0, 5, 9, 0, 12, 13, 13]);
        assert_eq!(valley_word_string(&phi_inv(&e).unwrap().valley_word()), "UUVFUVFDDVUVDVUUFDDD");
    }

    #[test]
    fn small_cases() {
        assert_eq!(phi(&SchroderPath::empty()).as_slice(), &[0]);
        assert_eq!(phi(&"F".parse().unwrap()).as_slice(), &[0, 0]);
        assert_eq!(phi(&"UD".parse().unwrap()).as_slice(), &[0, 1]);
        assert!(phi_inv(&"0,0,2,1".parse().unwrap()).is_err());
    }

    #[test]
    fn differs_from_rho() {
        let p: SchroderPath = "UUDUFUDUFDDDUUDUDDUUUFDDD".parse().unwrap();
        assert_ne!(phi(&p), super::super::rho_inv(&p));
    }

    #[test]
    fn round_trips_and_transports() {
        let pat = ["021".parse().unwrap()];
        for n in 1..=8 {
            let mut images = Vec::new();
            for p in SchroderPath::all(n - 1) {
                let e = phi(&p);
                assert!(InversionSequence::new(e.as_slice().to_vec()).is_ok());
                assert_eq!(phi_inv(&e).unwrap(), p);
                let (ps, es) = (p.stats(), stats(e.as_slice()));
                assert_eq!(ps.valleys, es.late_zeros);
                assert_eq!(ps.valley_word_u_count, es.distinct_nonzero_values);
                assert_eq!(ps.flats_at_height0 + 1, es.leading_zeros);
                images.push(e);
            }
            images.sort();
            let all: Vec<_> = Avoiders::new(n, &pat).collect();
            assert_eq!(images, all);
        }
    }
}

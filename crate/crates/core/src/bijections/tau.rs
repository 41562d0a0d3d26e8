//! Bijection from `I_n(021)` to black/white trees with `n - 1` nodes that
//! turns ascents into black nodes.
//!
//! With `l` the largest value such that `e_2 = ... = e_{l+1}`, and `k + 1`
//! the earliest position after `l + 1` with `e_{k+1} >= k - l + 1` (or
//! `k = n` if none), the root is white when `e_2 = 0` and black when
//! `e_2 = 1`, the left subtree is `tau(0^l . sigma_{l-k}(e_{k+1}, ..., e_n))`
//! and the right subtree is `tau(0, e_{l+2}, ..., e_k)`. `tau(0)` is empty.

use alloc::vec::Vec;

use super::require_avoids;
use crate::structures::{BwTree, Color};
use crate::word::shift_positive;
use crate::{Error, InversionSequence, Result};

/// Applies the map. Fails on the empty sequence or on 021-containment.
pub fn tau(e: &InversionSequence) -> Result<BwTree> {
    if e.is_empty() {
        return Err(Error::EmptyWord);
    }
    require_avoids(e.as_slice(), "021")?;
    Ok(forward(e.as_slice()))
}

fn forward(e: &[usize]) -> BwTree {
    let n = e.len();
    if n <= 1 {
        return BwTree::empty();
    }
    // 1-based helper
    let at = |i: usize| e[i - 1];
    let c = at(2);
    let mut l = 1;
    while l + 2 <= n && at(l + 2) == c {
        l += 1;
    }
    let k = (l + 1..n).find(|&k| at(k + 1) + l > k).unwrap_or(n);
    let mut left = alloc::vec![0; l];
    left.extend(shift_positive(&e[k..], l as isize - k as isize).expect("entries past k exceed k - l"));
    let mut right = alloc::vec![0];
    right.extend_from_slice(&e[l + 1..k]);
    let color = if c == 0 { Color::White } else { Color::Black };
    BwTree::join(color, forward(&left), forward(&right)).expect("right subtree root has the other color")
}

/// Inverse: the left subtree fixes `l` through its leading zeros and the
/// right subtree fixes `k - l` through its size.
pub fn tau_inv(t: &BwTree) -> InversionSequence {
    InversionSequence::from_vec_unchecked(backward(t.clone()))
}

fn backward(t: BwTree) -> Vec<usize> {
    let Some((color, left, right)) = t.into_parts() else {
        return alloc::vec![0];
    };
    let c = usize::from(color == Color::Black);
    let left = backward(left);
    let l = left.iter().take_while(|&&x| x == 0).count();
    let f = backward(right);
    let k = l + f.len();
    let mut e = Vec::with_capacity(1 + l + f.len() + left.len());
    e.push(0);
    e.extend(core::iter::repeat_n(c, l));
    e.extend_from_slice(&f[1..]);
    e.extend(shift_positive(&left[l..], (k - l) as isize).expect("nonnegative shift"));
    e
}

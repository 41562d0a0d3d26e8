//! Bijection from `I_n(011)` to restricted growth functions of length `n`,
//! under which zeros become blocks.
//!
//! Built one letter at a time: with `k` zeros among `e_1..e_{n-1}` and
//! `a_1 < ... < a_k` the values of `[n-1]` not used there, `v_n = k + 1` if
//! `e_n = 0` and `v_n = i` if `e_n = a_i`.

use alloc::vec::Vec;

use super::require_avoids;
use crate::structures::Rgf;
use crate::{InversionSequence, Result};

/// Values of `1..=m` absent from `prefix`, ascending.
fn unused(prefix: &[usize], m: usize) -> Vec<usize> {
    let mut used = alloc::vec![false; m + 1];
    for &x in prefix {
        if x <= m {
            used[x] = true;
        }
    }
    (1..=m).filter(|&x| !used[x]).collect()
}

/// Applies the map. Fails on 011-containment.
pub fn kappa(e: &InversionSequence) -> Result<Rgf> {
    let e = e.as_slice();
    require_avoids(e, "011")?;
    let mut v = Vec::with_capacity(e.len());
    let mut zeros = 0;
    for (i, &x) in e.iter().enumerate() {
        if x == 0 {
            v.push(zeros + 1);
            zeros += 1;
        } else {
            let a = unused(&e[..i], i);
            let rank = a.binary_search(&x).expect("avoiding 011 keeps e_n unused");
            v.push(rank + 1);
        }
    }
    Ok(Rgf::from_vec_unchecked(v))
}

/// Inverse: the prefix maximum of `v` is the number of zeros so far.
pub fn kappa_inv(v: &Rgf) -> InversionSequence {
    let v = v.as_slice();
    let mut e: Vec<usize> = Vec::with_capacity(v.len());
    let mut max = 0;
    for (i, &x) in v.iter().enumerate() {
        if x == max + 1 {
            e.push(0);
            max += 1;
        } else {
            e.push(unused(&e, i)[x - 1]);
        }
    }
    InversionSequence::from_vec_unchecked(e)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Avoiders;
    use crate::stats::stats;

    #[test]
    fn worked_example() {
        let e: InversionSequence = "0,0,0,1,4,3,0,0,0,6,8,5".parse().unwrap();
        let v = kappa(&e).unwrap();
        assert_eq!(v.as_slice(), &[1, 2, 3, 1, 3, 2, 4, 5, 6, 3, 4, 2]);
        assert_eq!(kappa_inv(&v), e);
    }

    #[test]
    fn small_cases() {
        assert_eq!(kappa(&"0".parse().unwrap()).unwrap().as_slice(), &[1]);
        assert_eq!(kappa(&"0,1,2".parse().unwrap()).unwrap().as_slice(), &[1, 1, 1]);
        assert!(kappa(&"0,1,1".parse().unwrap()).is_err());
    }

    #[test]
    fn round_trips_and_blocks() {
        let p = ["011".parse().unwrap()];
        for n in 0..=8 {
            let mut images = Vec::new();
            for e in Avoiders::new(n, &p) {
                let v = kappa(&e).unwrap();
                assert!(Rgf::new(v.as_slice().to_vec()).is_ok());
                assert_eq!(kappa_inv(&v), e);
                assert_eq!(v.num_blocks(), stats(e.as_slice()).zeros);
                images.push(v);
            }
            assert_eq!(images.len(), Rgf::all(n).len());
            images.sort();
            images.dedup();
            assert_eq!(images.len(), Rgf::all(n).len());
        }
    }
}

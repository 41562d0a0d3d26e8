//! Bijection from `I_n(210)` to `I_n(201)`.
//!
//! Weak left-to-right maxima keep their values. Let `B` be the multiset of
//! the remaining values. The other positions `b_1 < b_2 < ...` are refilled
//! in order, `b_j` receiving the largest unused element of `B` that is
//! smaller than `max(e_1, ..., e_{b_j - 1})`.
//!
//! The inverse hands out the same multiset in increasing order.

use alloc::vec::Vec;

use super::require_avoids;
use crate::stats::weak_left_to_right_maxima;
use crate::{Error, InversionSequence, Result};

/// Non-maximum positions (0-based) and their running prefix maxima.
fn non_maxima(e: &[usize]) -> Vec<(usize, usize)> {
    let maxima = weak_left_to_right_maxima(e);
    let mut out = Vec::new();
    let mut running = 0;
    let mut m = maxima.iter().peekable();
    for (i, &x) in e.iter().enumerate() {
        if m.peek() == Some(&&(i + 1)) {
            m.next();
            running = x;
        } else {
            out.push((i, running));
        }
    }
    out
}

/// Applies the map. Fails on 210-containment.
pub fn mu(e: &InversionSequence) -> Result<InversionSequence> {
    mu_word(e.as_slice()).map(InversionSequence::from_vec_unchecked)
}

/// The same refill rule on an arbitrary word avoiding 210.
pub fn mu_word(e: &[usize]) -> Result<Vec<usize>> {
    require_avoids(e, "210")?;
    let slots = non_maxima(e);
    let mut pool: Vec<usize> = slots.iter().map(|&(i, _)| e[i]).collect();
    pool.sort_unstable();
    let mut f = e.to_vec();
    for &(i, prefix_max) in &slots {
        let idx = pool.partition_point(|&x| x < prefix_max);
        if idx == 0 {
            return Err(Error::EmptyCandidateSet(i + 1));
        }
        f[i] = pool.remove(idx - 1);
    }
    Ok(f)
}

/// Inverse map. Fails on 201-containment, or if the result does not map
/// back onto the input.
pub fn mu_inv(f: &InversionSequence) -> Result<InversionSequence> {
    let fs = f.as_slice();
    require_avoids(fs, "201")?;
    let slots = non_maxima(fs);
    let mut pool: Vec<usize> = slots.iter().map(|&(i, _)| fs[i]).collect();
    pool.sort_unstable();
    let mut e = fs.to_vec();
    for (&(i, _), v) in slots.iter().zip(pool) {
        e[i] = v;
    }
    let e = InversionSequence::from_vec_unchecked(e);
    match mu(&e) {
        Ok(back) if back == *f => Ok(e),
        _ => Err(Error::ContainsPattern("201")),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Avoiders;
    use crate::Pattern;

    #[test]
    fn example() {
        // not an inversion sequence, but the rule applies to any word
        assert_eq!(mu_word(&[0, 2, 0, 1]).unwrap(), [0, 2, 1, 0]);
        let e: InversionSequence = "0,1,0,3,1,2".parse().unwrap();
        let f = mu(&e).unwrap();
        assert_eq!(f.as_slice(), &[0, 1, 0, 3, 2, 1]);
        assert_eq!(mu_inv(&f).unwrap(), e);
        assert!(mu(&"0,1,2,1,0".parse().unwrap()).is_err());
    }

    #[test]
    fn fixes_weakly_increasing() {
        let e: InversionSequence = "0,0,1,1,3,5".parse().unwrap();
        assert_eq!(mu(&e).unwrap(), e);
    }

    #[test]
    fn bijection_onto_201_avoiders() {
        let p210: [Pattern; 1] = ["210".parse().unwrap()];
        let p201: [Pattern; 1] = ["201".parse().unwrap()];
        for n in 0..=8 {
            let mut images = Vec::new();
            for e in Avoiders::new(n, &p210) {
                let f = mu(&e).unwrap();
                assert!(f.avoids(&p201[0]), "{e} -> {f}");
                assert_eq!(weak_left_to_right_maxima(e.as_slice()), weak_left_to_right_maxima(f.as_slice()));
                for j in weak_left_to_right_maxima(e.as_slice()) {
                    assert_eq!(e.get(j), f.get(j));
                }
                assert_eq!(mu_inv(&f).unwrap(), e);
                images.push(f);
            }
            images.sort();
            let all: Vec<_> = Avoiders::new(n, &p201).collect();
            assert_eq!(images, all);
        }
    }
}

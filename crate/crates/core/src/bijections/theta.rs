//! Permutations to inversion sequences: `e_i = #{j < i : pi_j > pi_i}`.

use alloc::vec::Vec;

use crate::structures::Permutation;
use crate::InversionSequence;

/// Counts, for each position, the earlier letters that are larger.
pub fn theta(pi: &Permutation) -> InversionSequence {
    let p = pi.as_slice();
    let e = (0..p.len())
        .map(|i| p[..i].iter().filter(|&&x| x > p[i]).count())
        .collect();
    InversionSequence::from_vec_unchecked(e)
}

/// Rebuilds the permutation from the right: `pi_i` is the `(e_i + 1)`-th
/// largest value not used by later positions.
pub fn theta_inv(e: &InversionSequence) -> Permutation {
    let n = e.len();
    let mut remaining: Vec<usize> = (1..=n).collect();
    let mut pi = alloc::vec![0; n];
    for i in (0..n).rev() {
        let idx = remaining.len() - 1 - e.as_slice()[i];
        pi[i] = remaining.remove(idx);
    }
    Permutation::from_vec_unchecked(pi)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Avoiders;

    #[test]
    fn examples() {
        assert_eq!(theta(&Permutation::identity(5)), InversionSequence::zeros(5));
        let pi: Permutation = "312".parse().unwrap();
        assert_eq!(theta(&pi).as_slice(), &[0, 1, 1]);
        assert_eq!(theta_inv(&theta(&pi)), pi);
    }

    #[test]
    fn round_trips() {
        for n in 0..=7 {
            for pi in Permutation::all(n) {
                assert_eq!(theta_inv(&theta(&pi)), pi);
            }
        }
    }

    #[test]
    fn zero_zero_one_avoiders_go_to_132_231_avoiders() {
        let forbidden: [Permutation; 2] = ["132".parse().unwrap(), "231".parse().unwrap()];
        let p = ["001".parse().unwrap()];
        for n in 1..=8 {
            let mut seen = 0;
            for e in Avoiders::new(n, &p) {
                let pi = theta_inv(&e);
                assert!(pi.avoids_classical(&forbidden));
                seen += 1;
            }
            let target = Permutation::all(n).iter().filter(|q| q.avoids_classical(&forbidden)).count();
            assert_eq!(seen, target);
        }
    }
}

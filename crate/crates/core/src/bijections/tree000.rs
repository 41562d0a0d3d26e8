//! 0-1-2 increasing trees on `{0, ..., n}` and `I_n(000)`: `e_i` is the
//! parent of `i`.

use super::require_avoids;
use crate::structures::IncreasingTree;
use crate::{InversionSequence, Result};

/// Reads the parent array as an inversion sequence.
pub fn tree000_to_inv(t: &IncreasingTree) -> InversionSequence {
    InversionSequence::from_vec_unchecked(t.parents().to_vec())
}

/// Reads a 000-avoider as a parent array.
pub fn inv_to_tree000(e: &InversionSequence) -> Result<IncreasingTree> {
    require_avoids(e.as_slice(), "000")?;
    IncreasingTree::new(e.as_slice().to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Avoiders;
    use alloc::string::ToString;

    #[test]
    fn figure_tree() {
        let t = IncreasingTree::new(alloc::vec![0, 1, 0, 3, 2, 1, 2, 4, 6, 4]).unwrap();
        let e = tree000_to_inv(&t);
        assert_eq!(e.to_string(), "0,1,0,3,2,1,2,4,6,4");
        assert_eq!(inv_to_tree000(&e).unwrap(), t);
        assert!(inv_to_tree000(&"0,0,0".parse().unwrap()).is_err());
        let path = IncreasingTree::new((0..6).collect()).unwrap();
        assert_eq!(tree000_to_inv(&path).as_slice(), &[0, 1, 2, 3, 4, 5]);
    }

    #[test]
    fn round_trips() {
        let p = ["000".parse().unwrap()];
        for n in 0..=8 {
            for e in Avoiders::new(n, &p) {
                let t = inv_to_tree000(&e).unwrap();
                assert_eq!(tree000_to_inv(&t), e);
            }
        }
    }
}

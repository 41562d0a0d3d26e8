//! Recursive bijection from `I_n(021)` to Schröder paths of size `n - 1`.
//!
//! Let `j + 1` be the last position with `e_{j+1} = j`. Then
//! `rho(e) = F rho(e_2..e_n)` when `j = 0`, and otherwise
//! `rho(e) = U rho(e_1..e_j) D rho(sigma_{1-j}(0, e_{j+2}, ..., e_n))`,
//! with `rho(0)` the empty path.

use alloc::vec::Vec;

use super::require_avoids;
use crate::structures::path::{SchroderPath, Step};
use crate::word::shift_positive;
use crate::{Error, InversionSequence, Result};

/// Applies the map. Fails on the empty sequence or on 021-containment.
pub fn rho(e: &InversionSequence) -> Result<SchroderPath> {
    if e.is_empty() {
        return Err(Error::EmptyWord);
    }
    require_avoids(e.as_slice(), "021")?;
    let mut steps = Vec::with_capacity(2 * e.len());
    forward(e.as_slice(), &mut steps);
    Ok(SchroderPath::from_steps_unchecked(steps))
}

fn forward(e: &[usize], out: &mut Vec<Step>) {
    let n = e.len();
    if n <= 1 {
        return;
    }
    let j = (0..n).rev().find(|&i| e[i] == i).expect("e_1 = 0 is maximal");
    if j == 0 {
        out.push(Step::F);
        forward(&e[1..], out);
        return;
    }
    out.push(Step::U);
    forward(&e[..j], out);
    out.push(Step::D);
    let mut rest = Vec::with_capacity(n - j);
    rest.push(0);
    rest.extend_from_slice(&e[j + 1..]);
    let rest = shift_positive(&rest, 1 - j as isize).expect("positive entries after e_{j+1} are at least j");
    forward(&rest, out);
}

/// Inverse by first-return decomposition of the path.
pub fn rho_inv(p: &SchroderPath) -> InversionSequence {
    InversionSequence::from_vec_unchecked(backward(p.steps()))
}

fn backward(s: &[Step]) -> Vec<usize> {
    match s.first() {
        None => alloc::vec![0],
        Some(Step::F) => {
            let mut e = alloc::vec![0];
            e.extend(backward(&s[1..]));
            e
        }
        Some(Step::U) => {
            let mut height = 0i64;
            let close = s
                .iter()
                .position(|&x| {
                    height += match x {
                        Step::U => 1,
                        Step::D => -1,
                        Step::F => 0,
                    };
                    height == 0
                })
                .expect("valid path returns to the axis");
            let mut e = backward(&s[1..close]);
            let j = e.len();
            let b = backward(&s[close + 1..]);
            e.push(j);
            e.extend(shift_positive(&b[1..], j as isize - 1).expect("nonnegative shift"));
            e
        }
        Some(Step::D) => unreachable!("valid paths never start with D"),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::Avoiders;
    use crate::stats::stats;
    use alloc::string::ToString;

    fn seq(s: &str) -> InversionSequence {
        s.parse().unwrap()
    }

    #[test]
    fn figure_example() {
        let e = seq("0,1,0,1,0,2,5,7,7,7,9,0,10,11,12");
        let p = rho(&e).unwrap();
        assert_eq!(p.to_string(), "UUDUFUDUFDDDUUDUDDUUUFDDD");
        assert_eq!(rho_inv(&p), e);
    }

    #[test]
    fn small_cases() {
        assert_eq!(rho(&seq("0")).unwrap(), SchroderPath::empty());
        assert_eq!(rho(&seq("0,1")).unwrap().to_string(), "UD");
        assert_eq!(rho(&seq("0,0")).unwrap().to_string(), "F");
        assert_eq!(rho(&seq("0,0,2,1")), Err(Error::ContainsPattern("021")));
        assert_eq!(rho(&seq("")), Err(Error::EmptyWord));
    }

    #[test]
    fn round_trips_and_maximal_entries() {
        let p = ["021".parse().unwrap()];
        for n in 1..=8 {
            let mut images = Vec::new();
            for e in Avoiders::new(n, &p) {
                let path = rho(&e).unwrap();
                assert_eq!(path.size(), n - 1);
                assert_eq!(rho_inv(&path), e);
                assert_eq!(stats(e.as_slice()).maximal_entries, path.stats().initial_up_run + 1);
                images.push(path);
            }
            images.sort();
            let mut all = SchroderPath::all(n - 1);
            all.sort();
            assert_eq!(images, all);
        }
    }
}

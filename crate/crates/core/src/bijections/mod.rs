//! Explicit maps between inversion-sequence classes and other families.
//!
//! | map | domain | codomain |
//! |-----|--------|----------|
//! | [`theta`] | permutations of `[n]` | `I_n` |
//! | [`rho`] | `I_n(021)` | Schröder paths of size `n - 1` |
//! | [`phi`] | Schröder paths of size `n - 1` | `I_n(021)` |
//! | [`kappa`] | `I_n(011)` | restricted growth functions of length `n` |
//! | [`tau`] | `I_n(021)` | black/white trees with `n - 1` nodes |
//! | [`mu`] | `I_n(210)` | `I_n(201)` |
//! | [`tree000`] | 0-1-2 increasing trees on `{0..n}` | `I_n(000)` |
//!
//! Every map comes with its inverse. `rho` and `phi` are different
//! bijections between the same two sets.

pub mod kappa;
pub mod mu;
pub mod phi;
pub mod rho;
pub mod tau;
pub mod theta;
pub mod tree000;

pub use kappa::{kappa, kappa_inv};
pub use mu::{mu, mu_inv, mu_word};
pub use phi::{phi, phi_inv};
pub use rho::{rho, rho_inv};
pub use tau::{tau, tau_inv};
pub use theta::{theta, theta_inv};
pub use tree000::{inv_to_tree000, tree000_to_inv};

use crate::word::{contains, Pattern};
use crate::{Error, Result};

/// Fails with [`Error::ContainsPattern`] when `e` contains `p`.
pub(crate) fn require_avoids(e: &[usize], p: &'static str) -> Result<()> {
    let pattern: Pattern = p.parse().expect("static pattern");
    if contains(e, &pattern) {
        Err(Error::ContainsPattern(p))
    } else {
        Ok(())
    }
}

/// Names accepted by [`by_name`] style front ends.
pub const NAMES: [&str; 7] = ["theta", "rho", "phi", "kappa", "tau", "mu", "tree000"];

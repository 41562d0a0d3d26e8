//! Companion combinatorial families.

pub mod bwtree;
pub mod increasing_tree;
pub mod path;
pub mod permutation;
pub mod rgf;

pub use bwtree::{BwTree, Color};
pub use increasing_tree::IncreasingTree;
pub use path::{PathStats, SchroderPath, Step, ValleyLetter};
pub use permutation::Permutation;
pub use rgf::{Rgf, SetPartition};

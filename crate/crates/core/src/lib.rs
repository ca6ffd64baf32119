//! Permutation codes under the Kendall tau metric.
//!
//! Permutations are words over `1..=n`. Composition follows the convention
//! `(p · q)(i) = q(p(i))`, under which the Kendall distance is right invariant.

pub mod balls;
pub mod bounds;
pub mod cli;
pub mod clique;
pub mod code;
pub mod constructions;
pub mod coset;
pub mod epc;
pub mod error;
pub mod perm;
pub mod simplex;
pub mod tables;
pub mod young;

pub use error::{Error, Result};
pub use perm::{compose, kendall_distance, KendallDistance, Permutation};

//! Permutations, orbits and stabilizer chains.

mod blocks;
mod chain;
mod domain;
mod group;
mod orbit;
mod permutation;

pub use blocks::{is_primitive, minimal_block};
pub use domain::Domain;
pub use group::PermGroup;
pub use orbit::{induced_pair_action, orbit, orbits, Orbit};
pub use permutation::Permutation;

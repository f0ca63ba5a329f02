//! Irredundant bases of permutation groups, with the Suzuki and affine
//! semilinear families that realize every interval of base lengths.

pub mod affine;
pub mod chains;
mod error;
pub mod gf;
pub mod numtheory;
pub mod perm;
pub mod realize;
pub mod suzuki;

pub use error::{Error, Result};

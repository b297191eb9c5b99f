//! Exact combinatorics of the symmetric group: Bruhat and k-Bruhat orders,
//! 0-Hecke sorting operators on the `K`/`K-hat` bases, chain enumerations of
//! operator products, their parabolic generalization, and an exact
//! Laurent-polynomial realization (Grothendieck and Key polynomials) used as
//! an independent cross-check.
//!
//! All values are immutable after construction and safe to share between
//! threads. Sizes are bounded by `n <= 12`; every count fits in 64 bits.

pub mod bruhat;
pub mod dot;
mod error;
pub mod hecke;
pub mod parabolic;
pub mod perm;
pub mod pieri;
pub mod poly;

pub use error::Error;
pub use perm::{symmetric_group, Permutation, ReducedWord, Transposition, MAX_N};

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;

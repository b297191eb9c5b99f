use thiserror::Error;

use crate::perm::MAX_N;

/// Errors for data-driven failures: malformed input, rejected words, and
/// domain errors. Contract violations (size mismatches between arguments,
/// out-of-range cut indices) panic instead; see the individual functions.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("word is not a permutation of 1..={0}")]
    NotAPermutation(usize),
    #[error("permutation size {0} outside supported range 1..={MAX_N}")]
    SizeOutOfRange(usize),
    #[error("invalid transposition ({0},{1}): positions must satisfy 1 <= a < b")]
    InvalidTransposition(usize, usize),
    #[error("cannot parse permutation from {0:?}")]
    ParsePermutation(String),
    #[error("word is not reduced")]
    NotReduced,
    #[error("cut list must be nonempty, strictly increasing, and inside 1..{0}")]
    InvalidCutList(usize),
    #[error("{0} is not an endpoint of the chain enumeration")]
    NotAnEndpoint(String),
    #[error("malformed combination: {0}")]
    MalformedCombination(String),
}

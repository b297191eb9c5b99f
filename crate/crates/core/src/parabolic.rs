//! Multi-cut generalization of the chain enumeration: block decompositions
//! along a list of cuts, the positional transposition list (top block first),
//! the operator-product oracle over the finer coset, and the enumeration of
//! valid chains. The endpoint set stays closed by interval but can have
//! several maximal elements.

use crate::bruhat::bruhat_leq;
use crate::hecke::{compute_product_with_zeta, SignedCombination};
use crate::perm::{Permutation, Transposition};
use crate::pieri::{valid_paths, ChainResult};
use crate::{Error, Result};

/// A strictly increasing list of cuts `k_1 < ... < k_m` inside `1..n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CutList {
    n: usize,
    cuts: Vec<usize>,
}

impl CutList {
    pub fn new(cuts: Vec<usize>, n: usize) -> Result<Self> {
        let increasing = cuts.windows(2).all(|w| w[0] < w[1]);
        let in_range = cuts.iter().all(|&k| k >= 1 && k < n);
        if cuts.is_empty() || !increasing || !in_range {
            return Err(Error::InvalidCutList(n));
        }
        Ok(CutList { n, cuts })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn cuts(&self) -> &[usize] {
        &self.cuts
    }

    /// Block boundaries as `(start, end]` position ranges, including the tail.
    fn blocks(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.cuts.len() + 1);
        let mut prev = 0;
        for &k in &self.cuts {
            out.push((prev, k));
            prev = k;
        }
        out.push((prev, self.n));
        out
    }
}

/// The positional transposition list: for each cut block, all pairs from a
/// position inside the block to a position past its cut, inner positions
/// ascending and far ends descending; blocks concatenated from the last cut
/// down to the first. Entries are not filtered by cover validity — the
/// chain-validity filter is applied during enumeration.
pub fn w_multi(p: &Permutation, cuts: &CutList) -> Vec<Transposition> {
    assert_eq!(p.n(), cuts.n(), "size mismatch in w_multi");
    let n = cuts.n();
    let mut out = Vec::new();
    let ks = cuts.cuts();
    for i in (0..ks.len()).rev() {
        let lo = if i == 0 { 0 } else { ks[i - 1] };
        let hi = ks[i];
        for a in lo + 1..=hi {
            for b in (hi + 1..=n).rev() {
                out.push(Transposition { a, b });
            }
        }
    }
    out
}

/// The maximal-length element of the multi-block coset: every block of the
/// one-line word sorted decreasingly.
pub fn zeta_multi(p: &Permutation, cuts: &CutList) -> Permutation {
    assert_eq!(p.n(), cuts.n(), "size mismatch in zeta_multi");
    let mut word = p.word().to_vec();
    for (lo, hi) in cuts.blocks() {
        word[lo..hi].sort_unstable_by(|a, b| b.cmp(a));
    }
    Permutation::from_word_unchecked(word)
}

/// The operator-product oracle over the multi-block coset; the plain word
/// from the coset maximum down to `p` avoids every cut letter.
pub fn compute_product_multi(p: &Permutation, cuts: &CutList) -> SignedCombination {
    compute_product_with_zeta(p, &zeta_multi(p, cuts))
}

/// Enumerates the subwords of [`w_multi`] that are valid cover chains from
/// `p`; the signed sum equals [`compute_product_multi`], coefficients stay
/// in `{1, -1}`, and endpoints are distinct.
pub fn enumerate_multi(p: &Permutation, cuts: &CutList) -> Vec<ChainResult> {
    valid_paths(p, &w_multi(p, cuts))
}

/// Endpoints maximal in the Bruhat order within the endpoint set, in
/// lexicographic order.
pub fn maximal_elements(results: &[ChainResult]) -> Vec<Permutation> {
    let mut out: Vec<Permutation> = results
        .iter()
        .map(|r| &r.endpoint)
        .filter(|e| {
            !results
                .iter()
                .any(|r| r.endpoint != **e && bruhat_leq(e, &r.endpoint))
        })
        .cloned()
        .collect();
    out.sort();
    out.dedup();
    out
}

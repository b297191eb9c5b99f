//! Chain enumeration over the word of k-crossing covers: the ordered word
//! `W` of a permutation, the partial order on transpositions with its two
//! linear extensions, the compatibility test on subwords, three independent
//! enumeration methods, the top endpoint `eta`, the interval expansion, the
//! climb to the top, and conflict-pattern statistics.
//!
//! The production enumeration is the word-level compatibility test (no order
//! computations during generation); path-validity enumeration and the
//! reordered-word enumeration exist to verify it.

use std::collections::BTreeMap;

use crate::bruhat::{interval, k_bruhat_transpositions};
use crate::hecke::{BasisTag, SignedCombination};
use crate::perm::{Permutation, Transposition};
use crate::{Error, Result};

/// The list of k-crossing covers of a base permutation, sorted by the
/// base-dependent total order: first entries compared by descending value of
/// the base at `a`, ties by ascending value at `b`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TranspositionWord {
    base: Permutation,
    k: usize,
    transpositions: Vec<Transposition>,
}

impl TranspositionWord {
    pub fn base(&self) -> &Permutation {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn transpositions(&self) -> &[Transposition] {
        &self.transpositions
    }

    pub fn len(&self) -> usize {
        self.transpositions.len()
    }

    pub fn is_empty(&self) -> bool {
        self.transpositions.is_empty()
    }

    pub fn index_of(&self, t: Transposition) -> Option<usize> {
        self.transpositions.iter().position(|&u| u == t)
    }
}

/// One chain of the enumeration: the subword (as indices into the word it
/// was generated over), its endpoint, and the sign given by length parity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChainResult {
    pub endpoint: Permutation,
    pub subword: Vec<usize>,
    pub sign: i64,
}

fn chain_sign(len: usize) -> i64 {
    if len.is_multiple_of(2) {
        1
    } else {
        -1
    }
}

/// The total order on the transpositions of a word, relative to `sigma`.
pub fn word_order(sigma: &Permutation, t1: Transposition, t2: Transposition) -> std::cmp::Ordering {
    sigma
        .at(t2.a)
        .cmp(&sigma.at(t1.a))
        .then(sigma.at(t1.b).cmp(&sigma.at(t2.b)))
}

/// The ordered word of k-crossing covers of `p`.
pub fn w_sigma_k(p: &Permutation, k: usize) -> TranspositionWord {
    let mut transpositions = k_bruhat_transpositions(p, k);
    transpositions.sort_by(|&t1, &t2| word_order(p, t1, t2));
    TranspositionWord {
        base: p.clone(),
        k,
        transpositions,
    }
}

/// Strict partial order on transpositions, independent of any permutation:
/// same first entry with larger second comes first, same second entry with
/// smaller first comes first, extended transitively. Equivalently
/// `t1.a <= t2.a` and `t1.b >= t2.b` with `t1 != t2`.
pub fn partial_lt(t1: Transposition, t2: Transposition) -> bool {
    t1 != t2 && t1.a <= t2.a && t1.b >= t2.b
}

/// The strict total order used by the reordered-word enumeration: second
/// entries descending, then first entries ascending.
pub fn lenart_lt(t1: Transposition, t2: Transposition) -> bool {
    t1.b > t2.b || (t1.b == t2.b && t1.a < t2.a)
}

/// Word-level compatibility of a subword (indices strictly increasing within
/// the word): incompatible exactly when some `(a,c)` precedes some `(b,d)`
/// with `a < b < c < d` while `(a,d)` is in the word but not in the subword.
pub fn is_compatible(subword: &[usize], w: &TranspositionWord) -> bool {
    assert!(
        subword.windows(2).all(|p| p[0] < p[1]) && subword.iter().all(|&i| i < w.len()),
        "subword indices must be strictly increasing within the word"
    );
    for (pos, &iu) in subword.iter().enumerate() {
        let tu = w.transpositions[iu];
        for &iv in &subword[pos + 1..] {
            let tv = w.transpositions[iv];
            if tu.a < tv.a && tv.a < tu.b && tu.b < tv.b {
                if let Some(iad) = w.index_of(Transposition { a: tu.a, b: tv.b }) {
                    if !subword.contains(&iad) {
                        return false;
                    }
                }
            }
        }
    }
    true
}

struct CompatibleDfs<'a> {
    w: &'a TranspositionWord,
    included: Vec<usize>,
    mask: u64,
    current: Vec<u8>,
    out: Option<Vec<ChainResult>>,
    count: u64,
}

impl CompatibleDfs<'_> {
    // A prefix already violating compatibility prunes its whole subtree: the
    // witness is complete as soon as the later transposition is placed.
    fn may_include(&self, j: usize) -> bool {
        let tv = self.w.transpositions[j];
        for &iu in &self.included {
            let tu = self.w.transpositions[iu];
            if tu.a < tv.a && tv.a < tu.b && tu.b < tv.b {
                if let Some(iad) = self.w.index_of(Transposition { a: tu.a, b: tv.b }) {
                    if self.mask & (1 << iad) == 0 {
                        return false;
                    }
                }
            }
        }
        true
    }

    fn run(&mut self, j: usize) {
        if j == self.w.len() {
            self.count += 1;
            if let Some(out) = &mut self.out {
                out.push(ChainResult {
                    endpoint: Permutation::new(self.current.clone()).expect("valid word"),
                    subword: self.included.clone(),
                    sign: chain_sign(self.included.len()),
                });
            }
            return;
        }
        self.run(j + 1);
        if self.may_include(j) {
            let t = self.w.transpositions[j];
            self.current.swap(t.a - 1, t.b - 1);
            self.included.push(j);
            self.mask |= 1 << j;
            self.run(j + 1);
            self.mask &= !(1 << j);
            self.included.pop();
            self.current.swap(t.a - 1, t.b - 1);
        }
    }
}

fn sort_results(mut results: Vec<ChainResult>) -> Vec<ChainResult> {
    results.sort_by(|x, y| {
        x.subword
            .len()
            .cmp(&y.subword.len())
            .then(x.subword.cmp(&y.subword))
    });
    results
}

/// Enumerates all compatible subwords of the word of `p`. This is the
/// production method: generation is purely word-level, endpoints come from
/// plain position swaps, and each endpoint arises from exactly one chain.
pub fn enumerate_compatible(p: &Permutation, k: usize) -> Vec<ChainResult> {
    let w = w_sigma_k(p, k);
    let mut dfs = CompatibleDfs {
        w: &w,
        included: Vec::new(),
        mask: 0,
        current: p.word().to_vec(),
        out: Some(Vec::new()),
        count: 0,
    };
    dfs.run(0);
    sort_results(dfs.out.take().expect("collected"))
}

fn count_compatible(w: &TranspositionWord) -> u64 {
    let mut dfs = CompatibleDfs {
        w,
        included: Vec::new(),
        mask: 0,
        current: w.base.word().to_vec(),
        out: None,
        count: 0,
    };
    dfs.run(0);
    dfs.count
}

/// Enumerates the subwords of an arbitrary transposition list that are valid
/// cover chains from `base` (a step is kept only when it raises the length
/// by one; anything else annihilates the branch).
pub fn valid_paths(base: &Permutation, word: &[Transposition]) -> Vec<ChainResult> {
    fn is_cover(word: &[u8], t: Transposition) -> bool {
        word[t.a - 1] < word[t.b - 1]
            && !(t.a..t.b - 1).any(|c| word[t.a - 1] < word[c] && word[c] < word[t.b - 1])
    }

    fn dfs(
        word: &[Transposition],
        j: usize,
        current: &mut Vec<u8>,
        included: &mut Vec<usize>,
        out: &mut Vec<ChainResult>,
    ) {
        if j == word.len() {
            out.push(ChainResult {
                endpoint: Permutation::new(current.clone()).expect("valid word"),
                subword: included.clone(),
                sign: chain_sign(included.len()),
            });
            return;
        }
        dfs(word, j + 1, current, included, out);
        let t = word[j];
        if is_cover(current, t) {
            current.swap(t.a - 1, t.b - 1);
            included.push(j);
            dfs(word, j + 1, current, included, out);
            included.pop();
            current.swap(t.a - 1, t.b - 1);
        }
    }

    let mut out = Vec::new();
    let mut current = base.word().to_vec();
    let mut included = Vec::new();
    dfs(word, 0, &mut current, &mut included, &mut out);
    sort_results(out)
}

/// Enumeration by explicit path validity over the ordered word; equals
/// [`enumerate_compatible`] as a set of chains.
pub fn enumerate_paths(p: &Permutation, k: usize) -> Vec<ChainResult> {
    let w = w_sigma_k(p, k);
    valid_paths(p, w.transpositions())
}

/// Enumeration over the word reordered by [`lenart_lt`]; subword indices
/// refer to the reordered list, the endpoint/sign map is unchanged.
pub fn enumerate_lenart(p: &Permutation, k: usize) -> Vec<ChainResult> {
    let mut ts = w_sigma_k(p, k).transpositions().to_vec();
    ts.sort_by(|&t1, &t2| {
        if lenart_lt(t1, t2) {
            std::cmp::Ordering::Less
        } else if lenart_lt(t2, t1) {
            std::cmp::Ordering::Greater
        } else {
            std::cmp::Ordering::Equal
        }
    });
    valid_paths(p, &ts)
}

/// Collapses chain results to the endpoint-to-sign map the three methods are
/// compared on.
pub fn endpoint_signs(results: &[ChainResult]) -> BTreeMap<Permutation, i64> {
    let mut out = BTreeMap::new();
    for r in results {
        let prev = out.insert(r.endpoint.clone(), r.sign);
        assert!(prev.is_none(), "endpoint {} from two chains", r.endpoint);
    }
    out
}

/// The endpoint of the full word: every transposition applied in order. The
/// full word is always a valid chain, so the length grows by the word size.
pub fn eta(p: &Permutation, k: usize) -> Permutation {
    let w = w_sigma_k(p, k);
    let mut out = p.clone();
    for &t in w.transpositions() {
        out = out.apply_transposition(t);
    }
    assert_eq!(
        out.length(),
        p.length() + w.len(),
        "full word must be a valid chain"
    );
    out
}

/// The signed sum over the order interval from `p` to [`eta`]: coefficient
/// of `mu` is the parity of the length difference. Equals
/// [`crate::hecke::compute_product`] exactly.
pub fn pieri_expand(p: &Permutation, k: usize) -> SignedCombination {
    let top = eta(p, k);
    let lp = p.length();
    SignedCombination::from_terms(
        BasisTag::K,
        p.n(),
        interval(p, &top).into_iter().map(|mu| {
            let sign = chain_sign(mu.length() - lp);
            (mu, sign)
        }),
    )
}

/// The saturated ascent from `mu` to the top endpoint: each step inserts the
/// smallest missing transposition into the subword of `mu` and re-evaluates.
/// Fails when `mu` is not an endpoint of the enumeration.
pub fn climb(mu: &Permutation, p: &Permutation, k: usize) -> Result<Vec<Permutation>> {
    let w = w_sigma_k(p, k);
    let chains = enumerate_compatible(p, k);
    let found = chains
        .iter()
        .find(|r| r.endpoint == *mu)
        .ok_or_else(|| Error::NotAnEndpoint(mu.to_string()))?;
    let mut sub = found.subword.clone();
    let mut chain = vec![mu.clone()];
    while sub.len() < w.len() {
        let missing = (0..w.len())
            .find(|i| !sub.contains(i))
            .expect("some index is missing");
        let pos = sub.partition_point(|&i| i < missing);
        sub.insert(pos, missing);
        let mut next = p.clone();
        for &i in &sub {
            next = next.apply_transposition(w.transpositions()[i]);
        }
        assert_eq!(
            next.length(),
            chain.last().unwrap().length() + 1,
            "climb steps are covers"
        );
        chain.push(next);
    }
    Ok(chain)
}

/// Word size, conflict-pattern count, and the number of compatible subwords.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ConflictStats {
    pub m: usize,
    pub conflicts: u64,
    pub e_size: u64,
}

fn conflict_patterns(w: &TranspositionWord) -> Vec<(usize, usize, usize)> {
    let ts = w.transpositions();
    let mut out = Vec::new();
    for (u, tu) in ts.iter().enumerate() {
        let (a, c) = (tu.a, tu.b);
        for (v, tv) in ts.iter().enumerate().skip(u + 1) {
            let (b, d) = (tv.a, tv.b);
            if a < b && b < c && c < d {
                if let Some(iad) = w.index_of(Transposition { a, b: d }) {
                    out.push((iad, u, v));
                }
            }
        }
    }
    out
}

/// Counts conflict patterns (triples `(a,d)`, `(a,c)`, `(b,d)` inside the
/// word with `a < b < c < d`) and the compatible-subword count. Without
/// conflicts the count is `2^m`; a single conflict removes `2^(m-3)`.
pub fn conflict_stats(p: &Permutation, k: usize) -> ConflictStats {
    let w = w_sigma_k(p, k);
    ConflictStats {
        m: w.len(),
        conflicts: conflict_patterns(&w).len() as u64,
        e_size: count_compatible(&w),
    }
}

/// Compatible-subword count by inclusion-exclusion over conflict patterns.
/// Exponential in the pattern count, so it refuses to run (returns `None`)
/// past `max_patterns`; for few conflicts it is much cheaper than
/// generation, which is the only reason it exists.
pub fn compatible_count_by_patterns(p: &Permutation, k: usize, max_patterns: u32) -> Option<u64> {
    let w = w_sigma_k(p, k);
    let patterns = conflict_patterns(&w);
    if patterns.len() > max_patterns as usize {
        return None;
    }
    let m = w.len() as u32;
    let mut total: i128 = 0;
    for choice in 0u64..(1 << patterns.len()) {
        let mut in_mask = 0u64;
        let mut out_mask = 0u64;
        for (idx, &(ad, ac, bd)) in patterns.iter().enumerate() {
            if choice & (1 << idx) != 0 {
                in_mask |= (1 << ac) | (1 << bd);
                out_mask |= 1 << ad;
            }
        }
        if in_mask & out_mask != 0 {
            continue;
        }
        let fixed = (in_mask | out_mask).count_ones();
        let term = 1i128 << (m - fixed);
        if choice.count_ones() % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    Some(u64::try_from(total).expect("count is nonnegative"))
}

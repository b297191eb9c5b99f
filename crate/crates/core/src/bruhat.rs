//! Bruhat and k-Bruhat order predicates, covers, intervals, and the greedy
//! coset-interval maximum.
//!
//! The production comparison is the left-factor (Ehresmann) criterion: sorted
//! prefixes compared componentwise, `O(n^2)` with incremental insertion. The
//! cover-closure characterization lives in the test suites as an oracle.

use std::collections::{BTreeSet, HashSet, VecDeque};

use crate::perm::{symmetric_group, Permutation, Transposition};

/// A covering step of the Bruhat order: `upper = lower · t` with
/// `length(upper) == length(lower) + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverEdge {
    pub lower: Permutation,
    pub upper: Permutation,
    pub t: Transposition,
}

fn insert_sorted(v: &mut Vec<u8>, x: u8) {
    let pos = v.partition_point(|&y| y < x);
    v.insert(pos, x);
}

/// `p <= q` in the Bruhat order. Panics on size mismatch.
pub fn bruhat_leq(p: &Permutation, q: &Permutation) -> bool {
    assert_eq!(p.n(), q.n(), "size mismatch in bruhat_leq");
    let n = p.n();
    let mut sp: Vec<u8> = Vec::with_capacity(n);
    let mut sq: Vec<u8> = Vec::with_capacity(n);
    for l in 0..n - 1 {
        insert_sorted(&mut sp, p.word()[l]);
        insert_sorted(&mut sq, q.word()[l]);
        if sp.iter().zip(&sq).any(|(a, b)| a > b) {
            return false;
        }
    }
    true
}

/// The mixed criterion: left factors up to `k` compared upward and right
/// factors beyond `k` compared downward. Agrees with [`bruhat_leq`] for every
/// cut `1 <= k <= n`.
pub fn bruhat_leq_mixed(p: &Permutation, q: &Permutation, k: usize) -> bool {
    assert_eq!(p.n(), q.n(), "size mismatch in bruhat_leq_mixed");
    let n = p.n();
    assert!(k >= 1 && k <= n, "cut k={k} out of range for n={n}");
    let mut sp: Vec<u8> = Vec::new();
    let mut sq: Vec<u8> = Vec::new();
    for l in 0..k {
        insert_sorted(&mut sp, p.word()[l]);
        insert_sorted(&mut sq, q.word()[l]);
        if sp.iter().zip(&sq).any(|(a, b)| a > b) {
            return false;
        }
    }
    sp.clear();
    sq.clear();
    for l in (k..n).rev() {
        insert_sorted(&mut sp, p.word()[l]);
        insert_sorted(&mut sq, q.word()[l]);
        if sp.iter().zip(&sq).any(|(a, b)| a < b) {
            return false;
        }
    }
    true
}

fn is_bruhat_transposition(word: &[u8], a: usize, b: usize) -> bool {
    word[a - 1] < word[b - 1] && !(a..b - 1).any(|c| word[a - 1] < word[c] && word[c] < word[b - 1])
}

/// All transpositions raising the length of `p` by exactly one: pairs
/// `(a, b)` with `p(a) < p(b)` and no intermediate value at an intermediate
/// position. Sorted lexicographically.
pub fn bruhat_transpositions(p: &Permutation) -> Vec<Transposition> {
    let n = p.n();
    let mut out = Vec::new();
    for a in 1..n {
        for b in a + 1..=n {
            if is_bruhat_transposition(p.word(), a, b) {
                out.push(Transposition { a, b });
            }
        }
    }
    out
}

/// The subset of [`bruhat_transpositions`] crossing the cut: `a <= k < b`.
pub fn k_bruhat_transpositions(p: &Permutation, k: usize) -> Vec<Transposition> {
    assert!(
        k >= 1 && k < p.n(),
        "cut k={k} out of range for n={}",
        p.n()
    );
    bruhat_transpositions(p)
        .into_iter()
        .filter(|t| t.a <= k && t.b > k)
        .collect()
}

/// Transpositions lowering the length of `p` by exactly one.
pub fn lowering_transpositions(p: &Permutation) -> Vec<Transposition> {
    let n = p.n();
    let mut out = Vec::new();
    for a in 1..n {
        for b in a + 1..=n {
            let w = p.word();
            if w[a - 1] > w[b - 1] && !(a..b - 1).any(|c| w[b - 1] < w[c] && w[c] < w[a - 1]) {
                out.push(Transposition { a, b });
            }
        }
    }
    out
}

/// Cover edges out of `p`.
pub fn cover_edges(p: &Permutation) -> Vec<CoverEdge> {
    bruhat_transpositions(p)
        .into_iter()
        .map(|t| CoverEdge {
            lower: p.clone(),
            upper: p.apply_transposition(t),
            t,
        })
        .collect()
}

/// `p <= q` in the k-Bruhat order: values weakly rise at positions `<= k`
/// and weakly fall beyond, and every new inversion straddles the cut.
pub fn k_bruhat_leq(p: &Permutation, q: &Permutation, k: usize) -> bool {
    assert_eq!(p.n(), q.n(), "size mismatch in k_bruhat_leq");
    let n = p.n();
    assert!(k >= 1 && k < n, "cut k={k} out of range for n={n}");
    for a in 1..=n {
        if a <= k && p.at(a) > q.at(a) {
            return false;
        }
        if a > k && p.at(a) < q.at(a) {
            return false;
        }
    }
    for a in 1..n {
        for b in a + 1..=n {
            if p.at(a) < p.at(b) && q.at(a) > q.at(b) && !(a <= k && b > k) {
                return false;
            }
        }
    }
    true
}

/// Everything reachable upward from `p` by cover edges (the upper set of
/// `p`, including `p` itself).
pub fn upper_set(p: &Permutation) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(p.clone());
    queue.push_back(p.clone());
    while let Some(cur) = queue.pop_front() {
        for t in bruhat_transpositions(&cur) {
            let next = cur.apply_transposition(t);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// The lower set of `p`, including `p` itself.
pub fn lower_set(p: &Permutation) -> Vec<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(p.clone());
    queue.push_back(p.clone());
    while let Some(cur) = queue.pop_front() {
        for t in lowering_transpositions(&cur) {
            let next = cur.apply_transposition(t);
            if seen.insert(next.clone()) {
                queue.push_back(next);
            }
        }
    }
    seen.into_iter().collect()
}

/// The interval `{r : p <= r <= q}`; empty when `p` is not below `q`.
///
/// For `n <= 8` the group is filtered directly; beyond that an upward search
/// from `p` pruned by `r <= q` is used. Both agree (tested at small sizes).
pub fn interval(p: &Permutation, q: &Permutation) -> BTreeSet<Permutation> {
    assert_eq!(p.n(), q.n(), "size mismatch in interval");
    let n = p.n();
    if !bruhat_leq(p, q) {
        return BTreeSet::new();
    }
    if n <= 8 {
        symmetric_group(n)
            .filter(|r| bruhat_leq(p, r) && bruhat_leq(r, q))
            .collect()
    } else {
        interval_by_search(p, q)
    }
}

fn interval_by_search(p: &Permutation, q: &Permutation) -> BTreeSet<Permutation> {
    let mut seen: BTreeSet<Permutation> = BTreeSet::new();
    let mut queue = VecDeque::new();
    seen.insert(p.clone());
    queue.push_back(p.clone());
    while let Some(cur) = queue.pop_front() {
        for t in bruhat_transpositions(&cur) {
            let next = cur.apply_transposition(t);
            if !seen.contains(&next) && bruhat_leq(&next, q) {
                seen.insert(next.clone());
                queue.push_back(next);
            }
        }
    }
    seen
}

#[cfg(test)]
pub(crate) fn interval_by_search_for_tests(
    p: &Permutation,
    q: &Permutation,
) -> BTreeSet<Permutation> {
    if !bruhat_leq(p, q) {
        return BTreeSet::new();
    }
    interval_by_search(p, q)
}

/// The unique maximum of `{r in p·(S_k x S_{n-k}) : r <= q}`, built greedily:
/// left block by descending match under the entries of `q`, right block
/// ascending from the right. Panics unless `p <= q`.
pub fn coset_interval_max(p: &Permutation, q: &Permutation, k: usize) -> Permutation {
    assert_eq!(p.n(), q.n(), "size mismatch in coset_interval_max");
    let n = p.n();
    assert!(k >= 1 && k < n, "cut k={k} out of range for n={n}");
    assert!(bruhat_leq(p, q), "coset_interval_max requires p <= q");

    let mut word = vec![0u8; n];
    let mut left: Vec<u8> = p.word()[..k].to_vec();
    for i in 1..=k {
        let pick = left
            .iter()
            .copied()
            .filter(|&v| v <= q.at(i))
            .max()
            .expect("greedy left pick exists when p <= q");
        word[i - 1] = pick;
        left.retain(|&v| v != pick);
    }
    let mut right: Vec<u8> = p.word()[k..].to_vec();
    for i in (k + 1..=n).rev() {
        let pick = right
            .iter()
            .copied()
            .filter(|&v| v >= q.at(i))
            .min()
            .expect("greedy right pick exists when p <= q");
        word[i - 1] = pick;
        right.retain(|&v| v != pick);
    }
    Permutation::from_word_unchecked(word)
}

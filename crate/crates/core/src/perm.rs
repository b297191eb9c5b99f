//! Permutations in one-line notation, transpositions, and reduced words.
//!
//! A [`Permutation`] is a word of the values `1..=n` (1-indexed positions).
//! The text form is a bare digit string for `n <= 9` (`"136254"`) and
//! comma-separated for larger `n`; `'|'` separators are accepted on input and
//! ignored (they only mark a cut position in displays).

use std::fmt;
use std::str::FromStr;

use itertools::Itertools;

use crate::{Error, Result};

/// Largest supported permutation size. Lengths and enumeration counts all
/// fit in signed 64-bit integers at this bound.
pub const MAX_N: usize = 12;

/// A permutation of `{1..n}` in one-line notation.
#[derive(Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    word: Vec<u8>,
}

/// A position pair `(a, b)` with `1 <= a < b`, acting on a permutation by
/// swapping the entries at positions `a` and `b`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Transposition {
    pub a: usize,
    pub b: usize,
}

impl Transposition {
    pub fn new(a: usize, b: usize) -> Result<Self> {
        if a < 1 || a >= b {
            return Err(Error::InvalidTransposition(a, b));
        }
        Ok(Transposition { a, b })
    }
}

impl fmt::Display for Transposition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.a, self.b)
    }
}

/// A word in the simple transpositions `s_i`, stored by index (`1 <= i < n`).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ReducedWord {
    letters: Vec<usize>,
}

impl ReducedWord {
    pub fn new(letters: Vec<usize>) -> Self {
        ReducedWord { letters }
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    /// Evaluates the word left to right from the identity of `S_n`.
    pub fn evaluate(&self, n: usize) -> Permutation {
        let mut p = Permutation::identity(n);
        for &i in &self.letters {
            assert!(i >= 1 && i < n, "letter {i} out of range for n={n}");
            p.word.swap(i - 1, i);
        }
        p
    }

    /// A word is reduced when its evaluation has length equal to the word.
    pub fn is_reduced(&self, n: usize) -> bool {
        self.evaluate(n).length() == self.letters.len()
    }
}

impl Permutation {
    /// Builds a permutation from its one-line word, validating that it is a
    /// bijection on `{1..n}` with `1 <= n <= MAX_N`.
    pub fn new(word: Vec<u8>) -> Result<Self> {
        let n = word.len();
        if !(1..=MAX_N).contains(&n) {
            return Err(Error::SizeOutOfRange(n));
        }
        let mut seen = [false; MAX_N + 1];
        for &v in &word {
            let v = v as usize;
            if v < 1 || v > n || seen[v] {
                return Err(Error::NotAPermutation(n));
            }
            seen[v] = true;
        }
        Ok(Permutation { word })
    }

    pub(crate) fn from_word_unchecked(word: Vec<u8>) -> Self {
        Permutation { word }
    }

    pub fn identity(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "n={n} out of range");
        Permutation {
            word: (1..=n as u8).collect(),
        }
    }

    /// The maximal permutation `[n, n-1, ..., 1]`.
    pub fn longest(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "n={n} out of range");
        Permutation {
            word: (1..=n as u8).rev().collect(),
        }
    }

    pub fn n(&self) -> usize {
        self.word.len()
    }

    pub fn word(&self) -> &[u8] {
        &self.word
    }

    /// Entry at 1-based position `pos`.
    pub fn at(&self, pos: usize) -> u8 {
        self.word[pos - 1]
    }

    pub fn is_identity(&self) -> bool {
        self.word
            .iter()
            .enumerate()
            .all(|(i, &v)| v as usize == i + 1)
    }

    /// Number of inversions; equals the length of any reduced word.
    pub fn length(&self) -> usize {
        let w = &self.word;
        let mut count = 0;
        for i in 0..w.len() {
            for j in i + 1..w.len() {
                if w[i] > w[j] {
                    count += 1;
                }
            }
        }
        count
    }

    pub fn inverse(&self) -> Self {
        let mut word = vec![0u8; self.word.len()];
        for (i, &v) in self.word.iter().enumerate() {
            word[v as usize - 1] = (i + 1) as u8;
        }
        Permutation { word }
    }

    /// Composition `(self ∘ other)(i) = self(other(i))`.
    ///
    /// With this convention a right position-swap `p · (a,b)` equals
    /// `p.compose(t)` for `t` the transposition written as a permutation.
    /// Panics on size mismatch.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.n(), other.n(), "size mismatch in compose");
        let word = other
            .word
            .iter()
            .map(|&v| self.word[v as usize - 1])
            .collect();
        Permutation { word }
    }

    /// Swaps the entries at positions `t.a` and `t.b`. Panics if `t.b`
    /// exceeds `n`.
    pub fn apply_transposition(&self, t: Transposition) -> Self {
        assert!(
            t.b <= self.n(),
            "transposition {t} out of range for n={}",
            self.n()
        );
        let mut word = self.word.clone();
        word.swap(t.a - 1, t.b - 1);
        Permutation { word }
    }

    /// Right multiplication by the simple transposition `s_i`, `1 <= i < n`.
    pub fn apply_simple(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n(), "simple index {i} out of range");
        let mut word = self.word.clone();
        word.swap(i - 1, i);
        Permutation { word }
    }

    /// True when the entry at position `i` exceeds the entry at `i + 1`.
    pub fn descent_at(&self, i: usize) -> bool {
        assert!(i >= 1 && i < self.n(), "simple index {i} out of range");
        self.word[i - 1] > self.word[i]
    }

    /// Canonical reduced word by the leftmost-descent rule: while the
    /// permutation is not the identity, multiply by `s_i` for the smallest
    /// descent `i` and prepend `i`.
    pub fn reduced_word(&self) -> ReducedWord {
        let mut w = self.word.clone();
        let mut letters = Vec::with_capacity(self.length());
        while let Some(i) = (0..w.len() - 1).find(|&i| w[i] > w[i + 1]) {
            w.swap(i, i + 1);
            letters.push(i + 1);
        }
        letters.reverse();
        ReducedWord { letters }
    }

    /// Every reduced word of the permutation. Grows fast; intended for the
    /// small sizes used in word-independence checks.
    pub fn all_reduced_words(&self) -> Vec<ReducedWord> {
        if self.is_identity() {
            return vec![ReducedWord::default()];
        }
        let mut out = Vec::new();
        for i in 1..self.n() {
            if self.descent_at(i) {
                for shorter in self.apply_simple(i).all_reduced_words() {
                    let mut letters = shorter.letters;
                    letters.push(i);
                    out.push(ReducedWord { letters });
                }
            }
        }
        out
    }

    /// Parses the text form; `'|'` separators are stripped first.
    pub fn parse(input: &str) -> Result<Self> {
        let s: String = input.chars().filter(|&c| c != '|').collect();
        if s.is_empty() {
            return Err(Error::ParsePermutation(input.to_string()));
        }
        let word: Vec<u8> = if s.contains(',') {
            s.split(',')
                .map(|tok| tok.trim().parse::<u8>())
                .collect::<std::result::Result<_, _>>()
                .map_err(|_| Error::ParsePermutation(input.to_string()))?
        } else {
            s.chars()
                .map(|c| c.to_digit(10).map(|d| d as u8))
                .collect::<Option<_>>()
                .ok_or_else(|| Error::ParsePermutation(input.to_string()))?
        };
        Permutation::new(word)
    }
}

impl FromStr for Permutation {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Permutation::parse(s)
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.n() <= 9 {
            for &v in &self.word {
                write!(f, "{v}")?;
            }
            Ok(())
        } else {
            write!(f, "{}", self.word.iter().map(|v| v.to_string()).join(","))
        }
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation({self})")
    }
}

/// All of `S_n` in lexicographic order of the one-line word.
pub fn symmetric_group(n: usize) -> impl Iterator<Item = Permutation> {
    assert!((1..=MAX_N).contains(&n), "n={n} out of range");
    (1..=n as u8)
        .permutations(n)
        .map(Permutation::from_word_unchecked)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn length_counts_inversions() {
        assert_eq!(p("1234").length(), 0);
        assert_eq!(p("4321").length(), 6);
        assert_eq!(p("136254").length(), 5);
        assert_eq!(p("156432").length(), 9);
        // the difference is the chain depth of the 136254/k=4 enumeration
        assert_eq!(p("156432").length() - p("136254").length(), 4);
    }

    #[test]
    fn transposition_swaps_positions() {
        let t = |a, b| Transposition::new(a, b).unwrap();
        assert_eq!(p("136254").apply_transposition(t(2, 6)), p("146253"));
        assert_eq!(p("136254").apply_transposition(t(4, 6)), p("136452"));
        let q = p("52314");
        assert_eq!(
            q.apply_transposition(t(1, 4)).apply_transposition(t(1, 4)),
            q
        );
    }

    #[test]
    fn transposition_validation() {
        assert!(Transposition::new(0, 2).is_err());
        assert!(Transposition::new(3, 3).is_err());
        assert!(Transposition::new(3, 2).is_err());
    }

    #[test]
    #[should_panic(expected = "out of range")]
    fn transposition_beyond_n_panics() {
        p("321").apply_transposition(Transposition::new(2, 5).unwrap());
    }

    #[test]
    fn leftmost_descent_reduced_word() {
        assert_eq!(p("123").reduced_word().letters(), &[] as &[usize]);
        assert_eq!(p("132").reduced_word().letters(), &[2]);
        assert_eq!(p("321").reduced_word().letters(), &[1, 2, 1]);
        assert_eq!(ReducedWord::new(vec![1, 2, 1]).evaluate(3), p("321"));
    }

    #[test]
    fn compose_convention() {
        let id = Permutation::identity(3);
        assert_eq!(p("213").compose(&id), p("213"));
        let q = p("231");
        assert_eq!(q.compose(&q.inverse()), id);
        assert_eq!(p("213").compose(&p("132")), p("231"));
    }

    #[test]
    #[should_panic(expected = "size mismatch")]
    fn compose_size_mismatch_panics() {
        p("21").compose(&p("123"));
    }

    #[test]
    fn reduced_word_roundtrip_and_length() {
        for n in 1..=6 {
            for q in symmetric_group(n) {
                let w = q.reduced_word();
                assert_eq!(w.len(), q.length());
                assert_eq!(w.evaluate(n), q);
            }
        }
    }

    #[test]
    fn transpositions_change_length_by_odd_amount() {
        for q in symmetric_group(4) {
            for a in 1..=3 {
                for b in a + 1..=4 {
                    let t = Transposition::new(a, b).unwrap();
                    let diff = q.apply_transposition(t).length() as i64 - q.length() as i64;
                    assert_eq!(diff.rem_euclid(2), 1, "{q} {t}");
                }
            }
        }
    }

    #[test]
    fn parse_and_display() {
        assert_eq!(p("1362|54"), p("136254"));
        assert_eq!(p("136254").to_string(), "136254");
        let big = Permutation::new((1..=10).rev().collect::<Vec<u8>>()).unwrap();
        assert_eq!(big.to_string(), "10,9,8,7,6,5,4,3,2,1");
        assert_eq!(Permutation::parse("10,9,8,7,6,5,4,3,2,1").unwrap(), big);
        assert!(Permutation::parse("1352").is_err());
        assert!(Permutation::parse("").is_err());
        assert!(Permutation::parse("1,2,x").is_err());
    }

    #[test]
    fn all_reduced_words_are_reduced() {
        for q in symmetric_group(4) {
            let words = q.all_reduced_words();
            assert!(!words.is_empty());
            for w in &words {
                assert_eq!(w.len(), q.length());
                assert_eq!(w.evaluate(4), q);
            }
        }
    }
}

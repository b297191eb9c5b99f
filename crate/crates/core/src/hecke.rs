//! The formal 0-Hecke module: integer combinations over the `K` and `K-hat`
//! bases, the sorting actions of the two operator families, the triangular
//! change of basis, and the operator-product evaluation used as the
//! reference oracle for the chain enumerations.
//!
//! The operators are partial by basis: the sorting action of `pi_i` is
//! defined on the `K` basis and the action of `hat-pi_i` on the `K-hat`
//! basis. Applying the wrong kind is a programming error and panics.

use std::collections::BTreeMap;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::bruhat::{lower_set, upper_set};
use crate::perm::{Permutation, ReducedWord};
use crate::{Error, Result};

/// Which of the two bases a combination lives in.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BasisTag {
    K,
    KHat,
}

impl BasisTag {
    pub fn as_str(self) -> &'static str {
        match self {
            BasisTag::K => "K",
            BasisTag::KHat => "KHAT",
        }
    }
}

/// Which operator family a word is made of.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OperatorKind {
    Pi,
    HatPi,
}

/// An integer-coefficient formal sum over a permutation-indexed basis.
/// Zero coefficients are never stored; all index permutations share one `n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SignedCombination {
    basis: BasisTag,
    n: usize,
    terms: BTreeMap<Permutation, i64>,
}

impl SignedCombination {
    pub fn zero(basis: BasisTag, n: usize) -> Self {
        SignedCombination {
            basis,
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn basis_element(basis: BasisTag, p: Permutation) -> Self {
        let n = p.n();
        let mut terms = BTreeMap::new();
        terms.insert(p, 1);
        SignedCombination { basis, n, terms }
    }

    pub fn from_terms<I>(basis: BasisTag, n: usize, entries: I) -> Self
    where
        I: IntoIterator<Item = (Permutation, i64)>,
    {
        let mut out = SignedCombination::zero(basis, n);
        for (p, c) in entries {
            out.add_term(p, c);
        }
        out
    }

    pub fn basis(&self) -> BasisTag {
        self.basis
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, p: &Permutation) -> i64 {
        self.terms.get(p).copied().unwrap_or(0)
    }

    /// Terms in lexicographic order of the index permutation.
    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, i64)> {
        self.terms.iter().map(|(p, &c)| (p, c))
    }

    pub fn support(&self) -> impl Iterator<Item = &Permutation> {
        self.terms.keys()
    }

    fn add_term(&mut self, p: Permutation, c: i64) {
        assert_eq!(p.n(), self.n, "term size mismatch");
        if c == 0 {
            return;
        }
        match self.terms.get(&p) {
            Some(&old) => {
                let merged = old.checked_add(c).expect("coefficient overflow");
                if merged == 0 {
                    self.terms.remove(&p);
                } else {
                    self.terms.insert(p, merged);
                }
            }
            None => {
                self.terms.insert(p, c);
            }
        }
    }

    /// Termwise sum; both sides must share basis and size.
    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.basis, other.basis, "basis mismatch in add");
        assert_eq!(self.n, other.n, "size mismatch in add");
        let mut out = self.clone();
        for (p, &c) in &other.terms {
            out.add_term(p.clone(), c);
        }
        out
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: i64) -> Self {
        if c == 0 {
            return SignedCombination::zero(self.basis, self.n);
        }
        SignedCombination {
            basis: self.basis,
            n: self.n,
            terms: self
                .terms
                .iter()
                .map(|(p, &v)| (p.clone(), v.checked_mul(c).expect("coefficient overflow")))
                .collect(),
        }
    }

    fn sorting_action(&self, i: usize, negate_fixed: bool) -> Self {
        assert!(
            i >= 1 && i < self.n,
            "simple index {i} out of range for n={}",
            self.n
        );
        let mut out = SignedCombination::zero(self.basis, self.n);
        for (p, &c) in &self.terms {
            if p.descent_at(i) {
                out.add_term(p.apply_simple(i), c);
            } else {
                out.add_term(p.clone(), if negate_fixed { -c } else { c });
            }
        }
        out
    }

    /// Sorting action of `pi_i` on the `K` basis: a basis element with a
    /// descent at `i` moves to the sorted index, anything else is fixed.
    pub fn apply_pi(&self, i: usize) -> Self {
        assert_eq!(self.basis, BasisTag::K, "pi acts on the K basis");
        self.sorting_action(i, false)
    }

    /// Sorting action of `hat-pi_i` on the `K-hat` basis: descents sort,
    /// everything else is negated.
    pub fn apply_hatpi(&self, i: usize) -> Self {
        assert_eq!(self.basis, BasisTag::KHat, "hat-pi acts on the K-hat basis");
        self.sorting_action(i, true)
    }

    /// Applies a whole operator word left to right. The word must be reduced
    /// (operator words are defined through reduced decompositions only) and
    /// the kind must match the basis.
    pub fn apply_word(&self, word: &ReducedWord, kind: OperatorKind) -> Result<Self> {
        if !word.is_reduced(self.n) {
            return Err(Error::NotReduced);
        }
        let mut out = self.clone();
        for &i in word.letters() {
            out = match kind {
                OperatorKind::Pi => out.apply_pi(i),
                OperatorKind::HatPi => out.apply_hatpi(i),
            };
        }
        Ok(out)
    }

    /// Rewrites the combination in the opposite basis through the triangular
    /// sums over Bruhat upper sets; a round trip is the identity.
    pub fn change_basis(&self) -> Self {
        let target = match self.basis {
            BasisTag::K => BasisTag::KHat,
            BasisTag::KHat => BasisTag::K,
        };
        let mut out = SignedCombination::zero(target, self.n);
        for (p, &c) in &self.terms {
            let lp = p.length();
            for q in upper_set(p) {
                let coeff = match self.basis {
                    // K_p expands as the plain sum of K-hat over the upper set
                    BasisTag::K => c,
                    // K-hat_p expands with alternating signs
                    BasisTag::KHat => {
                        if (q.length() - lp) % 2 == 0 {
                            c
                        } else {
                            -c
                        }
                    }
                };
                out.add_term(q, coeff);
            }
        }
        out
    }
}

impl fmt::Display for SignedCombination {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let label = match self.basis {
            BasisTag::K => "K",
            BasisTag::KHat => "Kh",
        };
        for (idx, (p, c)) in self.terms().enumerate() {
            let sign = if c < 0 { '-' } else { '+' };
            if idx > 0 {
                write!(f, " ")?;
            }
            if c.abs() == 1 {
                write!(f, "{sign}{label}_{p}")?;
            } else {
                write!(f, "{sign}{}{label}_{p}", c.abs())?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize, Deserialize)]
struct TermDto {
    perm: String,
    coeff: i64,
}

#[derive(Serialize, Deserialize)]
struct CombinationDto {
    basis: String,
    terms: Vec<TermDto>,
}

impl Serialize for SignedCombination {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let dto = CombinationDto {
            basis: self.basis.as_str().to_string(),
            terms: self
                .terms()
                .map(|(p, c)| TermDto {
                    perm: p.to_string(),
                    coeff: c,
                })
                .collect(),
        };
        dto.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for SignedCombination {
    fn deserialize<D: Deserializer<'de>>(deserializer: D) -> std::result::Result<Self, D::Error> {
        let dto = CombinationDto::deserialize(deserializer)?;
        let basis = match dto.basis.as_str() {
            "K" => BasisTag::K,
            "KHAT" => BasisTag::KHat,
            other => return Err(D::Error::custom(format!("unknown basis {other:?}"))),
        };
        if dto.terms.is_empty() {
            return Err(D::Error::custom(
                "cannot infer size of an empty combination",
            ));
        }
        let mut terms = BTreeMap::new();
        let mut n = 0;
        for t in &dto.terms {
            let p = Permutation::parse(&t.perm).map_err(D::Error::custom)?;
            if n == 0 {
                n = p.n();
            } else if p.n() != n {
                return Err(D::Error::custom("mixed permutation sizes"));
            }
            if t.coeff != 0 && terms.insert(p, t.coeff).is_some() {
                return Err(D::Error::custom(format!("duplicate term {:?}", t.perm)));
            }
        }
        Ok(SignedCombination { basis, n, terms })
    }
}

impl SignedCombination {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("combination serializes")
    }

    pub fn from_json(s: &str) -> Result<Self> {
        serde_json::from_str(s).map_err(|e| Error::MalformedCombination(e.to_string()))
    }
}

/// The maximal-length element of the coset `p·(S_k x S_{n-k})`: both blocks
/// of the one-line word sorted decreasingly.
pub fn zeta(p: &Permutation, k: usize) -> Permutation {
    let n = p.n();
    assert!(k >= 1 && k < n, "cut k={k} out of range for n={n}");
    let mut word = p.word().to_vec();
    word[..k].sort_unstable_by(|a, b| b.cmp(a));
    word[k..].sort_unstable_by(|a, b| b.cmp(a));
    Permutation::from_word_unchecked(word)
}

/// Evaluates the mixed operator product: starting from the `K-hat` element
/// at the maximal permutation, the hat word down to `zeta(p, k)` is applied,
/// the result is rewritten in the `K` basis, and the plain word from `zeta`
/// down to `p` (whose letters avoid `k`) is applied there.
///
/// This is the reference oracle the chain enumerations are checked against.
pub fn compute_product(p: &Permutation, k: usize) -> SignedCombination {
    compute_product_with_zeta(p, &zeta(p, k))
}

pub(crate) fn compute_product_with_zeta(p: &Permutation, z: &Permutation) -> SignedCombination {
    let n = p.n();
    let omega = Permutation::longest(n);
    let hat_word = omega.compose(z).reduced_word();
    let start = SignedCombination::basis_element(BasisTag::KHat, omega);
    let at_zeta = start
        .apply_word(&hat_word, OperatorKind::HatPi)
        .expect("canonical word is reduced");
    debug_assert_eq!(
        at_zeta,
        SignedCombination::basis_element(BasisTag::KHat, z.clone())
    );
    let pi_word = z.inverse().compose(p).reduced_word();
    at_zeta
        .change_basis()
        .apply_word(&pi_word, OperatorKind::Pi)
        .expect("canonical word is reduced")
}

/// Expansion of one operator family in the other, as coefficients over the
/// lower set of `mu`: the hat operator expands with alternating signs, the
/// plain operator with unit coefficients.
pub fn expand_operator(mu: &Permutation, kind: OperatorKind) -> BTreeMap<Permutation, i64> {
    let lm = mu.length();
    let mut out = BTreeMap::new();
    for q in lower_set(mu) {
        let c = match kind {
            OperatorKind::Pi => 1,
            OperatorKind::HatPi => {
                if (lm - q.length()).is_multiple_of(2) {
                    1
                } else {
                    -1
                }
            }
        };
        out.insert(q, c);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::symmetric_group;

    fn p(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    fn k_elem(s: &str) -> SignedCombination {
        SignedCombination::basis_element(BasisTag::K, p(s))
    }

    fn kh_elem(s: &str) -> SignedCombination {
        SignedCombination::basis_element(BasisTag::KHat, p(s))
    }

    #[test]
    fn pi_sorts_descents() {
        assert_eq!(k_elem("21").apply_pi(1), k_elem("12"));
        assert_eq!(k_elem("12").apply_pi(1), k_elem("12"));
        let v = SignedCombination::from_terms(BasisTag::K, 3, [(p("213"), 1), (p("312"), -1)]);
        let expect = SignedCombination::from_terms(BasisTag::K, 3, [(p("123"), 1), (p("132"), -1)]);
        assert_eq!(v.apply_pi(1), expect);
    }

    #[test]
    fn hatpi_sorts_or_negates() {
        assert_eq!(kh_elem("21").apply_hatpi(1), kh_elem("12"));
        let minus = SignedCombination::from_terms(BasisTag::KHat, 2, [(p("12"), -1)]);
        assert_eq!(kh_elem("12").apply_hatpi(1), minus);
        for q in symmetric_group(3) {
            let v = SignedCombination::basis_element(BasisTag::KHat, q);
            for i in 1..3 {
                let once = v.apply_hatpi(i);
                let twice = once.apply_hatpi(i);
                let neg = SignedCombination::from_terms(
                    BasisTag::KHat,
                    3,
                    once.terms().map(|(q, c)| (q.clone(), -c)),
                );
                assert_eq!(twice, neg);
            }
        }
    }

    #[test]
    #[should_panic(expected = "pi acts on the K basis")]
    fn pi_rejects_wrong_basis() {
        kh_elem("21").apply_pi(1);
    }

    #[test]
    fn word_application() {
        let v = kh_elem("321");
        assert_eq!(
            v.apply_word(&ReducedWord::default(), OperatorKind::HatPi)
                .unwrap(),
            v
        );
        assert_eq!(
            v.apply_word(&ReducedWord::new(vec![1, 1]), OperatorKind::HatPi),
            Err(Error::NotReduced)
        );
        // hat word from the maximal permutation lands on the coset maximum
        let sigma = p("136254");
        let z = zeta(&sigma, 4);
        assert_eq!(z, p("632154"));
        let omega = Permutation::longest(6);
        let w = omega.compose(&z).reduced_word();
        let got = kh_elem("654321")
            .apply_word(&w, OperatorKind::HatPi)
            .unwrap();
        assert_eq!(got, SignedCombination::basis_element(BasisTag::KHat, z));
    }

    #[test]
    fn word_independence_on_s4_basis() {
        for mu in symmetric_group(4) {
            let words = mu.all_reduced_words();
            for basis in symmetric_group(4) {
                let k_ref = SignedCombination::basis_element(BasisTag::K, basis.clone())
                    .apply_word(&words[0], OperatorKind::Pi)
                    .unwrap();
                let kh_ref = SignedCombination::basis_element(BasisTag::KHat, basis.clone())
                    .apply_word(&words[0], OperatorKind::HatPi)
                    .unwrap();
                for w in &words[1..] {
                    let k_got = SignedCombination::basis_element(BasisTag::K, basis.clone())
                        .apply_word(w, OperatorKind::Pi)
                        .unwrap();
                    let kh_got = SignedCombination::basis_element(BasisTag::KHat, basis.clone())
                        .apply_word(w, OperatorKind::HatPi)
                        .unwrap();
                    assert_eq!(k_got, k_ref);
                    assert_eq!(kh_got, kh_ref);
                }
            }
        }
    }

    #[test]
    fn change_basis_examples() {
        let omega_k = k_elem("4321");
        let omega_kh = kh_elem("4321");
        assert_eq!(omega_k.change_basis(), omega_kh);
        assert_eq!(omega_kh.change_basis(), omega_k);
        let expect = SignedCombination::from_terms(BasisTag::KHat, 2, [(p("12"), 1), (p("21"), 1)]);
        assert_eq!(k_elem("12").change_basis(), expect);
    }

    #[test]
    fn zeta_examples() {
        assert_eq!(zeta(&p("136254"), 4), p("632154"));
        let omega = Permutation::longest(5);
        for k in 1..5 {
            assert_eq!(zeta(&omega, k), omega);
        }
        assert_eq!(zeta(&p("124635"), 2), p("216543"));
    }

    #[test]
    fn product_trivial_cases() {
        let omega = Permutation::longest(4);
        for k in 1..4 {
            assert_eq!(
                compute_product(&omega, k),
                SignedCombination::basis_element(BasisTag::K, omega.clone())
            );
        }
        let expect = SignedCombination::from_terms(BasisTag::K, 2, [(p("12"), 1), (p("21"), -1)]);
        assert_eq!(compute_product(&Permutation::identity(2), 1), expect);
    }

    #[test]
    fn pi_word_avoids_the_cut_letter() {
        for sigma in symmetric_group(4) {
            for k in 1..4 {
                let z = zeta(&sigma, k);
                let w = z.inverse().compose(&sigma).reduced_word();
                assert!(w.letters().iter().all(|&i| i != k), "{sigma} k={k}");
            }
        }
    }

    #[test]
    fn operator_expansion_examples() {
        let id2 = Permutation::identity(2);
        let hat = expand_operator(&p("21"), OperatorKind::HatPi);
        assert_eq!(hat.get(&p("21")), Some(&1));
        assert_eq!(hat.get(&id2), Some(&-1));
        let trivial = expand_operator(&id2, OperatorKind::HatPi);
        assert_eq!(trivial.len(), 1);
        assert_eq!(trivial.get(&id2), Some(&1));
        let full = expand_operator(&p("321"), OperatorKind::HatPi);
        assert_eq!(full.len(), 6);
        for (q, c) in &full {
            let expect = if (3 - q.length()) % 2 == 0 { 1 } else { -1 };
            assert_eq!(*c, expect);
        }
    }

    #[test]
    fn json_schema_roundtrip() {
        let v = compute_product(&p("136254"), 4);
        let json = v.to_json();
        assert!(json.starts_with("{\"basis\":\"K\",\"terms\":[{\"perm\":\"136254\""));
        assert_eq!(SignedCombination::from_json(&json).unwrap(), v);
        assert!(SignedCombination::from_json("{\"basis\":\"Q\",\"terms\":[]}").is_err());
    }
}

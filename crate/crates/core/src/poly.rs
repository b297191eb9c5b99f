//! Exact Laurent-polynomial realization of the sorting operators: divided
//! differences, the two isobaric families on polynomials, dominant and
//! general Grothendieck polynomials, Key polynomials, and the congruence
//! test modulo the identification of symmetric functions in `x` with the
//! same functions in `y` (checked by specializing `x` to every permutation
//! of `y`).
//!
//! Polynomials live in `x_1..x_n, y_1..y_n` with arbitrary-precision integer
//! coefficients. Exponents of `x` may be negative; `y` exponents stay
//! nonnegative except transiently inside [`specialize_x_to_yw`].

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::hecke::OperatorKind;
use crate::perm::{symmetric_group, Permutation, MAX_N};

/// A multivariate Laurent polynomial over `x_1..x_n, y_1..y_n`. The exponent
/// vector stores the x-block first. No zero coefficients are kept.
#[derive(Clone, PartialEq, Eq)]
pub struct LaurentPolynomial {
    n: usize,
    terms: BTreeMap<Vec<i32>, BigInt>,
}

impl LaurentPolynomial {
    pub fn zero(n: usize) -> Self {
        assert!((1..=MAX_N).contains(&n), "n={n} out of range");
        LaurentPolynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(n: usize, c: i64) -> Self {
        let mut out = Self::zero(n);
        out.add_term(vec![0; 2 * n], BigInt::from(c));
        out
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, 1)
    }

    /// A single term `c * x^xe * y^ye`. Exponents of `y` must be nonnegative.
    pub fn monomial(n: usize, xe: &[i32], ye: &[i32], c: i64) -> Self {
        assert_eq!(xe.len(), n, "x exponent vector length");
        assert_eq!(ye.len(), n, "y exponent vector length");
        assert!(
            ye.iter().all(|&e| e >= 0),
            "y exponents must be nonnegative"
        );
        let mut out = Self::zero(n);
        let mut exp = Vec::with_capacity(2 * n);
        exp.extend_from_slice(xe);
        exp.extend_from_slice(ye);
        out.add_term(exp, BigInt::from(c));
        out
    }

    /// The variable `x_i`, 1-based.
    pub fn x(n: usize, i: usize) -> Self {
        assert!(i >= 1 && i <= n);
        let mut xe = vec![0; n];
        xe[i - 1] = 1;
        Self::monomial(n, &xe, &vec![0; n], 1)
    }

    /// The variable `y_j`, 1-based.
    pub fn y(n: usize, j: usize) -> Self {
        assert!(j >= 1 && j <= n);
        let mut ye = vec![0; n];
        ye[j - 1] = 1;
        Self::monomial(n, &xe_zero(n), &ye, 1)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    fn add_term(&mut self, exp: Vec<i32>, c: BigInt) {
        debug_assert_eq!(exp.len(), 2 * self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.get_mut(&exp) {
            Some(old) => {
                *old += c;
                if old.is_zero() {
                    self.terms.remove(&exp);
                }
            }
            None => {
                self.terms.insert(exp, c);
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "size mismatch");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }

    pub fn neg(&self) -> Self {
        LaurentPolynomial {
            n: self.n,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n, "size mismatch");
        let mut out = Self::zero(self.n);
        for (e1, c1) in &self.terms {
            for (e2, c2) in &other.terms {
                let exp: Vec<i32> = e1.iter().zip(e2).map(|(a, b)| a + b).collect();
                out.add_term(exp, c1 * c2);
            }
        }
        out
    }

    /// Swaps the variables `x_i` and `x_{i+1}`; `y` is untouched.
    pub fn swap_x(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n, "simple index {i} out of range");
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let mut exp = e.clone();
            exp.swap(i - 1, i);
            out.add_term(exp, c.clone());
        }
        out
    }

    /// The divided difference: subtract the `x_i <-> x_{i+1}` swap and divide
    /// by `x_i - x_{i+1}`. The division is exact; each monomial contributes a
    /// geometric block of monomials directly.
    pub fn divided_difference(&self, i: usize) -> Self {
        assert!(i >= 1 && i < self.n, "simple index {i} out of range");
        let mut out = Self::zero(self.n);
        for (e, c) in &self.terms {
            let p = e[i - 1];
            let q = e[i];
            if p == q {
                continue;
            }
            // (x^p z^q - x^q z^p) / (x - z) summed as monomials
            let (hi, lo, coeff) = if p > q { (p, q, c.clone()) } else { (q, p, -c) };
            for t in 0..(hi - lo) {
                let mut exp = e.clone();
                exp[i - 1] = hi - 1 - t;
                exp[i] = lo + t;
                out.add_term(exp, coeff.clone());
            }
        }
        #[cfg(debug_assertions)]
        {
            let diff = Self::x(self.n, i).sub(&Self::x(self.n, i + 1));
            assert_eq!(
                diff.mul(&out),
                self.sub(&self.swap_x(i)),
                "inexact division"
            );
        }
        out
    }

    /// The two isobaric families: the plain one multiplies by `x_i` before
    /// the divided difference, the hat one multiplies by `x_{i+1}` after.
    /// They differ by the identity.
    pub fn isobaric(&self, i: usize, kind: OperatorKind) -> Self {
        match kind {
            OperatorKind::Pi => Self::x(self.n, i).mul(self).divided_difference(i),
            OperatorKind::HatPi => Self::x(self.n, i + 1).mul(&self.divided_difference(i)),
        }
    }
}

fn xe_zero(n: usize) -> Vec<i32> {
    vec![0; n]
}

fn graded_lex(a: &[i32], b: &[i32]) -> std::cmp::Ordering {
    let da: i64 = a.iter().map(|&e| e as i64).sum();
    let db: i64 = b.iter().map(|&e| e as i64).sum();
    da.cmp(&db).then_with(|| a.cmp(b))
}

impl fmt::Display for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut entries: Vec<(&Vec<i32>, &BigInt)> = self.terms.iter().collect();
        entries.sort_by(|x, y| graded_lex(y.0, x.0));
        for (idx, (exp, c)) in entries.iter().enumerate() {
            let mut vars = Vec::new();
            for (pos, &e) in exp.iter().enumerate() {
                if e == 0 {
                    continue;
                }
                let name = if pos < self.n {
                    format!("x{}", pos + 1)
                } else {
                    format!("y{}", pos - self.n + 1)
                };
                if e == 1 {
                    vars.push(name);
                } else {
                    vars.push(format!("{name}^{e}"));
                }
            }
            let mag = c.abs();
            let body = if vars.is_empty() {
                mag.to_string()
            } else if mag.is_one() {
                vars.join("*")
            } else {
                format!("{mag}*{}", vars.join("*"))
            };
            if idx == 0 {
                if c.is_negative() {
                    write!(f, "-{body}")?;
                } else {
                    write!(f, "{body}")?;
                }
            } else if c.is_negative() {
                write!(f, " - {body}")?;
            } else {
                write!(f, " + {body}")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for LaurentPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LaurentPolynomial({self})")
    }
}

/// The dominant double polynomial: the product of `1 - y_j / x_i` over
/// `i = 1..n` and `j = 1..n-i`.
pub fn dominant_grothendieck(n: usize) -> LaurentPolynomial {
    let mut out = LaurentPolynomial::one(n);
    for i in 1..=n {
        for j in 1..=n - i {
            let mut xe = xe_zero(n);
            xe[i - 1] = -1;
            let mut ye = xe_zero(n);
            ye[j - 1] = 1;
            let factor =
                LaurentPolynomial::one(n).sub(&LaurentPolynomial::monomial(n, &xe, &ye, 1));
            out = out.mul(&factor);
        }
    }
    out
}

/// The Grothendieck polynomial of a permutation, generated from the dominant
/// polynomial by isobaric steps along the canonical descent path from the
/// maximal permutation. Independent of the chosen path.
pub fn grothendieck(p: &Permutation) -> LaurentPolynomial {
    let n = p.n();
    let omega = Permutation::longest(n);
    let word = omega.compose(p).reduced_word();
    grothendieck_along(n, word.letters())
}

/// Same generation along an explicit descent path from the maximal
/// permutation (used to check path independence).
pub fn grothendieck_along(n: usize, letters: &[usize]) -> LaurentPolynomial {
    let mut out = dominant_grothendieck(n);
    for &i in letters {
        out = out.isobaric(i, OperatorKind::Pi);
    }
    out
}

/// The Key polynomial of a nonnegative exponent vector: starting from the
/// monomial of the decreasing rearrangement, sorted entries are moved into
/// place by isobaric steps (the plain family gives the `K` polynomial, the
/// hat family the `K-hat` one).
pub fn key_polynomial(v: &[u32], kind: OperatorKind) -> LaurentPolynomial {
    let n = v.len();
    assert!((1..=MAX_N).contains(&n), "vector length out of range");
    // bubble the target up to its dominant rearrangement, recording swaps
    let mut u: Vec<u32> = v.to_vec();
    let mut path = Vec::new();
    while let Some(i) = (0..n - 1).find(|&i| u[i] < u[i + 1]) {
        u.swap(i, i + 1);
        path.push(i + 1);
    }
    path.reverse();
    let xe: Vec<i32> = u.iter().map(|&e| e as i32).collect();
    let mut out = LaurentPolynomial::monomial(n, &xe, &xe_zero(n), 1);
    for i in path {
        out = out.isobaric(i, kind);
    }
    out
}

/// The monomial `y_{v_1} ... y_{v_k}` for a list of values.
pub fn y_monomial(n: usize, values: &[u8]) -> LaurentPolynomial {
    let mut ye = vec![0i32; n];
    for &v in values {
        assert!(v >= 1 && v as usize <= n, "value {v} out of range");
        ye[v as usize - 1] += 1;
    }
    LaurentPolynomial::monomial(n, &xe_zero(n), &ye, 1)
}

/// The monomial `(x_1 ... x_k)^(-1)`.
pub fn x_prefix_inverse(n: usize, k: usize) -> LaurentPolynomial {
    assert!(k <= n);
    let mut xe = xe_zero(n);
    for e in xe.iter_mut().take(k) {
        *e = -1;
    }
    LaurentPolynomial::monomial(n, &xe, &xe_zero(n), 1)
}

/// Substitutes `x_i <- y_{w(i)}`. Negative `x` exponents become negative `y`
/// exponents, which is allowed in the output of this operation only.
pub fn specialize_x_to_yw(f: &LaurentPolynomial, w: &Permutation) -> LaurentPolynomial {
    assert_eq!(f.n(), w.n(), "size mismatch in specialization");
    let n = f.n();
    let mut out = LaurentPolynomial::zero(n);
    for (e, c) in &f.terms {
        let mut exp = vec![0i32; 2 * n];
        for i in 0..n {
            exp[n + w.at(i + 1) as usize - 1] += e[i];
            exp[n + i] += e[n + i];
        }
        out.add_term(exp, c.clone());
    }
    out
}

/// Congruence modulo the identification of symmetric functions in `x` with
/// the same functions in `y`: the difference must vanish under every
/// specialization `x <- y_w`. This vanishing test is the module's congruence
/// contract.
pub fn congruent_mod_ideal(f: &LaurentPolynomial, g: &LaurentPolynomial) -> bool {
    assert_eq!(f.n(), g.n(), "size mismatch in congruence");
    let d = f.sub(g);
    if d.is_zero() {
        return true;
    }
    symmetric_group(d.n()).all(|w| specialize_x_to_yw(&d, &w).is_zero())
}

/// Verifies that the formal sorting actions are faithfully realized on
/// polynomials: the plain family on Grothendieck polynomials and on Key
/// polynomials, and the hat family on hat Key polynomials, all indexed so a
/// descent sorts and anything else is fixed (or negated, for the hat
/// family). Exhaustive over the group; supported for `n <= 4`.
pub fn realization_check(n: usize) -> bool {
    assert!((1..=4).contains(&n), "realization check supports n <= 4");
    // Key polynomials are indexed by the one-line word shifted down by one,
    // so the maximal permutation matches the staircase monomial.
    let key_vec =
        |p: &Permutation| -> Vec<u32> { p.word().iter().map(|&v| (v - 1) as u32).collect() };
    for sigma in symmetric_group(n) {
        let g = grothendieck(&sigma);
        let key = key_polynomial(&key_vec(&sigma), OperatorKind::Pi);
        let key_hat = key_polynomial(&key_vec(&sigma), OperatorKind::HatPi);
        for i in 1..n {
            let sorted = sigma.apply_simple(i);
            if sigma.descent_at(i) {
                if g.isobaric(i, OperatorKind::Pi) != grothendieck(&sorted) {
                    return false;
                }
                if key.isobaric(i, OperatorKind::Pi)
                    != key_polynomial(&key_vec(&sorted), OperatorKind::Pi)
                {
                    return false;
                }
                if key_hat.isobaric(i, OperatorKind::HatPi)
                    != key_polynomial(&key_vec(&sorted), OperatorKind::HatPi)
                {
                    return false;
                }
            } else {
                if g.isobaric(i, OperatorKind::Pi) != g {
                    return false;
                }
                if key.isobaric(i, OperatorKind::Pi) != key {
                    return false;
                }
                if key_hat.isobaric(i, OperatorKind::HatPi) != key_hat.neg() {
                    return false;
                }
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pm(s: &str) -> Permutation {
        Permutation::parse(s).unwrap()
    }

    #[test]
    fn divided_difference_examples() {
        let n = 2;
        let x1sq = LaurentPolynomial::monomial(n, &[2, 0], &[0, 0], 1);
        let expect = LaurentPolynomial::x(n, 1).add(&LaurentPolynomial::x(n, 2));
        assert_eq!(x1sq.divided_difference(1), expect);

        let sym = LaurentPolynomial::x(n, 1).mul(&LaurentPolynomial::x(n, 2));
        assert!(sym.divided_difference(1).is_zero());

        let e1 = LaurentPolynomial::x(n, 1).add(&LaurentPolynomial::x(n, 2));
        assert!(e1.divided_difference(1).is_zero());

        // negative exponents divide exactly too
        let inv = LaurentPolynomial::monomial(n, &[0, -1], &[0, 0], 1);
        let expect = LaurentPolynomial::monomial(n, &[-1, -1], &[0, 0], 1);
        assert_eq!(inv.divided_difference(1), expect);
    }

    #[test]
    fn isobaric_examples() {
        let n = 2;
        let x1 = LaurentPolynomial::x(n, 1);
        let expect = LaurentPolynomial::x(n, 1).add(&LaurentPolynomial::x(n, 2));
        assert_eq!(x1.isobaric(1, OperatorKind::Pi), expect);
        assert_eq!(
            x1.isobaric(1, OperatorKind::HatPi),
            LaurentPolynomial::x(n, 2)
        );
    }

    #[test]
    fn dominant_examples() {
        assert_eq!(dominant_grothendieck(1), LaurentPolynomial::one(1));
        let expect =
            LaurentPolynomial::one(2).sub(&LaurentPolynomial::monomial(2, &[-1, 0], &[1, 0], 1));
        assert_eq!(dominant_grothendieck(2), expect);

        let f1 = LaurentPolynomial::one(3).sub(&LaurentPolynomial::monomial(
            3,
            &[-1, 0, 0],
            &[1, 0, 0],
            1,
        ));
        let f2 = LaurentPolynomial::one(3).sub(&LaurentPolynomial::monomial(
            3,
            &[-1, 0, 0],
            &[0, 1, 0],
            1,
        ));
        let f3 = LaurentPolynomial::one(3).sub(&LaurentPolynomial::monomial(
            3,
            &[0, -1, 0],
            &[1, 0, 0],
            1,
        ));
        assert_eq!(dominant_grothendieck(3), f1.mul(&f2).mul(&f3));
    }

    #[test]
    fn grothendieck_boundary_cases() {
        for n in 1..=4 {
            assert_eq!(
                grothendieck(&Permutation::longest(n)),
                dominant_grothendieck(n)
            );
            assert_eq!(
                grothendieck(&Permutation::identity(n)),
                LaurentPolynomial::one(n)
            );
        }
    }

    #[test]
    fn grothendieck_of_simple_reflections() {
        // 1 - (y_1..y_k)/(x_1..x_k)
        for n in 2..=4 {
            for k in 1..n {
                let mut word: Vec<u8> = (1..=n as u8).collect();
                word.swap(k - 1, k);
                let sk = Permutation::new(word).unwrap();
                let mut xe = vec![0i32; n];
                let mut ye = vec![0i32; n];
                for i in 0..k {
                    xe[i] = -1;
                    ye[i] = 1;
                }
                let expect =
                    LaurentPolynomial::one(n).sub(&LaurentPolynomial::monomial(n, &xe, &ye, 1));
                assert_eq!(grothendieck(&sk), expect, "n={n} k={k}");
            }
        }
    }

    #[test]
    fn key_examples() {
        let expect = LaurentPolynomial::monomial(2, &[2, 1], &[0, 0], 1);
        assert_eq!(key_polynomial(&[2, 1], OperatorKind::Pi), expect);
        let expect = LaurentPolynomial::x(2, 1).add(&LaurentPolynomial::x(2, 2));
        assert_eq!(key_polynomial(&[0, 1], OperatorKind::Pi), expect);
        assert_eq!(
            key_polynomial(&[0, 1], OperatorKind::HatPi),
            LaurentPolynomial::x(2, 2)
        );
    }

    #[test]
    fn specialization_examples() {
        let n = 3;
        let e1x = LaurentPolynomial::x(n, 1)
            .add(&LaurentPolynomial::x(n, 2))
            .add(&LaurentPolynomial::x(n, 3));
        let e1y = LaurentPolynomial::y(n, 1)
            .add(&LaurentPolynomial::y(n, 2))
            .add(&LaurentPolynomial::y(n, 3));
        let d = e1x.sub(&e1y);
        for w in symmetric_group(n) {
            assert!(specialize_x_to_yw(&d, &w).is_zero());
        }

        let d = LaurentPolynomial::x(2, 1).sub(&LaurentPolynomial::y(2, 1));
        assert!(specialize_x_to_yw(&d, &Permutation::identity(2)).is_zero());
        let swapped = specialize_x_to_yw(&d, &pm("21"));
        let expect = LaurentPolynomial::y(2, 2).sub(&LaurentPolynomial::y(2, 1));
        assert_eq!(swapped, expect);

        let dom = dominant_grothendieck(2);
        assert!(specialize_x_to_yw(&dom, &Permutation::identity(2)).is_zero());
    }

    #[test]
    fn congruence_basics() {
        let n = 3;
        let f = grothendieck(&pm("231"));
        assert!(congruent_mod_ideal(&f, &f));
        let e2 = |vars: fn(usize, usize) -> LaurentPolynomial| {
            vars(n, 1)
                .mul(&vars(n, 2))
                .add(&vars(n, 1).mul(&vars(n, 3)))
                .add(&vars(n, 2).mul(&vars(n, 3)))
        };
        let e2x = e2(LaurentPolynomial::x);
        let e2y = e2(LaurentPolynomial::y);
        assert!(congruent_mod_ideal(&e2x, &e2y));
        assert!(!congruent_mod_ideal(&e2x, &LaurentPolynomial::zero(n)));
    }

    #[test]
    fn realization_small() {
        assert!(realization_check(2));
        assert!(realization_check(3));
    }

    #[test]
    fn display_is_canonical() {
        assert_eq!(dominant_grothendieck(2).to_string(), "1 - x1^-1*y1");
        assert_eq!(LaurentPolynomial::zero(2).to_string(), "0");
        let p =
            LaurentPolynomial::monomial(2, &[2, 0], &[0, 1], 3).sub(&LaurentPolynomial::x(2, 2));
        assert_eq!(p.to_string(), "3*x1^2*y2 - x2");
    }
}

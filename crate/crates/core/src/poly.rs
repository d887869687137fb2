//! Noncommutative polynomials in the two alphabets.

use std::collections::btree_map::{self, BTreeMap};
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};


use crate::scalar::Coeff;
use crate::word::{Alphabet, Letter, Word};

/// A finite linear combination of words.
///
/// Zero coefficients are never stored, so structural equality is equality of
/// polynomials and iteration runs in canonical word order.
#[derive(Clone, PartialEq, Debug)]
pub struct NCPoly<K> {
    terms: BTreeMap<Word, K>,
}

impl<K: Coeff> Default for NCPoly<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Coeff> NCPoly<K> {
    pub fn zero() -> Self {
        Self { terms: BTreeMap::new() }
    }

    pub fn one() -> Self {
        Self::monomial(K::one(), Word::unit())
    }

    pub fn constant(c: K) -> Self {
        Self::monomial(c, Word::unit())
    }

    pub fn monomial(c: K, word: Word) -> Self {
        let mut p = Self::zero();
        p.add_term(word, c);
        p
    }

    pub fn word(word: Word) -> Self {
        Self::monomial(K::one(), word)
    }

    pub fn letter(letter: Letter) -> Self {
        Self::word(Word::from_letter(letter))
    }

    pub fn from_terms<I: IntoIterator<Item = (Word, K)>>(terms: I) -> Self {
        let mut p = Self::zero();
        for (w, c) in terms {
            p.add_term(w, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, Word, K> {
        self.terms.iter()
    }

    pub fn words(&self) -> impl Iterator<Item = &Word> {
        self.terms.keys()
    }

    pub fn into_terms(self) -> btree_map::IntoIter<Word, K> {
        self.terms.into_iter()
    }

    pub fn coeff(&self, word: &Word) -> K {
        self.terms.get(word).cloned().unwrap_or_else(K::zero)
    }

    /// Adds `c * word`, dropping the entry if it cancels.
    pub fn add_term(&mut self, word: Word, c: K) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(word) {
            btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            btree_map::Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Self, c: &K) {
        if c.is_zero() {
            return;
        }
        for (w, v) in &other.terms {
            self.add_term(w.clone(), v.clone() * c.clone());
        }
    }

    pub fn scale(&self, c: &K) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        Self {
            terms: self
                .terms
                .iter()
                .map(|(w, v)| (w.clone(), v.clone() * c.clone()))
                .filter(|(_, v)| !v.is_zero())
                .collect(),
        }
    }

    /// Free-algebra product: concatenation extended bilinearly.
    pub fn mul_free(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (u, cu) in &self.terms {
            for (v, cv) in &other.terms {
                out.add_term(u.mul(v), cu.clone() * cv.clone());
            }
        }
        out
    }

    /// Largest word length, `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.terms.keys().map(Word::len).max()
    }

    /// Largest word under the canonical order.
    pub fn leading_word(&self) -> Option<&Word> {
        self.terms.keys().next_back()
    }

    pub fn is_wick_ordered(&self) -> bool {
        self.terms.keys().all(Word::is_wick_ordered)
    }

    pub fn is_over(&self, alphabet: Alphabet) -> bool {
        self.terms.keys().all(|w| w.is_over(alphabet))
    }

    /// Terms whose word has exactly `len` letters.
    pub fn homogeneous_part(&self, len: usize) -> Self {
        Self {
            terms: self
                .terms
                .iter()
                .filter(|(w, _)| w.len() == len)
                .map(|(w, c)| (w.clone(), c.clone()))
                .collect(),
        }
    }

    /// Applies a linear map given on words.
    pub fn map_linear<F>(&self, mut f: F) -> Self
    where
        F: FnMut(&Word) -> Self,
    {
        let mut out = Self::zero();
        for (w, c) in &self.terms {
            out.add_scaled(&f(w), c);
        }
        out
    }
}

/// The antilinear anti-involution exchanging the two alphabets.
///
/// Each word is reversed with every letter moved to the other alphabet (same
/// index) and each coefficient conjugated.
pub fn star<K: Coeff>(p: &NCPoly<K>) -> NCPoly<K> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let starred: Word = w.letters().iter().rev().map(|l| l.starred()).collect();
        out.add_term(starred, c.conj());
    }
    out
}

impl<K: Coeff> Add for NCPoly<K> {
    type Output = Self;
    fn add(mut self, rhs: Self) -> Self {
        for (w, c) in rhs.terms {
            self.add_term(w, c);
        }
        self
    }
}

impl<K: Coeff> Add for &NCPoly<K> {
    type Output = NCPoly<K>;
    fn add(self, rhs: Self) -> NCPoly<K> {
        self.clone() + rhs.clone()
    }
}

impl<K: Coeff> Neg for NCPoly<K> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { terms: self.terms.into_iter().map(|(w, c)| (w, -c)).collect() }
    }
}

impl<K: Coeff> Sub for NCPoly<K> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        self + (-rhs)
    }
}

impl<K: Coeff> Sub for &NCPoly<K> {
    type Output = NCPoly<K>;
    fn sub(self, rhs: Self) -> NCPoly<K> {
        self.clone() - rhs.clone()
    }
}

impl<K: Coeff> Mul for &NCPoly<K> {
    type Output = NCPoly<K>;
    fn mul(self, rhs: Self) -> NCPoly<K> {
        self.mul_free(rhs)
    }
}

impl<K: Coeff> Mul for NCPoly<K> {
    type Output = NCPoly<K>;
    fn mul(self, rhs: Self) -> NCPoly<K> {
        self.mul_free(&rhs)
    }
}

impl<K: Coeff> fmt::Display for NCPoly<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        for (n, (w, c)) in self.terms.iter().enumerate() {
            if n > 0 {
                write!(f, " + ")?;
            }
            match (w.is_unit(), c.is_one()) {
                (true, _) => write!(f, "({c})")?,
                (false, true) => write!(f, "{w}")?,
                (false, false) => write!(f, "({c}) {w}")?,
            }
        }
        Ok(())
    }
}

//! Crosses between two free algebras and the crossed product they define.
//!
//! A [`Cross`] is given by a generator twist, an optional scalar pairing and,
//! for experiments with tables that are not generated by a twist, explicit
//! overrides of `tau(b (x) a)` on chosen word pairs. Products of Wick-ordered
//! words are computed as `a' tau(b (x) a) b'`.

mod twist;
mod verify;

use std::collections::{BTreeMap, HashMap};

use thiserror::Error;

use crate::poly::NCPoly;
use crate::scalar::Coeff;
use crate::word::{Alphabet, Letter, Word};

pub use twist::{Pairing, TwistMatrix};
pub use verify::{
    basis_index, materialize, verify_associativity, verify_cross_axioms, verify_hexagon,
    CrossIdentity, CrossReport, Violation,
};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CrossError {
    #[error("generator index {index} out of range for alphabet {alphabet:?} of dimension {dim}")]
    IndexOutOfRange { alphabet: Alphabet, index: usize, dim: usize },
    #[error("expected a word over alphabet {expected:?}, got `{word}`")]
    WrongAlphabet { expected: Alphabet, word: String },
    #[error("word `{0}` is not Wick-ordered")]
    NotWickOrdered(String),
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("operation needs a homogeneous cross but a pairing is present")]
    NotHomogeneous,
}

/// Rewriting order for [`wick_order`]: which `(B, A)` adjacency to resolve
/// first.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Strategy {
    Leftmost,
    Rightmost,
}

#[derive(Clone, Debug)]
pub struct Cross<K> {
    twist: TwistMatrix<K>,
    pairing: Option<Pairing<K>>,
    overrides: BTreeMap<(Word, Word), NCPoly<K>>,
}

impl<K: Coeff> Cross<K> {
    /// The homogeneous cross generated by `twist`.
    pub fn new(twist: TwistMatrix<K>) -> Self {
        Self { twist, pairing: None, overrides: BTreeMap::new() }
    }

    pub fn with_pairing(twist: TwistMatrix<K>, pairing: Pairing<K>) -> Result<Self, CrossError> {
        for (&(i, j), _) in pairing.entries() {
            if i == 0 || i > twist.dim_b() {
                return Err(CrossError::IndexOutOfRange { alphabet: Alphabet::B, index: i, dim: twist.dim_b() });
            }
            if j == 0 || j > twist.dim_a() {
                return Err(CrossError::IndexOutOfRange { alphabet: Alphabet::A, index: j, dim: twist.dim_a() });
            }
        }
        Ok(Self { twist, pairing: Some(pairing), overrides: BTreeMap::new() })
    }

    /// Replaces `tau(b (x) a)` on one word pair.
    ///
    /// The value must be a combination of Wick-ordered words. Generator-level
    /// rewriting ([`wick_order`]) ignores overrides; multiplication and the
    /// axiom checks honour them.
    pub fn set_override(&mut self, b: Word, a: Word, value: NCPoly<K>) -> Result<(), CrossError> {
        self.check_word(&b, Alphabet::B)?;
        self.check_word(&a, Alphabet::A)?;
        if let Some(w) = value.words().find(|w| !w.is_wick_ordered()) {
            return Err(CrossError::NotWickOrdered(w.to_string()));
        }
        self.overrides.insert((b, a), value);
        Ok(())
    }

    pub fn twist(&self) -> &TwistMatrix<K> {
        &self.twist
    }

    pub fn pairing(&self) -> Option<&Pairing<K>> {
        self.pairing.as_ref()
    }

    pub fn has_overrides(&self) -> bool {
        !self.overrides.is_empty()
    }

    pub fn dim_a(&self) -> usize {
        self.twist.dim_a()
    }

    pub fn dim_b(&self) -> usize {
        self.twist.dim_b()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.pairing.as_ref().is_none_or(|p| p.entries().next().is_none())
    }

    fn dim(&self, alphabet: Alphabet) -> usize {
        match alphabet {
            Alphabet::A => self.dim_a(),
            Alphabet::B => self.dim_b(),
        }
    }

    fn check_letter(&self, l: Letter) -> Result<(), CrossError> {
        let dim = self.dim(l.alphabet());
        if l.index() > dim {
            return Err(CrossError::IndexOutOfRange { alphabet: l.alphabet(), index: l.index(), dim });
        }
        Ok(())
    }

    fn check_word(&self, w: &Word, alphabet: Alphabet) -> Result<(), CrossError> {
        if !w.is_over(alphabet) {
            return Err(CrossError::WrongAlphabet { expected: alphabet, word: w.to_string() });
        }
        w.letters().iter().try_for_each(|&l| self.check_letter(l))
    }

    /// Checks that every letter of `p` is within range.
    pub fn check_poly(&self, p: &NCPoly<K>) -> Result<(), CrossError> {
        p.words()
            .flat_map(|w| w.letters().iter())
            .try_for_each(|&l| self.check_letter(l))
    }

    /// Rewrites one adjacent pair `y^i x^j`.
    fn generator_rule(&self, i: usize, j: usize) -> Vec<(Option<(Letter, Letter)>, K)> {
        let mut out: Vec<_> = self
            .twist
            .rule(i, j)
            .map(|(k, l, v)| (Some((Letter::a(k), Letter::b(l))), v.clone()))
            .collect();
        if let Some(g) = self.pairing.as_ref().and_then(|p| p.get(i, j)) {
            out.push((None, g.clone()));
        }
        out
    }

    /// Ladder extension of the twist, ignoring overrides.
    ///
    /// The letters of `b` are pushed through `a` starting with the last one.
    /// A pairing term absorbs the letter being pushed together with the `A`
    /// letter it meets.
    pub(crate) fn ladder(&self, b: &Word, a: &Word) -> NCPoly<K> {
        let mut current: NCPoly<K> = NCPoly::word(a.clone());
        for &y in b.letters().iter().rev() {
            let mut next = NCPoly::zero();
            for (w, c) in current.terms() {
                let (alpha, beta) = w.split_ordered().expect("ladder keeps words ordered");
                for ((prefix, rest), v) in self.push_letter(y, &alpha) {
                    let mut word = prefix;
                    if let Some(l) = rest {
                        word.push(l);
                    }
                    next.add_term(word.mul(&beta), v * c.clone());
                }
            }
            current = next;
        }
        current
    }

    /// Moves one `B` letter through an `A` word: returns `(A word, leftover
    /// B letter)` with coefficients.
    fn push_letter(&self, y: Letter, alpha: &Word) -> BTreeMap<(Word, Option<Letter>), K> {
        let mut states: BTreeMap<(Word, Option<Letter>), K> = BTreeMap::new();
        states.insert((Word::unit(), Some(y)), K::one());
        for &x in alpha.letters() {
            let mut next: BTreeMap<(Word, Option<Letter>), K> = BTreeMap::new();
            let mut add = |key: (Word, Option<Letter>), v: K| {
                if v.is_zero() {
                    return;
                }
                let e = next.entry(key).or_insert_with(K::zero);
                *e = e.clone() + v;
            };
            for ((prefix, rest), c) in states {
                match rest {
                    None => {
                        let mut p = prefix;
                        p.push(x);
                        add((p, None), c);
                    }
                    Some(yl) => {
                        for (out, v) in self.generator_rule(yl.index(), x.index()) {
                            match out {
                                Some((xk, yl2)) => {
                                    let mut p = prefix.clone();
                                    p.push(xk);
                                    add((p, Some(yl2)), c.clone() * v);
                                }
                                None => add((prefix.clone(), None), c.clone() * v),
                            }
                        }
                    }
                }
            }
            next.retain(|_, v| !v.is_zero());
            states = next;
        }
        states
    }

    /// `tau(b (x) a)`: the override when one is set, otherwise the ladder.
    pub fn apply(&self, b: &Word, a: &Word) -> NCPoly<K> {
        if b.is_unit() || a.is_unit() {
            return NCPoly::word(a.mul(b));
        }
        match self.overrides.get(&(b.clone(), a.clone())) {
            Some(v) => v.clone(),
            None => self.ladder(b, a),
        }
    }
}

/// The unique extension of the generator twist (plus pairing) to
/// `tau(b (x) a)` for a `B` word `b` and an `A` word `a`.
pub fn extend_twist<K: Coeff>(cross: &Cross<K>, b: &Word, a: &Word) -> Result<NCPoly<K>, CrossError> {
    cross.check_word(b, Alphabet::B)?;
    cross.check_word(a, Alphabet::A)?;
    Ok(cross.ladder(b, a))
}

/// Replaces a `y^i x^j` at positions `(pos, pos + 1)` by its generator
/// rewrite in every word that has one there; other words are unchanged.
pub fn apply_generator_twist_at<K: Coeff>(cross: &Cross<K>, pos: usize, p: &NCPoly<K>) -> NCPoly<K> {
    let mut out = NCPoly::zero();
    for (w, c) in p.terms() {
        let ls = w.letters();
        if pos + 1 < ls.len() && ls[pos].is_b() && ls[pos + 1].is_a() {
            out.add_scaled(&rewrite_at(cross, w, pos), c);
        } else {
            out.add_term(w.clone(), c.clone());
        }
    }
    out
}

fn rewrite_at<K: Coeff>(cross: &Cross<K>, w: &Word, pos: usize) -> NCPoly<K> {
    let ls = w.letters();
    let (y, x) = (ls[pos], ls[pos + 1]);
    let mut out = NCPoly::zero();
    for (middle, v) in cross.generator_rule(y.index(), x.index()) {
        let mut letters = Vec::with_capacity(ls.len());
        letters.extend_from_slice(&ls[..pos]);
        if let Some((xk, yl)) = middle {
            letters.push(xk);
            letters.push(yl);
        }
        letters.extend_from_slice(&ls[pos + 2..]);
        out.add_term(Word::new(letters), v);
    }
    out
}

/// Rewrites `p` to a combination of Wick-ordered words using only the
/// generator rule.
///
/// Each step replaces one adjacent `y^i x^j`; the pair `(length, inversions)`
/// strictly decreases, so the process terminates.
pub fn wick_order<K: Coeff>(cross: &Cross<K>, p: &NCPoly<K>, strategy: Strategy) -> NCPoly<K> {
    let mut done = NCPoly::zero();
    let mut pending: BTreeMap<Word, K> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
    while let Some((w, c)) = pending.pop_last() {
        if c.is_zero() {
            continue;
        }
        let ls = w.letters();
        let mut adj = (0..ls.len().saturating_sub(1)).filter(|&i| ls[i].is_b() && ls[i + 1].is_a());
        let pos = match strategy {
            Strategy::Leftmost => adj.next(),
            Strategy::Rightmost => adj.next_back(),
        };
        let Some(pos) = pos else {
            done.add_term(w, c);
            continue;
        };
        let before = (w.len(), w.inversions());
        for (u, v) in rewrite_at(cross, &w, pos).into_terms() {
            debug_assert!((u.len(), u.inversions()) < before);
            let e = pending.entry(u).or_insert_with(K::zero);
            *e = e.clone() + v * c.clone();
        }
    }
    done
}

/// Crossed product of two combinations of Wick-ordered words.
pub fn crossed_mul<K: Coeff>(cross: &Cross<K>, u: &NCPoly<K>, v: &NCPoly<K>) -> Result<NCPoly<K>, CrossError> {
    let split = |p: &NCPoly<K>| -> Result<Vec<(Word, Word, K)>, CrossError> {
        p.terms()
            .map(|(w, c)| {
                let (a, b) = w.split_ordered().ok_or_else(|| CrossError::NotWickOrdered(w.to_string()))?;
                Ok((a, b, c.clone()))
            })
            .collect()
    };
    cross.check_poly(u)?;
    cross.check_poly(v)?;
    let (us, vs) = (split(u)?, split(v)?);
    let mut cache: HashMap<(Word, Word), NCPoly<K>> = HashMap::new();
    let mut out = NCPoly::zero();
    for (a1, b1, c1) in &us {
        for (a2, b2, c2) in &vs {
            let mid = cache
                .entry((b1.clone(), a2.clone()))
                .or_insert_with(|| cross.apply(b1, a2));
            let coeff = c1.clone() * c2.clone();
            for (w, c) in mid.terms() {
                out.add_term(a1.mul(w).mul(b2), c.clone() * coeff.clone());
            }
        }
    }
    Ok(out)
}

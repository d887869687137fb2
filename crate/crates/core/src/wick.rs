//! Hermitian Wick algebras: creators `x^i` (alphabet `A`), annihilators
//! `x*^i` (alphabet `B`) and the relation
//! `x*^i x^j = delta^{ij} + sum_{k,l} t^{ij}_{kl} x^k x*^l`.
//!
//! The star exchanges the alphabets. Applying it to the relation for
//! `x*^i x^j` gives `x*^j x^i = delta^{ij} + sum conj(t^{ij}_{kl}) x^l x*^k`,
//! which must agree with the relation for `x*^j x^i`; comparing coefficients
//! gives the star-cross condition `conj(t^{ij}_{kl}) = t^{ji}_{lk}`.

use std::collections::{BTreeMap, BTreeSet};

use rayon::prelude::*;
use thiserror::Error;

use crate::cross::{verify_associativity, wick_order, Cross, CrossError, CrossReport, Pairing, Strategy, TwistMatrix};
use crate::poly::NCPoly;
use crate::scalar::Coeff;
use crate::word::{mixed_words_of_length, ordered_words, ordered_words_up_to, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum WickError {
    #[error("dimension mismatch: {0}")]
    DimensionMismatch(String),
    #[error("twist is not a star-cross: conj(t^{{{i}{j}}}_{{{k}{l}}}) != t^{{{j}{i}}}_{{{l}{k}}}")]
    NotStarCross { i: usize, j: usize, k: usize, l: usize },
    #[error(transparent)]
    Cross(#[from] CrossError),
}

/// Outcome of the star-cross test with the first failing `(i, j, k, l)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StarCrossReport {
    pub checked: usize,
    pub failure: Option<(usize, usize, usize, usize)>,
}

impl StarCrossReport {
    pub fn pass(&self) -> bool {
        self.failure.is_none()
    }
}

/// `conj(t^{ij}_{kl}) = t^{ji}_{lk}` for all indices.
pub fn check_star_cross<K: Coeff>(t: &TwistMatrix<K>) -> Result<StarCrossReport, WickError> {
    let n = t.dim_a();
    if t.dim_b() != n {
        return Err(WickError::DimensionMismatch(format!(
            "a star-cross needs equal alphabets, got {} and {}",
            t.dim_a(),
            t.dim_b()
        )));
    }
    let mut checked = 0;
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    checked += 1;
                    if t.get(i, j, k, l).conj() != t.get(j, i, l, k) {
                        return Ok(StarCrossReport { checked, failure: Some((i, j, k, l)) });
                    }
                }
            }
        }
    }
    Ok(StarCrossReport { checked, failure: None })
}

/// A twist on `n` generators with the orthonormal pairing.
#[derive(Clone, Debug)]
pub struct WickSpec<K> {
    dim: usize,
    cross: Cross<K>,
}

impl<K: Coeff> WickSpec<K> {
    /// Validates the dimensions and the star-cross condition.
    pub fn new(dim: usize, twist: TwistMatrix<K>) -> Result<Self, WickError> {
        let spec = Self::new_unchecked(dim, twist)?;
        if let Some((i, j, k, l)) = check_star_cross(spec.twist())?.failure {
            return Err(WickError::NotStarCross { i, j, k, l });
        }
        Ok(spec)
    }

    /// Skips the star-cross test; meant for experiments with rules that are
    /// deliberately not Hermitian.
    pub fn new_unchecked(dim: usize, twist: TwistMatrix<K>) -> Result<Self, WickError> {
        if twist.dim_a() != dim || twist.dim_b() != dim {
            return Err(WickError::DimensionMismatch(format!(
                "twist is {}x{} but the algebra has {dim} generators",
                twist.dim_a(),
                twist.dim_b()
            )));
        }
        let cross = Cross::with_pairing(twist, Pairing::orthonormal(dim))?;
        Ok(Self { dim, cross })
    }

    /// `t^{ij}_{kl} = q delta^i_l delta^j_k`.
    pub fn q_ccr(dim: usize, q: K) -> Result<Self, WickError> {
        Self::new(dim, TwistMatrix::q_cross(dim, dim, q))
    }

    /// `t = -switch`.
    pub fn car(dim: usize) -> Result<Self, WickError> {
        Self::new(dim, TwistMatrix::graded(dim, dim))
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn twist(&self) -> &TwistMatrix<K> {
        self.cross.twist()
    }

    pub fn cross(&self) -> &Cross<K> {
        &self.cross
    }
}

/// Rewrites `p` with creators left of annihilators.
pub fn normal_order<K: Coeff>(spec: &WickSpec<K>, p: &NCPoly<K>) -> NCPoly<K> {
    wick_order(&spec.cross, p, Strategy::Rightmost)
}

/// Number of distinct Wick-ordered words seen at bidegree
/// `(creators, annihilators)` against the `n^k n^l` available.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Census {
    pub creators: usize,
    pub annihilators: usize,
    pub observed: usize,
    pub available: usize,
}

#[derive(Clone, Debug)]
pub struct WickBasisReport<K> {
    pub degree: usize,
    pub words_checked: usize,
    /// Mixed words on which the two rewriting strategies disagree.
    pub strategy_failures: Vec<Word>,
    /// Basis pairs whose product left the span of Wick-ordered words or
    /// produced a word outside the enumerated basis.
    pub closure_failures: Vec<(Word, Word)>,
    pub census: Vec<Census>,
    pub associativity: CrossReport<K>,
}

impl<K> WickBasisReport<K> {
    pub fn pass(&self) -> bool {
        self.strategy_failures.is_empty()
            && self.closure_failures.is_empty()
            && self.census.iter().all(|c| c.observed <= c.available)
            && self.associativity.pass()
    }
}

/// Checks that Wick-ordered words behave as a basis up to degree `d`:
/// strategy independence on every mixed word, closure of products of basis
/// words, and associativity of the induced crossed product.
pub fn check_wick_basis<K: Coeff>(spec: &WickSpec<K>, d: usize) -> WickBasisReport<K> {
    let n = spec.dim;
    let cross = &spec.cross;
    let words: Vec<Word> = (0..=d).flat_map(|len| mixed_words_of_length(n, n, len)).collect();
    let strategy_failures: Vec<Word> = words
        .par_iter()
        .filter(|w| {
            let p = NCPoly::word((*w).clone());
            let left = wick_order(cross, &p, Strategy::Leftmost);
            let right = wick_order(cross, &p, Strategy::Rightmost);
            left != right || !left.is_wick_ordered()
        })
        .cloned()
        .collect();

    let basis = ordered_words_up_to(n, n, d);
    let known: BTreeSet<&Word> = basis.iter().collect();
    let mut pairs = Vec::new();
    for u in &basis {
        for v in &basis {
            if u.len() + v.len() <= d {
                pairs.push((u.clone(), v.clone()));
            }
        }
    }
    let results: Vec<(Word, Word, Option<NCPoly<K>>)> = pairs
        .into_par_iter()
        .map(|(u, v)| {
            let p = normal_order(spec, &NCPoly::word(u.mul(&v)));
            let ok = p.is_wick_ordered() && p.words().all(|w| known.contains(w));
            (u, v, ok.then_some(p))
        })
        .collect();
    let mut closure_failures = Vec::new();
    let mut seen: BTreeMap<(usize, usize), BTreeSet<Word>> = BTreeMap::new();
    for (u, v, p) in results {
        match p {
            None => closure_failures.push((u, v)),
            Some(p) => {
                for w in p.words() {
                    let key = (w.count(crate::Alphabet::A), w.count(crate::Alphabet::B));
                    seen.entry(key).or_default().insert(w.clone());
                }
            }
        }
    }
    let mut census = Vec::new();
    for total in 0..=d {
        for l in 0..=total {
            let k = total - l;
            census.push(Census {
                creators: k,
                annihilators: l,
                observed: seen.get(&(k, l)).map_or(0, BTreeSet::len),
                available: ordered_words(n, n, l, k).len(),
            });
        }
    }

    WickBasisReport {
        degree: d,
        words_checked: words.len(),
        strategy_failures,
        closure_failures,
        census,
        associativity: verify_associativity(cross, d),
    }
}

/// `[k]_q = 1 + q + ... + q^{k-1}`.
pub fn q_integer<K: Coeff>(q: &K, k: usize) -> K {
    let mut acc = K::zero();
    let mut pow = K::one();
    for _ in 0..k {
        acc = acc + pow.clone();
        pow = pow * q.clone();
    }
    acc
}

/// `[n]_q! = [1]_q [2]_q ... [n]_q`.
pub fn q_factorial<K: Coeff>(q: &K, n: usize) -> K {
    (1..=n).fold(K::one(), |acc, k| acc * q_integer(q, k))
}

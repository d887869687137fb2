//! The Fock representation on `TE`: `x^i` acts by left multiplication,
//! `x*^i` by the annihilation recursion, with `<0|0> = 1` and `a_i|0> = 0`.

use std::cmp::Ordering;
use std::collections::HashMap;

use rayon::prelude::*;
use thiserror::Error;

use crate::linalg::Matrix;
use crate::poly::NCPoly;
use crate::scalar::Coeff;
use crate::wick::WickSpec;
use crate::word::{words_of_length, Alphabet, Letter, Word};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum FockError {
    #[error("generator index {index} out of range 1..={dim}")]
    IndexOutOfRange { index: usize, dim: usize },
    #[error("`{0}` is not a Fock vector: only creator letters are allowed")]
    NotFockVector(String),
    #[error("matrix is not Hermitian at ({row}, {col})")]
    NotHermitian { row: usize, col: usize },
}

/// A finite combination of creator words; the empty word is the vacuum.
#[derive(Clone, Debug, PartialEq)]
pub struct FockVector<K> {
    poly: NCPoly<K>,
}

impl<K: Coeff> Default for FockVector<K> {
    fn default() -> Self {
        Self::zero()
    }
}

impl<K: Coeff> FockVector<K> {
    pub fn zero() -> Self {
        Self { poly: NCPoly::zero() }
    }

    pub fn vacuum() -> Self {
        Self { poly: NCPoly::one() }
    }

    pub fn word(w: Word) -> Result<Self, FockError> {
        Self::from_poly(NCPoly::word(w))
    }

    pub fn from_poly(poly: NCPoly<K>) -> Result<Self, FockError> {
        if let Some(w) = poly.words().find(|w| !w.is_over(Alphabet::A)) {
            return Err(FockError::NotFockVector(w.to_string()));
        }
        Ok(Self { poly })
    }

    pub fn as_poly(&self) -> &NCPoly<K> {
        &self.poly
    }

    pub fn into_poly(self) -> NCPoly<K> {
        self.poly
    }

    pub fn is_zero(&self) -> bool {
        self.poly.is_zero()
    }

    pub fn coeff(&self, w: &Word) -> K {
        self.poly.coeff(w)
    }

    pub fn vacuum_coeff(&self) -> K {
        self.poly.coeff(&Word::unit())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &K)> {
        self.poly.terms()
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { poly: &self.poly + &other.poly }
    }

    pub fn scale(&self, c: &K) -> Self {
        Self { poly: self.poly.scale(c) }
    }
}

fn check_index<K: Coeff>(spec: &WickSpec<K>, i: usize) -> Result<(), FockError> {
    if i == 0 || i > spec.dim() {
        return Err(FockError::IndexOutOfRange { index: i, dim: spec.dim() });
    }
    Ok(())
}

fn check_vector<K: Coeff>(spec: &WickSpec<K>, v: &FockVector<K>) -> Result<(), FockError> {
    v.terms()
        .flat_map(|(w, _)| w.letters().iter())
        .try_for_each(|l| check_index(spec, l.index()))
}

/// `a_i^+ v`: prepends `x^i` to every word.
pub fn apply_creation<K: Coeff>(spec: &WickSpec<K>, i: usize, v: &FockVector<K>) -> Result<FockVector<K>, FockError> {
    check_index(spec, i)?;
    check_vector(spec, v)?;
    let head = Word::from_letter(Letter::a(i));
    Ok(FockVector { poly: NCPoly::from_terms(v.terms().map(|(w, c)| (head.mul(w), c.clone()))) })
}

/// `a_i v` with `a_i |0> = 0` and
/// `a_i (x^j w) = delta^{ij} w + sum_{k,l} t^{ij}_{kl} x^k (a_l w)`.
pub fn apply_annihilation<K: Coeff>(spec: &WickSpec<K>, i: usize, v: &FockVector<K>) -> Result<FockVector<K>, FockError> {
    check_index(spec, i)?;
    check_vector(spec, v)?;
    let mut memo = HashMap::new();
    let mut out = NCPoly::zero();
    for (w, c) in v.terms() {
        out.add_scaled(&annihilate_word(spec, i, w.letters(), &mut memo), c);
    }
    Ok(FockVector { poly: out })
}

fn annihilate_word<K: Coeff>(
    spec: &WickSpec<K>,
    i: usize,
    letters: &[Letter],
    memo: &mut HashMap<(usize, Vec<Letter>), NCPoly<K>>,
) -> NCPoly<K> {
    let Some((&first, rest)) = letters.split_first() else { return NCPoly::zero() };
    if let Some(p) = memo.get(&(i, letters.to_vec())) {
        return p.clone();
    }
    let j = first.index();
    let mut out = NCPoly::zero();
    if i == j {
        out.add_term(Word::new(rest.to_vec()), K::one());
    }
    let rule: Vec<(usize, usize, K)> = spec.twist().rule(i, j).map(|(k, l, v)| (k, l, v.clone())).collect();
    for (k, l, t) in rule {
        let inner = annihilate_word(spec, l, rest, memo);
        let head = Word::from_letter(Letter::a(k));
        for (w, c) in inner.terms() {
            out.add_term(head.mul(w), c.clone() * t.clone());
        }
    }
    memo.insert((i, letters.to_vec()), out.clone());
    out
}

/// Inner products of the degree-`degree` word basis.
#[derive(Clone, Debug, PartialEq)]
pub struct GramMatrix<K> {
    pub degree: usize,
    pub basis: Vec<Word>,
    pub entries: Matrix<K>,
}

impl<K: Coeff> GramMatrix<K> {
    pub fn size(&self) -> usize {
        self.basis.len()
    }

    pub fn get(&self, u: usize, v: usize) -> &K {
        self.entries.get(u, v)
    }

    pub fn index_of(&self, w: &Word) -> Option<usize> {
        self.basis.binary_search(w).ok()
    }

    /// `<f|g>`, antilinear in `f`, for vectors supported on the basis.
    pub fn inner(&self, f: &FockVector<K>, g: &FockVector<K>) -> Option<K> {
        let mut acc = K::zero();
        for (u, cu) in f.terms() {
            let iu = self.index_of(u)?;
            for (v, cv) in g.terms() {
                let iv = self.index_of(v)?;
                acc = acc + cu.conj() * self.get(iu, iv).clone() * cv.clone();
            }
        }
        Some(acc)
    }
}

/// `<u|v> = <0| a_{u_k} ... a_{u_1} |v>`: annihilators are applied to `v`
/// starting with `u`'s first letter.
pub fn inner_words<K: Coeff>(spec: &WickSpec<K>, u: &Word, v: &Word, memo: &mut HashMap<(usize, Vec<Letter>), NCPoly<K>>) -> K {
    if u.len() != v.len() {
        return K::zero();
    }
    let mut current = NCPoly::word(v.clone());
    for l in u.letters() {
        let mut next = NCPoly::zero();
        for (w, c) in current.terms() {
            next.add_scaled(&annihilate_word(spec, l.index(), w.letters(), memo), c);
        }
        current = next;
    }
    current.coeff(&Word::unit())
}

pub fn gram_matrix<K: Coeff>(spec: &WickSpec<K>, degree: usize) -> GramMatrix<K> {
    let basis = words_of_length(Alphabet::A, spec.dim(), degree);
    let rows: Vec<Vec<K>> = basis
        .par_iter()
        .map(|u| {
            let mut memo = HashMap::new();
            basis.iter().map(|v| inner_words(spec, u, v, &mut memo)).collect()
        })
        .collect();
    GramMatrix { degree, basis, entries: Matrix::from_rows(rows) }
}

#[derive(Clone, Debug, PartialEq)]
pub struct PsdReport<K> {
    pub psd: bool,
    /// `size - pivots` when the matrix is PSD.
    pub kernel_dim: Option<usize>,
    pub pivots: Vec<K>,
    /// A vector of negative norm when the matrix is not PSD.
    pub witness: Option<FockVector<K>>,
    pub witness_norm: Option<K>,
}

/// Exact certification by symmetric elimination.
///
/// Rows are tracked as combinations `c_i` of basis vectors so that the
/// working matrix is always `<c_i|c_j>`. Pivots are taken on strictly
/// positive diagonal entries; a negative diagonal entry, or a zero diagonal
/// entry with a nonzero off-diagonal partner, yields a negative-norm vector.
pub fn check_psd<K: Coeff>(g: &GramMatrix<K>) -> Result<PsdReport<K>, FockError> {
    let n = g.size();
    let mut m = g.entries.to_rows();
    for r in 0..n {
        for c in r..n {
            if m[r][c] != m[c][r].conj() {
                return Err(FockError::NotHermitian { row: r, col: c });
            }
        }
    }
    let mut comb: Vec<Vec<K>> = (0..n)
        .map(|i| (0..n).map(|j| if i == j { K::one() } else { K::zero() }).collect())
        .collect();
    let mut active: Vec<bool> = vec![true; n];
    let mut pivots = Vec::new();
    let to_vector = |c: &[K]| {
        let mut p = NCPoly::zero();
        for (w, v) in g.basis.iter().zip(c) {
            p.add_term(w.clone(), v.clone());
        }
        FockVector { poly: p }
    };
    let fail = |c: Vec<K>, norm: K, pivots: Vec<K>| {
        Ok(PsdReport { psd: false, kernel_dim: None, pivots, witness: Some(to_vector(&c)), witness_norm: Some(norm) })
    };
    loop {
        let live: Vec<usize> = (0..n).filter(|&i| active[i]).collect();
        if let Some(&i) = live.iter().find(|&&i| m[i][i].real_sign() == Some(Ordering::Less)) {
            return fail(comb[i].clone(), m[i][i].clone(), pivots);
        }
        let Some(&p) = live.iter().find(|&&i| m[i][i].real_sign() == Some(Ordering::Greater)) else {
            // every live diagonal entry is zero
            for &i in &live {
                for &j in &live {
                    if i != j && !m[i][j].is_zero() {
                        let z = m[i][j].clone();
                        let c: Vec<K> = comb[i]
                            .iter()
                            .zip(&comb[j])
                            .map(|(a, b)| a.clone() - z.conj() * b.clone())
                            .collect();
                        let norm = -(z.conj() * z.clone() + z.conj() * z);
                        return fail(c, norm, pivots);
                    }
                }
            }
            return Ok(PsdReport {
                psd: true,
                kernel_dim: Some(n - pivots.len()),
                pivots,
                witness: None,
                witness_norm: None,
            });
        };
        let inv = m[p][p].inv().expect("positive pivot");
        for &i in &live {
            if i == p || m[p][i].is_zero() {
                continue;
            }
            let f = m[p][i].clone() * inv.clone();
            let cp = comb[p].clone();
            for (a, b) in comb[i].iter_mut().zip(&cp) {
                *a = a.clone() - f.clone() * b.clone();
            }
        }
        let snapshot = m.clone();
        for &i in &live {
            for &j in &live {
                if i == p || j == p {
                    continue;
                }
                let v = snapshot[i][p].clone() * snapshot[p][j].clone() * inv.clone();
                m[i][j] = snapshot[i][j].clone() - v;
            }
        }
        pivots.push(m[p][p].clone());
        active[p] = false;
    }
}

/// One failing instance of `<a_i u|v> = <u|a_i^+ v>`.
#[derive(Clone, Debug, PartialEq)]
pub struct AdjointWitness<K> {
    pub generator: usize,
    pub u: Word,
    pub v: Word,
    pub lhs: K,
    pub rhs: K,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AdjointReport<K> {
    pub degree: usize,
    pub checked: usize,
    pub failures: Vec<AdjointWitness<K>>,
}

impl<K> AdjointReport<K> {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// `<a_i u|v> = <u|a_i^+ v>` for every generator, every word `u` of length
/// `k` and `v` of length `k - 1`, `1 <= k <= d`, with both sides read off
/// the Gram matrices.
pub fn check_adjointness<K: Coeff>(spec: &WickSpec<K>, d: usize) -> AdjointReport<K> {
    let grams: Vec<GramMatrix<K>> = (0..=d).map(|k| gram_matrix(spec, k)).collect();
    let mut report = AdjointReport { degree: d, checked: 0, failures: Vec::new() };
    for k in 1..=d {
        let (lower, upper) = (&grams[k - 1], &grams[k]);
        for i in 1..=spec.dim() {
            for (iu, u) in upper.basis.iter().enumerate() {
                let au = apply_annihilation(spec, i, &FockVector { poly: NCPoly::word(u.clone()) })
                    .expect("indices in range");
                for (iv, v) in lower.basis.iter().enumerate() {
                    report.checked += 1;
                    let mut lhs = K::zero();
                    for (w, c) in au.terms() {
                        let iw = lower.index_of(w).expect("annihilation lowers degree by one");
                        lhs = lhs + c.conj() * lower.get(iw, iv).clone();
                    }
                    let xv = Word::from_letter(Letter::a(i)).mul(v);
                    let rhs = upper.get(iu, upper.index_of(&xv).expect("basis word")).clone();
                    if lhs != rhs {
                        report.failures.push(AdjointWitness { generator: i, u: u.clone(), v: v.clone(), lhs, rhs });
                    }
                }
            }
        }
    }
    report
}

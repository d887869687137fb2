//! Exact linear algebra: small dense matrices and sparse row echelon forms
//! over words.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_traits::Zero;

use crate::poly::NCPoly;
use crate::scalar::Coeff;
use crate::word::{Alphabet, Word};

#[derive(Clone, PartialEq, Debug)]
pub struct Matrix<K> {
    rows: usize,
    cols: usize,
    data: Vec<K>,
}

impl<K: Coeff> Matrix<K> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Self { rows, cols, data: vec![K::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, K::one());
        }
        m
    }

    /// Panics if the rows are ragged.
    pub fn from_rows(rows: Vec<Vec<K>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        assert!(rows.iter().all(|row| row.len() == c), "ragged matrix rows");
        Self { rows: r, cols: c, data: rows.into_iter().flatten().collect() }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, r: usize, c: usize) -> &K {
        &self.data[r * self.cols + c]
    }

    pub fn set(&mut self, r: usize, c: usize, v: K) {
        self.data[r * self.cols + c] = v;
    }

    pub fn row(&self, r: usize) -> &[K] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn to_rows(&self) -> Vec<Vec<K>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn scale(&self, c: &K) -> Self {
        Self {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().map(|v| v.clone() * c.clone()).collect(),
        }
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).clone());
            }
        }
        t
    }

    pub fn conj_transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for r in 0..self.rows {
            for c in 0..self.cols {
                t.set(c, r, self.get(r, c).conj());
            }
        }
        t
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square() && *self == self.conj_transpose()
    }

    /// Matrix product; panics on a shape mismatch.
    pub fn matmul(&self, rhs: &Self) -> Self {
        assert_eq!(self.cols, rhs.rows, "matrix shape mismatch");
        let mut out = Self::zeros(self.rows, rhs.cols);
        for r in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(r, k);
                if a.is_zero() {
                    continue;
                }
                for c in 0..rhs.cols {
                    let b = rhs.get(k, c);
                    if b.is_zero() {
                        continue;
                    }
                    let idx = r * out.cols + c;
                    out.data[idx] = out.data[idx].clone() + a.clone() * b.clone();
                }
            }
        }
        out
    }

    /// Kronecker product; row and column indices of `self` are the major digit.
    pub fn kron(&self, rhs: &Self) -> Self {
        let mut out = Self::zeros(self.rows * rhs.rows, self.cols * rhs.cols);
        for r1 in 0..self.rows {
            for c1 in 0..self.cols {
                let a = self.get(r1, c1);
                if a.is_zero() {
                    continue;
                }
                for r2 in 0..rhs.rows {
                    for c2 in 0..rhs.cols {
                        let b = rhs.get(r2, c2);
                        if !b.is_zero() {
                            out.set(r1 * rhs.rows + r2, c1 * rhs.cols + c2, a.clone() * b.clone());
                        }
                    }
                }
            }
        }
        out
    }

    pub fn map<F: FnMut(&K) -> K>(&self, f: F) -> Self {
        Self { rows: self.rows, cols: self.cols, data: self.data.iter().map(f).collect() }
    }
}

impl<K: Coeff> Add for &Matrix<K> {
    type Output = Matrix<K>;
    fn add(self, rhs: Self) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() + b.clone()).collect(),
        }
    }
}

impl<K: Coeff> Sub for &Matrix<K> {
    type Output = Matrix<K>;
    fn sub(self, rhs: Self) -> Matrix<K> {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols), "matrix shape mismatch");
        Matrix {
            rows: self.rows,
            cols: self.cols,
            data: self.data.iter().zip(&rhs.data).map(|(a, b)| a.clone() - b.clone()).collect(),
        }
    }
}

impl<K: Coeff> Mul for &Matrix<K> {
    type Output = Matrix<K>;
    fn mul(self, rhs: Self) -> Matrix<K> {
        self.matmul(rhs)
    }
}

impl<K: Coeff> fmt::Display for Matrix<K> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for r in 0..self.rows {
            let row: Vec<String> = self.row(r).iter().map(ToString::to_string).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

/// A monomial order: length first, then lexicographic over a declared
/// ranking of the generators of each alphabet.
///
/// The natural order ranks generator `i` as `i` and coincides with `Word`'s
/// own `Ord`.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct WordOrder {
    rank_a: Vec<usize>,
    rank_b: Vec<usize>,
}

impl WordOrder {
    pub fn natural() -> Self {
        Self::default()
    }

    /// `sequence` lists the generators of `alphabet` from smallest to largest.
    pub fn with_sequence(mut self, alphabet: Alphabet, sequence: &[usize]) -> Self {
        let mut rank = vec![0; sequence.len() + 1];
        for (pos, &g) in sequence.iter().enumerate() {
            rank[g] = pos + 1;
        }
        match alphabet {
            Alphabet::A => self.rank_a = rank,
            Alphabet::B => self.rank_b = rank,
        }
        self
    }

    /// Generators of `alphabet` from smallest to largest.
    pub fn sequence(&self, alphabet: Alphabet, dim: usize) -> Vec<usize> {
        let mut gens: Vec<usize> = (1..=dim).collect();
        gens.sort_by_key(|&g| self.rank(alphabet, g));
        gens
    }

    fn rank(&self, alphabet: Alphabet, index: usize) -> usize {
        let table = match alphabet {
            Alphabet::A => &self.rank_a,
            Alphabet::B => &self.rank_b,
        };
        table.get(index).copied().filter(|&r| r > 0).unwrap_or(index)
    }

    pub fn cmp(&self, u: &Word, v: &Word) -> Ordering {
        u.len().cmp(&v.len()).then_with(|| {
            for (a, b) in u.letters().iter().zip(v.letters()) {
                let ka = (self.rank(a.alphabet(), a.index()), a.alphabet());
                let kb = (self.rank(b.alphabet(), b.index()), b.alphabet());
                match ka.cmp(&kb) {
                    Ordering::Equal => continue,
                    other => return other,
                }
            }
            Ordering::Equal
        })
    }

    pub fn leading<'a, K: Coeff>(&self, p: &'a NCPoly<K>) -> Option<(&'a Word, &'a K)> {
        p.terms().max_by(|(u, _), (v, _)| self.cmp(u, v))
    }
}

/// Row echelon basis of a subspace of polynomials.
///
/// Each stored row has leading coefficient 1 and a distinct leading word;
/// membership is decided by exact reduction against the rows.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    order: WordOrder,
    rows: BTreeMap<Word, NCPoly<K>>,
}

impl<K: Coeff> Echelon<K> {
    pub fn new(order: WordOrder) -> Self {
        Self { order, rows: BTreeMap::new() }
    }

    pub fn from_polys<'a, I>(order: WordOrder, polys: I) -> Self
    where
        I: IntoIterator<Item = &'a NCPoly<K>>,
        K: 'a,
    {
        let mut e = Self::new(order);
        for p in polys {
            e.insert(p);
        }
        e
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    pub fn order(&self) -> &WordOrder {
        &self.order
    }

    pub fn rows(&self) -> impl Iterator<Item = (&Word, &NCPoly<K>)> {
        self.rows.iter()
    }

    pub fn is_leading(&self, word: &Word) -> bool {
        self.rows.contains_key(word)
    }

    /// Remainder of `p` modulo the span; zero iff `p` is in the span.
    pub fn reduce(&self, p: &NCPoly<K>) -> NCPoly<K> {
        let mut rem = p.clone();
        loop {
            let pivot = rem
                .terms()
                .filter(|(w, _)| self.rows.contains_key(*w))
                .max_by(|(u, _), (v, _)| self.order.cmp(u, v))
                .map(|(w, c)| (w.clone(), c.clone()));
            let Some((w, c)) = pivot else { return rem };
            rem.add_scaled(&self.rows[&w], &-c);
        }
    }

    pub fn contains(&self, p: &NCPoly<K>) -> bool {
        self.reduce(p).is_zero()
    }

    /// Adds `p` to the span; returns false if it was already contained.
    pub fn insert(&mut self, p: &NCPoly<K>) -> bool {
        let rem = self.reduce(p);
        let Some((lead, c)) = self.order.leading(&rem) else { return false };
        let lead = lead.clone();
        let inv = c.inv().expect("nonzero leading coefficient");
        self.rows.insert(lead, rem.scale(&inv));
        true
    }

    /// Inter-reduces the rows so no row mentions another row's leading word.
    pub fn into_reduced(self) -> Self {
        let mut leads: Vec<Word> = self.rows.keys().cloned().collect();
        leads.sort_by(|u, v| self.order.cmp(u, v));
        let mut done = Self::new(self.order.clone());
        for lead in leads {
            let row = &self.rows[&lead];
            let mut tail = row.clone();
            tail.add_term(lead.clone(), -K::one());
            let tail = done.reduce(&tail);
            let mut reduced = tail;
            reduced.add_term(lead.clone(), K::one());
            // earlier rows cannot mention `lead`: it is larger than their leaders
            done.rows.insert(lead, reduced);
        }
        done
    }
}

/// Rank of a dense matrix by exact elimination.
pub fn rank<K: Coeff>(m: &Matrix<K>) -> usize {
    let mut a = m.to_rows();
    let (rows, cols) = (m.rows(), m.cols());
    let mut rank = 0;
    for col in 0..cols {
        let Some(p) = (rank..rows).find(|&r| !a[r][col].is_zero()) else { continue };
        a.swap(rank, p);
        let inv = a[rank][col].inv().expect("nonzero pivot");
        for r in 0..rows {
            if r != rank && !a[r][col].is_zero() {
                let f = a[r][col].clone() * inv.clone();
                for c in col..cols {
                    let v = a[rank][c].clone() * f.clone();
                    a[r][c] = a[r][c].clone() - v;
                }
            }
        }
        rank += 1;
    }
    rank
}

/// `true` iff every entry of `m` is one or zero and it is the identity.
pub fn is_identity<K: Coeff>(m: &Matrix<K>) -> bool {
    m.is_square()
        && (0..m.rows()).all(|r| (0..m.cols()).all(|c| {
            let v = m.get(r, c);
            if r == c { v.is_one() } else { v.is_zero() }
        }))
}

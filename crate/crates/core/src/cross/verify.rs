//! Exhaustive checks of the cross axioms on bounded degrees.

use rayon::prelude::*;

use crate::cross::{crossed_mul, Cross, CrossError};
use crate::linalg::Matrix;
use crate::poly::NCPoly;
use crate::scalar::Coeff;
use crate::word::{ordered_words_up_to, words_of_length, Alphabet, Word};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CrossIdentity {
    /// `tau(1 (x) a) = a (x) 1`
    LeftUnit,
    /// `tau(b (x) 1) = 1 (x) b`
    RightUnit,
    /// `tau(b1 b2 (x) a)` equals pushing `b2` and then `b1`
    MultiplicativeInB,
    /// `tau(b (x) a1 a2)` equals pushing through `a1` and then `a2`
    MultiplicativeInA,
    Associativity,
    /// `tau_{k,l+m} = (I (x) tau_{k,m}) (tau_{k,l} (x) I)`
    HexagonA,
    /// `tau_{k+l,m} = (tau_{k,m} (x) I) (I (x) tau_{l,m})`
    HexagonB,
}

impl CrossIdentity {
    pub fn name(self) -> &'static str {
        match self {
            CrossIdentity::LeftUnit => "left-unit",
            CrossIdentity::RightUnit => "right-unit",
            CrossIdentity::MultiplicativeInB => "multiplicative-in-b",
            CrossIdentity::MultiplicativeInA => "multiplicative-in-a",
            CrossIdentity::Associativity => "associativity",
            CrossIdentity::HexagonA => "hexagon-a",
            CrossIdentity::HexagonB => "hexagon-b",
        }
    }
}

/// A failing instance: the identity, the basis elements it was evaluated on
/// and the two sides.
#[derive(Clone, Debug, PartialEq)]
pub struct Violation<K> {
    pub identity: CrossIdentity,
    pub witness: Vec<Word>,
    pub lhs: NCPoly<K>,
    pub rhs: NCPoly<K>,
}

#[derive(Clone, Debug)]
pub struct CrossReport<K> {
    pub degree: usize,
    pub checked: usize,
    /// Instances evaluated per identity, in evaluation order.
    pub counts: Vec<(CrossIdentity, usize)>,
    pub violations: Vec<Violation<K>>,
}

impl<K> CrossReport<K> {
    pub fn pass(&self) -> bool {
        self.violations.is_empty()
    }

    pub fn failing(&self, identity: CrossIdentity) -> impl Iterator<Item = &Violation<K>> {
        self.violations.iter().filter(move |v| v.identity == identity)
    }

    /// Number of instances of `identity` that were evaluated.
    pub fn checked_for(&self, identity: CrossIdentity) -> usize {
        self.counts.iter().filter(|(i, _)| *i == identity).map(|(_, n)| n).sum()
    }

    fn empty(degree: usize) -> Self {
        Self { degree, checked: 0, counts: Vec::new(), violations: Vec::new() }
    }

    fn count(&mut self, identity: CrossIdentity) {
        self.checked += 1;
        match self.counts.iter_mut().find(|(i, _)| *i == identity) {
            Some((_, n)) => *n += 1,
            None => self.counts.push((identity, 1)),
        }
    }

    /// Violations stay sorted by identity name, in evaluation order within
    /// one identity.
    fn merge(&mut self, other: CrossReport<K>) {
        self.checked += other.checked;
        self.counts.extend(other.counts);
        self.violations.extend(other.violations);
        self.violations.sort_by_key(|v| v.identity.name());
    }
}

fn run<K, T, F>(identity: CrossIdentity, cases: Vec<T>, degree: usize, f: F) -> CrossReport<K>
where
    K: Coeff,
    T: Send + Sync,
    F: Fn(&T) -> (Vec<Word>, NCPoly<K>, NCPoly<K>) + Sync,
{
    let checked = cases.len();
    let violations = cases
        .par_iter()
        .filter_map(|case| {
            let (witness, lhs, rhs) = f(case);
            (lhs != rhs).then_some(Violation { identity, witness, lhs, rhs })
        })
        .collect();
    CrossReport { degree, checked, counts: vec![(identity, checked)], violations }
}

/// Nonempty words over one alphabet with lengths in `1..=max`.
fn nonempty(alphabet: Alphabet, dim: usize, max: usize) -> Vec<Word> {
    (1..=max).flat_map(|l| words_of_length(alphabet, dim, l)).collect()
}

/// The unit and multiplicativity axioms of a cross on every basis triple of
/// total degree at most `d`.
pub fn verify_cross_axioms<K: Coeff>(cross: &Cross<K>, d: usize) -> CrossReport<K> {
    let (m, n) = (cross.dim_a(), cross.dim_b());
    let a_words = nonempty(Alphabet::A, m, d);
    let b_words = nonempty(Alphabet::B, n, d);

    let mut report = run(CrossIdentity::LeftUnit, a_words.clone(), d, |a: &Word| {
        (vec![Word::unit(), a.clone()], cross.apply(&Word::unit(), a), NCPoly::word(a.clone()))
    });
    report.merge(run(CrossIdentity::RightUnit, b_words.clone(), d, |b: &Word| {
        (vec![b.clone(), Word::unit()], cross.apply(b, &Word::unit()), NCPoly::word(b.clone()))
    }));

    let mut triples_b = Vec::new();
    let mut triples_a = Vec::new();
    for first in 1..=d {
        for second in 1..=d - first {
            for third in 1..=d.saturating_sub(first + second) {
                for b1 in words_of_length(Alphabet::B, n, first) {
                    for b2 in words_of_length(Alphabet::B, n, second) {
                        for a in words_of_length(Alphabet::A, m, third) {
                            triples_b.push((b1.clone(), b2.clone(), a));
                        }
                    }
                }
                for b in words_of_length(Alphabet::B, n, first) {
                    for a1 in words_of_length(Alphabet::A, m, second) {
                        for a2 in words_of_length(Alphabet::A, m, third) {
                            triples_a.push((b.clone(), a1.clone(), a2));
                        }
                    }
                }
            }
        }
    }

    report.merge(run(CrossIdentity::MultiplicativeInB, triples_b, d, |(b1, b2, a)| {
        let lhs = cross.apply(&b1.mul(b2), a);
        let mut rhs = NCPoly::zero();
        for (w, c) in cross.apply(b2, a).terms() {
            let (alpha, beta) = w.split_ordered().expect("ordered value");
            for (u, v) in cross.apply(b1, &alpha).terms() {
                rhs.add_term(u.mul(&beta), v.clone() * c.clone());
            }
        }
        (vec![b1.clone(), b2.clone(), a.clone()], lhs, rhs)
    }));
    report.merge(run(CrossIdentity::MultiplicativeInA, triples_a, d, |(b, a1, a2)| {
        let lhs = cross.apply(b, &a1.mul(a2));
        let mut rhs = NCPoly::zero();
        for (w, c) in cross.apply(b, a1).terms() {
            let (alpha, beta) = w.split_ordered().expect("ordered value");
            for (u, v) in cross.apply(&beta, a2).terms() {
                rhs.add_term(alpha.mul(u), v.clone() * c.clone());
            }
        }
        (vec![b.clone(), a1.clone(), a2.clone()], lhs, rhs)
    }));
    report
}

/// `(u v) w = u (v w)` for Wick-ordered basis words of total degree at most
/// `d`, each of positive length.
pub fn verify_associativity<K: Coeff>(cross: &Cross<K>, d: usize) -> CrossReport<K> {
    let by_len: Vec<Vec<Word>> = {
        let all = ordered_words_up_to(cross.dim_a(), cross.dim_b(), d);
        (0..=d).map(|l| all.iter().filter(|w| w.len() == l).cloned().collect()).collect()
    };
    let mut triples = Vec::new();
    for i in 1..=d {
        for j in 1..=d - i {
            for k in 1..=d.saturating_sub(i + j) {
                for u in &by_len[i] {
                    for v in &by_len[j] {
                        for w in &by_len[k] {
                            triples.push((u.clone(), v.clone(), w.clone()));
                        }
                    }
                }
            }
        }
    }
    run(CrossIdentity::Associativity, triples, d, |(u, v, w)| {
        let (pu, pv, pw) = (NCPoly::word(u.clone()), NCPoly::word(v.clone()), NCPoly::word(w.clone()));
        let lhs = crossed_mul(cross, &crossed_mul(cross, &pu, &pv).unwrap(), &pw).unwrap();
        let rhs = crossed_mul(cross, &pu, &crossed_mul(cross, &pv, &pw).unwrap()).unwrap();
        (vec![u.clone(), v.clone(), w.clone()], lhs, rhs)
    })
}

/// Position of a single-alphabet word in the tensor power basis, first
/// letter most significant.
pub fn basis_index(w: &Word, dim: usize) -> usize {
    w.letters().iter().fold(0, |acc, l| acc * dim + (l.index() - 1))
}

/// `tau_{k,l}` as a dense operator `F^k (x) E^l -> E^l (x) F^k` built from
/// [`Cross::apply`] on basis words.
pub fn materialize<K: Coeff>(cross: &Cross<K>, k: usize, l: usize) -> Result<Matrix<K>, CrossError> {
    if !cross.is_homogeneous() {
        return Err(CrossError::NotHomogeneous);
    }
    let (m, n) = (cross.dim_a(), cross.dim_b());
    let (fk, el) = (n.pow(k as u32), m.pow(l as u32));
    let mut t = Matrix::zeros(el * fk, fk * el);
    for b in words_of_length(Alphabet::B, n, k) {
        for a in words_of_length(Alphabet::A, m, l) {
            let col = basis_index(&b, n) * el + basis_index(&a, m);
            for (w, c) in cross.apply(&b, &a).terms() {
                let (alpha, beta) = w.split_ordered().expect("ordered value");
                if alpha.len() != l || beta.len() != k {
                    return Err(CrossError::NotHomogeneous);
                }
                let row = basis_index(&alpha, m) * fk + basis_index(&beta, n);
                t.set(row, col, c.clone());
            }
        }
    }
    Ok(t)
}

/// Braid-type compatibility of the materialized operators `tau_{k,l}` for
/// all `k, l, m >= 1` with `k + l + m <= d`.
///
/// This route never calls the crossed product: it compares dense operators
/// assembled from Kronecker products with identities.
pub fn verify_hexagon<K: Coeff>(cross: &Cross<K>, d: usize) -> Result<CrossReport<K>, CrossError> {
    let (m, n) = (cross.dim_a(), cross.dim_b());
    let mut cache = std::collections::HashMap::new();
    let mut get = |k: usize, l: usize| -> Result<Matrix<K>, CrossError> {
        if let Some(t) = cache.get(&(k, l)) {
            return Ok(Matrix::clone(t));
        }
        let t = materialize(cross, k, l)?;
        cache.insert((k, l), t.clone());
        Ok(t)
    };
    let id = |dim: usize, p: usize| Matrix::<K>::identity(dim.pow(p as u32));
    let mut report = CrossReport::empty(d);
    for k in 1..=d {
        for l in 1..=d - k {
            for j in 1..=d.saturating_sub(k + l) {
                // tau_{k, l + j} = (I_{E^l} (x) tau_{k,j}) (tau_{k,l} (x) I_{E^j})
                let lhs = get(k, l + j)?;
                let rhs = id(m, l).kron(&get(k, j)?).matmul(&get(k, l)?.kron(&id(m, j)));
                report.count(CrossIdentity::HexagonA);
                if lhs != rhs {
                    report.violations.push(hexagon_violation(CrossIdentity::HexagonA, &lhs, &rhs, (k, l, j), (m, n)));
                }
                // tau_{k + l, j} = (tau_{k,j} (x) I_{F^l}) (I_{F^k} (x) tau_{l,j})
                let lhs = get(k + l, j)?;
                let rhs = get(k, j)?.kron(&id(n, l)).matmul(&id(n, k).kron(&get(l, j)?));
                report.count(CrossIdentity::HexagonB);
                if lhs != rhs {
                    report.violations.push(hexagon_violation(CrossIdentity::HexagonB, &lhs, &rhs, (k, l, j), (m, n)));
                }
            }
        }
    }
    Ok(report)
}

/// Reports the first column where the operators differ as the basis word it
/// acts on, together with both images.
fn hexagon_violation<K: Coeff>(
    identity: CrossIdentity,
    lhs: &Matrix<K>,
    rhs: &Matrix<K>,
    (k, l, j): (usize, usize, usize),
    (m, n): (usize, usize),
) -> Violation<K> {
    let col = (0..lhs.cols())
        .find(|&c| (0..lhs.rows()).any(|r| lhs.get(r, c) != rhs.get(r, c)))
        .expect("operators differ");
    // domain F^{kb} (x) E^{la} and codomain E^{la} (x) F^{kb}
    let (kb, la) = match identity {
        CrossIdentity::HexagonA => (k, l + j),
        _ => (k + l, j),
    };
    let decode = |mut idx: usize, alphabet: Alphabet, dim: usize, len: usize| -> Word {
        let mut letters = vec![0; len];
        for slot in letters.iter_mut().rev() {
            *slot = idx % dim + 1;
            idx /= dim;
        }
        Word::from_indices(alphabet, &letters)
    };
    let el = m.pow(la as u32);
    let fk = n.pow(kb as u32);
    let b = decode(col / el, Alphabet::B, n, kb);
    let a = decode(col % el, Alphabet::A, m, la);
    let image = |t: &Matrix<K>| {
        let mut p = NCPoly::zero();
        for r in 0..t.rows() {
            let alpha = decode(r / fk, Alphabet::A, m, la);
            let beta = decode(r % fk, Alphabet::B, n, kb);
            p.add_term(alpha.mul(&beta), t.get(r, col).clone());
        }
        p
    };
    Violation { identity, witness: vec![b, a], lhs: image(lhs), rhs: image(rhs) }
}

use std::collections::BTreeMap;

use crate::cross::Cross;
use crate::linalg::{Echelon, WordOrder};
use crate::poly::NCPoly;
use crate::quadratic::QuadraticError;
use crate::scalar::Coeff;
use crate::word::{words_of_length, Alphabet, Word};

/// Which side of the cross an ideal lives on: `Left` for an ideal of the
/// `A` algebra (`tau(B (x) I) in I (x) B`), `Right` for the `B` algebra
/// (`tau(I (x) A) in A (x) I`).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Side {
    Left,
    Right,
}

impl Side {
    pub fn alphabet(self) -> Alphabet {
        match self {
            Side::Left => Alphabet::A,
            Side::Right => Alphabet::B,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            Side::Left => "left",
            Side::Right => "right",
        }
    }
}

/// The degree-`degree` component of the two-sided ideal generated by
/// homogeneous `gens`: the span of all `u g v`.
pub fn ideal_component<K: Coeff>(
    gens: &[NCPoly<K>],
    alphabet: Alphabet,
    dim: usize,
    degree: usize,
    order: &WordOrder,
) -> Echelon<K> {
    let mut span = Echelon::new(order.clone());
    for g in gens {
        let Some(dg) = g.degree() else { continue };
        if dg > degree {
            continue;
        }
        for left in 0..=degree - dg {
            let right = degree - dg - left;
            for u in words_of_length(alphabet, dim, left) {
                for v in words_of_length(alphabet, dim, right) {
                    let p = NCPoly::word(u.clone()).mul_free(g).mul_free(&NCPoly::word(v));
                    span.insert(&p);
                }
            }
        }
    }
    span
}

pub(crate) fn check_homogeneous<K: Coeff>(gens: &[NCPoly<K>], alphabet: Alphabet) -> Result<(), QuadraticError> {
    for g in gens {
        if !g.is_over(alphabet) {
            return Err(QuadraticError::InvalidRelation(format!("`{g}` is not a polynomial over alphabet {alphabet:?}")));
        }
        let d = g.degree().unwrap_or(0);
        if g.homogeneous_part(d) != *g {
            return Err(QuadraticError::InvalidRelation(format!("`{g}` is not homogeneous")));
        }
    }
    Ok(())
}

/// A homogeneous part of `tau` applied to a generator that falls outside
/// the ideal.
#[derive(Clone, Debug, PartialEq)]
pub struct TauWitness<K> {
    /// The word on the other side that was moved past the generator.
    pub word: Word,
    pub generator: usize,
    /// The fixed other-side word of the offending part.
    pub partner: Word,
    pub part: NCPoly<K>,
    /// Remainder of `part` modulo the ideal component.
    pub remainder: NCPoly<K>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct TauIdealReport<K> {
    pub side: Side,
    pub degree: usize,
    pub checked: usize,
    pub failures: Vec<TauWitness<K>>,
}

impl<K> TauIdealReport<K> {
    pub fn pass(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tests whether the ideal generated by `gens` is a left (or right)
/// `tau`-ideal, moving every other-side word of length `1..=d` past every
/// generator and checking each homogeneous part by exact span membership.
pub fn check_tau_ideal<K: Coeff>(
    cross: &Cross<K>,
    gens: &[NCPoly<K>],
    side: Side,
    d: usize,
    order: &WordOrder,
) -> Result<TauIdealReport<K>, QuadraticError> {
    let own = side.alphabet();
    check_homogeneous(gens, own)?;
    for g in gens {
        cross.check_poly(g)?;
    }
    let own_dim = match side {
        Side::Left => cross.dim_a(),
        Side::Right => cross.dim_b(),
    };
    let other_dim = match side {
        Side::Left => cross.dim_b(),
        Side::Right => cross.dim_a(),
    };
    let mut components: BTreeMap<usize, Echelon<K>> = BTreeMap::new();
    let mut report = TauIdealReport { side, degree: d, checked: 0, failures: Vec::new() };
    for len in 1..=d {
        for word in words_of_length(own.other(), other_dim, len) {
            for (gi, g) in gens.iter().enumerate() {
                report.checked += 1;
                let mut image = NCPoly::zero();
                for (w, c) in g.terms() {
                    let t = match side {
                        Side::Left => cross.apply(&word, w),
                        Side::Right => cross.apply(w, &word),
                    };
                    image.add_scaled(&t, c);
                }
                // group by the other-side word and the own-side degree
                let mut parts: BTreeMap<(Word, usize), NCPoly<K>> = BTreeMap::new();
                for (w, c) in image.terms() {
                    let (alpha, beta) = w.split_ordered().expect("ordered value");
                    let (mine, partner) = match side {
                        Side::Left => (alpha, beta),
                        Side::Right => (beta, alpha),
                    };
                    let key = (partner, mine.len());
                    parts.entry(key).or_insert_with(NCPoly::zero).add_term(mine, c.clone());
                }
                for ((partner, deg), part) in parts {
                    let span = components
                        .entry(deg)
                        .or_insert_with(|| ideal_component(gens, own, own_dim, deg, order));
                    let remainder = span.reduce(&part);
                    if !remainder.is_zero() {
                        report.failures.push(TauWitness { word: word.clone(), generator: gi, partner, part, remainder });
                    }
                }
            }
        }
    }
    Ok(report)
}

use std::collections::BTreeMap;


use crate::linalg::{Echelon, WordOrder};
use crate::poly::NCPoly;
use crate::quadratic::ideal::{check_homogeneous, ideal_component};
use crate::quadratic::{Operator2, QuadraticError};
use crate::scalar::Coeff;
use crate::word::{words_of_length, Alphabet, Letter, Word};

/// Rules `lead -> rhs` applied to subwords, with every word of `rhs`
/// smaller than `lead` in the system's order.
#[derive(Clone, Debug, PartialEq)]
pub struct RewriteSystem<K> {
    order: WordOrder,
    rules: BTreeMap<Word, NCPoly<K>>,
}

/// An overlap word whose two one-step rewrites reduce to different normal
/// forms.
#[derive(Clone, Debug, PartialEq)]
pub struct ConfluenceWitness<K> {
    pub overlap: Word,
    pub via_left: NCPoly<K>,
    pub via_right: NCPoly<K>,
}

impl<K: Coeff> RewriteSystem<K> {
    pub fn empty(order: WordOrder) -> Self {
        Self { order, rules: BTreeMap::new() }
    }

    /// Orients each row of a reduced echelon basis as `lead -> lead - row`.
    pub fn from_echelon(basis: &Echelon<K>) -> Self {
        let rules = basis
            .rows()
            .map(|(lead, row)| {
                let mut rhs = -row.clone();
                rhs.add_term(lead.clone(), K::one());
                (lead.clone(), rhs)
            })
            .collect();
        Self { order: basis.order().clone(), rules }
    }

    pub fn order(&self) -> &WordOrder {
        &self.order
    }

    pub fn rules(&self) -> impl Iterator<Item = (&Word, &NCPoly<K>)> {
        self.rules.iter()
    }

    pub fn len(&self) -> usize {
        self.rules.len()
    }

    pub fn is_empty(&self) -> bool {
        self.rules.is_empty()
    }

    /// First position and leading word of a rule occurring in `w`.
    fn find(&self, w: &Word) -> Option<(usize, &Word)> {
        let ls = w.letters();
        for pos in 0..ls.len() {
            for lead in self.rules.keys() {
                let n = lead.len();
                if pos + n <= ls.len() && &ls[pos..pos + n] == lead.letters() {
                    return Some((pos, lead));
                }
            }
        }
        None
    }

    pub fn is_normal(&self, w: &Word) -> bool {
        self.find(w).is_none()
    }

    fn rewrite_at(&self, w: &Word, pos: usize, lead: &Word) -> NCPoly<K> {
        let prefix = w.slice(0, pos);
        let suffix = w.slice(pos + lead.len(), w.len());
        let mut out = NCPoly::zero();
        for (u, c) in self.rules[lead].terms() {
            out.add_term(prefix.mul(u).mul(&suffix), c.clone());
        }
        out
    }

    /// Fully reduced form of `p`.
    pub fn reduce(&self, p: &NCPoly<K>) -> NCPoly<K> {
        let mut done = NCPoly::zero();
        let mut pending: BTreeMap<Word, K> = p.terms().map(|(w, c)| (w.clone(), c.clone())).collect();
        while let Some((w, c)) = pending.pop_last() {
            if c.is_zero() {
                continue;
            }
            match self.find(&w) {
                None => done.add_term(w, c),
                Some((pos, lead)) => {
                    for (u, v) in self.rewrite_at(&w, pos, lead).into_terms() {
                        let e = pending.entry(u).or_insert_with(K::zero);
                        *e = e.clone() + v * c.clone();
                    }
                }
            }
        }
        done
    }

    /// Checks every overlap `u v w` of two leading words `u v` and `v w`
    /// (with `v` nonempty) by reducing both one-step rewrites.
    pub fn check_local_confluence(&self) -> Result<usize, ConfluenceWitness<K>> {
        let mut checked = 0;
        for l1 in self.rules.keys() {
            for l2 in self.rules.keys() {
                for shared in 1..l1.len().min(l2.len()) {
                    if l1.letters()[l1.len() - shared..] != l2.letters()[..shared] {
                        continue;
                    }
                    let overlap = l1.mul(&l2.slice(shared, l2.len()));
                    let via_left = self.reduce(&self.rewrite_at(&overlap, 0, l1));
                    let via_right = self.reduce(&self.rewrite_at(&overlap, l1.len() - shared, l2));
                    checked += 1;
                    if via_left != via_right {
                        return Err(ConfluenceWitness { overlap, via_left, via_right });
                    }
                }
            }
        }
        Ok(checked)
    }
}

/// `TE / <relations>` with a certified rewrite system for normal forms.
/// The nonzero images `(id - R)(e_i (x) e_j)`; they span the degree-two part
/// of the ideal `<id - R>`.
pub fn operator_relations<K: Coeff>(r: &Operator2<K>, alphabet: Alphabet, m: usize) -> Vec<NCPoly<K>> {
    let mut relations = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            let mut p = NCPoly::zero();
            for k in 1..=m {
                for l in 1..=m {
                    let mut v = -r.get(k, l, i, j).clone();
                    if (k, l) == (i, j) {
                        v = v + K::one();
                    }
                    p.add_term(Word::new(vec![Letter::new(alphabet, k), Letter::new(alphabet, l)]), v);
                }
            }
            if !p.is_zero() {
                relations.push(p);
            }
        }
    }
    relations
}

#[derive(Clone, Debug)]
pub struct QuadraticAlgebra<K> {
    alphabet: Alphabet,
    dim: usize,
    relations: Vec<NCPoly<K>>,
    rewrite: RewriteSystem<K>,
}

impl<K: Coeff> QuadraticAlgebra<K> {
    /// `TE / <id - R>`: the ideal is spanned in degree two by the image of
    /// `id - R`. `sequence` lists the generators from smallest to largest
    /// and fixes which monomial of each relation leads.
    pub fn new(r: &Operator2<K>, alphabet: Alphabet, sequence: &[usize]) -> Result<Self, QuadraticError> {
        let m = r.square_dim().ok_or_else(|| {
            QuadraticError::DimensionMismatch(format!("relation operator must act on E (x) E, got {:?}", r.dims_in()))
        })?;
        let relations = operator_relations(r, alphabet, m);
        Self::from_relations(alphabet, m, &relations, sequence)
    }

    /// The free algebra on `dim` generators.
    pub fn free(alphabet: Alphabet, dim: usize) -> Self {
        Self { alphabet, dim, relations: Vec::new(), rewrite: RewriteSystem::empty(WordOrder::natural()) }
    }

    /// The quotient by the ideal generated by homogeneous `relations`.
    pub fn from_relations(
        alphabet: Alphabet,
        dim: usize,
        relations: &[NCPoly<K>],
        sequence: &[usize],
    ) -> Result<Self, QuadraticError> {
        let order = Self::order_from(alphabet, dim, sequence)?;
        check_homogeneous(relations, alphabet)?;
        if let Some(l) = relations.iter().flat_map(|p| p.words()).flat_map(|w| w.letters()).find(|l| l.index() > dim) {
            return Err(QuadraticError::InvalidRelation(format!("generator {l} out of range for dimension {dim}")));
        }
        let basis = Echelon::from_polys(order, relations).into_reduced();
        let relations: Vec<NCPoly<K>> = basis.rows().map(|(_, p)| p.clone()).collect();
        let rewrite = RewriteSystem::from_echelon(&basis);
        if let Err(w) = rewrite.check_local_confluence() {
            return Err(QuadraticError::NotConfluent {
                overlap: w.overlap.to_string(),
                left: w.via_left.to_string(),
                right: w.via_right.to_string(),
            });
        }
        Ok(Self { alphabet, dim, relations, rewrite })
    }

    fn order_from(alphabet: Alphabet, dim: usize, sequence: &[usize]) -> Result<WordOrder, QuadraticError> {
        if sequence.is_empty() {
            return Ok(WordOrder::natural());
        }
        let mut sorted = sequence.to_vec();
        sorted.sort_unstable();
        if sorted != (1..=dim).collect::<Vec<_>>() {
            return Err(QuadraticError::InvalidRelation(format!(
                "generator order {sequence:?} is not a permutation of 1..={dim}"
            )));
        }
        Ok(WordOrder::natural().with_sequence(alphabet, sequence))
    }

    pub fn alphabet(&self) -> Alphabet {
        self.alphabet
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    /// Reduced basis of the degree-two relations; each leads with its rule's
    /// left-hand side.
    pub fn relations(&self) -> &[NCPoly<K>] {
        &self.relations
    }

    pub fn rewrite(&self) -> &RewriteSystem<K> {
        &self.rewrite
    }

    pub fn order(&self) -> &WordOrder {
        self.rewrite.order()
    }

    pub fn normal_form(&self, p: &NCPoly<K>) -> NCPoly<K> {
        self.rewrite.reduce(p)
    }

    pub fn normal_words(&self, len: usize) -> Vec<Word> {
        words_of_length(self.alphabet, self.dim, len)
            .into_iter()
            .filter(|w| self.rewrite.is_normal(w))
            .collect()
    }

    /// Number of normal words of length `len`.
    pub fn basis_count(&self, len: usize) -> usize {
        self.normal_words(len).len()
    }

    /// `dim^len` minus the rank of the ideal's degree-`len` component; an
    /// independent count to compare with [`QuadraticAlgebra::basis_count`].
    pub fn dimension_by_rank(&self, len: usize) -> usize {
        let rank = ideal_component(&self.relations, self.alphabet, self.dim, len, self.order()).rank();
        self.dim.pow(len as u32) - rank
    }
}

//! Letters, words and their canonical order.

use std::cmp::Ordering;
use std::fmt;

/// Which generating space a letter comes from.
///
/// `A` letters are coordinates / creators `x^i`; `B` letters are the second
/// algebra's generators `y^i`, which in the Wick setting are the conjugates
/// `x*^i`. `A < B` so that at equal index the `A` letter sorts first.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum Alphabet {
    A,
    B,
}

impl Alphabet {
    pub fn other(self) -> Self {
        match self {
            Alphabet::A => Alphabet::B,
            Alphabet::B => Alphabet::A,
        }
    }
}

/// A generator, indexed from 1.
///
/// Ordered by index first, then alphabet.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Letter {
    index: usize,
    alphabet: Alphabet,
}

impl Letter {
    pub fn new(alphabet: Alphabet, index: usize) -> Self {
        assert!(index >= 1, "generator indices start at 1");
        Self { index, alphabet }
    }

    pub fn a(index: usize) -> Self {
        Self::new(Alphabet::A, index)
    }

    pub fn b(index: usize) -> Self {
        Self::new(Alphabet::B, index)
    }

    pub fn alphabet(self) -> Alphabet {
        self.alphabet
    }

    pub fn index(self) -> usize {
        self.index
    }

    pub fn is_a(self) -> bool {
        self.alphabet == Alphabet::A
    }

    pub fn is_b(self) -> bool {
        self.alphabet == Alphabet::B
    }

    /// Same index, other alphabet.
    pub fn starred(self) -> Self {
        Self { index: self.index, alphabet: self.alphabet.other() }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.alphabet {
            Alphabet::A => write!(f, "x{}", self.index),
            Alphabet::B => write!(f, "x{}*", self.index),
        }
    }
}

/// A monomial; the empty word is the unit.
///
/// `Ord` is length-lexicographic over the letter order.
#[derive(Clone, PartialEq, Eq, Hash, Debug, Default)]
pub struct Word(Vec<Letter>);

impl Word {
    pub fn unit() -> Self {
        Self(Vec::new())
    }

    pub fn new(letters: Vec<Letter>) -> Self {
        Self(letters)
    }

    pub fn from_letter(letter: Letter) -> Self {
        Self(vec![letter])
    }

    /// A word over one alphabet from its 1-based indices.
    pub fn from_indices(alphabet: Alphabet, indices: &[usize]) -> Self {
        Self(indices.iter().map(|&i| Letter::new(alphabet, i)).collect())
    }

    pub fn letters(&self) -> &[Letter] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_unit(&self) -> bool {
        self.0.is_empty()
    }

    pub fn mul(&self, other: &Word) -> Word {
        let mut letters = Vec::with_capacity(self.len() + other.len());
        letters.extend_from_slice(&self.0);
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn push(&mut self, letter: Letter) {
        self.0.push(letter);
    }

    pub fn slice(&self, start: usize, end: usize) -> Word {
        Word(self.0[start..end].to_vec())
    }

    pub fn reversed(&self) -> Word {
        Word(self.0.iter().rev().copied().collect())
    }

    pub fn is_over(&self, alphabet: Alphabet) -> bool {
        self.0.iter().all(|l| l.alphabet == alphabet)
    }

    pub fn count(&self, alphabet: Alphabet) -> usize {
        self.0.iter().filter(|l| l.alphabet == alphabet).count()
    }

    /// True when no `B` letter precedes an `A` letter.
    pub fn is_wick_ordered(&self) -> bool {
        self.0.windows(2).all(|w| !(w[0].is_b() && w[1].is_a()))
    }

    /// Number of (`B` letter, later `A` letter) pairs.
    pub fn inversions(&self) -> usize {
        let mut seen_b = 0;
        let mut total = 0;
        for l in &self.0 {
            if l.is_b() {
                seen_b += 1;
            } else {
                total += seen_b;
            }
        }
        total
    }

    /// For a Wick-ordered word, the split into its `A` prefix and `B` suffix.
    pub fn split_ordered(&self) -> Option<(Word, Word)> {
        let cut = self.0.iter().position(|l| l.is_b()).unwrap_or(self.len());
        let (a, b) = self.0.split_at(cut);
        b.iter().all(|l| l.is_b()).then(|| (Word(a.to_vec()), Word(b.to_vec())))
    }

    /// Largest index used by letters of `alphabet` (0 when absent).
    pub fn max_index(&self, alphabet: Alphabet) -> usize {
        self.0.iter().filter(|l| l.alphabet == alphabet).map(|l| l.index).max().unwrap_or(0)
    }
}

impl Ord for Word {
    fn cmp(&self, other: &Self) -> Ordering {
        self.len().cmp(&other.len()).then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Word {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl From<Vec<Letter>> for Word {
    fn from(letters: Vec<Letter>) -> Self {
        Self(letters)
    }
}

impl FromIterator<Letter> for Word {
    fn from_iter<I: IntoIterator<Item = Letter>>(iter: I) -> Self {
        Self(iter.into_iter().collect())
    }
}

impl fmt::Display for Word {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.0.is_empty() {
            return write!(f, "1");
        }
        for (n, l) in self.0.iter().enumerate() {
            if n > 0 {
                write!(f, " ")?;
            }
            write!(f, "{l}")?;
        }
        Ok(())
    }
}

/// All words of exactly `len` letters over `alphabet` with `dim` generators,
/// in canonical order.
pub fn words_of_length(alphabet: Alphabet, dim: usize, len: usize) -> Vec<Word> {
    let mut out = vec![Word::unit()];
    for _ in 0..len {
        let mut next = Vec::with_capacity(out.len() * dim);
        for w in &out {
            for i in 1..=dim {
                let mut w = w.clone();
                w.push(Letter::new(alphabet, i));
                next.push(w);
            }
        }
        out = next;
    }
    out
}

/// All words of length `0..=max_len` over one alphabet.
pub fn words_up_to(alphabet: Alphabet, dim: usize, max_len: usize) -> Vec<Word> {
    (0..=max_len).flat_map(|len| words_of_length(alphabet, dim, len)).collect()
}

/// All words of exactly `len` letters mixing both alphabets.
pub fn mixed_words_of_length(dim_a: usize, dim_b: usize, len: usize) -> Vec<Word> {
    let letters: Vec<Letter> = (1..=dim_a)
        .map(Letter::a)
        .chain((1..=dim_b).map(Letter::b))
        .collect();
    let mut out = vec![Word::unit()];
    for _ in 0..len {
        out = out
            .iter()
            .flat_map(|w| letters.iter().map(move |&l| {
                let mut w = w.clone();
                w.push(l);
                w
            }))
            .collect();
    }
    out.sort();
    out
}

/// Wick-ordered words `a b` with `|a| = l` over `A` and `|b| = k` over `B`.
pub fn ordered_words(dim_a: usize, dim_b: usize, k: usize, l: usize) -> Vec<Word> {
    let bs = words_of_length(Alphabet::B, dim_b, k);
    words_of_length(Alphabet::A, dim_a, l)
        .iter()
        .flat_map(|a| bs.iter().map(move |b| a.mul(b)))
        .collect()
}

/// Wick-ordered words of total length `0..=max_len`.
pub fn ordered_words_up_to(dim_a: usize, dim_b: usize, max_len: usize) -> Vec<Word> {
    let mut out = Vec::new();
    for total in 0..=max_len {
        for k in 0..=total {
            out.extend(ordered_words(dim_a, dim_b, k, total - k));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn a(i: &[usize]) -> Word {
        Word::from_indices(Alphabet::A, i)
    }

    #[test]
    fn concatenation_examples() {
        assert_eq!(a(&[1, 2]).mul(&a(&[1])), a(&[1, 2, 1]));
        assert_eq!(Word::unit().mul(&a(&[2, 1])), a(&[2, 1]));
        let yx = Word::from_letter(Letter::b(1)).mul(&a(&[1]));
        assert_eq!(yx.letters(), &[Letter::b(1), Letter::a(1)]);
        assert!(!yx.is_wick_ordered());
        assert_eq!(yx.inversions(), 1);
    }

    #[test]
    fn canonical_order_is_length_lex_a_before_b() {
        let x1 = Word::from_letter(Letter::a(1));
        let y1 = Word::from_letter(Letter::b(1));
        let x2 = Word::from_letter(Letter::a(2));
        assert!(x1 < y1 && y1 < x2);
        assert!(x2 < a(&[1, 1]));
        assert!(Word::unit() < x1);
    }

    #[test]
    fn enumeration_counts() {
        assert_eq!(words_of_length(Alphabet::A, 2, 3).len(), 8);
        assert_eq!(words_up_to(Alphabet::B, 2, 3).len(), 15);
        assert_eq!(mixed_words_of_length(2, 2, 2).len(), 16);
        assert_eq!(ordered_words(2, 2, 1, 2).len(), 8);
        // (L + 1) 2^L ordered words of length L over two generators each
        assert_eq!(ordered_words_up_to(2, 2, 3).len(), 1 + 4 + 12 + 32);
    }

    #[test]
    fn split_ordered_rejects_mixed() {
        let w = Word::new(vec![Letter::a(1), Letter::b(2), Letter::b(1)]);
        let (x, y) = w.split_ordered().unwrap();
        assert_eq!(x, a(&[1]));
        assert_eq!(y, Word::from_indices(Alphabet::B, &[2, 1]));
        assert!(Word::new(vec![Letter::b(1), Letter::a(1)]).split_ordered().is_none());
    }

    fn word_strategy() -> impl Strategy<Value = Word> {
        prop::collection::vec((any::<bool>(), 1usize..=3), 0..6).prop_map(|v| {
            v.into_iter()
                .map(|(b, i)| if b { Letter::b(i) } else { Letter::a(i) })
                .collect()
        })
    }

    proptest! {
        #[test]
        fn concatenation_is_associative(u in word_strategy(), v in word_strategy(), w in word_strategy()) {
            prop_assert_eq!(u.mul(&v).mul(&w), u.mul(&v.mul(&w)));
        }

        #[test]
        fn unit_is_two_sided(u in word_strategy()) {
            prop_assert_eq!(Word::unit().mul(&u), u.clone());
            prop_assert_eq!(u.mul(&Word::unit()), u);
        }
    }
}

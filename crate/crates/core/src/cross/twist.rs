use std::collections::BTreeMap;


use crate::cross::CrossError;
use crate::linalg::Matrix;
use crate::scalar::Coeff;
use crate::word::Alphabet;

/// Generator-level twist `y^i x^j -> sum_{k,l} t^{ij}_{kl} x^k y^l`.
///
/// Keys are `(i, j, k, l)` with `i, l` indexing `B` generators and `j, k`
/// indexing `A` generators, all 1-based. Missing entries are zero.
#[derive(Clone, PartialEq, Debug)]
pub struct TwistMatrix<K> {
    dim_a: usize,
    dim_b: usize,
    coeffs: BTreeMap<(usize, usize, usize, usize), K>,
}

impl<K: Coeff> TwistMatrix<K> {
    pub fn zero(dim_a: usize, dim_b: usize) -> Self {
        Self { dim_a, dim_b, coeffs: BTreeMap::new() }
    }

    pub fn dim_a(&self) -> usize {
        self.dim_a
    }

    pub fn dim_b(&self) -> usize {
        self.dim_b
    }

    fn check(&self, alphabet: Alphabet, index: usize) -> Result<(), CrossError> {
        let dim = match alphabet {
            Alphabet::A => self.dim_a,
            Alphabet::B => self.dim_b,
        };
        if index == 0 || index > dim {
            return Err(CrossError::IndexOutOfRange { alphabet, index, dim });
        }
        Ok(())
    }

    /// Sets `t^{ij}_{kl}`; a zero value removes the entry.
    pub fn set(&mut self, i: usize, j: usize, k: usize, l: usize, value: K) -> Result<(), CrossError> {
        self.check(Alphabet::B, i)?;
        self.check(Alphabet::A, j)?;
        self.check(Alphabet::A, k)?;
        self.check(Alphabet::B, l)?;
        if value.is_zero() {
            self.coeffs.remove(&(i, j, k, l));
        } else {
            self.coeffs.insert((i, j, k, l), value);
        }
        Ok(())
    }

    pub fn with(mut self, i: usize, j: usize, k: usize, l: usize, value: K) -> Result<Self, CrossError> {
        self.set(i, j, k, l, value)?;
        Ok(self)
    }

    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> K {
        self.coeffs.get(&(i, j, k, l)).cloned().unwrap_or_else(K::zero)
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize, usize, usize), &K)> {
        self.coeffs.iter()
    }

    /// Nonzero `(k, l, t^{ij}_{kl})` for one input pair `y^i x^j`.
    pub fn rule(&self, i: usize, j: usize) -> impl Iterator<Item = (usize, usize, &K)> {
        self.coeffs
            .range((i, j, 0, 0)..=(i, j, usize::MAX, usize::MAX))
            .map(|(&(_, _, k, l), v)| (k, l, v))
    }

    /// The switch `y^i x^j -> x^j y^i`, giving the ordinary tensor product.
    pub fn switch(dim_a: usize, dim_b: usize) -> Self {
        Self::color(dim_a, dim_b, |_, _| K::one())
    }

    /// Sign twist for generators of degree one; its extension multiplies a
    /// word pair of degrees `(k, l)` by `(-1)^{kl}`.
    pub fn graded(dim_a: usize, dim_b: usize) -> Self {
        Self::color(dim_a, dim_b, |_, _| -K::one())
    }

    /// Diagonal twist `y^i x^j -> t(i, j) x^j y^i`.
    pub fn color<F: FnMut(usize, usize) -> K>(dim_a: usize, dim_b: usize, mut t: F) -> Self {
        let mut m = Self::zero(dim_a, dim_b);
        for i in 1..=dim_b {
            for j in 1..=dim_a {
                m.set(i, j, j, i, t(i, j)).expect("indices in range");
            }
        }
        m
    }

    /// Color twist with every factor equal to `q`.
    pub fn q_cross(dim_a: usize, dim_b: usize, q: K) -> Self {
        Self::color(dim_a, dim_b, |_, _| q.clone())
    }

    /// As an operator `F (x) E -> E (x) F`: row `(k, l)` is
    /// `(k - 1) * dim_b + (l - 1)`, column `(i, j)` is `(i - 1) * dim_a + (j - 1)`.
    pub fn to_matrix(&self) -> Matrix<K> {
        let mut m = Matrix::zeros(self.dim_a * self.dim_b, self.dim_b * self.dim_a);
        for (&(i, j, k, l), v) in &self.coeffs {
            m.set((k - 1) * self.dim_b + (l - 1), (i - 1) * self.dim_a + (j - 1), v.clone());
        }
        m
    }

    /// Inverse of [`TwistMatrix::to_matrix`].
    pub fn from_matrix(dim_a: usize, dim_b: usize, m: &Matrix<K>) -> Result<Self, CrossError> {
        if m.rows() != dim_a * dim_b || m.cols() != dim_a * dim_b {
            return Err(CrossError::DimensionMismatch(format!(
                "twist operator must be {0}x{0}, got {1}x{2}",
                dim_a * dim_b,
                m.rows(),
                m.cols()
            )));
        }
        let mut t = Self::zero(dim_a, dim_b);
        for i in 1..=dim_b {
            for j in 1..=dim_a {
                for k in 1..=dim_a {
                    for l in 1..=dim_b {
                        let v = m.get((k - 1) * dim_b + (l - 1), (i - 1) * dim_a + (j - 1));
                        t.set(i, j, k, l, v.clone())?;
                    }
                }
            }
        }
        Ok(t)
    }

    pub fn map<F: FnMut(&K) -> K>(&self, mut f: F) -> Self {
        let mut out = Self::zero(self.dim_a, self.dim_b);
        for (&(i, j, k, l), v) in &self.coeffs {
            out.set(i, j, k, l, f(v)).expect("indices in range");
        }
        out
    }
}

/// Scalar pairing `g^{ij}` of `y^i` with `x^j`, added as the inhomogeneous
/// term `y^i x^j -> ... + g^{ij}`.
#[derive(Clone, PartialEq, Debug)]
pub struct Pairing<K> {
    values: BTreeMap<(usize, usize), K>,
}

impl<K: Coeff> Pairing<K> {
    pub fn new() -> Self {
        Self { values: BTreeMap::new() }
    }

    /// `g^{ij} = delta^{ij}`.
    pub fn orthonormal(dim: usize) -> Self {
        let mut p = Self::new();
        for i in 1..=dim {
            p.values.insert((i, i), K::one());
        }
        p
    }

    pub fn set(&mut self, i: usize, j: usize, value: K) {
        if value.is_zero() {
            self.values.remove(&(i, j));
        } else {
            self.values.insert((i, j), value);
        }
    }

    pub fn get(&self, i: usize, j: usize) -> Option<&K> {
        self.values.get(&(i, j))
    }

    pub fn entries(&self) -> impl Iterator<Item = (&(usize, usize), &K)> {
        self.values.iter()
    }

    pub fn is_orthonormal(&self, dim: usize) -> bool {
        *self == Self::orthonormal(dim)
    }
}

impl<K: Coeff> Default for Pairing<K> {
    fn default() -> Self {
        Self::new()
    }
}

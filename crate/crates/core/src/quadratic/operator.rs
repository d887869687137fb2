
use crate::cross::TwistMatrix;
use crate::linalg::Matrix;
use crate::quadratic::QuadraticError;
use crate::scalar::Coeff;

/// A linear map `V1 (x) V2 -> W1 (x) W2` between degree-two tensor spaces.
///
/// Row `(k, l)` of the matrix is `(k - 1) * dim(W2) + (l - 1)` and column
/// `(i, j)` is `(i - 1) * dim(V2) + (j - 1)`; entry `[(k,l), (i,j)]` is the
/// coefficient of `e_k (x) e_l` in the image of `e_i (x) e_j`.
#[derive(Clone, PartialEq, Debug)]
pub struct Operator2<K> {
    dims_in: (usize, usize),
    dims_out: (usize, usize),
    matrix: Matrix<K>,
}

impl<K: Coeff> Operator2<K> {
    pub fn new(dims_in: (usize, usize), dims_out: (usize, usize), matrix: Matrix<K>) -> Result<Self, QuadraticError> {
        let (r, c) = (dims_out.0 * dims_out.1, dims_in.0 * dims_in.1);
        if matrix.rows() != r || matrix.cols() != c {
            return Err(QuadraticError::DimensionMismatch(format!(
                "operator {}x{} -> {}x{} needs a {}x{} matrix, got {}x{}",
                dims_in.0,
                dims_in.1,
                dims_out.0,
                dims_out.1,
                r,
                c,
                matrix.rows(),
                matrix.cols()
            )));
        }
        Ok(Self { dims_in, dims_out, matrix })
    }

    /// An operator on `E (x) E` with `dim E = dim`.
    pub fn square(dim: usize, matrix: Matrix<K>) -> Result<Self, QuadraticError> {
        Self::new((dim, dim), (dim, dim), matrix)
    }

    pub fn identity(dim: usize) -> Self {
        Self { dims_in: (dim, dim), dims_out: (dim, dim), matrix: Matrix::identity(dim * dim) }
    }

    /// The flip `V1 (x) V2 -> V2 (x) V1`.
    pub fn switch(d1: usize, d2: usize) -> Self {
        let mut m = Matrix::zeros(d1 * d2, d1 * d2);
        for i in 0..d1 {
            for j in 0..d2 {
                m.set(j * d1 + i, i * d2 + j, K::one());
            }
        }
        Self { dims_in: (d1, d2), dims_out: (d2, d1), matrix: m }
    }

    pub fn dims_in(&self) -> (usize, usize) {
        self.dims_in
    }

    pub fn dims_out(&self) -> (usize, usize) {
        self.dims_out
    }

    pub fn matrix(&self) -> &Matrix<K> {
        &self.matrix
    }

    /// `[(k, l), (i, j)]` with 1-based indices.
    pub fn get(&self, k: usize, l: usize, i: usize, j: usize) -> &K {
        self.matrix.get((k - 1) * self.dims_out.1 + (l - 1), (i - 1) * self.dims_in.1 + (j - 1))
    }

    /// The dimension `m` when this is an operator on `E (x) E`.
    pub fn square_dim(&self) -> Option<usize> {
        let (a, b) = self.dims_in;
        (a == b && self.dims_out == self.dims_in).then_some(a)
    }

    fn require_square(&self, what: &str) -> Result<usize, QuadraticError> {
        self.square_dim().ok_or_else(|| {
            QuadraticError::DimensionMismatch(format!(
                "{what} must act on E (x) E, got {:?} -> {:?}",
                self.dims_in, self.dims_out
            ))
        })
    }

    pub fn scale(&self, c: &K) -> Self {
        Self { matrix: self.matrix.scale(c), ..self.clone() }
    }

    /// Plain matrix transpose in the row-major convention.
    pub fn transpose(&self) -> Self {
        Self { dims_in: self.dims_out, dims_out: self.dims_in, matrix: self.matrix.transpose() }
    }

    /// `R^T[(a,b),(c,d)] = R[(d,c),(b,a)]`: transpose together with the
    /// reversal of both tensor factors, the form an operator takes on the
    /// dual space with dual bases.
    pub fn reversed_transpose(&self) -> Result<Self, QuadraticError> {
        let m = self.require_square("reversed transpose")?;
        let mut out = Matrix::zeros(m * m, m * m);
        for a in 1..=m {
            for b in 1..=m {
                for c in 1..=m {
                    for d in 1..=m {
                        out.set((a - 1) * m + (b - 1), (c - 1) * m + (d - 1), self.get(d, c, b, a).clone());
                    }
                }
            }
        }
        Ok(Self { matrix: out, ..self.clone() })
    }

    /// The generator twist `y^i x^j -> sum [(k,l),(i,j)] x^k y^l` of an
    /// operator `F (x) E -> E (x) F`.
    pub fn to_twist(&self) -> Result<TwistMatrix<K>, QuadraticError> {
        let (n, m) = self.dims_in;
        if self.dims_out != (m, n) {
            return Err(QuadraticError::DimensionMismatch(format!(
                "a twist operator maps F (x) E to E (x) F, got {:?} -> {:?}",
                self.dims_in, self.dims_out
            )));
        }
        Ok(TwistMatrix::from_matrix(m, n, &self.matrix)?)
    }

    pub fn from_twist(t: &TwistMatrix<K>) -> Self {
        let (m, n) = (t.dim_a(), t.dim_b());
        Self { dims_in: (n, m), dims_out: (m, n), matrix: t.to_matrix() }
    }
}

/// Result of one operator identity `lhs = rhs`, with the first basis tensor
/// on which the two sides differ.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorCheck<K> {
    pub name: &'static str,
    pub pass: bool,
    pub witness: Option<OperatorWitness<K>>,
}

/// `input` lists 1-based factor indices of a domain basis tensor; `lhs` and
/// `rhs` its images as sparse `(factor indices, coefficient)` lists.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorWitness<K> {
    pub input: Vec<usize>,
    pub lhs: Vec<(Vec<usize>, K)>,
    pub rhs: Vec<(Vec<usize>, K)>,
}

fn decode(mut idx: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = idx % d + 1;
        idx /= d;
    }
    out
}

fn compare<K: Coeff>(
    name: &'static str,
    lhs: &Matrix<K>,
    rhs: &Matrix<K>,
    dom: &[usize],
    cod: &[usize],
) -> OperatorCheck<K> {
    let col = (0..lhs.cols()).find(|&c| (0..lhs.rows()).any(|r| lhs.get(r, c) != rhs.get(r, c)));
    let witness = col.map(|c| {
        let image = |m: &Matrix<K>| {
            (0..m.rows())
                .filter(|&r| !m.get(r, c).is_zero())
                .map(|r| (decode(r, cod), m.get(r, c).clone()))
                .collect()
        };
        OperatorWitness { input: decode(c, dom), lhs: image(lhs), rhs: image(rhs) }
    });
    OperatorCheck { name, pass: witness.is_none(), witness }
}

fn id<K: Coeff>(n: usize) -> Matrix<K> {
    Matrix::identity(n)
}

/// `R1 R2 R1 = R2 R1 R2` on `E (x) E (x) E`, where `R1 = R (x) id` and
/// `R2 = id (x) R`.
pub fn check_braid<K: Coeff>(r: &Operator2<K>) -> Result<OperatorCheck<K>, QuadraticError> {
    let m = r.require_square("R")?;
    let r1 = r.matrix.kron(&id(m));
    let r2 = id(m).kron(&r.matrix);
    let lhs = r1.matmul(&r2).matmul(&r1);
    let rhs = r2.matmul(&r1).matmul(&r2);
    Ok(compare("braid", &lhs, &rhs, &[m; 3], &[m; 3]))
}

/// `(R - q)(R + q^{-1}) = 0`.
pub fn check_hecke<K: Coeff>(r: &Operator2<K>, q: &K) -> Result<OperatorCheck<K>, QuadraticError> {
    let m = r.require_square("R")?;
    let qi = q.inv().ok_or(QuadraticError::ZeroParameter)?;
    let i = id::<K>(m * m);
    let lhs = (&r.matrix - &i.scale(q)).matmul(&(&r.matrix + &i.scale(&qi)));
    Ok(compare("hecke", &lhs, &Matrix::zeros(m * m, m * m), &[m; 2], &[m; 2]))
}

/// Both identity checks of a consistency or sufficiency test.
#[derive(Clone, Debug, PartialEq)]
pub struct OperatorReport<K> {
    pub checks: Vec<OperatorCheck<K>>,
}

impl<K> OperatorReport<K> {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }

    pub fn failing(&self) -> impl Iterator<Item = &OperatorCheck<K>> {
        self.checks.iter().filter(|c| !c.pass)
    }
}

/// Validated dimensions `(m, n)` of a relation triple: `R` on `E (x) E`,
/// `S` on `F (x) F`, `C: F (x) E -> E (x) F`.
fn triple_dims<K: Coeff>(r: &Operator2<K>, s: &Operator2<K>, c: &Operator2<K>) -> Result<(usize, usize), QuadraticError> {
    let m = r.require_square("R")?;
    let n = s.require_square("S")?;
    if c.dims_in != (n, m) || c.dims_out != (m, n) {
        return Err(QuadraticError::DimensionMismatch(format!(
            "C must map F (x) E = {n}x{m} to E (x) F = {m}x{n}, got {:?} -> {:?}",
            c.dims_in, c.dims_out
        )));
    }
    Ok((m, n))
}

/// The two conditions under which the cross induced by `C` descends to
/// `TE/<id - R>` and `TF/<id - S>`:
///
/// ```text
/// (id (x) C)(C (x) id)(id - id (x) R) = (id - R (x) id)(id (x) C)(C (x) id)   on F E E
/// (C (x) id)(id (x) C)(id - S (x) id) = (id - id (x) S)(C (x) id)(id (x) C)   on F F E
/// ```
pub fn check_consistency<K: Coeff>(
    r: &Operator2<K>,
    s: &Operator2<K>,
    c: &Operator2<K>,
) -> Result<OperatorReport<K>, QuadraticError> {
    let (m, n) = triple_dims(r, s, c)?;
    let (rm, sm, cm) = (&r.matrix, &s.matrix, &c.matrix);

    let push_a = id(m).kron(cm).matmul(&cm.kron(&id(m)));
    let lhs = push_a.matmul(&(&id(n * m * m) - &id(n).kron(rm)));
    let rhs = (&id(m * m * n) - &rm.kron(&id(n))).matmul(&push_a);
    let first = compare("consistency-a", &lhs, &rhs, &[n, m, m], &[m, m, n]);

    let push_b = cm.kron(&id(n)).matmul(&id(n).kron(cm));
    let lhs = push_b.matmul(&(&id(n * n * m) - &sm.kron(&id(m))));
    let rhs = (&id(m * n * n) - &id(m).kron(sm)).matmul(&push_b);
    let second = compare("consistency-b", &lhs, &rhs, &[n, n, m], &[m, n, n]);

    Ok(OperatorReport { checks: vec![first, second] })
}

/// Braid-type identities that imply [`check_consistency`]:
///
/// ```text
/// (R (x) id)(id (x) C)(C (x) id) = (id (x) C)(C (x) id)(id (x) R)
/// (id (x) S)(C (x) id)(id (x) C) = (C (x) id)(id (x) C)(S (x) id)
/// ```
pub fn check_sufficient<K: Coeff>(
    r: &Operator2<K>,
    s: &Operator2<K>,
    c: &Operator2<K>,
) -> Result<OperatorReport<K>, QuadraticError> {
    let (m, n) = triple_dims(r, s, c)?;
    let (rm, sm, cm) = (&r.matrix, &s.matrix, &c.matrix);

    let push_a = id(m).kron(cm).matmul(&cm.kron(&id(m)));
    let lhs = rm.kron(&id(n)).matmul(&push_a);
    let rhs = push_a.matmul(&id(n).kron(rm));
    let first = compare("sufficient-a", &lhs, &rhs, &[n, m, m], &[m, m, n]);

    let push_b = cm.kron(&id(n)).matmul(&id(n).kron(cm));
    let lhs = id(m).kron(sm).matmul(&push_b);
    let rhs = push_b.matmul(&sm.kron(&id(m)));
    let second = compare("sufficient-b", &lhs, &rhs, &[n, n, m], &[m, n, n]);

    Ok(OperatorReport { checks: vec![first, second] })
}

/// The two-dimensional Hecke R-matrix of `GL_q` type, in the basis
/// `11, 12, 21, 22`:
///
/// ```text
/// [ q  0        0  0 ]
/// [ 0  q - 1/q  1  0 ]
/// [ 0  1        0  0 ]
/// [ 0  0        0  q ]
/// ```
///
/// The ideal `<id - R/q>` is generated by `x1 x2 - q x2 x1`.
pub fn standard_hecke_r<K: Coeff>(q: &K) -> Result<Operator2<K>, QuadraticError> {
    let qi = q.inv().ok_or(QuadraticError::ZeroParameter)?;
    let (z, o) = (K::zero(), K::one());
    let rows = vec![
        vec![q.clone(), z.clone(), z.clone(), z.clone()],
        vec![z.clone(), q.clone() - qi, o.clone(), z.clone()],
        vec![z.clone(), o, z.clone(), z.clone()],
        vec![z.clone(), z.clone(), z, q.clone()],
    ];
    Operator2::square(2, Matrix::from_rows(rows))
}

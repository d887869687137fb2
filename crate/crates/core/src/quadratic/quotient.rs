use crate::cross::{wick_order, Cross, Pairing, Strategy, TwistMatrix};
use crate::poly::NCPoly;
use crate::quadratic::{
    check_braid, check_consistency, check_hecke, check_sufficient, check_tau_ideal, Operator2, OperatorReport,
    QuadraticAlgebra, QuadraticError, Side, TauIdealReport,
};
use crate::scalar::Coeff;
use crate::word::Alphabet;

/// The crossed product of two quadratic algebras, realized on normal words
/// `a b` with `a` normal in `A` and `b` normal in `B`.
#[derive(Clone, Debug)]
pub struct CrossedQuotient<K> {
    cross: Cross<K>,
    a: QuadraticAlgebra<K>,
    b: QuadraticAlgebra<K>,
    left: TauIdealReport<K>,
    right: TauIdealReport<K>,
}

impl<K: Coeff> CrossedQuotient<K> {
    /// Validates both `tau`-ideal conditions up to degree `d` and fails with
    /// the first witness otherwise.
    pub fn new(cross: Cross<K>, a: QuadraticAlgebra<K>, b: QuadraticAlgebra<K>, d: usize) -> Result<Self, QuadraticError> {
        if a.alphabet() != Alphabet::A || b.alphabet() != Alphabet::B {
            return Err(QuadraticError::DimensionMismatch("the first algebra must use alphabet A and the second B".into()));
        }
        if a.dim() != cross.dim_a() || b.dim() != cross.dim_b() {
            return Err(QuadraticError::DimensionMismatch(format!(
                "algebras have {} and {} generators but the cross expects {} and {}",
                a.dim(),
                b.dim(),
                cross.dim_a(),
                cross.dim_b()
            )));
        }
        let left = check_tau_ideal(&cross, a.relations(), Side::Left, d, a.order())?;
        let right = check_tau_ideal(&cross, b.relations(), Side::Right, d, b.order())?;
        for r in [&left, &right] {
            if let Some(w) = r.failures.first() {
                return Err(QuadraticError::NotTauIdeal {
                    side: r.side.name(),
                    word: w.word.to_string(),
                    generator: w.generator,
                    remainder: w.remainder.to_string(),
                });
            }
        }
        Ok(Self { cross, a, b, left, right })
    }

    pub fn cross(&self) -> &Cross<K> {
        &self.cross
    }

    pub fn a(&self) -> &QuadraticAlgebra<K> {
        &self.a
    }

    pub fn b(&self) -> &QuadraticAlgebra<K> {
        &self.b
    }

    pub fn tau_reports(&self) -> (&TauIdealReport<K>, &TauIdealReport<K>) {
        (&self.left, &self.right)
    }

    /// Wick-orders `p` and then reduces the `A` and `B` segments of each word.
    pub fn normal_form(&self, p: &NCPoly<K>) -> Result<NCPoly<K>, QuadraticError> {
        self.cross.check_poly(p)?;
        let ordered = wick_order(&self.cross, p, Strategy::Rightmost);
        let mut out = NCPoly::zero();
        for (w, c) in ordered.terms() {
            let (alpha, beta) = w.split_ordered().expect("ordered value");
            let ra = self.a.normal_form(&NCPoly::word(alpha));
            let rb = self.b.normal_form(&NCPoly::word(beta));
            out.add_scaled(&ra.mul_free(&rb), c);
        }
        Ok(out)
    }

    pub fn mul(&self, u: &NCPoly<K>, v: &NCPoly<K>) -> Result<NCPoly<K>, QuadraticError> {
        self.normal_form(&u.mul_free(v))
    }

    /// Number of normal words with `l` letters from `A` and `k` from `B`.
    pub fn graded_dimension(&self, k: usize, l: usize) -> usize {
        self.a.basis_count(l) * self.b.basis_count(k)
    }
}

/// Normal form in the crossed product of `a` and `b`; the `tau`-ideal
/// conditions are checked up to the degree of `p` (at least 2) first.
pub fn quotient_normal_form<K: Coeff>(
    cross: &Cross<K>,
    a: &QuadraticAlgebra<K>,
    b: &QuadraticAlgebra<K>,
    p: &NCPoly<K>,
) -> Result<NCPoly<K>, QuadraticError> {
    let d = p.degree().unwrap_or(0).max(2);
    CrossedQuotient::new(cross.clone(), a.clone(), b.clone(), d)?.normal_form(p)
}

/// Normal-word count at bidegree `(k, l)`, after validating the quotient up
/// to degree `k + l` (at least 2).
pub fn graded_dimension<K: Coeff>(
    cross: &Cross<K>,
    a: &QuadraticAlgebra<K>,
    b: &QuadraticAlgebra<K>,
    k: usize,
    l: usize,
) -> Result<usize, QuadraticError> {
    let q = CrossedQuotient::new(cross.clone(), a.clone(), b.clone(), (k + l).max(2))?;
    Ok(q.graded_dimension(k, l))
}

/// The quantum Weyl algebra of a Hecke R-matrix with every check that went
/// into building it.
#[derive(Clone, Debug)]
pub struct QuantumWeyl<K> {
    pub quotient: CrossedQuotient<K>,
    /// `q^{-1} R`, the relation operator of the coordinate algebra.
    pub relation_a: Operator2<K>,
    /// `q^{-1} R^T` with the reversed transpose of [`Operator2::reversed_transpose`].
    pub relation_b: Operator2<K>,
    /// The twist as an operator `F (x) E -> E (x) F`.
    pub twist: Operator2<K>,
    pub consistency: OperatorReport<K>,
    pub sufficient: OperatorReport<K>,
}

impl<K: Coeff> QuantumWeyl<K> {
    pub fn pass(&self) -> bool {
        let (l, r) = self.quotient.tau_reports();
        self.consistency.pass() && self.sufficient.pass() && l.pass() && r.pass()
    }
}

/// The twist `y^i x^j -> sum_{k,l} q R[(j,l),(i,k)] x^k y^l`.
///
/// `B` generators are the dual basis, so the operator `C = qR` acts with its
/// `B` slots read through the dual pairing; this placement is the one for
/// which the pairing `y^i x^j -> ... + delta^{ij}` is compatible with both
/// ideals.
pub fn weyl_twist<K: Coeff>(r: &Operator2<K>, q: &K) -> Result<TwistMatrix<K>, QuadraticError> {
    let m = r
        .square_dim()
        .ok_or_else(|| QuadraticError::DimensionMismatch("R must act on E (x) E".into()))?;
    let mut t = TwistMatrix::zero(m, m);
    for i in 1..=m {
        for j in 1..=m {
            for k in 1..=m {
                for l in 1..=m {
                    t.set(i, j, k, l, q.clone() * r.get(j, l, i, k).clone())?;
                }
            }
        }
    }
    Ok(t)
}

/// Builds `A = TE/<id - R/q>`, `B = TE'/<id - R^T/q>` and the cross
/// generated by [`weyl_twist`] with the orthonormal pairing, then checks the
/// consistency identities and both `tau`-ideal conditions up to degree `d`.
pub fn build_quantum_weyl<K: Coeff>(r: &Operator2<K>, q: &K, d: usize) -> Result<QuantumWeyl<K>, QuadraticError> {
    let braid = check_braid(r)?;
    if !braid.pass {
        return Err(QuadraticError::BraidFailure);
    }
    let hecke = check_hecke(r, q)?;
    if !hecke.pass {
        return Err(QuadraticError::HeckeFailure);
    }
    let m = r.square_dim().expect("checked by braid");
    let qi = q.inv().ok_or(QuadraticError::ZeroParameter)?;
    let relation_a = r.scale(&qi);
    let relation_b = r.reversed_transpose()?.scale(&qi);
    let t = weyl_twist(r, q)?;
    let twist = Operator2::from_twist(&t);
    let consistency = check_consistency(&relation_a, &relation_b, &twist)?;
    let sufficient = check_sufficient(&relation_a, &relation_b, &twist)?;
    let sequence: Vec<usize> = (1..=m).collect();
    let a = QuadraticAlgebra::new(&relation_a, Alphabet::A, &sequence)?;
    let b = QuadraticAlgebra::new(&relation_b, Alphabet::B, &sequence)?;
    let cross = Cross::with_pairing(t, Pairing::orthonormal(m))?;
    let quotient = CrossedQuotient::new(cross, a, b, d)?;
    Ok(QuantumWeyl { quotient, relation_a, relation_b, twist, consistency, sufficient })
}

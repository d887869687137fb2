use num_traits::{One, Zero};
use proptest::prelude::*;

use super::*;
use crate::cross::{Cross, Pairing, TwistMatrix};
use crate::linalg::{Matrix, WordOrder};
use crate::poly::NCPoly;
use crate::word::{Alphabet, Letter, Word};
use crate::Scalar;

type P = NCPoly<Scalar>;

fn s(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn xs(i: &[usize]) -> Word {
    Word::from_indices(Alphabet::A, i)
}

fn ys(i: &[usize]) -> Word {
    Word::from_indices(Alphabet::B, i)
}

fn weyl(q: &Scalar) -> QuantumWeyl<Scalar> {
    build_quantum_weyl(&standard_hecke_r(q).unwrap(), q, 3).unwrap()
}

#[test]
fn quantum_weyl_passes_all_checks() {
    for q in [s(1, 2), s(2, 1), s(1, 1)] {
        let w = weyl(&q);
        assert!(w.pass(), "q={q}");
        for k in 0..=4 {
            for l in 0..=4 - k {
                assert_eq!(w.quotient.graded_dimension(k, l), (k + 1) * (l + 1), "q={q} k={k} l={l}");
            }
        }
        for d in 0..=4 {
            assert_eq!(w.quotient.a().dimension_by_rank(d), d + 1);
            assert_eq!(w.quotient.b().dimension_by_rank(d), d + 1);
        }
    }
}

#[test]
fn quantum_weyl_relations_at_half() {
    let q = s(1, 2);
    let w = weyl(&q);
    let nf = |word: Word| w.quotient.normal_form(&P::word(word)).unwrap();
    let yx = |i: usize, j: usize| Word::new(vec![Letter::b(i), Letter::a(j)]);
    let xy = |i: usize, j: usize| xs(&[i]).mul(&ys(&[j]));
    // y1 x1 = 1 + q^2 x1 y1 + q (q - 1/q) x2 y2
    let expected = P::from_terms([(Word::unit(), s(1, 1)), (xy(1, 1), s(1, 4)), (xy(2, 2), s(-3, 4))]);
    assert_eq!(nf(yx(1, 1)), expected);
    assert_eq!(nf(yx(2, 2)), P::from_terms([(Word::unit(), s(1, 1)), (xy(2, 2), s(1, 4))]));
    assert_eq!(nf(yx(2, 1)), P::monomial(s(1, 2), xy(1, 2)));
    assert_eq!(nf(yx(1, 2)), P::monomial(s(1, 2), xy(2, 1)));
    // coordinate and derivative algebras are quantum planes
    assert_eq!(nf(xs(&[2, 1])), P::monomial(s(2, 1), xs(&[1, 2])));
    let b = w.quotient.b().relations();
    assert_eq!(b.len(), 1);
    let normal = nf(ys(&[2, 1]));
    assert_eq!(normal.len(), 1);
    assert!(normal.coeff(&ys(&[1, 2])) == s(1, 2) || normal.coeff(&ys(&[1, 2])) == s(2, 1));
}

#[test]
fn one_dimensional_weyl_algebra() {
    let q = s(1, 2);
    let r = Operator2::square(1, Matrix::from_rows(vec![vec![q.clone()]])).unwrap();
    let w = build_quantum_weyl(&r, &q, 4).unwrap();
    assert!(w.pass());
    // C = qR = q^2 on the single pair, plus the pairing
    let got = w.quotient.normal_form(&P::word(ys(&[1]).mul(&xs(&[1])))).unwrap();
    assert_eq!(got, P::from_terms([(Word::unit(), s(1, 1)), (xs(&[1]).mul(&ys(&[1])), s(1, 4))]));
    assert_eq!(w.quotient.graded_dimension(3, 2), 1);
}

#[test]
fn weyl_builder_names_the_failing_identity() {
    let err = build_quantum_weyl(&Operator2::<Scalar>::identity(2), &s(2, 1), 3).unwrap_err();
    assert_eq!(err, QuadraticError::HeckeFailure);
    assert!(err.to_string().contains("Hecke"));
    let mut m = Matrix::<Scalar>::identity(4);
    m.set(1, 0, Scalar::one());
    let err = build_quantum_weyl(&Operator2::square(2, m).unwrap(), &s(1, 1), 3).unwrap_err();
    assert_eq!(err, QuadraticError::BraidFailure);
    assert!(matches!(
        build_quantum_weyl(&Operator2::<Scalar>::identity(2), &Scalar::zero(), 3),
        Err(QuadraticError::ZeroParameter)
    ));
}

#[test]
fn literal_operator_reading_preserves_ideal_only_without_pairing() {
    let q = s(1, 2);
    let r = standard_hecke_r(&q).unwrap();
    let t = r.scale(&q).to_twist().unwrap();
    let plane = [P::from_terms([(xs(&[1, 2]), s(1, 1)), (xs(&[2, 1]), -q.clone())])];
    let order = WordOrder::natural();
    let homogeneous = Cross::new(t.clone());
    assert!(check_tau_ideal(&homogeneous, &plane, Side::Left, 3, &order).unwrap().pass());
    let paired = Cross::with_pairing(t, Pairing::orthonormal(2)).unwrap();
    let report = check_tau_ideal(&paired, &plane, Side::Left, 3, &order).unwrap();
    assert!(!report.pass());
    // the obstruction sits in degree one with coefficient 1 - q^2 up to scale
    assert!(report.failures.iter().any(|f| f.part.degree() == Some(1)));
}

#[test]
fn quotient_rejects_non_ideal() {
    let q = s(1, 2);
    let a = QuadraticAlgebra::new(&standard_hecke_r(&q).unwrap().scale(&s(2, 1)), Alphabet::A, &[]).unwrap();
    assert_eq!(a.relations().len(), 1);
    let b = QuadraticAlgebra::free(Alphabet::B, 2);
    let t = TwistMatrix::zero(2, 2).with(1, 1, 1, 2, s(1, 1)).unwrap().with(1, 2, 2, 1, s(1, 1)).unwrap();
    let c = Cross::new(t);
    let err = quotient_normal_form(&c, &a, &b, &P::word(xs(&[1]))).unwrap_err();
    assert!(matches!(err, QuadraticError::NotTauIdeal { side: "left", .. }), "{err}");
}

#[test]
fn free_quotient_counts() {
    let c = Cross::new(TwistMatrix::<Scalar>::switch(3, 2));
    let a = QuadraticAlgebra::free(Alphabet::A, 3);
    let b = QuadraticAlgebra::free(Alphabet::B, 2);
    assert_eq!(graded_dimension(&c, &a, &b, 0, 3).unwrap(), 27);
    assert_eq!(graded_dimension(&c, &a, &b, 2, 1).unwrap(), 12);
    let p = P::word(xs(&[3, 1]));
    assert_eq!(quotient_normal_form(&c, &a, &b, &p).unwrap(), p);
}

#[test]
fn graded_dimension_factorizes() {
    let w = weyl(&s(2, 1));
    let q = &w.quotient;
    for k in 0..=5 {
        for l in 0..=5 - k {
            assert_eq!(q.graded_dimension(k, l), q.graded_dimension(k, 0) * q.graded_dimension(0, l));
        }
    }
}

fn mixed_word(max: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec((any::<bool>(), 1usize..=2), 0..=max).prop_map(|v| {
        v.into_iter().map(|(b, i)| if b { Letter::b(i) } else { Letter::a(i) }).collect()
    })
}

fn small_matrix(dim: usize) -> impl Strategy<Value = Matrix<Scalar>> {
    prop::collection::vec(-2i64..=2, dim * dim).prop_map(move |v| {
        Matrix::from_rows(v.chunks(dim).map(|r| r.iter().map(|&x| Scalar::from(x)).collect()).collect())
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn quotient_product_is_well_defined(u in mixed_word(2), v in mixed_word(2)) {
        let w = weyl(&s(1, 2));
        let q = &w.quotient;
        let (pu, pv) = (P::word(u), P::word(v));
        let direct = q.mul(&pu, &pv).unwrap();
        let via = q.mul(&q.normal_form(&pu).unwrap(), &q.normal_form(&pv).unwrap()).unwrap();
        prop_assert_eq!(direct, via);
    }

    #[test]
    fn sufficient_implies_consistent(r in small_matrix(4), sm in small_matrix(4), c in small_matrix(4), lambda in -3i64..=3, mode in 0u8..3) {
        let (r, sm) = (Operator2::square(2, r).unwrap(), Operator2::square(2, sm).unwrap());
        let c = Operator2::new((2, 2), (2, 2), c).unwrap();
        let (r, sm, c) = match mode {
            0 => (r, sm, Operator2::switch(2, 2).scale(&Scalar::from(lambda))),
            1 => (Operator2::identity(2).scale(&Scalar::from(lambda)), Operator2::identity(2), c),
            _ => (r, sm, c),
        };
        let suff = check_sufficient(&r, &sm, &c).unwrap();
        if mode < 2 {
            prop_assert!(suff.pass());
        }
        if suff.pass() {
            prop_assert!(check_consistency(&r, &sm, &c).unwrap().pass());
        }
    }
}

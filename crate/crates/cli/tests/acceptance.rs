//! End-to-end acceptance run: one line per criterion, nonzero exit on any
//! failure. Every comparison is exact.

mod common;

use std::process::ExitCode;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistalg::cross::{
    verify_associativity, verify_cross_axioms, verify_hexagon, wick_order, Cross, CrossIdentity, Strategy,
    TwistMatrix,
};
use twistalg::fock::{check_adjointness, check_psd, gram_matrix, FockVector, GramMatrix};
use twistalg::linalg::{rank, Matrix};
use twistalg::poly::{star, NCPoly};
use twistalg::quadratic::{build_quantum_weyl, check_braid, check_hecke, standard_hecke_r, Operator2};
use twistalg::wick::{check_star_cross, check_wick_basis, normal_order, WickSpec};
use twistalg::word::words_of_length;
use twistalg::{Alphabet, Coeff, Letter, Poly, Scalar, Word};

type Outcome = Result<(), String>;

fn s(n: i64, d: i64) -> Scalar {
    Scalar::ratio(n, d)
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Outcome {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn small(rng: &mut ChaCha8Rng) -> Scalar {
    s(rng.gen_range(-3..=3), rng.gen_range(1..=3))
}

fn nonzero(rng: &mut ChaCha8Rng) -> Scalar {
    loop {
        let v = small(rng);
        if v != Scalar::from(0) {
            return v;
        }
    }
}

fn random_twist(rng: &mut ChaCha8Rng, m: usize, n: usize) -> TwistMatrix<Scalar> {
    let mut t = TwistMatrix::zero(m, n);
    for i in 1..=n {
        for j in 1..=m {
            for k in 1..=m {
                for l in 1..=n {
                    if rng.gen_bool(0.5) {
                        t.set(i, j, k, l, small(rng)).unwrap();
                    }
                }
            }
        }
    }
    t
}

/// A twist with `conj(t^{ij}_{kl}) = t^{ji}_{lk}`, entries in `Q(i)`.
fn random_hermitian(rng: &mut ChaCha8Rng, n: usize) -> TwistMatrix<Scalar> {
    let mut t = TwistMatrix::zero(n, n);
    for i in 1..=n {
        for j in 1..=n {
            for k in 1..=n {
                for l in 1..=n {
                    let (pi, pj, pk, pl) = (j, i, l, k);
                    if (pi, pj, pk, pl) < (i, j, k, l) || !rng.gen_bool(0.4) {
                        continue;
                    }
                    let mut v = small(rng);
                    if (pi, pj, pk, pl) != (i, j, k, l) {
                        v += s(rng.gen_range(-2..=2), 2) * Scalar::i();
                    }
                    t.set(i, j, k, l, v.clone()).unwrap();
                    t.set(pi, pj, pk, pl, v.conj()).unwrap();
                }
            }
        }
    }
    t
}

fn ys(i: &[usize]) -> Word {
    Word::from_indices(Alphabet::B, i)
}

fn xs(i: &[usize]) -> Word {
    Word::from_indices(Alphabet::A, i)
}

/// Cross axioms, hexagon and associativity up to degree 4, plus agreement of
/// the extended cross with literal left-to-right rewriting of `b a`.
fn criterion_1() -> Outcome {
    let mut rng = ChaCha8Rng::seed_from_u64(1);
    let mut crosses = vec![
        ("switch 2x2", TwistMatrix::switch(2, 2)),
        ("switch 3x2", TwistMatrix::switch(3, 2)),
        ("graded 2x2", TwistMatrix::graded(2, 2)),
    ];
    for n in 0..3 {
        let tij: Vec<Scalar> = (0..4).map(|_| nonzero(&mut rng)).collect();
        crosses.push((["color a", "color b", "color c"][n], TwistMatrix::color(2, 2, |i, j| tij[(i - 1) * 2 + j - 1].clone())));
    }
    for name in ["random a", "random b", "random c"] {
        crosses.push((name, random_twist(&mut rng, 2, 2)));
    }
    for (name, t) in crosses {
        let c = Cross::new(t);
        let axioms = verify_cross_axioms(&c, 4);
        ensure(axioms.pass(), || format!("{name}: {:?}", axioms.violations.first()))?;
        let assoc = verify_associativity(&c, 4);
        ensure(assoc.pass(), || format!("{name}: associativity"))?;
        let hex = verify_hexagon(&c, 4).map_err(|e| e.to_string())?;
        ensure(hex.pass() && hex.checked > 0, || format!("{name}: hexagon"))?;
        for kb in 1..=3 {
            for la in 1..=4 - kb {
                for b in words_of_length(Alphabet::B, c.dim_b(), kb) {
                    for a in words_of_length(Alphabet::A, c.dim_a(), la) {
                        let direct = wick_order(&c, &Poly::word(b.mul(&a)), Strategy::Leftmost);
                        ensure(c.apply(&b, &a) == direct, || format!("{name}: extension at {b} {a}"))?;
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_2() -> Outcome {
    let mut c = Cross::new(TwistMatrix::<Scalar>::switch(1, 1));
    c.set_override(ys(&[1]), xs(&[1, 1]), Poly::monomial(s(2, 1), xs(&[1, 1]).mul(&ys(&[1])))).unwrap();
    let report = verify_cross_axioms(&c, 3);
    let v = report.failing(CrossIdentity::MultiplicativeInA).next().ok_or("no violation reported")?;
    ensure(v.witness == vec![ys(&[1]), xs(&[1]), xs(&[1])], || format!("unexpected witness {:?}", v.witness))?;
    ensure(v.lhs != v.rhs, || "witness sides agree".into())
}

/// `R1 R2 R1 = R2 R1 R2` by explicit index sums.
fn braid_by_sums(r: &Operator2<Scalar>, m: usize) -> bool {
    let r = |a: usize, b: usize, c: usize, d: usize| r.get(a, b, c, d).clone();
    let idx: Vec<(usize, usize, usize)> =
        (1..=m).flat_map(|a| (1..=m).flat_map(move |b| (1..=m).map(move |c| (a, b, c)))).collect();
    // (R1)_{abc,def} = R[(a,b),(d,e)] delta_{cf}; (R2)_{abc,def} = delta_{ad} R[(b,c),(e,f)]
    let r1 = |o: (usize, usize, usize), i: (usize, usize, usize)| if o.2 == i.2 { r(o.0, o.1, i.0, i.1) } else { Scalar::from(0) };
    let r2 = |o: (usize, usize, usize), i: (usize, usize, usize)| if o.0 == i.0 { r(o.1, o.2, i.1, i.2) } else { Scalar::from(0) };
    for &o in &idx {
        for &i in &idx {
            let mut lhs = Scalar::from(0);
            let mut rhs = Scalar::from(0);
            for &p in &idx {
                for &q in &idx {
                    lhs += r1(o, p) * r2(p, q) * r1(q, i);
                    rhs += r2(o, p) * r1(p, q) * r2(q, i);
                }
            }
            if lhs != rhs {
                return false;
            }
        }
    }
    true
}

/// `(R - q)(R + 1/q) = 0` by explicit index sums.
fn hecke_by_sums(r: &Operator2<Scalar>, m: usize, q: &Scalar) -> bool {
    let qi = q.inv().unwrap();
    let pairs: Vec<(usize, usize)> = (1..=m).flat_map(|a| (1..=m).map(move |b| (a, b))).collect();
    let shifted = |o: (usize, usize), i: (usize, usize), c: &Scalar| {
        let v = r.get(o.0, o.1, i.0, i.1).clone();
        if o == i {
            v + c.clone()
        } else {
            v
        }
    };
    pairs.iter().all(|&o| {
        pairs.iter().all(|&i| {
            let sum: Scalar = pairs.iter().map(|&p| shifted(o, p, &-q.clone()) * shifted(p, i, &qi)).sum();
            sum == Scalar::from(0)
        })
    })
}

fn criterion_3() -> Outcome {
    for q in [s(1, 2), s(2, 1), s(1, 1)] {
        let r = standard_hecke_r(&q).map_err(|e| e.to_string())?;
        ensure(braid_by_sums(&r, 2) && hecke_by_sums(&r, 2, &q), || format!("q={q}: R fails braid or Hecke"))?;
        ensure(check_braid(&r).unwrap().pass && check_hecke(&r, &q).unwrap().pass, || format!("q={q}: library check"))?;
        let w = build_quantum_weyl(&r, &q, 3).map_err(|e| format!("q={q}: {e}"))?;
        ensure(w.consistency.pass(), || format!("q={q}: consistency"))?;
        ensure(w.sufficient.pass(), || format!("q={q}: sufficient"))?;
        let (left, right) = w.quotient.tau_reports();
        ensure(left.pass() && right.pass() && left.degree == 3, || format!("q={q}: tau-ideal"))?;
        for k in 0..=4 {
            for l in 0..=4 - k {
                let got = w.quotient.graded_dimension(k, l);
                ensure(got == (k + 1) * (l + 1), || format!("q={q}: dim({k},{l}) = {got}"))?;
            }
        }
    }
    Ok(())
}

fn hermitian_specs() -> Vec<WickSpec<Scalar>> {
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    (0..20).map(|_| WickSpec::new(2, random_hermitian(&mut rng, 2)).expect("star-cross by construction")).collect()
}

fn criterion_4() -> Outcome {
    for (n, spec) in hermitian_specs().iter().enumerate() {
        ensure(check_star_cross(spec.twist()).unwrap().pass(), || format!("twist {n} is not Hermitian"))?;
        let report = check_wick_basis(spec, 4);
        ensure(report.pass(), || {
            format!("twist {n}: {} strategy, {} closure failures", report.strategy_failures.len(), report.closure_failures.len())
        })?;
    }
    Ok(())
}

/// `<u|v>` as the vacuum coefficient of the normal-ordered `u* v`.
fn gram_oracle(spec: &WickSpec<Scalar>, u: &Word, v: &Word) -> Scalar {
    let p = star(&Poly::word(u.clone())).mul_free(&Poly::word(v.clone()));
    normal_order(spec, &p).coeff(&Word::unit())
}

fn fock_specs() -> Vec<(String, WickSpec<Scalar>)> {
    let mut out = Vec::new();
    for q in [s(1, 2), s(-1, 2)] {
        for n in [1, 2] {
            out.push((format!("q-ccr n={n} q={q}"), WickSpec::q_ccr(n, q.clone()).unwrap()));
        }
    }
    out.push(("car n=2".into(), WickSpec::car(2).unwrap()));
    out
}

fn criterion_5() -> Outcome {
    for (name, spec) in fock_specs() {
        for d in 0..=3 {
            let g = gram_matrix(&spec, d);
            for (iu, u) in g.basis.iter().enumerate() {
                for (iv, v) in g.basis.iter().enumerate() {
                    let want = gram_oracle(&spec, u, v);
                    ensure(*g.get(iu, iv) == want, || format!("{name}: <{u}|{v}> = {} vs {want}", g.get(iu, iv)))?;
                }
            }
        }
    }
    Ok(())
}

fn q_factorial_oracle(q: &Scalar, n: usize) -> Scalar {
    let mut acc = Scalar::from(1);
    for k in 1..=n {
        let mut qk = Scalar::from(0);
        let mut p = Scalar::from(1);
        for _ in 0..k {
            qk += p.clone();
            p *= q.clone();
        }
        acc *= qk;
    }
    acc
}

fn criterion_6() -> Outcome {
    for q in [s(1, 1), s(1, 2), s(-1, 2)] {
        let spec = WickSpec::q_ccr(1, q.clone()).unwrap();
        for n in 0..=5 {
            let g = gram_matrix(&spec, n);
            let want = q_factorial_oracle(&q, n);
            ensure(g.size() == 1 && *g.get(0, 0) == want, || format!("q={q} n={n}: {} vs {want}", g.get(0, 0)))?;
            if q == s(1, 1) {
                let fact: i64 = (1..=n as i64).product();
                ensure(want == Scalar::from(fact), || format!("n={n}: CCR factorial"))?;
            }
        }
    }
    let car = gram_matrix(&WickSpec::car(2).unwrap(), 2);
    let z = || Scalar::from(0);
    let (p, m) = (Scalar::from(1), Scalar::from(-1));
    let expected = Matrix::from_rows(vec![
        vec![z(), z(), z(), z()],
        vec![z(), p.clone(), m.clone(), z()],
        vec![z(), m, p, z()],
        vec![z(), z(), z(), z()],
    ]);
    ensure(car.entries == expected, || "CAR degree-2 Gram".into())?;
    ensure(rank(&car.entries) == 1, || "CAR Gram rank".into())?;
    let psd = check_psd(&car).map_err(|e| e.to_string())?;
    ensure(psd.psd && psd.kernel_dim == Some(3), || format!("CAR kernel {:?}", psd.kernel_dim))
}

fn norm(g: &GramMatrix<Scalar>, v: &FockVector<Scalar>) -> Scalar {
    g.inner(v, v).expect("witness lives on the basis")
}

fn criterion_7() -> Outcome {
    let samples = [s(-9, 10), s(-1, 2), s(-1, 3), s(0, 1), s(1, 4), s(1, 2), s(9, 10)];
    for q in &samples {
        for n in [1, 2] {
            let spec = WickSpec::q_ccr(n, q.clone()).unwrap();
            for d in 0..=4 {
                let g = gram_matrix(&spec, d);
                let r = check_psd(&g).map_err(|e| e.to_string())?;
                ensure(r.psd, || format!("q={q} n={n} d={d}: not PSD"))?;
                ensure(r.kernel_dim == Some(g.size() - rank(&g.entries)), || format!("q={q} n={n} d={d}: kernel"))?;
            }
        }
    }
    let spec = WickSpec::q_ccr(1, s(-2, 1)).unwrap();
    let g = gram_matrix(&spec, 2);
    let r = check_psd(&g).map_err(|e| e.to_string())?;
    ensure(!r.psd, || "q=-2 reported PSD".into())?;
    let w = r.witness.ok_or("no witness")?;
    ensure(w == FockVector::word(xs(&[1, 1])).unwrap(), || "witness is not x x".into())?;
    let nrm = norm(&g, &w);
    ensure(r.witness_norm == Some(nrm.clone()) && nrm.real_sign() == Some(std::cmp::Ordering::Less), || {
        format!("witness norm {nrm}")
    })
}

fn criterion_8() -> Outcome {
    let mut specs = fock_specs();
    for q in [s(-9, 10), s(1, 4), s(9, 10), s(-2, 1)] {
        specs.push((format!("q-ccr n=2 q={q}"), WickSpec::q_ccr(2, q).unwrap()));
    }
    for (name, spec) in &specs {
        let r = check_adjointness(spec, 4);
        ensure(r.pass() && r.checked > 0, || format!("{name}: {:?}", r.failures.first()))?;
    }
    let mut t = TwistMatrix::graded(2, 2);
    t.set(1, 2, 2, 1, s(-1, 2)).unwrap();
    let mutant = WickSpec::new_unchecked(2, t).unwrap();
    let r = check_adjointness(&mutant, 4);
    let w = r.failures.first().ok_or("mutation passed")?;
    ensure(w.lhs != w.rhs, || "witness sides agree".into())
}

fn random_word(rng: &mut ChaCha8Rng, n: usize) -> Word {
    let len = rng.gen_range(0..=6);
    (0..len)
        .map(|_| {
            let i = rng.gen_range(1..=n);
            if rng.gen_bool(0.5) {
                Letter::a(i)
            } else {
                Letter::b(i)
            }
        })
        .collect()
}

fn criterion_9() -> Outcome {
    let mut specs: Vec<(String, WickSpec<Scalar>)> = fock_specs();
    specs.extend(hermitian_specs().into_iter().enumerate().map(|(n, w)| (format!("hermitian {n}"), w)));
    let mut rng = ChaCha8Rng::seed_from_u64(9);
    for (name, spec) in &specs {
        if !check_star_cross(spec.twist()).unwrap().pass() {
            continue;
        }
        for _ in 0..100 {
            let w = random_word(&mut rng, spec.dim());
            let p: NCPoly<Scalar> = Poly::word(w.clone());
            let lhs = star(&normal_order(spec, &p));
            let rhs = normal_order(spec, &star(&p));
            ensure(lhs == rhs, || format!("{name}: {w}"))?;
        }
    }
    Ok(())
}

fn criterion_10() -> Outcome {
    let failures: Vec<String> = common::CASES.iter().filter_map(common::mismatch).collect();
    ensure(failures.is_empty(), || failures.join("; "))
}

fn main() -> ExitCode {
    let criteria: [(u32, fn() -> Outcome); 10] = [
        (1, criterion_1),
        (2, criterion_2),
        (3, criterion_3),
        (4, criterion_4),
        (5, criterion_5),
        (6, criterion_6),
        (7, criterion_7),
        (8, criterion_8),
        (9, criterion_9),
        (10, criterion_10),
    ];
    let mut all = true;
    for (n, f) in criteria {
        match f() {
            Ok(()) => println!("criterion {n}: PASS"),
            Err(e) => {
                all = false;
                println!("criterion {n}: FAIL ({e})");
            }
        }
    }
    if all {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

use serde_json::{json, Value};
use twistalg::cross::{
    verify_associativity, verify_cross_axioms, verify_hexagon, wick_order, Cross, CrossIdentity, CrossReport, Pairing,
    Strategy,
};
use twistalg::fock::{check_adjointness, check_psd, gram_matrix};
use twistalg::linalg::rank;
use twistalg::quadratic::{
    build_quantum_weyl, check_braid, check_consistency, check_hecke, check_sufficient, check_tau_ideal,
    CrossedQuotient, Operator2, OperatorCheck, QuadraticError, Side, TauIdealReport,
};
use twistalg::wick::{check_star_cross, check_wick_basis, WickSpec};
use twistalg::{Alphabet, Coeff, Letter, Poly, Scalar, Word};

use crate::report::{Check, Report};
use crate::spec::{AlgebraSpec, Names};

/// Problems with the request itself rather than with the mathematics.
#[derive(Debug)]
pub struct InputError(pub String);

type Outcome = Result<Report, InputError>;

fn input<T>(msg: impl Into<String>) -> Result<T, InputError> {
    Err(InputError(msg.into()))
}

fn cross_of(spec: &AlgebraSpec) -> Result<Cross<Scalar>, InputError> {
    if !spec.pairing {
        return Ok(Cross::new(spec.twist.clone()));
    }
    if spec.dim_a() != spec.dim_b() {
        return input("the pairing needs the same number of a and b generators");
    }
    Cross::with_pairing(spec.twist.clone(), Pairing::orthonormal(spec.dim_a())).map_err(|e| InputError(e.to_string()))
}

fn wick_of(spec: &AlgebraSpec, command: &str) -> Result<WickSpec<Scalar>, InputError> {
    if spec.dim_a() != spec.dim_b() || !spec.pairing {
        return input(format!(
            "`{command}` needs a Wick spec: equal numbers of a and b generators and \"pairing\": true"
        ));
    }
    WickSpec::new_unchecked(spec.dim_a(), spec.twist.clone()).map_err(|e| InputError(e.to_string()))
}

fn spec_inputs(spec: &AlgebraSpec, extra: Value) -> Value {
    let mut v = json!({
        "spec": spec.name,
        "generators": { "a": spec.names.a, "b": spec.names.b },
        "pairing": spec.pairing,
    });
    if let (Value::Object(out), Value::Object(more)) = (&mut v, extra) {
        out.extend(more);
    }
    v
}

fn words(names: &Names, ws: &[Word]) -> Vec<String> {
    ws.iter().map(|w| names.word(w)).collect()
}

fn identity_check(names: &Names, report: &CrossReport<Scalar>, identity: CrossIdentity) -> Check {
    let witnesses = report
        .failing(identity)
        .map(|v| json!({ "words": words(names, &v.witness), "lhs": names.poly(&v.lhs), "rhs": names.poly(&v.rhs) }))
        .collect();
    Check::new(identity.name(), report.checked_for(identity), witnesses)
}

pub fn verify(spec: &AlgebraSpec, degree: usize, digest: String) -> Outcome {
    let cross = cross_of(spec)?;
    let names = &spec.names;
    let axioms = verify_cross_axioms(&cross, degree);
    let mut checks: Vec<Check> = [
        CrossIdentity::LeftUnit,
        CrossIdentity::RightUnit,
        CrossIdentity::MultiplicativeInB,
        CrossIdentity::MultiplicativeInA,
    ]
    .into_iter()
    .map(|id| identity_check(names, &axioms, id))
    .collect();
    let assoc = verify_associativity(&cross, degree);
    checks.push(identity_check(names, &assoc, CrossIdentity::Associativity));
    let hexagon = if cross.is_homogeneous() {
        let hex = verify_hexagon(&cross, degree).map_err(|e| InputError(e.to_string()))?;
        checks.push(identity_check(names, &hex, CrossIdentity::HexagonA));
        checks.push(identity_check(names, &hex, CrossIdentity::HexagonB));
        json!("checked")
    } else {
        json!("skipped: the pairing makes the cross inhomogeneous")
    };
    let results = json!({ "homogeneous": cross.is_homogeneous(), "hexagon": hexagon });
    Ok(Report::new("verify", digest, spec_inputs(spec, json!({ "degree": degree })), checks, results))
}

pub fn wick_basis(spec: &AlgebraSpec, degree: usize, digest: String) -> Outcome {
    let wick = wick_of(spec, "wick-basis")?;
    let names = &spec.names;
    let report = check_wick_basis(&wick, degree);
    let strategy = report
        .strategy_failures
        .iter()
        .map(|w| {
            let p = Poly::word(w.clone());
            json!({
                "word": names.word(w),
                "leftmost": names.poly(&wick_order(wick.cross(), &p, Strategy::Leftmost)),
                "rightmost": names.poly(&wick_order(wick.cross(), &p, Strategy::Rightmost)),
            })
        })
        .collect();
    let closure = report
        .closure_failures
        .iter()
        .map(|(u, v)| json!({ "u": names.word(u), "v": names.word(v) }))
        .collect();
    let census: Vec<Value> = report
        .census
        .iter()
        .map(|c| json!({ "a_letters": c.creators, "b_letters": c.annihilators, "observed": c.observed, "available": c.available }))
        .collect();
    let overfull = report
        .census
        .iter()
        .filter(|c| c.observed > c.available)
        .map(|c| json!({ "a_letters": c.creators, "b_letters": c.annihilators }))
        .collect();
    let checks = vec![
        Check::new("strategy-independence", report.words_checked, strategy),
        Check::new("closure", report.words_checked, closure),
        Check::new("census", report.census.len(), overfull),
        identity_check(names, &report.associativity, CrossIdentity::Associativity),
    ];
    let results = json!({ "census": census });
    Ok(Report::new("wick-basis", digest, spec_inputs(spec, json!({ "degree": degree })), checks, results))
}

pub fn star_cross(spec: &AlgebraSpec, digest: String) -> Outcome {
    if spec.dim_a() != spec.dim_b() {
        return input("`star-cross` needs the same number of a and b generators");
    }
    let t = &spec.twist;
    let report = check_star_cross(t).map_err(|e| InputError(e.to_string()))?;
    let witnesses = report
        .failure
        .iter()
        .map(|&(i, j, k, l)| {
            json!({
                "entry": [i, j, k, l],
                "conjugate": t.get(i, j, k, l).conj().to_string(),
                "partner": [j, i, l, k],
                "partner_value": t.get(j, i, l, k).to_string(),
            })
        })
        .collect();
    let checks = vec![Check::new("star-cross", report.checked, witnesses)];
    Ok(Report::new("star-cross", digest, spec_inputs(spec, json!({})), checks, json!({})))
}

fn tau_check(names: &Names, gens: &[Poly], report: &TauIdealReport<Scalar>) -> Check {
    let witnesses = report
        .failures
        .iter()
        .map(|w| {
            json!({
                "word": names.word(&w.word),
                "relation": names.poly(&gens[w.generator]),
                "partner": names.word(&w.partner),
                "image": names.poly(&w.part),
                "remainder": names.poly(&w.remainder),
            })
        })
        .collect();
    Check::new(format!("tau-ideal-{}", report.side.name()), report.checked, witnesses)
}

fn relation_error(e: QuadraticError) -> InputError {
    InputError(format!("relations: {e}"))
}

/// τ-ideal checks of both sides up to degree `d` plus the quotient when both
/// pass.
fn quotient_of(
    spec: &AlgebraSpec,
    cross: &Cross<Scalar>,
    d: usize,
) -> Result<(Vec<Check>, Option<CrossedQuotient<Scalar>>), InputError> {
    let a = spec.quadratic(Alphabet::A).map_err(relation_error)?;
    let b = spec.quadratic(Alphabet::B).map_err(relation_error)?;
    let left = check_tau_ideal(cross, a.relations(), Side::Left, d, a.order()).map_err(relation_error)?;
    let right = check_tau_ideal(cross, b.relations(), Side::Right, d, b.order()).map_err(relation_error)?;
    let checks = vec![tau_check(&spec.names, a.relations(), &left), tau_check(&spec.names, b.relations(), &right)];
    if !(left.pass() && right.pass()) {
        return Ok((checks, None));
    }
    let q = CrossedQuotient::new(cross.clone(), a, b, d).map_err(relation_error)?;
    Ok((checks, Some(q)))
}

pub fn normal_form(spec: &AlgebraSpec, word: &str, digest: String) -> Outcome {
    let names = &spec.names;
    let w = names.parse_word(word).map_err(|e| InputError(format!("--word: {e}")))?;
    let cross = cross_of(spec)?;
    let p = Poly::word(w.clone());
    let inputs = spec_inputs(spec, json!({ "word": names.word(&w) }));
    let (mut checks, nf) = if spec.has_relations() {
        let (checks, q) = quotient_of(spec, &cross, w.len().max(2))?;
        let nf = q.map(|q| q.normal_form(&p).expect("letters validated"));
        (checks, nf)
    } else {
        let left = wick_order(&cross, &p, Strategy::Leftmost);
        let right = wick_order(&cross, &p, Strategy::Rightmost);
        let witnesses = if left == right {
            vec![]
        } else {
            vec![json!({ "leftmost": names.poly(&left), "rightmost": names.poly(&right) })]
        };
        (vec![Check::new("strategy-independence", 1, witnesses)], Some(right))
    };
    let results = match nf {
        Some(nf) => {
            let unordered: Vec<Value> = nf.words().filter(|w| !w.is_wick_ordered()).map(|w| json!(names.word(w))).collect();
            checks.push(Check::new("wick-ordered", nf.len(), unordered));
            json!({ "normal_form": names.poly(&nf), "terms": names.terms(&nf) })
        }
        None => json!({}),
    };
    Ok(Report::new("normal-form", digest, inputs, checks, results))
}

pub fn gram(spec: &AlgebraSpec, degree: usize, psd: bool, digest: String) -> Outcome {
    let wick = wick_of(spec, "gram")?;
    let names = &spec.names;
    let mut checks = Vec::new();
    let mut degrees = Vec::new();
    for k in 0..=degree {
        let g = gram_matrix(&wick, k);
        let n = g.size();
        let asym: Vec<Value> = (0..n)
            .flat_map(|r| (r..n).map(move |c| (r, c)))
            .filter(|&(r, c)| *g.get(r, c) != g.get(c, r).conj())
            .map(|(r, c)| json!({ "row": names.word(&g.basis[r]), "col": names.word(&g.basis[c]) }))
            .collect();
        checks.push(Check::new(format!("hermitian-degree-{k}"), n * (n + 1) / 2, asym));
        let r = rank(&g.entries);
        let matrix: Vec<Vec<String>> = g.entries.to_rows().iter().map(|row| row.iter().map(ToString::to_string).collect()).collect();
        let mut entry = json!({
            "degree": k,
            "size": n,
            "basis": words(names, &g.basis),
            "matrix": matrix,
            "rank": r,
            "kernel_dim": n - r,
        });
        if psd {
            let witnesses = match check_psd(&g) {
                Err(e) => vec![json!({ "error": e.to_string() })],
                Ok(rep) => {
                    if let Some(pivots) = entry.as_object_mut() {
                        pivots.insert("pivots".into(), json!(rep.pivots.iter().map(ToString::to_string).collect::<Vec<_>>()));
                    }
                    match (rep.witness, rep.witness_norm) {
                        (Some(v), Some(norm)) => {
                            vec![json!({ "vector": names.terms(v.as_poly()), "norm": norm.to_string() })]
                        }
                        _ => vec![],
                    }
                }
            };
            checks.push(Check::new(format!("psd-degree-{k}"), 1, witnesses));
        }
        degrees.push(entry);
    }
    let results = json!({ "degrees": degrees });
    Ok(Report::new("gram", digest, spec_inputs(spec, json!({ "degree": degree, "psd": psd })), checks, results))
}

pub fn adjoint(spec: &AlgebraSpec, degree: usize, digest: String) -> Outcome {
    let wick = wick_of(spec, "adjoint")?;
    let names = &spec.names;
    let report = check_adjointness(&wick, degree);
    let witnesses = report
        .failures
        .iter()
        .map(|w| {
            json!({
                "generator": names.a[w.generator - 1],
                "u": names.word(&w.u),
                "v": names.word(&w.v),
                "lhs": w.lhs.to_string(),
                "rhs": w.rhs.to_string(),
            })
        })
        .collect();
    let checks = vec![Check::new("adjointness", report.checked, witnesses)];
    Ok(Report::new("adjoint", digest, spec_inputs(spec, json!({ "degree": degree })), checks, json!({})))
}

pub fn dims(spec: &AlgebraSpec, degree: usize, digest: String) -> Outcome {
    let cross = cross_of(spec)?;
    let (checks, quotient) = quotient_of(spec, &cross, degree.max(2))?;
    let results = match quotient {
        Some(q) => {
            let mut table = Vec::new();
            for total in 0..=degree {
                for k in 0..=total {
                    let l = total - k;
                    table.push(json!({ "b_degree": k, "a_degree": l, "dimension": q.graded_dimension(k, l) }));
                }
            }
            json!({ "graded_dimensions": table })
        }
        None => json!({}),
    };
    Ok(Report::new("dims", digest, spec_inputs(spec, json!({ "degree": degree })), checks, results))
}

fn operator_check(c: &OperatorCheck<Scalar>) -> Check {
    let sparse = |v: &[(Vec<usize>, Scalar)]| -> Vec<Value> { v.iter().map(|(i, c)| json!([i, c.to_string()])).collect() };
    let witnesses = c
        .witness
        .iter()
        .map(|w| json!({ "input": w.input, "lhs": sparse(&w.lhs), "rhs": sparse(&w.rhs) }))
        .collect();
    Check::new(c.name, 1, witnesses)
}

fn operator_json(op: &Operator2<Scalar>) -> Value {
    let rows: Vec<Vec<String>> = op.matrix().to_rows().iter().map(|r| r.iter().map(ToString::to_string).collect()).collect();
    json!({ "dims_in": [op.dims_in().0, op.dims_in().1], "dims_out": [op.dims_out().0, op.dims_out().1], "rows": rows })
}

pub fn consistency(r: &Operator2<Scalar>, s: &Operator2<Scalar>, c: &Operator2<Scalar>, digest: String) -> Outcome {
    let err = |e: QuadraticError| InputError(e.to_string());
    let cons = check_consistency(r, s, c).map_err(err)?;
    let suff = check_sufficient(r, s, c).map_err(err)?;
    let checks = cons.checks.iter().map(operator_check).collect();
    // the braid-type identities are sufficient, not necessary, so they are
    // reported without affecting the status
    let sufficient: Vec<Check> = suff.checks.iter().map(operator_check).collect();
    let inputs = json!({ "r": operator_json(r), "s": operator_json(s), "c": operator_json(c) });
    let results = json!({ "sufficient": sufficient });
    Ok(Report::new("consistency", digest, inputs, checks, results))
}

pub fn weyl(r: &Operator2<Scalar>, q: &Scalar, degree: usize, digest: String) -> Outcome {
    let err = |e: QuadraticError| match e {
        QuadraticError::ZeroParameter => InputError("--q must be nonzero".into()),
        other => InputError(other.to_string()),
    };
    let inputs = json!({ "r": operator_json(r), "q": q.to_string(), "degree": degree });
    let braid = check_braid(r).map_err(err)?;
    let hecke = check_hecke(r, q).map_err(err)?;
    let mut checks = vec![operator_check(&braid), operator_check(&hecke)];
    if !(braid.pass && hecke.pass) {
        return Ok(Report::new("weyl", digest, inputs, checks, json!({})));
    }
    let w = match build_quantum_weyl(r, q, degree) {
        Ok(w) => w,
        Err(QuadraticError::NotTauIdeal { side, word, generator, remainder }) => {
            let witness = json!({ "word": word, "relation": generator, "remainder": remainder });
            checks.push(Check::new(format!("tau-ideal-{side}"), 1, vec![witness]));
            return Ok(Report::new("weyl", digest, inputs, checks, json!({})));
        }
        Err(e) => return Err(err(e)),
    };
    let quotient = &w.quotient;
    let m = quotient.a().dim();
    let names = Names::standard(m, m);
    checks.extend(w.consistency.checks.iter().map(operator_check));
    checks.extend(w.sufficient.checks.iter().map(operator_check));
    let (left, right) = quotient.tau_reports();
    checks.push(tau_check(&names, quotient.a().relations(), left));
    checks.push(tau_check(&names, quotient.b().relations(), right));

    let mut rules = Vec::new();
    for i in 1..=m {
        for j in 1..=m {
            let w = Word::new(vec![Letter::b(i), Letter::a(j)]);
            let nf = quotient.normal_form(&Poly::word(w.clone())).map_err(err)?;
            rules.push(json!({ "word": names.word(&w), "normal_form": names.poly(&nf) }));
        }
    }
    let mut table = Vec::new();
    for total in 0..=degree {
        for k in 0..=total {
            let l = total - k;
            table.push(json!({ "b_degree": k, "a_degree": l, "dimension": quotient.graded_dimension(k, l) }));
        }
    }
    let rel = |ps: &[Poly]| -> Vec<String> { ps.iter().map(|p| names.poly(p)).collect() };
    let results = json!({
        "relations_a": rel(quotient.a().relations()),
        "relations_b": rel(quotient.b().relations()),
        "cross_relations": rules,
        "graded_dimensions": table,
    });
    Ok(Report::new("weyl", digest, inputs, checks, results))
}

mod common;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use twistalg::wick::WickSpec;
use twistalg::{Scalar, Twist};
use twistalg_cli::spec::{parse_operator, parse_spec, AlgebraSpec};

fn fixture(name: &str) -> String {
    std::fs::read_to_string(common::fixtures().join(name)).unwrap()
}

fn errors(text: &str) -> Vec<(String, String)> {
    parse_spec(text).unwrap_err().into_iter().map(|e| (e.at, e.message)).collect()
}

#[test]
fn minimal_spec_is_q_ccr() {
    let spec = parse_spec(&fixture("qccr1.json")).unwrap();
    assert_eq!(spec.names.b, vec!["x*".to_string()]);
    assert!(spec.pairing);
    let wick = WickSpec::new(1, spec.twist.clone()).unwrap();
    let expected = WickSpec::q_ccr(1, Scalar::ratio(1, 2)).unwrap();
    assert_eq!(wick.twist(), expected.twist());
}

#[test]
fn names_and_indices_agree() {
    let by_name = parse_spec(&fixture("qccr2.json")).unwrap();
    let q = Scalar::ratio(1, 2);
    assert_eq!(by_name.twist, Twist::q_cross(2, 2, q));
}

#[test]
fn rejects_json_numbers_for_values() {
    let e = errors(r#"{"generators": {"a": ["x"]}, "twist": [[1, 1, 1, 1, 0.5]]}"#);
    assert_eq!(e.len(), 1);
    assert_eq!(e[0].0, "twist[0][4]");
    assert!(e[0].1.contains("\"1/2\""), "{}", e[0].1);
    let e = errors(r#"{"generators": {"a": ["x"]}, "parameters": {"q": "1.5"}}"#);
    assert_eq!(e[0].0, "parameters.q");
    assert!(e[0].1.contains("1/2"));
}

#[test]
fn reports_every_problem_with_its_position() {
    let e = errors(
        r#"{"generators": {"a": ["x1", "x2"]}, "colour": 1,
            "twist": [[1, 1, 1, 9, "1"], [1, 1, 1, 1, "p"], [1, 1, 1, 1], ["x1", 1, 1, 1, "1"]]}"#,
    );
    let at: Vec<&str> = e.iter().map(|(a, _)| a.as_str()).collect();
    assert_eq!(at, ["colour", "twist[0][3]", "twist[1][4]", "twist[2]", "twist[3][0]"]);
    assert!(e[2].1.contains("unknown parameter `p`"));
}

#[test]
fn syntax_errors_carry_line_and_column() {
    let e = errors("{\n  \"generators\": {\"a\": [\"x\"]},\n  oops\n}");
    assert_eq!(e.len(), 1);
    assert!(e[0].0.starts_with("line 3, column"), "{}", e[0].0);
}

#[test]
fn duplicate_names_are_rejected() {
    let e = errors(r#"{"generators": {"a": ["x", "y"], "b": ["x", "z"]}}"#);
    assert_eq!(e[0].0, "generators.b[0]");
}

#[test]
fn values_accept_parameter_multiples() {
    let spec = parse_spec(
        r#"{"generators": {"a": ["x"]}, "parameters": {"q": "1/3"},
            "twist": [[1, 1, 1, 1, "-3/2*q"]]}"#,
    )
    .unwrap();
    assert_eq!(spec.twist.get(1, 1, 1, 1), Scalar::ratio(-1, 2));
    let spec = parse_spec(r#"{"generators": {"a": ["x"]}, "twist": [[1, 1, 1, 1, "1/2-1/3 i"]]}"#).unwrap();
    assert_eq!(spec.twist.get(1, 1, 1, 1), "1/2-1/3i".parse::<Scalar>().unwrap());
}

#[test]
fn operator_relations_match_polynomials() {
    let by_op = parse_spec(
        r#"{"generators": {"a": ["x1", "x2"]},
            "relations": {"a": {"operator": [["1","0","0","0"],["0","0","2","0"],["0","1/2","0","0"],["0","0","0","1"]]}}}"#,
    )
    .unwrap();
    let by_poly = parse_spec(
        r#"{"generators": {"a": ["x1", "x2"]},
            "relations": {"a": {"polynomials": [[["x1 x2", "1"], ["x2 x1", "-1/2"]]]}}}"#,
    )
    .unwrap();
    let a = by_op.quadratic(twistalg::Alphabet::A).unwrap();
    let b = by_poly.quadratic(twistalg::Alphabet::A).unwrap();
    assert_eq!(a.relations(), b.relations());
}

#[test]
fn operator_files_need_exact_entries() {
    let e = parse_operator(r#"{"rows": [["1", 0], ["0", "1"]]}"#).unwrap_err();
    assert_eq!(e[0].at, "rows");
    let e = parse_operator(r#"{"rows": [["1", "0", "0", "0"], ["0", "1", "0", "0"], ["0", "0", "1", "0"], ["0", "0", "0", 1]]}"#)
        .unwrap_err();
    assert_eq!(e[0].at, "rows[3][3]");
    let op = parse_operator(&fixture("r_hecke_half.json")).unwrap();
    assert_eq!(op.dims_in(), (2, 2));
}

fn round_trip(spec: &AlgebraSpec) {
    let text = serde_json::to_string_pretty(&spec.to_json()).unwrap();
    let back = parse_spec(&text).unwrap_or_else(|e| panic!("{text}\n{e:?}"));
    assert_eq!(&back, spec);
}

#[test]
fn fixtures_round_trip() {
    for entry in std::fs::read_dir(common::fixtures()).unwrap() {
        let path = entry.unwrap().path();
        let text = std::fs::read_to_string(&path).unwrap();
        if let Ok(spec) = parse_spec(&text) {
            round_trip(&spec);
        }
    }
}

#[test]
fn random_specs_round_trip() {
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for _ in 0..50 {
        let m = rng.gen_range(1..=3);
        let n = rng.gen_range(1..=3);
        let mut t = Twist::zero(m, n);
        for _ in 0..rng.gen_range(0..8) {
            let v = Scalar::ratio(rng.gen_range(-5..=5), rng.gen_range(1..=4))
                + Scalar::ratio(rng.gen_range(-2..=2), rng.gen_range(1..=3)) * Scalar::i();
            t.set(rng.gen_range(1..=n), rng.gen_range(1..=m), rng.gen_range(1..=m), rng.gen_range(1..=n), v).unwrap();
        }
        let pairing = m == n && rng.gen_bool(0.5);
        let names = twistalg_cli::spec::Names::standard(m, n);
        let spec = AlgebraSpec {
            name: format!("random {m}x{n}"),
            names,
            parameters: [("q".to_string(), Scalar::ratio(rng.gen_range(-3..=3), 7))].into_iter().collect(),
            twist: t,
            pairing,
            relations_a: None,
            relations_b: None,
        };
        round_trip(&spec);
    }
    round_trip(&parse_spec(&fixture("weyl_half.json")).unwrap());
}

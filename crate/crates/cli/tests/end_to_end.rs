mod common;

use std::process::Command;

use common::{args, golden, mismatch, run, CASES};

#[test]
fn reports_match_goldens() {
    let failures: Vec<String> = CASES.iter().filter_map(mismatch).collect();
    assert!(failures.is_empty(), "{}", failures.join("\n"));
}

#[test]
fn reports_are_deterministic() {
    for case in CASES {
        assert_eq!(run(case), run(case), "{}", case.name);
    }
}

#[test]
fn binary_exit_codes() {
    for name in ["verify_qccr2", "star_cross_skew", "error_decimal", "weyl_identity"] {
        let case = CASES.iter().find(|c| c.name == name).unwrap();
        let argv = args(case);
        let out = Command::new(env!("CARGO_BIN_EXE_twistalg")).args(&argv[1..]).output().unwrap();
        assert_eq!(out.status.code(), Some(case.code), "{name}");
        assert_eq!(String::from_utf8(out.stdout).unwrap(), run(case).stdout, "{name}");
    }
}

#[test]
fn usage_errors_exit_with_input_code() {
    let out = twistalg_cli::run(["twistalg", "frobnicate"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.is_empty());
    let out = twistalg_cli::run(["twistalg", "weyl", "--q", "2"]);
    assert_eq!(out.code, 2);
    let out = twistalg_cli::run(["twistalg", "verify", "/nonexistent/spec.json"]);
    assert_eq!(out.code, 2);
    assert!(out.stdout.contains("\"status\": \"input-error\""));
    let out = twistalg_cli::run(["twistalg", "--help"]);
    assert_eq!(out.code, 0);
}

#[test]
fn input_errors_name_the_entry() {
    let at = |name: &str| {
        let case = CASES.iter().find(|c| c.name == name).unwrap();
        let v: serde_json::Value = serde_json::from_str(&run(case).stdout).unwrap();
        v["errors"][0]["at"].as_str().unwrap().to_string()
    };
    assert_eq!(at("error_bad_index"), "twist[0][0]");
    assert_eq!(at("error_decimal"), "twist[0][4]");
    assert_eq!(at("error_unknown_generator"), "twist[0][1]");
    assert_eq!(at("error_duplicate"), "twist[1]");
}

#[test]
fn gram_reports_kernel_per_degree() {
    let case = CASES.iter().find(|c| c.name == "gram_car2_psd").unwrap();
    let v: serde_json::Value = serde_json::from_str(&run(case).stdout).unwrap();
    let kernels: Vec<u64> = v["results"]["degrees"].as_array().unwrap().iter().map(|d| d["kernel_dim"].as_u64().unwrap()).collect();
    // antisymmetric tensors: 1, 2, 1, 0 survive out of 1, 2, 4, 8
    assert_eq!(kernels, vec![0, 0, 3, 8]);
}

/// Rewrites the golden files; run with `cargo test -p twistalg-cli -- --ignored`.
#[test]
#[ignore]
fn regenerate_goldens() {
    std::fs::create_dir_all(golden("x").parent().unwrap()).unwrap();
    for case in CASES {
        let out = run(case);
        assert_eq!(out.code, case.code, "{}: {}", case.name, out.stderr);
        std::fs::write(golden(case.name), out.stdout).unwrap();
    }
}

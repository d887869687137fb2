//! Golden cases shared by the end-to-end tests and the acceptance runner.

#![allow(dead_code)]

use std::path::PathBuf;

use twistalg_cli::Outcome;

pub struct Case {
    pub name: &'static str,
    /// `@` is replaced by the fixture directory.
    pub args: &'static [&'static str],
    pub code: i32,
}

pub const CASES: &[Case] = &[
    Case { name: "verify_qccr2", args: &["verify", "@/qccr2.json", "--degree", "4"], code: 0 },
    Case { name: "verify_switch", args: &["verify", "@/switch.json", "--degree", "4"], code: 0 },
    Case { name: "wick_basis_qccr2", args: &["wick-basis", "@/qccr2.json", "--degree", "3"], code: 0 },
    Case { name: "star_cross_qccr2", args: &["star-cross", "@/qccr2.json"], code: 0 },
    Case { name: "star_cross_skew", args: &["star-cross", "@/skew.json"], code: 1 },
    Case { name: "normal_form_qccr2", args: &["normal-form", "@/qccr2.json", "--word", "x1* x2* x1 x2"], code: 0 },
    Case { name: "normal_form_weyl", args: &["normal-form", "@/weyl_half.json", "--word", "x1* x2 x1"], code: 0 },
    Case { name: "gram_car2_psd", args: &["gram", "@/car2.json", "--degree", "3", "--psd"], code: 0 },
    Case { name: "gram_qccr1", args: &["gram", "@/qccr1.json", "--degree", "5"], code: 0 },
    Case { name: "gram_minus2_psd", args: &["gram", "@/qccr_minus2.json", "--degree", "2", "--psd"], code: 1 },
    Case { name: "adjoint_qccr2", args: &["adjoint", "@/qccr2.json", "--degree", "3"], code: 0 },
    Case { name: "adjoint_skew", args: &["adjoint", "@/skew.json", "--degree", "2"], code: 1 },
    Case { name: "dims_weyl_half", args: &["dims", "@/weyl_half.json", "--degree", "4"], code: 0 },
    Case { name: "dims_weyl_broken", args: &["dims", "@/weyl_broken.json", "--degree", "3"], code: 1 },
    Case {
        name: "consistency_identity",
        args: &["consistency", "--r", "@/r_identity.json", "--s", "@/r_identity.json", "--c", "@/c_random.json"],
        code: 0,
    },
    Case {
        name: "consistency_switch",
        args: &["consistency", "--r", "@/switch4.json", "--s", "@/switch4.json", "--c", "@/c_random.json"],
        code: 1,
    },
    Case { name: "weyl_identity", args: &["weyl", "--r", "@/r_identity.json", "--q", "2"], code: 1 },
    Case { name: "weyl_half", args: &["weyl", "--r", "@/r_hecke_half.json", "--q", "1/2"], code: 0 },
    Case { name: "weyl_two", args: &["weyl", "--r", "@/r_hecke_two.json", "--q", "2", "--degree", "4"], code: 0 },
    Case { name: "error_bad_index", args: &["verify", "@/bad_index.json"], code: 2 },
    Case { name: "error_decimal", args: &["verify", "@/decimal.json"], code: 2 },
    Case { name: "error_unknown_generator", args: &["verify", "@/unknown_generator.json"], code: 2 },
    Case { name: "error_duplicate", args: &["verify", "@/duplicate.json"], code: 2 },
    Case { name: "error_q_decimal", args: &["weyl", "--r", "@/r_identity.json", "--q", "0.5"], code: 2 },
    Case { name: "error_not_wick", args: &["gram", "@/switch.json"], code: 2 },
    Case { name: "error_bad_word", args: &["normal-form", "@/qccr2.json", "--word", "x1 y7"], code: 2 },
];

pub fn fixtures() -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("fixtures")
}

pub fn golden(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests").join("golden").join(format!("{name}.json"))
}

pub fn args(case: &Case) -> Vec<String> {
    let dir = fixtures();
    let dir = dir.to_str().expect("utf-8 path");
    std::iter::once("twistalg".to_string()).chain(case.args.iter().map(|a| a.replace('@', dir))).collect()
}

pub fn run(case: &Case) -> Outcome {
    twistalg_cli::run(args(case))
}

/// `None` when the case matches its golden file and exit code, otherwise a
/// description of the mismatch.
pub fn mismatch(case: &Case) -> Option<String> {
    let out = run(case);
    if out.code != case.code {
        return Some(format!("{}: exit {} (expected {})\n{}", case.name, out.code, case.code, out.stderr));
    }
    match std::fs::read_to_string(golden(case.name)) {
        Err(e) => Some(format!("{}: cannot read golden: {e}", case.name)),
        Ok(g) if g != out.stdout => Some(format!("{}: report differs from golden", case.name)),
        Ok(_) => None,
    }
}

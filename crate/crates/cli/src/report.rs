//! Machine-readable reports. Field order is fixed by the struct layout and
//! JSON objects inside `inputs`, `results` and witnesses have sorted keys,
//! so identical inputs print identical bytes.

use serde::Serialize;
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::spec::SpecError;

/// Conventions every numerical result depends on.
#[derive(Clone, Debug, Serialize)]
pub struct Conventions {
    pub scalars: &'static str,
    pub indices: &'static str,
    pub twist: &'static str,
    pub pairing: &'static str,
    pub monomial_order: &'static str,
    pub wick_order: &'static str,
    pub vacuum: &'static str,
    pub inner_product: &'static str,
}

impl Default for Conventions {
    fn default() -> Self {
        Self {
            scalars: "exact Gaussian rationals written a/b, c/d i or a/b+c/d i",
            indices: "generators are numbered from 1 in declaration order; x* letters belong to the b alphabet",
            twist: "entry [i, j, k, l, t] means x*^i x^j -> sum t x^k x*^l; i and l index b, j and k index a",
            pairing: "when on, x*^i x^j also produces the scalar delta^{ij}",
            monomial_order: "length first, then lexicographic; letters compare by index, then a before b; \
                             quadratic relations lead with their largest word under the declared generator sequence",
            wick_order: "a letters left of b letters; normal forms push the rightmost inversion first",
            vacuum: "<0|0> = 1 and x*^i |0> = 0; the variant <0|0> = 0, x*^i |0> = |0> that also circulates \
                     is inconsistent with the annihilation recursion and is not used",
            inner_product: "antilinear in the first slot; <u|v> applies x*^{u_1} to v first",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub pass: bool,
    pub checked: usize,
    pub witnesses: Vec<Value>,
}

/// At most this many witnesses are listed per check.
pub const MAX_WITNESSES: usize = 5;

impl Check {
    pub fn new(name: impl Into<String>, checked: usize, witnesses: Vec<Value>) -> Self {
        let mut witnesses = witnesses;
        let pass = witnesses.is_empty();
        witnesses.truncate(MAX_WITNESSES);
        Self { name: name.into(), pass, checked, witnesses }
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub command: String,
    pub status: &'static str,
    pub inputs_digest: String,
    pub conventions: Conventions,
    pub inputs: Value,
    pub checks: Vec<Check>,
    pub results: Value,
}

impl Report {
    /// Checks are listed by name.
    pub fn new(command: &str, digest: String, inputs: Value, mut checks: Vec<Check>, results: Value) -> Self {
        checks.sort_by(|a, b| a.name.cmp(&b.name));
        let status = if checks.iter().all(|c| c.pass) { "pass" } else { "fail" };
        Self { command: command.into(), status, inputs_digest: digest, conventions: Conventions::default(), inputs, checks, results }
    }

    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.pass)
    }
}

#[derive(Clone, Debug, Serialize)]
pub struct InputErrorReport {
    pub command: String,
    pub status: &'static str,
    pub errors: Vec<ErrorEntry>,
}

#[derive(Clone, Debug, Serialize)]
pub struct ErrorEntry {
    pub source: String,
    pub at: String,
    pub message: String,
}

impl InputErrorReport {
    pub fn new(command: &str, errors: Vec<ErrorEntry>) -> Self {
        Self { command: command.into(), status: "input-error", errors }
    }
}

impl ErrorEntry {
    pub fn from_spec(source: &str, e: SpecError) -> Self {
        Self { source: source.into(), at: e.at, message: e.message }
    }

    pub fn plain(source: &str, message: impl Into<String>) -> Self {
        Self { source: source.into(), at: String::new(), message: message.into() }
    }
}

/// SHA-256 over labelled inputs; each part is length-prefixed so distinct
/// input lists never collide by concatenation.
#[derive(Default)]
pub struct InputDigest {
    hasher: Sha256,
}

impl InputDigest {
    pub fn add(&mut self, label: &str, bytes: &[u8]) -> &mut Self {
        for part in [label.as_bytes(), bytes] {
            self.hasher.update((part.len() as u64).to_le_bytes());
            self.hasher.update(part);
        }
        self
    }

    pub fn finish(self) -> String {
        format!("sha256:{:x}", self.hasher.finalize())
    }
}

pub fn to_json<T: Serialize>(report: &T) -> String {
    let mut s = serde_json::to_string_pretty(report).expect("reports serialize");
    s.push('\n');
    s
}

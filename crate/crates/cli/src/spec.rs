//! The JSON algebra description read by most commands.
//!
//! ```json
//! {
//!   "name": "q-ccr",
//!   "generators": { "a": ["x1", "x2"] },
//!   "parameters": { "q": "1/2" },
//!   "twist": [[1, 1, 1, 1, "q"], ["x1*", "x2", 2, 1, "q"]],
//!   "pairing": true,
//!   "relations": { "a": { "polynomials": [[["x1 x2", "1"], ["x2 x1", "-q"]]] } }
//! }
//! ```
//!
//! `generators.b` defaults to the `a` names with a trailing `*`. A twist
//! entry `[i, j, k, l, v]` sets `t^{ij}_{kl}` in `x*^i x^j -> sum t x^k x*^l`;
//! `i, l` name `b` generators and `j, k` name `a` generators, either by name
//! or by 1-based position. Values are strings: an exact rational such as
//! `"-1/2"` or `"1/2+1/3 i"`, a parameter `"q"`, or a multiple `"-2*q"`.

use std::collections::BTreeMap;
use std::fmt;

use serde_json::{json, Map, Value};
use twistalg::linalg::Matrix as LinMatrix;
use twistalg::quadratic::{operator_relations, Operator2, QuadraticAlgebra, QuadraticError};
use twistalg::{Alphabet, Letter, Poly, Scalar, Twist, Word};

/// A parse or validation error, positioned by a path such as `twist[2][0]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecError {
    pub at: String,
    pub message: String,
}

impl SpecError {
    pub fn new(at: impl Into<String>, message: impl Into<String>) -> Self {
        Self { at: at.into(), message: message.into() }
    }
}

impl fmt::Display for SpecError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.at.is_empty() {
            write!(f, "{}", self.message)
        } else {
            write!(f, "{}: {}", self.at, self.message)
        }
    }
}

/// Generator names of both alphabets.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Names {
    pub a: Vec<String>,
    pub b: Vec<String>,
}

impl Names {
    /// `x1..xm` and `x1*..xn*`.
    pub fn standard(m: usize, n: usize) -> Self {
        Self {
            a: (1..=m).map(|i| format!("x{i}")).collect(),
            b: (1..=n).map(|i| format!("x{i}*")).collect(),
        }
    }

    fn list(&self, alphabet: Alphabet) -> &[String] {
        match alphabet {
            Alphabet::A => &self.a,
            Alphabet::B => &self.b,
        }
    }

    pub fn letter(&self, token: &str) -> Option<Letter> {
        if let Some(i) = self.a.iter().position(|n| n == token) {
            return Some(Letter::a(i + 1));
        }
        self.b.iter().position(|n| n == token).map(|i| Letter::b(i + 1))
    }

    /// Whitespace-separated generator names; `1` or the empty string is the
    /// unit.
    pub fn parse_word(&self, text: &str) -> Result<Word, String> {
        let text = text.trim();
        if text.is_empty() || text == "1" {
            return Ok(Word::unit());
        }
        text.split_whitespace()
            .map(|t| self.letter(t).ok_or_else(|| format!("unknown generator `{t}`")))
            .collect::<Result<Vec<_>, _>>()
            .map(Word::new)
    }

    pub fn word(&self, w: &Word) -> String {
        if w.is_unit() {
            return "1".into();
        }
        let names: Vec<&str> = w.letters().iter().map(|l| self.list(l.alphabet())[l.index() - 1].as_str()).collect();
        names.join(" ")
    }

    pub fn poly(&self, p: &Poly) -> String {
        if p.is_zero() {
            return "0".into();
        }
        let terms: Vec<String> = p
            .terms()
            .map(|(w, c)| match (w.is_unit(), c == &Scalar::from(1)) {
                (true, _) => format!("({c})"),
                (false, true) => self.word(w),
                (false, false) => format!("({c}) {}", self.word(w)),
            })
            .collect();
        terms.join(" + ")
    }

    /// `[[word, coefficient], ...]` in canonical word order.
    pub fn terms(&self, p: &Poly) -> Value {
        Value::Array(p.terms().map(|(w, c)| json!([self.word(w), c.to_string()])).collect())
    }
}

/// Degree-two relations of one side, oriented by a generator sequence
/// (smallest first); an empty sequence means the natural order.
#[derive(Clone, Debug, PartialEq)]
pub struct RelationSpec {
    pub polynomials: Vec<Poly>,
    pub order: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq)]
pub struct AlgebraSpec {
    pub name: String,
    pub names: Names,
    pub parameters: BTreeMap<String, Scalar>,
    pub twist: Twist,
    pub pairing: bool,
    pub relations_a: Option<RelationSpec>,
    pub relations_b: Option<RelationSpec>,
}

impl AlgebraSpec {
    pub fn dim_a(&self) -> usize {
        self.names.a.len()
    }

    pub fn dim_b(&self) -> usize {
        self.names.b.len()
    }

    /// The quotient algebra on one side, or the free algebra.
    pub fn quadratic(&self, alphabet: Alphabet) -> Result<QuadraticAlgebra<Scalar>, QuadraticError> {
        let (rel, dim) = match alphabet {
            Alphabet::A => (&self.relations_a, self.dim_a()),
            Alphabet::B => (&self.relations_b, self.dim_b()),
        };
        match rel {
            None => Ok(QuadraticAlgebra::free(alphabet, dim)),
            Some(r) => QuadraticAlgebra::from_relations(alphabet, dim, &r.polynomials, &r.order),
        }
    }

    pub fn has_relations(&self) -> bool {
        self.relations_a.is_some() || self.relations_b.is_some()
    }

    /// Canonical JSON form: numeric indices, resolved literal values and
    /// relations as polynomials. Parsing it gives back an equal spec.
    pub fn to_json(&self) -> Value {
        let mut out = Map::new();
        out.insert("name".into(), json!(self.name));
        out.insert("generators".into(), json!({ "a": self.names.a, "b": self.names.b }));
        let params: Map<String, Value> =
            self.parameters.iter().map(|(k, v)| (k.clone(), json!(v.to_string()))).collect();
        out.insert("parameters".into(), Value::Object(params));
        let twist: Vec<Value> =
            self.twist.entries().map(|(&(i, j, k, l), v)| json!([i, j, k, l, v.to_string()])).collect();
        out.insert("twist".into(), Value::Array(twist));
        out.insert("pairing".into(), json!(self.pairing));
        let mut rel = Map::new();
        for (key, r) in [("a", &self.relations_a), ("b", &self.relations_b)] {
            if let Some(r) = r {
                let polys: Vec<Value> = r.polynomials.iter().map(|p| self.names.terms(p)).collect();
                let mut side = json!({ "polynomials": polys });
                if !r.order.is_empty() {
                    side["order"] = json!(r.order);
                }
                rel.insert(key.into(), side);
            }
        }
        if !rel.is_empty() {
            out.insert("relations".into(), Value::Object(rel));
        }
        Value::Object(out)
    }
}

fn json_type(v: &Value) -> &'static str {
    match v {
        Value::Null => "null",
        Value::Bool(_) => "a boolean",
        Value::Number(_) => "a number",
        Value::String(_) => "a string",
        Value::Array(_) => "an array",
        Value::Object(_) => "an object",
    }
}

/// Parses a scalar field. JSON numbers are refused so that every value is
/// exact by construction.
pub fn scalar_value(v: &Value, params: &BTreeMap<String, Scalar>) -> Result<Scalar, String> {
    match v {
        Value::String(s) => parse_value(s, params),
        Value::Number(n) => Err(format!("numbers must be written as exact strings such as \"1/2\", got {n}")),
        other => Err(format!("expected a scalar string, got {}", json_type(other))),
    }
}

fn is_identifier(s: &str) -> bool {
    let mut chars = s.chars();
    matches!(chars.next(), Some(c) if c.is_ascii_alphabetic() || c == '_')
        && chars.all(|c| c.is_ascii_alphanumeric() || c == '_')
        && s != "i"
}

/// `literal`, `name`, `-name` or `literal*name`.
pub fn parse_value(text: &str, params: &BTreeMap<String, Scalar>) -> Result<Scalar, String> {
    let text = text.trim();
    let (coef, name) = match text.rsplit_once('*') {
        Some((c, n)) => (Some(c.trim()), n.trim()),
        None => match text.strip_prefix('-') {
            Some(rest) if is_identifier(rest.trim()) => (Some("-1"), rest.trim()),
            _ if is_identifier(text) => (None, text),
            _ => return text.parse::<Scalar>().map_err(|e| e.to_string()),
        },
    };
    if !is_identifier(name) {
        return Err(format!("malformed value `{text}`"));
    }
    let p = params.get(name).ok_or_else(|| format!("unknown parameter `{name}`"))?;
    let c = match coef {
        None => Scalar::from(1),
        Some(c) => c.parse::<Scalar>().map_err(|e| e.to_string())?,
    };
    Ok(c * p.clone())
}

struct Parser {
    errors: Vec<SpecError>,
}

impl Parser {
    fn err(&mut self, at: impl Into<String>, message: impl Into<String>) {
        self.errors.push(SpecError::new(at, message));
    }

    fn names(&mut self, v: Option<&Value>, at: &str) -> Option<Vec<String>> {
        let Some(v) = v else {
            self.err(at, "missing generator list");
            return None;
        };
        let Some(list) = v.as_array() else {
            self.err(at, format!("expected an array of names, got {}", json_type(v)));
            return None;
        };
        if list.is_empty() {
            self.err(at, "at least one generator is required");
            return None;
        }
        let mut out = Vec::new();
        for (n, item) in list.iter().enumerate() {
            match item.as_str() {
                Some(s) if !s.is_empty() && !s.chars().any(char::is_whitespace) && s != "1" => out.push(s.to_string()),
                Some(s) => self.err(format!("{at}[{n}]"), format!("invalid generator name `{s}`")),
                None => self.err(format!("{at}[{n}]"), format!("expected a name, got {}", json_type(item))),
            }
        }
        (out.len() == list.len()).then_some(out)
    }

    fn index(&mut self, v: &Value, alphabet: Alphabet, names: &Names, at: &str) -> Option<usize> {
        let list = names.list(alphabet);
        let side = if alphabet == Alphabet::A { "a" } else { "b" };
        match v {
            Value::Number(n) => match n.as_u64() {
                Some(i) if i >= 1 && (i as usize) <= list.len() => Some(i as usize),
                _ => {
                    self.err(at, format!("index {n} out of range: {} {side} generators declared", list.len()));
                    None
                }
            },
            Value::String(s) => match list.iter().position(|x| x == s) {
                Some(i) => Some(i + 1),
                None => {
                    self.err(at, format!("unknown generator `{s}` (expected one of the {side} generators)"));
                    None
                }
            },
            other => {
                self.err(at, format!("expected a generator name or index, got {}", json_type(other)));
                None
            }
        }
    }

    fn relations(
        &mut self,
        v: &Value,
        alphabet: Alphabet,
        names: &Names,
        params: &BTreeMap<String, Scalar>,
        at: &str,
    ) -> Option<RelationSpec> {
        let Some(obj) = v.as_object() else {
            self.err(at, format!("expected an object, got {}", json_type(v)));
            return None;
        };
        for key in obj.keys() {
            if !["polynomials", "operator", "order"].contains(&key.as_str()) {
                self.err(format!("{at}.{key}"), "unknown field");
            }
        }
        let dim = names.list(alphabet).len();
        let start = self.errors.len();
        let mut order = Vec::new();
        if let Some(o) = obj.get("order") {
            match o.as_array() {
                Some(list) => {
                    for (n, item) in list.iter().enumerate() {
                        if let Some(i) = self.index(item, alphabet, names, &format!("{at}.order[{n}]")) {
                            order.push(i);
                        }
                    }
                    let mut sorted = order.clone();
                    sorted.sort_unstable();
                    if self.errors.len() == start && sorted != (1..=dim).collect::<Vec<_>>() {
                        self.err(format!("{at}.order"), format!("must list each of the {dim} generators once"));
                    }
                }
                None => self.err(format!("{at}.order"), format!("expected an array, got {}", json_type(o))),
            }
        }
        let polynomials = match (obj.get("polynomials"), obj.get("operator")) {
            (Some(_), Some(_)) => {
                self.err(at, "give either `polynomials` or `operator`, not both");
                return None;
            }
            (None, None) => {
                self.err(at, "missing `polynomials` or `operator`");
                return None;
            }
            (Some(p), None) => self.polynomials(p, alphabet, names, params, &format!("{at}.polynomials"))?,
            (None, Some(m)) => {
                let m = self.matrix(m, dim * dim, dim * dim, params, &format!("{at}.operator"))?;
                let r = Operator2::square(dim, m).ok()?;
                operator_relations(&r, alphabet, dim)
            }
        };
        (self.errors.len() == start).then_some(RelationSpec { polynomials, order })
    }

    fn polynomials(
        &mut self,
        v: &Value,
        alphabet: Alphabet,
        names: &Names,
        params: &BTreeMap<String, Scalar>,
        at: &str,
    ) -> Option<Vec<Poly>> {
        let Some(list) = v.as_array() else {
            self.err(at, format!("expected an array of polynomials, got {}", json_type(v)));
            return None;
        };
        let start = self.errors.len();
        let mut out = Vec::new();
        for (n, poly) in list.iter().enumerate() {
            let pat = format!("{at}[{n}]");
            let Some(terms) = poly.as_array() else {
                self.err(&pat, format!("expected an array of [word, coefficient] terms, got {}", json_type(poly)));
                continue;
            };
            let mut p = Poly::zero();
            for (t, term) in terms.iter().enumerate() {
                let tat = format!("{pat}[{t}]");
                let Some([w, c]) = term.as_array().map(Vec::as_slice) else {
                    self.err(&tat, "expected a [word, coefficient] pair");
                    continue;
                };
                let word = match w.as_str().map(|s| names.parse_word(s)) {
                    Some(Ok(word)) if word.len() == 2 && word.is_over(alphabet) => Some(word),
                    Some(Ok(_)) => {
                        self.err(&tat, "relation words must have two generators of this side");
                        None
                    }
                    Some(Err(e)) => {
                        self.err(&tat, e);
                        None
                    }
                    None => {
                        self.err(&tat, format!("expected a word string, got {}", json_type(w)));
                        None
                    }
                };
                let coeff = scalar_value(c, params).map_err(|e| self.err(format!("{tat}[1]"), e)).ok();
                if let (Some(word), Some(coeff)) = (word, coeff) {
                    p.add_term(word, coeff);
                }
            }
            out.push(p);
        }
        (self.errors.len() == start).then_some(out)
    }

    fn matrix(
        &mut self,
        v: &Value,
        rows: usize,
        cols: usize,
        params: &BTreeMap<String, Scalar>,
        at: &str,
    ) -> Option<LinMatrix<Scalar>> {
        let Some(list) = v.as_array() else {
            self.err(at, format!("expected an array of rows, got {}", json_type(v)));
            return None;
        };
        if list.len() != rows {
            self.err(at, format!("expected {rows} rows, got {}", list.len()));
            return None;
        }
        let start = self.errors.len();
        let mut out = Vec::new();
        for (r, row) in list.iter().enumerate() {
            let rat = format!("{at}[{r}]");
            match row.as_array() {
                Some(entries) if entries.len() == cols => {
                    let mut vals = Vec::new();
                    for (c, e) in entries.iter().enumerate() {
                        match scalar_value(e, params) {
                            Ok(x) => vals.push(x),
                            Err(msg) => self.err(format!("{rat}[{c}]"), msg),
                        }
                    }
                    out.push(vals);
                }
                Some(entries) => self.err(&rat, format!("expected {cols} entries, got {}", entries.len())),
                None => self.err(&rat, format!("expected an array, got {}", json_type(row))),
            }
        }
        (self.errors.len() == start).then(|| LinMatrix::from_rows(out))
    }

    fn parameters(&mut self, v: Option<&Value>) -> BTreeMap<String, Scalar> {
        let mut out = BTreeMap::new();
        let Some(v) = v else { return out };
        let Some(obj) = v.as_object() else {
            self.err("parameters", format!("expected an object, got {}", json_type(v)));
            return out;
        };
        let empty = BTreeMap::new();
        for (k, val) in obj {
            let at = format!("parameters.{k}");
            if !is_identifier(k) {
                self.err(&at, "parameter names must be identifiers");
                continue;
            }
            match scalar_value(val, &empty) {
                Ok(x) => {
                    out.insert(k.clone(), x);
                }
                Err(e) => self.err(&at, e),
            }
        }
        out
    }
}

fn syntax_error(e: &serde_json::Error) -> SpecError {
    SpecError::new(format!("line {}, column {}", e.line(), e.column()), format!("invalid JSON: {e}"))
}

fn check_fields(obj: &Map<String, Value>, allowed: &[&str], prefix: &str, errors: &mut Vec<SpecError>) {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            errors.push(SpecError::new(format!("{prefix}{key}"), "unknown field"));
        }
    }
}

/// Parses and validates a spec document, reporting every problem found.
pub fn parse_spec(text: &str) -> Result<AlgebraSpec, Vec<SpecError>> {
    let doc: Value = serde_json::from_str(text).map_err(|e| vec![syntax_error(&e)])?;
    let Some(obj) = doc.as_object() else {
        return Err(vec![SpecError::new("", format!("expected a JSON object, got {}", json_type(&doc)))]);
    };
    let mut p = Parser { errors: Vec::new() };
    check_fields(obj, &["name", "generators", "parameters", "twist", "pairing", "relations"], "", &mut p.errors);

    let name = match obj.get("name") {
        None => String::new(),
        Some(Value::String(s)) => s.clone(),
        Some(other) => {
            p.err("name", format!("expected a string, got {}", json_type(other)));
            String::new()
        }
    };

    let gens = obj.get("generators");
    let gens_obj = match gens {
        Some(Value::Object(g)) => {
            check_fields(g, &["a", "b"], "generators.", &mut p.errors);
            Some(g)
        }
        Some(other) => {
            p.err("generators", format!("expected an object, got {}", json_type(other)));
            None
        }
        None => {
            p.err("generators", "missing field");
            None
        }
    };
    let a = gens_obj.and_then(|g| p.names(g.get("a"), "generators.a"));
    let b = match gens_obj.and_then(|g| g.get("b")) {
        Some(v) => p.names(Some(v), "generators.b"),
        None => a.as_ref().map(|a| a.iter().map(|n| format!("{n}*")).collect()),
    };
    let parameters = p.parameters(obj.get("parameters"));

    let pairing = match obj.get("pairing") {
        None => false,
        Some(Value::Bool(b)) => *b,
        Some(other) => {
            p.err("pairing", format!("expected true or false, got {}", json_type(other)));
            false
        }
    };

    let (Some(a), Some(b)) = (a, b) else {
        return Err(p.errors);
    };
    let mut seen = BTreeMap::new();
    for (n, name) in a.iter().enumerate().map(|(n, x)| (format!("generators.a[{n}]"), x)).chain(
        b.iter().enumerate().map(|(n, x)| (format!("generators.b[{n}]"), x)),
    ) {
        if let Some(first) = seen.insert(name.clone(), n.clone()) {
            p.err(n, format!("duplicate generator name `{name}`, first declared at {first}"));
        }
    }
    let names = Names { a, b };

    let mut twist = Twist::zero(names.a.len(), names.b.len());
    let mut first_seen: BTreeMap<(usize, usize, usize, usize), String> = BTreeMap::new();
    match obj.get("twist") {
        None => {}
        Some(Value::Array(entries)) => {
            for (n, entry) in entries.iter().enumerate() {
                let at = format!("twist[{n}]");
                let Some(items) = entry.as_array().filter(|e| e.len() == 5) else {
                    p.err(&at, "expected [i, j, k, l, value]");
                    continue;
                };
                let slots = [Alphabet::B, Alphabet::A, Alphabet::A, Alphabet::B];
                let idx: Vec<Option<usize>> = slots
                    .iter()
                    .enumerate()
                    .map(|(s, &alpha)| p.index(&items[s], alpha, &names, &format!("{at}[{s}]")))
                    .collect();
                let value = scalar_value(&items[4], &parameters).map_err(|e| p.err(format!("{at}[4]"), e)).ok();
                let (Some(i), Some(j), Some(k), Some(l)) = (idx[0], idx[1], idx[2], idx[3]) else { continue };
                if let Some(first) = first_seen.get(&(i, j, k, l)) {
                    p.err(&at, format!("duplicate twist entry ({i}, {j}, {k}, {l}), first given at {first}"));
                    continue;
                }
                first_seen.insert((i, j, k, l), at.clone());
                if let Some(v) = value {
                    twist.set(i, j, k, l, v).expect("indices validated");
                }
            }
        }
        Some(other) => p.err("twist", format!("expected an array of entries, got {}", json_type(other))),
    }

    let (mut relations_a, mut relations_b) = (None, None);
    match obj.get("relations") {
        None => {}
        Some(Value::Object(rel)) => {
            check_fields(rel, &["a", "b"], "relations.", &mut p.errors);
            if let Some(v) = rel.get("a") {
                relations_a = p.relations(v, Alphabet::A, &names, &parameters, "relations.a");
            }
            if let Some(v) = rel.get("b") {
                relations_b = p.relations(v, Alphabet::B, &names, &parameters, "relations.b");
            }
        }
        Some(other) => p.err("relations", format!("expected an object, got {}", json_type(other))),
    }

    if !p.errors.is_empty() {
        return Err(p.errors);
    }
    Ok(AlgebraSpec { name, names, parameters, twist, pairing, relations_a, relations_b })
}

/// Operator files: `{"rows": [[...]], "dims_in": [a, b], "dims_out": [c, d],
/// "parameters": {...}}`. Without dimensions the matrix must be `m^2 x m^2`
/// and acts on `E (x) E`.
pub fn parse_operator(text: &str) -> Result<Operator2<Scalar>, Vec<SpecError>> {
    let doc: Value = serde_json::from_str(text).map_err(|e| vec![syntax_error(&e)])?;
    let Some(obj) = doc.as_object() else {
        return Err(vec![SpecError::new("", format!("expected a JSON object, got {}", json_type(&doc)))]);
    };
    let mut p = Parser { errors: Vec::new() };
    check_fields(obj, &["rows", "dims_in", "dims_out", "parameters"], "", &mut p.errors);
    let parameters = p.parameters(obj.get("parameters"));
    let Some(rows) = obj.get("rows").and_then(Value::as_array) else {
        p.err("rows", "missing array of rows");
        return Err(p.errors);
    };
    let mut dims = |key: &str| -> Option<(usize, usize)> {
        let v = obj.get(key)?;
        match v.as_array().map(Vec::as_slice) {
            Some([x, y]) => match (x.as_u64(), y.as_u64()) {
                (Some(x), Some(y)) if x > 0 && y > 0 => Some((x as usize, y as usize)),
                _ => {
                    p.err(key, "dimensions must be positive integers");
                    None
                }
            },
            _ => {
                p.err(key, "expected [d1, d2]");
                None
            }
        }
    };
    let (din, dout) = (dims("dims_in"), dims("dims_out"));
    let square = {
        let n = rows.len();
        let m = (1..=n).find(|m| m * m >= n).unwrap_or(0);
        (m * m == n && n > 0).then_some((m, m))
    };
    let (dims_in, dims_out) = match (din, dout) {
        (Some(i), Some(o)) => (i, o),
        (Some(i), None) => (i, i),
        (None, Some(o)) => (o, o),
        (None, None) => match square {
            Some(d) => (d, d),
            None => {
                p.err("rows", format!("{} rows is not a square dimension; give dims_in and dims_out", rows.len()));
                return Err(p.errors);
            }
        },
    };
    if !p.errors.is_empty() {
        return Err(p.errors);
    }
    let m = p.matrix(&Value::Array(rows.clone()), dims_out.0 * dims_out.1, dims_in.0 * dims_in.1, &parameters, "rows");
    match m {
        Some(m) if p.errors.is_empty() => Operator2::new(dims_in, dims_out, m).map_err(|e| vec![SpecError::new("rows", e.to_string())]),
        _ => Err(p.errors),
    }
}

/// A command-line scalar such as `--q 1/2`.
pub fn parse_scalar_arg(text: &str) -> Result<Scalar, String> {
    text.parse().map_err(|e: twistalg::ParseScalarError| e.to_string())
}

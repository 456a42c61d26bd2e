//! Output documents rendered as aligned text, TSV or canonical JSON.

use std::fmt::Display;

use clap::ValueEnum;
use felcheck_core::{CheckRecord, CheckValue, Rational, VerificationReport};
use serde_json::{json, Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Table,
    Json,
    Tsv,
}

pub const SCHEMA_VERSION: u64 = 1;

/// Rationals always travel as `num/den` strings, integers without `/1`.
pub fn rat(r: &Rational) -> String {
    r.to_string()
}

pub fn rat_list(v: &[Rational]) -> Vec<String> {
    v.iter().map(rat).collect()
}

pub fn json_strings<T: Display>(v: &[T]) -> Value {
    Value::Array(v.iter().map(|x| Value::String(x.to_string())).collect())
}

/// Rows of `key = values…` for the text formats, plus the JSON body.
pub struct Document {
    rows: Vec<(String, Vec<String>)>,
    json: Map<String, Value>,
}

impl Document {
    pub fn new(command: &str) -> Self {
        let mut json = Map::new();
        json.insert("schema".into(), json!(SCHEMA_VERSION));
        json.insert("command".into(), json!(command));
        Document { rows: Vec::new(), json }
    }

    pub fn row<S: Into<String>>(&mut self, key: impl Into<String>, values: Vec<S>) -> &mut Self {
        self.rows.push((key.into(), values.into_iter().map(Into::into).collect()));
        self
    }

    pub fn field(&mut self, key: &str, value: Value) -> &mut Self {
        self.json.insert(key.into(), value);
        self
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Json => to_canonical_json(&Value::Object(self.json.clone())),
            Format::Table => {
                let width = self.rows.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
                let mut out = String::new();
                for (k, v) in &self.rows {
                    out.push_str(&format!("{k:<width$} = {}\n", v.join(" ")));
                }
                out
            }
            Format::Tsv => {
                let mut out = String::new();
                for (k, v) in &self.rows {
                    out.push_str(k);
                    for x in v {
                        out.push('\t');
                        out.push_str(x);
                    }
                    out.push('\n');
                }
                out
            }
        }
    }
}

/// Pretty JSON with sorted keys and a trailing newline; parsing and
/// re-serializing reproduces it byte for byte.
pub fn to_canonical_json(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}

pub fn check_value_text(v: &CheckValue) -> String {
    match v {
        CheckValue::None => "-".into(),
        CheckValue::Scalar(r) => rat(r),
        CheckValue::Series(s) => format!("[{}]", rat_list(s).join(",")),
        CheckValue::Polynomial(p) => format!("{{{p}}}"),
    }
}

pub fn check_value_json(v: &CheckValue) -> Value {
    match v {
        CheckValue::None => Value::Null,
        CheckValue::Scalar(r) => json!(rat(r)),
        CheckValue::Series(s) => json_strings(s),
        CheckValue::Polynomial(p) => json!(p.to_string()),
    }
}

pub fn record_json(c: &CheckRecord) -> Value {
    json!({
        "identity": c.identity.as_str(),
        "parameter": c.parameter,
        "sample": c.sample,
        "status": c.status.as_str(),
        "passed": c.passed(),
        "lhs": check_value_json(&c.lhs),
        "rhs": check_value_json(&c.rhs),
        "note": c.note,
    })
}

pub fn record_text(c: &CheckRecord) -> String {
    let mut s = format!("{} {} {}", c.identity, c.parameter, c.status.as_str());
    if let Some(i) = c.sample {
        s.push_str(&format!(" sample={i}"));
    }
    if let Some(n) = &c.note {
        s.push_str(&format!(" note={n}"));
    }
    s.push_str(&format!(" lhs={} rhs={}", check_value_text(&c.lhs), check_value_text(&c.rhs)));
    s
}

pub fn report_json(r: &VerificationReport) -> Value {
    json!({
        "semigroup": r.semigroup.as_ref().map(|s| s.generators().to_vec()),
        "seed": r.seed,
        "all_passed": r.all_passed(),
        "checks": r.checks.iter().map(record_json).collect::<Vec<_>>(),
    })
}

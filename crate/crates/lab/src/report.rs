//! Reports and their deterministic JSON form.

use std::collections::BTreeMap;

use serde::Serialize;
use serde_json::Value;

use crate::text::fmt_f64;

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Check {
    pub name: String,
    pub expected: Value,
    pub got: Value,
    /// `"exact"` or a decimal string.
    pub tolerance: Value,
    pub pass: bool,
}

impl Check {
    pub fn exact(name: impl Into<String>, expected: impl Into<Value>, got: impl Into<Value>, pass: bool) -> Self {
        Check {
            name: name.into(),
            expected: expected.into(),
            got: got.into(),
            tolerance: Value::from("exact"),
            pass,
        }
    }

    /// Passes when `got ≤ tol`.
    pub fn at_most(name: impl Into<String>, got: f64, tol: f64) -> Self {
        Check {
            name: name.into(),
            expected: Value::from(format!("<= {}", fmt_f64(tol))),
            got: Value::from(fmt_f64(got)),
            tolerance: Value::from(fmt_f64(tol)),
            pass: got <= tol,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub inputs: BTreeMap<String, Value>,
    pub pass: bool,
    pub checks: Vec<Check>,
    /// Remarks such as which `P_VI` denominator was used.
    pub notes: Vec<String>,
    pub seed: Option<u64>,
    pub version: String,
    /// Command-specific output.
    pub details: BTreeMap<String, Value>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Report {
            command: command.to_string(),
            inputs: BTreeMap::new(),
            pass: true,
            checks: Vec::new(),
            notes: Vec::new(),
            seed: None,
            version: env!("CARGO_PKG_VERSION").to_string(),
            details: BTreeMap::new(),
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) {
        self.inputs.insert(key.to_string(), value.into());
    }

    pub fn detail(&mut self, key: &str, value: impl Into<Value>) {
        self.details.insert(key.to_string(), value.into());
    }

    pub fn check(&mut self, c: Check) {
        self.pass &= c.pass;
        self.checks.push(c);
    }

    pub fn note(&mut self, n: impl Into<String>) {
        self.notes.push(n.into());
    }
}

/// UTF-8 JSON with object keys sorted. Identical reports give identical
/// bytes.
pub fn emit_report(r: &Report, pretty: bool) -> String {
    // serde_json's Map is a BTreeMap, so going through Value sorts struct
    // fields as well as map keys
    let v = serde_json::to_value(r).expect("reports serialize");
    if pretty {
        serde_json::to_string_pretty(&v).expect("reports serialize")
    } else {
        serde_json::to_string(&v).expect("reports serialize")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn empty_report_shape() {
        let r = Report::new("x");
        let v: Value = serde_json::from_str(&emit_report(&r, false)).unwrap();
        assert_eq!(v["pass"], Value::Bool(true));
        assert_eq!(v["checks"], serde_json::json!([]));
    }

    #[test]
    fn keys_are_sorted() {
        let mut r = Report::new("x");
        r.input("zeta", 1);
        r.input("alpha", 2);
        let s = emit_report(&r, false);
        let keys = ["\"checks\"", "\"command\"", "\"details\"", "\"inputs\"", "\"notes\"", "\"pass\"", "\"seed\"", "\"version\""];
        let pos: Vec<usize> = keys.iter().map(|k| s.find(k).unwrap()).collect();
        assert!(pos.windows(2).all(|w| w[0] < w[1]), "{s}");
        assert!(s.find("alpha").unwrap() < s.find("zeta").unwrap());
    }

    #[test]
    fn failing_check_fails_the_report() {
        let mut r = Report::new("x");
        r.check(Check::exact("a", "0", "0", true));
        assert!(r.pass);
        r.check(Check::at_most("b", 2.0, 1.0));
        assert!(!r.pass);
    }
}

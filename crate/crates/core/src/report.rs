//! Check outcomes and the versioned JSON report format.

use std::fmt::Write as _;

pub const SCHEMA: &str = "multloop/1";

/// A labeled vector attached to an outcome.
#[derive(Debug, Clone, PartialEq)]
pub struct Witness {
    pub label: String,
    pub values: Vec<f64>,
}

impl Witness {
    pub fn new(label: impl Into<String>, values: impl Into<Vec<f64>>) -> Self {
        Witness { label: label.into(), values: values.into() }
    }

    pub fn scalar(label: impl Into<String>, v: f64) -> Self {
        Witness::new(label, vec![v])
    }
}

/// Result of a single check before it is tagged with its expectation.
#[derive(Debug, Clone, PartialEq)]
pub struct Outcome {
    pub passed: bool,
    pub max_residual: f64,
    pub witnesses: Vec<Witness>,
}

impl Outcome {
    pub fn new(passed: bool, max_residual: f64) -> Self {
        Outcome { passed, max_residual, witnesses: Vec::new() }
    }

    pub fn with(mut self, w: Witness) -> Self {
        self.witnesses.push(w);
        self
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Expectation {
    Pass,
    Fail,
    /// Diagnostic only; always counts as matched.
    Info,
}

impl Expectation {
    pub fn as_str(self) -> &'static str {
        match self {
            Expectation::Pass => "pass",
            Expectation::Fail => "fail",
            Expectation::Info => "info",
        }
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct Report {
    pub check: String,
    pub case: String,
    pub expected: Expectation,
    pub passed: bool,
    pub max_residual: f64,
    pub witnesses: Vec<Witness>,
    pub params: Vec<(String, String)>,
    pub seed: u64,
    pub runtime_ms: u64,
}

impl Report {
    pub fn from_outcome(check: &str, case: &str, expected: Expectation, o: Outcome, seed: u64) -> Self {
        Report {
            check: check.to_string(),
            case: case.to_string(),
            expected,
            passed: o.passed,
            max_residual: o.max_residual,
            witnesses: o.witnesses,
            params: Vec::new(),
            seed,
            runtime_ms: 0,
        }
    }

    pub fn param(mut self, k: &str, v: impl ToString) -> Self {
        self.params.push((k.to_string(), v.to_string()));
        self
    }

    pub fn matched(&self) -> bool {
        match self.expected {
            Expectation::Pass => self.passed,
            Expectation::Fail => !self.passed,
            Expectation::Info => true,
        }
    }

    pub fn witness(&self, label: &str) -> Option<&Witness> {
        self.witnesses.iter().find(|w| w.label == label)
    }

    pub fn to_json(&self) -> String {
        let mut s = String::from("{");
        let _ = write!(s, "\"check\":{},", quote(&self.check));
        let _ = write!(s, "\"case\":{},", quote(&self.case));
        let _ = write!(s, "\"expected\":\"{}\",", self.expected.as_str());
        let _ = write!(s, "\"passed\":{},", self.passed);
        let _ = write!(s, "\"matched\":{},", self.matched());
        let _ = write!(s, "\"max_residual\":{},", format_float(self.max_residual));
        s.push_str("\"witnesses\":[");
        for (i, w) in self.witnesses.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let vals: Vec<String> = w.values.iter().map(|&v| format_float(v)).collect();
            let _ = write!(s, "{{\"label\":{},\"values\":[{}]}}", quote(&w.label), vals.join(","));
        }
        s.push_str("],\"params\":{");
        for (i, (k, v)) in self.params.iter().enumerate() {
            if i > 0 {
                s.push(',');
            }
            let _ = write!(s, "{}:{}", quote(k), quote(v));
        }
        let _ = write!(s, "}},\"seed\":{},\"runtime_ms\":{}}}", self.seed, self.runtime_ms);
        s
    }
}

fn quote(s: &str) -> String {
    serde_json::to_string(s).expect("strings always serialize")
}

/// 17 significant digits; non-finite values become `null`.
pub fn format_float(v: f64) -> String {
    if v.is_finite() {
        format!("{v:.16e}")
    } else {
        "null".into()
    }
}

/// Whole-run document: schema tag, target, seed, the reports in order and
/// the aggregate verdict.
pub fn document_json(target: &str, seed: u64, reports: &[Report]) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "{{\"schema\":\"{SCHEMA}\",\"target\":{},\"seed\":{seed},", quote(target));
    let _ = writeln!(s, "\"all_matched\":{},", reports.iter().all(Report::matched));
    s.push_str("\"reports\":[\n");
    for (i, r) in reports.iter().enumerate() {
        s.push_str(&r.to_json());
        s.push_str(if i + 1 < reports.len() { ",\n" } else { "\n" });
    }
    s.push_str("]}\n");
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn json_shape_is_stable() {
        let r = Report::from_outcome(
            "axioms",
            "family_a",
            Expectation::Pass,
            Outcome::new(true, 0.5).with(Witness::new("p", vec![1.0, f64::NAN])),
            7,
        )
        .param("f", "z^2");
        assert_eq!(
            r.to_json(),
            "{\"check\":\"axioms\",\"case\":\"family_a\",\"expected\":\"pass\",\"passed\":true,\"matched\":true,\
             \"max_residual\":5.0000000000000000e-1,\"witnesses\":[{\"label\":\"p\",\"values\":[1.0000000000000000e0,null]}],\
             \"params\":{\"f\":\"z^2\"},\"seed\":7,\"runtime_ms\":0}"
        );
        let doc = document_json("x", 7, &[r]);
        assert!(doc.starts_with("{\"schema\":\"multloop/1\""));
        assert!(doc.ends_with("]}\n"));
    }

    #[test]
    fn expectation_polarity() {
        let mk = |e, p| Report::from_outcome("c", "k", e, Outcome::new(p, 0.0), 0);
        assert!(mk(Expectation::Fail, false).matched());
        assert!(!mk(Expectation::Fail, true).matched());
        assert!(mk(Expectation::Info, false).matched());
    }
}

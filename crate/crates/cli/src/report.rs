use std::fmt::Write as _;

use gorcheck_core::criteria::{CheckReport, Verdict};
use gorcheck_core::resolution::Certificate;
use serde::Serialize;

/// One command's result: machine-readable as JSON, human-readable as text.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Report {
    pub command: String,
    pub case: Option<String>,
    pub criterion: Option<String>,
    /// `None` for commands that only compute data.
    pub verdict: Option<Verdict>,
    pub certification: Option<Certificate>,
    pub evidence: serde_json::Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub elapsed_ms: Option<u128>,
}

impl Report {
    pub fn data(command: impl Into<String>, evidence: serde_json::Value) -> Self {
        Report { command: command.into(), case: None, criterion: None, verdict: None, certification: None, evidence, elapsed_ms: None }
    }

    pub fn from_check(command: impl Into<String>, c: CheckReport) -> Self {
        Report {
            command: command.into(),
            case: None,
            criterion: Some(c.criterion),
            verdict: Some(c.verdict),
            certification: Some(c.certification),
            evidence: c.evidence,
            elapsed_ms: None,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        writeln!(s, "command: {}", self.command).unwrap();
        if let Some(case) = &self.case {
            writeln!(s, "case: {case}").unwrap();
        }
        if let Some(v) = self.verdict {
            writeln!(s, "verdict: {v}").unwrap();
        }
        if let Some(c) = &self.certification {
            writeln!(s, "certification: {}", render_certificate(c)).unwrap();
        }
        if let Some(c) = &self.criterion {
            writeln!(s, "criterion: {c}").unwrap();
        }
        if let Some(ms) = self.elapsed_ms {
            writeln!(s, "elapsed: {ms} ms").unwrap();
        }
        s.push_str("evidence:\n");
        render_value(&mut s, &self.evidence, 1);
        s
    }
}

pub fn render_certificate(c: &Certificate) -> String {
    match c {
        Certificate::Exact => "exact".into(),
        Certificate::Terminated { length } => format!("resolution terminates at length {length}"),
        Certificate::Periodic { onset, period } => format!("resolution periodic from {onset} with period {period}"),
        Certificate::SelfInjective => "self-injective ring".into(),
        Certificate::UpToCutoff { cutoff } => format!("inconclusive, checked up to {cutoff}"),
    }
}

fn scalar(v: &serde_json::Value) -> Option<String> {
    use serde_json::Value;
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_array() && !x.is_object()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).unwrap()).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn render_value(s: &mut String, v: &serde_json::Value, depth: usize) {
    use serde_json::Value;
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(map) => {
            for (k, x) in map {
                match scalar(x) {
                    Some(t) => writeln!(s, "{pad}{k}: {t}").unwrap(),
                    None => {
                        writeln!(s, "{pad}{k}:").unwrap();
                        render_value(s, x, depth + 1);
                    }
                }
            }
        }
        Value::Array(items) => {
            for (i, x) in items.iter().enumerate() {
                match scalar(x) {
                    Some(t) => writeln!(s, "{pad}- {t}").unwrap(),
                    None => {
                        writeln!(s, "{pad}- [{i}]").unwrap();
                        render_value(s, x, depth + 1);
                    }
                }
            }
        }
        other => writeln!(s, "{pad}{}", scalar(other).unwrap()).unwrap(),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use serde_json::json;

    #[test]
    fn text_and_json_agree_on_verdict() {
        let c = CheckReport::new("c", Verdict::No, Certificate::Exact, json!({"a": [1, 2], "b": {"c": null}}));
        let r = Report::from_check("check x", c);
        let j: serde_json::Value = serde_json::from_str(&r.to_json()).unwrap();
        assert_eq!(j["verdict"], "no");
        assert!(r.to_text().contains("verdict: no"));
        assert!(r.to_text().contains("a: [1, 2]"));
        assert!(j.get("elapsed_ms").is_none());
    }
}

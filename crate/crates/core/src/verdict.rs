//! Verdicts shared by every decision procedure.

use std::fmt;

use serde::{Deserialize, Serialize};
use serde_json::Value;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "SCREAMING_SNAKE_CASE")]
pub enum Answer {
    Yes,
    No,
    NotApplicable,
    Unknown,
}

impl fmt::Display for Answer {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Answer::Yes => "YES",
            Answer::No => "NO",
            Answer::NotApplicable => "NOT_APPLICABLE",
            Answer::Unknown => "UNKNOWN",
        })
    }
}

pub const QUALIFIER_FG: &str = "not by a product of finitely generated groups";

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TraceEntry {
    pub rule: String,
    pub cite: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Verdict {
    pub answer: Answer,
    pub qualifier: Option<String>,
    pub certificate: Option<Value>,
    pub trace: Vec<TraceEntry>,
}

impl Verdict {
    pub fn new(answer: Answer) -> Self {
        Verdict { answer, qualifier: None, certificate: None, trace: Vec::new() }
    }

    pub fn yes(certificate: Option<Value>) -> Self {
        Verdict { certificate, ..Verdict::new(Answer::Yes) }
    }

    pub fn no() -> Self {
        Verdict::new(Answer::No)
    }

    pub fn unknown() -> Self {
        Verdict::new(Answer::Unknown)
    }

    pub fn not_applicable() -> Self {
        Verdict::new(Answer::NotApplicable)
    }

    pub fn cite(mut self, rule: &str, cite: &str) -> Self {
        self.trace.push(TraceEntry { rule: rule.into(), cite: cite.into() });
        self
    }

    pub fn qualified(mut self, q: &str) -> Self {
        self.qualifier = Some(q.into());
        self
    }

    pub fn to_json(&self) -> Value {
        serde_json::to_value(self).expect("verdict serializes")
    }
}

/// One line per trace entry, in trace order.
pub fn explain(v: &Verdict) -> String {
    let mut out = format!("answer: {}", v.answer);
    if let Some(q) = &v.qualifier {
        out.push_str(&format!(" ({q})"));
    }
    out.push('\n');
    if v.trace.is_empty() {
        out.push_str("no applicable rule\n");
    }
    for t in &v.trace {
        out.push_str(&format!("[{}] {}\n", t.rule, t.cite));
    }
    if v.certificate.is_some() {
        out.push_str("certificate attached\n");
    }
    out
}

//! Serializable reports and their table and CSV renderings.

use std::collections::BTreeMap;

use hikita_core::arith::format_coeff;
use hikita_core::betti::{Check, Verdict};
use hikita_core::{FixedElement, GradedDims, RTuple};
use serde::{Deserialize, Serialize};
use serde_json::{json, Value};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum VerdictOut {
    Pass,
    Fail,
    Skip,
}

impl From<Verdict> for VerdictOut {
    fn from(v: Verdict) -> Self {
        match v {
            Verdict::Pass => Self::Pass,
            Verdict::Fail => Self::Fail,
            Verdict::Skip => Self::Skip,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CheckOut {
    pub name: String,
    pub verdict: VerdictOut,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub differing_degrees: Vec<u64>,
}

impl From<&Check> for CheckOut {
    fn from(c: &Check) -> Self {
        Self {
            name: c.name.clone(),
            verdict: c.verdict.into(),
            differing_degrees: c.differing_degrees.clone(),
        }
    }
}

/// Wall time, kept apart from the data so that outputs compare byte for byte.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Meta {
    pub wall_time_ms: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub command: String,
    pub params: BTreeMap<String, Value>,
    pub checks: Vec<CheckOut>,
    pub payload: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        Self {
            command: command.to_string(),
            params: BTreeMap::new(),
            checks: Vec::new(),
            payload: Value::Null,
            meta: None,
        }
    }

    pub fn param(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.params.insert(key.to_string(), value.into());
        self
    }

    pub fn any_fail(&self) -> bool {
        self.checks.iter().any(|c| c.verdict == VerdictOut::Fail)
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SeriesOut {
    pub r: u32,
    pub n: u32,
    pub series: Vec<(u64, u64)>,
    pub source: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub meta: Option<Meta>,
}

impl SeriesOut {
    pub fn new(g: &GradedDims, source: &str) -> Self {
        Self {
            r: g.r,
            n: g.n,
            series: g.series(),
            source: source.to_string(),
            meta: None,
        }
    }
}

pub fn rtuple_json(lambda: &RTuple) -> Value {
    let parts: Vec<Vec<u32>> = lambda.components().iter().map(|c| c.parts()).collect();
    json!({ "key": lambda.to_string(), "parts": parts })
}

pub fn element_json(x: &FixedElement) -> Value {
    let terms: Vec<Value> = x
        .terms()
        .iter()
        .map(|(k, c)| {
            let mut t = rtuple_json(k);
            t["coeff"] = Value::String(format_coeff(c));
            t
        })
        .collect();
    json!({ "display": x.to_string(), "terms": terms })
}

pub fn series_csv(series: &[(u64, u64)]) -> String {
    let mut s = String::from("degree,dim\n");
    for (d, m) in series {
        s.push_str(&format!("{d},{m}\n"));
    }
    s
}

pub fn element_csv(x: &FixedElement) -> String {
    let mut s = String::from("coeff,key\n");
    for (k, c) in x.terms() {
        s.push_str(&format!("{},\"{k}\"\n", format_coeff(c)));
    }
    s
}

pub fn checks_table(checks: &[CheckOut]) -> String {
    let width = checks.iter().map(|c| c.name.len()).max().unwrap_or(0);
    let mut s = String::new();
    for c in checks {
        let v = match c.verdict {
            VerdictOut::Pass => "pass",
            VerdictOut::Fail => "FAIL",
            VerdictOut::Skip => "skip",
        };
        s.push_str(&format!("  {:width$}  {v}", c.name));
        if !c.differing_degrees.is_empty() {
            s.push_str(&format!("  (degrees {:?})", c.differing_degrees));
        }
        s.push('\n');
    }
    s
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn report_round_trips() {
        let mut rep = Report::new("verify").param("r", 2).param("n", 2);
        rep.checks.push(CheckOut {
            name: "engine=oracle".into(),
            verdict: VerdictOut::Skip,
            differing_degrees: vec![],
        });
        rep.payload = json!({"series": [[0, 1], [2, 1]]});
        rep.meta = Some(Meta { wall_time_ms: 1.5 });
        let text = serde_json::to_string(&rep).unwrap();
        let back: Report = serde_json::from_str(&text).unwrap();
        assert_eq!(back, rep);
        assert!(text.contains("\"verdict\":\"skip\""));
    }

    #[test]
    fn series_schema() {
        let g = GradedDims::from_pairs(2, 1, [(0, 1), (2, 1)]);
        let text = serde_json::to_string(&SeriesOut::new(&g, "engine")).unwrap();
        assert_eq!(
            text,
            r#"{"r":2,"n":1,"series":[[0,1],[2,1]],"source":"engine"}"#
        );
    }
}

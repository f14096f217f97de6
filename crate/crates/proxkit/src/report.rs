//! Line-oriented reports with an optional JSON rendering.

use std::fmt::Write as _;

use proxkit_core::Verdict;
use serde_json::{json, Map, Value};

#[derive(Clone, Debug, PartialEq)]
pub enum Val {
    Text(String),
    Count(u64),
    Check { verdict: Verdict, names: Option<Vec<String>> },
    Skipped(String),
    Json(Value),
}

#[derive(Clone, Debug, Default, PartialEq)]
pub struct Report {
    entries: Vec<(String, Val)>,
    failed: bool,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Report::default();
        r.text("command", command);
        r
    }

    pub fn text(&mut self, key: impl Into<String>, value: impl Into<String>) -> &mut Self {
        self.push(key, Val::Text(value.into()))
    }

    pub fn count(&mut self, key: impl Into<String>, n: impl TryInto<u64>) -> &mut Self {
        self.push(key, Val::Count(n.try_into().unwrap_or(u64::MAX)))
    }

    pub fn json(&mut self, key: impl Into<String>, value: Value) -> &mut Self {
        self.push(key, Val::Json(value))
    }

    pub fn skipped(&mut self, key: impl Into<String>, why: impl Into<String>) -> &mut Self {
        self.push(key, Val::Skipped(why.into()))
    }

    /// Records a verdict; a failure marks the whole report failed.
    pub fn check(&mut self, key: impl Into<String>, verdict: &Verdict) -> &mut Self {
        self.check_named(key, verdict, None)
    }

    /// As [`Report::check`], with the witness coordinates also shown by name.
    pub fn check_named(&mut self, key: impl Into<String>, verdict: &Verdict, names: Option<Vec<String>>) -> &mut Self {
        if !verdict.passed() {
            self.failed = true;
        }
        let names = names.filter(|_| !verdict.passed());
        self.push(key, Val::Check { verdict: verdict.clone(), names })
    }

    /// Records a verdict without affecting the report status.
    pub fn observe(&mut self, key: impl Into<String>, verdict: &Verdict, names: Option<Vec<String>>) -> &mut Self {
        let names = names.filter(|_| !verdict.passed());
        self.push(key, Val::Check { verdict: verdict.clone(), names })
    }

    /// Marks the report failed without a verdict row.
    pub fn fail(&mut self, key: impl Into<String>, message: impl Into<String>) -> &mut Self {
        self.failed = true;
        self.push(key, Val::Text(format!("fail: {}", message.into())))
    }

    pub fn failed(&self) -> bool {
        self.failed
    }

    pub fn entries(&self) -> &[(String, Val)] {
        &self.entries
    }

    pub fn get(&self, key: &str) -> Option<&Val> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    fn push(&mut self, key: impl Into<String>, value: Val) -> &mut Self {
        let key = key.into();
        debug_assert!(self.get(&key).is_none(), "duplicate report key {key}");
        self.entries.push((key, value));
        self
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.entries {
            let _ = writeln!(out, "{k}: {}", render_val(v));
        }
        let _ = writeln!(out, "status: {}", if self.failed { "fail" } else { "pass" });
        out
    }

    pub fn render_json(&self) -> String {
        let mut map = Map::new();
        for (k, v) in &self.entries {
            let value = match v {
                Val::Text(s) => Value::String(s.clone()),
                Val::Count(n) => json!(n),
                Val::Check { verdict: Verdict::Pass, .. } => json!({ "verdict": "pass" }),
                Val::Check { verdict: Verdict::Fail(w), names } => {
                    let mut o = json!({ "verdict": "fail", "witness": w.0 });
                    if let Some(n) = names {
                        o["names"] = json!(n);
                    }
                    o
                }
                Val::Skipped(why) => json!({ "verdict": "skipped", "reason": why }),
                Val::Json(j) => j.clone(),
            };
            map.insert(k.clone(), value);
        }
        map.insert("status".into(), json!(if self.failed { "fail" } else { "pass" }));
        let mut s = serde_json::to_string_pretty(&Value::Object(map)).expect("report serialises");
        s.push('\n');
        s
    }
}

fn render_val(v: &Val) -> String {
    match v {
        Val::Text(s) => s.clone(),
        Val::Count(n) => n.to_string(),
        Val::Check { verdict: Verdict::Pass, .. } => "pass".into(),
        Val::Check { verdict: Verdict::Fail(w), names: None } => format!("fail {w}"),
        Val::Check { verdict: Verdict::Fail(w), names: Some(n) } => format!("fail {w} = ({})", n.join(",")),
        Val::Skipped(why) => format!("skipped: {why}"),
        Val::Json(j) => serde_json::to_string(j).expect("json value"),
    }
}

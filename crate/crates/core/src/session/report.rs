use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};
use serde_json::Value;

use super::parse::{SessionFlavor, SessionOptions};

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SessionSummary {
    pub source: Option<String>,
    pub characteristic: u64,
    pub vars: Vec<String>,
    pub flavor: SessionFlavor,
    pub ideal: Vec<String>,
    pub fibre_vars: Vec<String>,
    pub fibre_ideal: Vec<String>,
    pub modules: BTreeMap<String, String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CommandResult {
    pub command: String,
    pub module: String,
    pub line: usize,
    pub verdict: String,
    pub summary: String,
    pub conclusive: bool,
    /// The homological cutoff or truncation that limited an inconclusive result.
    pub limited_by: Option<String>,
    pub tables: BTreeMap<String, Value>,
    pub witnesses: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Provenance {
    pub tool: String,
    pub version: String,
    pub characteristic: u64,
    pub homological_cutoff: usize,
    pub truncations_used: Vec<u32>,
    pub exit_status: i32,
}

/// The machine-readable outcome of a session.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Report {
    pub session: SessionSummary,
    pub options: SessionOptions,
    pub results: Vec<CommandResult>,
    pub provenance: Provenance,
}

impl Report {
    /// 0 when every result is conclusive, 2 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.results.iter().all(|r| r.conclusive) {
            0
        } else {
            2
        }
    }

    pub fn to_json(&self) -> serde_json::Result<String> {
        serde_json::to_string_pretty(self)
    }

    pub fn from_json(s: &str) -> serde_json::Result<Report> {
        serde_json::from_str(s)
    }

    /// Human-readable rendering with Betti tables drawn as text.
    pub fn render(&self) -> String {
        let mut out = String::new();
        let s = &self.session;
        out.push_str(&format!(
            "ring: k[{}] over F_{} ({:?})\n",
            s.vars.iter().chain(&s.fibre_vars).cloned().collect::<Vec<_>>().join(", "),
            s.characteristic,
            s.flavor
        ));
        if !s.ideal.is_empty() {
            out.push_str(&format!("ideal: {}\n", s.ideal.join(", ")));
        }
        for (name, m) in &s.modules {
            out.push_str(&format!("module {name} = {m}\n"));
        }
        for r in &self.results {
            out.push('\n');
            out.push_str(&format!("analyze {} : {}\n", r.module, r.command));
            let shout = r.verdict.chars().all(|c| c.is_ascii_lowercase() || c == ' ');
            let verdict = if shout { r.verdict.to_uppercase() } else { r.verdict.clone() };
            out.push_str(&format!("  verdict: {verdict}\n"));
            if !r.summary.is_empty() {
                out.push_str(&format!("  {}\n", r.summary));
            }
            if let Some(l) = &r.limited_by {
                out.push_str(&format!("  limited by {l}\n"));
            }
            for w in &r.witnesses {
                out.push_str(&format!("  witness: {w}\n"));
            }
            for (name, v) in &r.tables {
                if let (true, Value::String(text)) = (name.ends_with("_rendered"), v) {
                    out.push_str(&format!("  {}:\n", name.trim_end_matches("_rendered")));
                    for line in text.lines() {
                        out.push_str(&format!("    {line}\n"));
                    }
                }
            }
        }
        out
    }
}

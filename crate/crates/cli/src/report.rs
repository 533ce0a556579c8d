//! Machine-readable run reports.

use std::collections::BTreeMap;

use antiramsey_core::search::SearchStats;
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Counters {
    pub nodes: u64,
    pub bound_prunes: u64,
    pub rainbow_prunes: u64,
    pub leaves: u64,
    pub tasks: u64,
}

impl From<SearchStats> for Counters {
    fn from(s: SearchStats) -> Self {
        Counters {
            nodes: s.nodes,
            bound_prunes: s.bound_prunes,
            rainbow_prunes: s.rainbow_prunes,
            leaves: s.leaves,
            tasks: s.tasks,
        }
    }
}

#[derive(Debug, Clone, Default, PartialEq, Serialize, Deserialize)]
pub struct RunReport {
    /// Arguments as given, without the program name.
    pub command: Vec<String>,
    pub inputs: BTreeMap<String, String>,
    /// Numeric results, e.g. `value`, `colors`, `count`.
    pub values: BTreeMap<String, u64>,
    /// Textual results, e.g. `method`, `construction`.
    pub labels: BTreeMap<String, String>,
    /// Per-item detail lines (graph names, mismatches).
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub details: Vec<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub pass: Option<bool>,
    pub elapsed_secs: f64,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub counters: Option<Counters>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub outputs: Vec<String>,
    /// The value printed by `--quiet`.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub answer: Option<String>,
}

impl RunReport {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("serializable")
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn value(&mut self, key: &str, v: u64) -> &mut Self {
        self.values.insert(key.into(), v);
        self
    }

    pub fn label(&mut self, key: &str, v: impl Into<String>) -> &mut Self {
        self.labels.insert(key.into(), v.into());
        self
    }

    pub fn input(&mut self, key: &str, v: impl ToString) -> &mut Self {
        self.inputs.insert(key.into(), v.to_string());
        self
    }

    /// Plain `key: value` lines for a terminal.
    pub fn human(&self) -> String {
        let mut out = String::new();
        for (k, v) in &self.labels {
            out += &format!("{k}: {v}\n");
        }
        for (k, v) in &self.values {
            out += &format!("{k}: {v}\n");
        }
        for d in &self.details {
            out += &format!("  {d}\n");
        }
        if let Some(c) = &self.counters {
            out += &format!(
                "search: {} nodes, {} bound prunes, {} rainbow prunes, {} leaves, {} tasks\n",
                c.nodes, c.bound_prunes, c.rainbow_prunes, c.leaves, c.tasks
            );
        }
        for p in &self.outputs {
            out += &format!("wrote {p}\n");
        }
        if let Some(p) = self.pass {
            out += if p { "PASS\n" } else { "FAIL\n" };
        }
        out += &format!("elapsed: {:.3}s\n", self.elapsed_secs);
        out
    }
}

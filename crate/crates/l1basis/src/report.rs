//! Machine-readable analysis reports.
//!
//! Every reported value carries its exact rational string, a decimal
//! rendering at the configured precision, and a provenance note saying how
//! the value was computed. Given the same command line and seed the JSON
//! document is byte-identical; only the text rendering carries the build
//! banner.

use serde::Serialize;

use crate::scalar::Scalar;

/// Version of the report document layout, independent of the build.
pub const REPORT_VERSION: u32 = 1;

#[derive(Clone, Debug, Serialize)]
pub struct Report {
    pub report_version: u32,
    pub command: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
    pub precision: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub input: Option<InputInfo>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub dimension: Option<usize>,
    pub constants: Vec<ConstantEntry>,
    pub checks: Vec<CheckEntry>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub trials: Option<TrialSummary>,
    pub notes: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct InputInfo {
    pub path: String,
    pub sha256: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct ConstantEntry {
    pub name: String,
    pub exact: String,
    pub decimal: String,
    pub provenance: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct CheckEntry {
    pub name: String,
    /// "pass", "fail", or "not-applicable"
    pub outcome: String,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub detail: Option<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialSummary {
    pub total: usize,
    pub violations: usize,
    /// per-trial exact margins
    pub margins: Vec<TrialMargin>,
    pub failures: Vec<String>,
}

#[derive(Clone, Debug, Serialize)]
pub struct TrialMargin {
    pub trial: usize,
    pub label: String,
    pub exact: String,
    pub decimal: String,
    pub ok: bool,
}

impl Report {
    pub fn new(command: impl Into<String>, precision: usize) -> Report {
        Report {
            report_version: REPORT_VERSION,
            command: command.into(),
            seed: None,
            precision,
            input: None,
            dimension: None,
            constants: Vec::new(),
            checks: Vec::new(),
            trials: None,
            notes: Vec::new(),
        }
    }

    pub fn with_seed(mut self, seed: u64) -> Report {
        self.seed = Some(seed);
        self
    }

    pub fn add_constant(
        &mut self,
        name: impl Into<String>,
        value: &Scalar,
        provenance: impl Into<String>,
        witness: Option<String>,
    ) {
        self.constants.push(ConstantEntry {
            name: name.into(),
            exact: value.to_string(),
            decimal: value.decimal(self.precision),
            provenance: provenance.into(),
            witness,
        });
    }

    pub fn add_check(&mut self, name: impl Into<String>, ok: bool, detail: Option<String>) {
        self.checks.push(CheckEntry {
            name: name.into(),
            outcome: if ok { "pass" } else { "fail" }.to_string(),
            detail,
        });
    }

    pub fn add_note(&mut self, note: impl Into<String>) {
        self.notes.push(note.into());
    }

    pub fn violations(&self) -> usize {
        let from_trials = self.trials.as_ref().map_or(0, |t| t.violations);
        let from_checks = self
            .checks
            .iter()
            .filter(|c| c.outcome == "fail")
            .count();
        from_trials + from_checks
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn render_text(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("command: {}\n", self.command));
        if let Some(seed) = self.seed {
            out.push_str(&format!("seed: {seed}\n"));
        }
        if let Some(input) = &self.input {
            out.push_str(&format!("input: {} (sha256 {})\n", input.path, input.sha256));
        }
        if let Some(n) = self.dimension {
            out.push_str(&format!("n: {n}\n"));
        }
        if !self.constants.is_empty() {
            out.push_str("constants:\n");
            for c in &self.constants {
                out.push_str(&format!("  {} = {} ({})", c.name, c.exact, c.decimal));
                if let Some(w) = &c.witness {
                    out.push_str(&format!("  witness: {w}"));
                }
                out.push_str(&format!("  [{}]\n", c.provenance));
            }
        }
        if !self.checks.is_empty() {
            out.push_str("checks:\n");
            for c in &self.checks {
                out.push_str(&format!("  {}: {}", c.name, c.outcome));
                if let Some(d) = &c.detail {
                    out.push_str(&format!("  ({d})"));
                }
                out.push('\n');
            }
        }
        if let Some(t) = &self.trials {
            out.push_str(&format!(
                "trials: {} total, {} violations\n",
                t.total, t.violations
            ));
            for f in &t.failures {
                out.push_str(&format!("  violation: {f}\n"));
            }
        }
        for note in &self.notes {
            out.push_str(&format!("note: {note}\n"));
        }
        out
    }
}

/// Builds a margin row from an exact value.
pub fn margin(trial: usize, label: impl Into<String>, value: &Scalar, ok: bool, precision: usize) -> TrialMargin {
    TrialMargin {
        trial,
        label: label.into(),
        exact: value.to_string(),
        decimal: value.decimal(precision),
        ok,
    }
}

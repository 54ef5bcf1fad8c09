//! Report records shared by the derivations, the oracle and the CLI.
//!
//! JSON and Markdown are rendered from the same [`ReportDocument`]; neither
//! carries wall-clock data unless timing is requested explicitly.

use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::interior_residue::SphereValue;
use crate::scalar_ring::ParamScalar;

/// Serde adapter writing a [`ParamScalar`] as its canonical text.
pub mod param_text {
    use serde::{Deserialize, Deserializer, Serializer};

    use crate::scalar_ring::ParamScalar;

    pub fn serialize<S: Serializer>(x: &ParamScalar, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&x.to_text())
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<ParamScalar, D::Error> {
        let s = String::deserialize(d)?;
        ParamScalar::parse(&s).map_err(serde::de::Error::custom)
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum Verdict {
    Match,
    Mismatch { delta: String },
}

impl Verdict {
    pub fn is_match(&self) -> bool {
        matches!(self, Verdict::Match)
    }

    /// Exact comparison of two scalars; the delta is `derived − claimed`.
    pub fn of_scalars(derived: &ParamScalar, claimed: &ParamScalar) -> Self {
        if derived == claimed {
            Verdict::Match
        } else {
            Verdict::Mismatch {
                delta: (derived - claimed).to_text(),
            }
        }
    }

    pub fn of_values(derived: &SphereValue, claimed: &SphereValue) -> Self {
        if derived.pi_power == claimed.pi_power || derived.is_zero() || claimed.is_zero() {
            let p = derived.pi_power.max(claimed.pi_power);
            let delta = SphereValue::new(&derived.coeff - &claimed.coeff, p);
            if delta.is_zero() {
                Verdict::Match
            } else {
                Verdict::Mismatch {
                    delta: delta.to_text(),
                }
            }
        } else {
            Verdict::Mismatch {
                delta: format!("({}) - ({})", derived.to_text(), claimed.to_text()),
            }
        }
    }

    pub fn label(&self) -> &'static str {
        match self {
            Verdict::Match => "match",
            Verdict::Mismatch { .. } => "mismatch",
        }
    }
}

/// A derived quantity set against a published one.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Comparison {
    pub label: String,
    pub derived: String,
    pub claimed: String,
    #[serde(flatten)]
    pub verdict: Verdict,
}

impl Comparison {
    pub fn of_values(label: &str, derived: &SphereValue, claimed: &SphereValue) -> Self {
        Self {
            label: label.to_string(),
            derived: derived.to_text(),
            claimed: claimed.to_text(),
            verdict: Verdict::of_values(derived, claimed),
        }
    }
}

/// Internal consistency check run during a derivation.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Check {
    pub name: String,
    pub passed: bool,
    pub detail: String,
}

impl Check {
    pub fn new(name: &str, passed: bool, detail: impl Into<String>) -> Self {
        Self {
            name: name.to_string(),
            passed,
            detail: detail.into(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NamedValue {
    pub name: String,
    pub value: SphereValue,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResidueReport {
    pub functional: String,
    pub parameters: String,
    /// Invariant form multiplied by `derived`.
    pub bracket: String,
    pub derived: SphereValue,
    pub components: Vec<NamedValue>,
    pub comparisons: Vec<Comparison>,
    pub checks: Vec<Check>,
    pub assumptions: Vec<String>,
}

impl ResidueReport {
    pub fn all_match(&self) -> bool {
        self.comparisons.iter().all(|c| c.verdict.is_match())
    }

    pub fn all_checks_pass(&self) -> bool {
        self.checks.iter().all(|c| c.passed)
    }
}

/// One oracle trial: closed form against the brute-force 16×16 value.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleCase {
    pub tag: String,
    pub trial: usize,
    pub instantiation: Vec<(String, String)>,
    #[serde(with = "param_text")]
    pub closed_form: ParamScalar,
    #[serde(with = "param_text")]
    pub brute_force: ParamScalar,
    #[serde(flatten)]
    pub verdict: Verdict,
}

/// All trials of one tag, condensed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct OracleSummary {
    pub tag: String,
    pub statement: String,
    pub trials: usize,
    pub matches: usize,
    /// Closed form the oracle fits to the brute-force values, when a fit
    /// was attempted.
    pub oracle_form: Option<String>,
    pub reconstruction_ok: Option<bool>,
    pub first_mismatch: Option<OracleCase>,
}

impl OracleSummary {
    pub fn all_match(&self) -> bool {
        self.matches == self.trials
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Timing {
    pub seconds: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub engine: String,
    pub version: String,
    pub command: String,
    pub seed: Option<u64>,
    pub trials: Option<usize>,
    pub oracle: Vec<OracleSummary>,
    pub residues: Vec<ResidueReport>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub timing: Option<Timing>,
}

/// Table cells cannot hold a bare `|`.
fn cell(s: &str) -> String {
    s.replace('|', "\\|")
}

impl ReportDocument {
    pub fn new(command: &str) -> Self {
        Self {
            engine: env!("CARGO_PKG_NAME").to_string(),
            version: env!("CARGO_PKG_VERSION").to_string(),
            command: command.to_string(),
            seed: None,
            trials: None,
            oracle: Vec::new(),
            residues: Vec::new(),
            timing: None,
        }
    }

    pub fn any_mismatch(&self) -> bool {
        self.oracle.iter().any(|o| !o.all_match()) || self.residues.iter().any(|r| !r.all_match())
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    pub fn from_json(s: &str) -> serde_json::Result<Self> {
        serde_json::from_str(s)
    }

    pub fn to_markdown(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "# {} {} report", self.engine, self.version);
        let _ = writeln!(out);
        let _ = writeln!(out, "- command: `{}`", self.command);
        if let Some(seed) = self.seed {
            let _ = writeln!(out, "- seed: `{seed}`");
        }
        if let Some(t) = self.trials {
            let _ = writeln!(out, "- trials: `{t}`");
        }
        if let Some(t) = &self.timing {
            let _ = writeln!(out, "- seconds: `{}`", t.seconds);
        }
        if !self.oracle.is_empty() {
            let _ = writeln!(out, "\n## Identities\n");
            let _ = writeln!(out, "| tag | trials | matches | verdict |");
            let _ = writeln!(out, "|---|---|---|---|");
            for o in &self.oracle {
                let v = if o.all_match() { "match" } else { "mismatch" };
                let _ = writeln!(out, "| `{}` | {} | {} | {} |", cell(&o.tag), o.trials, o.matches, v);
            }
            for o in &self.oracle {
                let _ = writeln!(out, "\n### `{}`\n", o.tag);
                let _ = writeln!(out, "- statement: `{}`", o.statement);
                if let Some(f) = &o.oracle_form {
                    let _ = writeln!(out, "- oracle form: `{f}`");
                }
                if let Some(r) = o.reconstruction_ok {
                    let _ = writeln!(out, "- reconstruction: `{r}`");
                }
                if let Some(c) = &o.first_mismatch {
                    let _ = writeln!(out, "- first mismatch: trial `{}`", c.trial);
                    for (k, v) in &c.instantiation {
                        let _ = writeln!(out, "  - `{k}` = `{v}`");
                    }
                    let _ = writeln!(out, "  - closed form: `{}`", c.closed_form);
                    let _ = writeln!(out, "  - brute force: `{}`", c.brute_force);
                    if let Verdict::Mismatch { delta } = &c.verdict {
                        let _ = writeln!(out, "  - delta: `{delta}`");
                    }
                }
            }
        }
        for r in &self.residues {
            let _ = writeln!(out, "\n## Functional `{}`\n", r.functional);
            let _ = writeln!(out, "- parameters: `{}`", r.parameters);
            let _ = writeln!(out, "- bracket: `{}`", r.bracket);
            let _ = writeln!(out, "- derived: `{}`", r.derived.to_text());
            for c in &r.components {
                let _ = writeln!(out, "- component `{}`: `{}`", c.name, c.value.to_text());
            }
            if !r.comparisons.is_empty() {
                let _ = writeln!(out, "\n| comparison | derived | claimed | verdict | delta |");
                let _ = writeln!(out, "|---|---|---|---|---|");
                for c in &r.comparisons {
                    let delta = match &c.verdict {
                        Verdict::Match => String::new(),
                        Verdict::Mismatch { delta } => format!("`{delta}`"),
                    };
                    let _ = writeln!(
                        out,
                        "| {} | `{}` | `{}` | {} | {} |",
                        cell(&c.label),
                        cell(&c.derived),
                        cell(&c.claimed),
                        c.verdict.label(),
                        cell(&delta)
                    );
                }
            }
            if !r.checks.is_empty() {
                let _ = writeln!(out, "\n| check | passed | detail |");
                let _ = writeln!(out, "|---|---|---|");
                for c in &r.checks {
                    let _ = writeln!(out, "| {} | {} | `{}` |", cell(&c.name), c.passed, cell(&c.detail));
                }
            }
            if !r.assumptions.is_empty() {
                let _ = writeln!(out);
            }
            for a in &r.assumptions {
                let _ = writeln!(out, "- assumption: {a}");
            }
        }
        out
    }
}

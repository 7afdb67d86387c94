use std::collections::BTreeMap;
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::obstruction::{self, coh_trivial_candidates, ObstructionError, ObstructionReport, VarietyKind, VarietySpec};

use super::specfile::{NamedSpec, SpecFile};

pub const TOOL_NAME: &str = "diagonal";
pub const TOOL_VERSION: &str = env!("CARGO_PKG_VERSION");

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Tool {
    pub name: String,
    pub version: String,
}

/// A raw computation attached to an entry: named inputs and exact outputs,
/// rationals as `p/q` strings.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Computation {
    pub name: String,
    pub inputs: BTreeMap<String, String>,
    pub outputs: BTreeMap<String, String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EntryError {
    pub kind: String,
    pub message: String,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Entry {
    pub name: String,
    pub spec: VarietySpec,
    pub reports: Vec<ObstructionReport>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub computations: Vec<Computation>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub error: Option<EntryError>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ReportDocument {
    pub tool: Tool,
    pub entries: Vec<Entry>,
    /// Descriptions of the citation labels used by the entries.
    pub citations: BTreeMap<String, String>,
}

fn error_kind(e: &ObstructionError) -> &'static str {
    match e {
        ObstructionError::MissingFlag(_) => "MissingFlag",
        ObstructionError::ContradictoryFlags(_) => "ContradictoryFlags",
        ObstructionError::UnsupportedSpec { .. } => "UnsupportedSpec",
        ObstructionError::WrongDimension { .. } => "WrongDimension",
        ObstructionError::BadM(_) => "BadM",
        ObstructionError::InvalidSpec(_) => "InvalidSpec",
        ObstructionError::Internal(_) => "Internal",
        ObstructionError::CharClass(_) => "CharClass",
        ObstructionError::Steenrod(_) => "Steenrod",
        ObstructionError::Ring(_) => "Ring",
    }
}

fn has_candidate_table(kind: &VarietyKind) -> bool {
    match kind {
        VarietyKind::K3Generic { .. } | VarietyKind::PicZGeneral { .. } | VarietyKind::ProjectiveSpace { .. } => true,
        VarietyKind::CubicThreefold => true,
        VarietyKind::Quadric { n } => *n >= 3,
        VarietyKind::CompleteIntersection { ambient, degrees } => *ambient as usize >= degrees.len() + 3,
        _ => false,
    }
}

/// The candidate search as a computation record.
pub fn candidate_computation(spec: &VarietySpec, window: Option<i64>) -> Result<Computation, ObstructionError> {
    let table = coh_trivial_candidates(spec, window)?;
    let mut inputs = BTreeMap::new();
    inputs.insert("dim".to_string(), table.dim.to_string());
    inputs.insert("omega".to_string(), format!("O({})", table.index));
    inputs.insert("window".to_string(), format!("{}..{}", table.window.0, table.window.1));
    let mut outputs = BTreeMap::new();
    for (n, chi, status) in &table.rows {
        let chi = chi.as_ref().map_or("?".to_string(), |c| c.to_string());
        outputs.insert(format!("O({n})"), format!("chi = {chi}; {}", status.label()));
    }
    let join = |v: Vec<i64>| v.iter().map(i64::to_string).collect::<Vec<_>>().join(", ");
    outputs.insert("candidates".into(), join(table.candidates()));
    outputs.insert("undetermined".into(), join(table.undetermined()));
    Ok(Computation {
        name: "coh-trivial-candidates".into(),
        inputs,
        outputs,
    })
}

fn run_entry(named: &NamedSpec, window: Option<i64>) -> Result<Entry, ObstructionError> {
    let mut entry = Entry {
        name: named.name.clone(),
        spec: named.spec.clone(),
        reports: vec![],
        computations: vec![],
        error: None,
    };
    match obstruction::evaluate(&named.spec) {
        Ok(reports) => entry.reports = reports,
        Err(e) if e.is_internal() => return Err(e),
        Err(e) => {
            entry.error = Some(EntryError {
                kind: error_kind(&e).into(),
                message: e.to_string(),
            })
        }
    }
    if entry.error.is_none() && has_candidate_table(&named.spec.kind) {
        match candidate_computation(&named.spec, window) {
            Ok(c) => entry.computations.push(c),
            Err(e) if e.is_internal() => return Err(e),
            Err(_) => {}
        }
    }
    Ok(entry)
}

/// Evaluates every entry in input order. Input errors are recorded on the
/// entry; only internal invariant violations abort the batch.
pub fn run_reports(file: &SpecFile) -> Result<ReportDocument, ObstructionError> {
    let entries = file
        .varieties
        .iter()
        .map(|v| run_entry(v, file.options.chi_window))
        .collect::<Result<Vec<_>, _>>()?;
    let index = obstruction::citation_index();
    let mut citations = BTreeMap::new();
    for e in &entries {
        for r in &e.reports {
            for c in r.citations() {
                let text = index.get(c).copied().unwrap_or("");
                citations.insert(c.to_string(), text.to_string());
            }
        }
    }
    Ok(ReportDocument {
        tool: Tool {
            name: TOOL_NAME.into(),
            version: TOOL_VERSION.into(),
        },
        entries,
        citations,
    })
}

impl ReportDocument {
    /// Canonical JSON: sorted keys, two-space indentation, trailing newline.
    pub fn to_canonical_json(&self) -> String {
        let value = serde_json::to_value(self).expect("report serializes");
        let mut s = serde_json::to_string_pretty(&value).expect("value serializes");
        s.push('\n');
        s
    }

    pub fn from_json(text: &str) -> Result<Self, serde_json::Error> {
        serde_json::from_str(text)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let _ = writeln!(out, "{} ({})", e.name, e.spec.kind.tag());
            if let Some(err) = &e.error {
                let _ = writeln!(out, "  error [{}]: {}", err.kind, err.message);
            }
            for r in &e.reports {
                let mut cites: Vec<&str> = Vec::new();
                for c in r.citations() {
                    if !cites.contains(&c) {
                        cites.push(c);
                    }
                }
                let _ = writeln!(out, "  {}: {} [{}]", r.property, r.verdict, cites.join("; "));
                for t in &r.trace {
                    let _ = writeln!(out, "    - {} ({})", t.rule, t.citation);
                    for (k, v) in &t.values {
                        let _ = writeln!(out, "        {k} = {v}");
                    }
                }
            }
            for c in &e.computations {
                let cand = c.outputs.get("candidates").map_or("", String::as_str);
                let _ = writeln!(out, "  {}: candidates [{}]", c.name, cand);
            }
        }
        out
    }
}

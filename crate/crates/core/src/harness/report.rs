use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use super::corpus::{CorpusItem, CorpusSpec};
use crate::error::Result;
use crate::graph::{canonical_form, parse_graph6, CanonicalForm};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Counts {
    pub agree: usize,
    pub disagree: usize,
    pub excluded: usize,
    pub skipped: usize,
}

impl Counts {
    pub fn total(&self) -> usize {
        self.agree + self.disagree + self.excluded + self.skipped
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Counterexample {
    /// graph6 of the canonical labelling.
    pub graph6: String,
    pub expected: String,
    pub got: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CorpusDescriptor {
    #[serde(flatten)]
    pub spec: CorpusSpec,
    pub size: usize,
}

/// Serializes with its fields in declaration order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct AuditReport {
    pub theorem_id: String,
    pub corpus: CorpusDescriptor,
    pub counts: Counts,
    /// Sorted by canonical form.
    pub counterexamples: Vec<Counterexample>,
    pub versions: BTreeMap<String, String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub wall_time_ms: Option<u64>,
}

impl AuditReport {
    /// Pretty JSON. Without timing the output is a pure function of the
    /// inputs.
    pub fn to_json(&self, include_timing: bool) -> Result<String> {
        let mut r = self.clone();
        if !include_timing {
            r.wall_time_ms = None;
        }
        Ok(serde_json::to_string_pretty(&r)? + "\n")
    }

    /// Equality ignoring wall time.
    pub fn same_content(&self, other: &AuditReport) -> bool {
        AuditReport { wall_time_ms: None, ..self.clone() } == AuditReport { wall_time_ms: None, ..other.clone() }
    }
}

/// Expected counterexamples per theorem: documented quirks of the
/// statements as written, so that only new disagreements fail a run.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Baseline(pub BTreeMap<String, BTreeSet<String>>);

const BUILTIN_BASELINE: &str = include_str!("../../findings/baseline.json");

impl Baseline {
    pub fn parse(text: &str) -> Result<Self> {
        Ok(serde_json::from_str(text)?)
    }

    /// The committed findings file.
    pub fn builtin() -> Self {
        Self::parse(BUILTIN_BASELINE).expect("committed baseline parses")
    }

    pub fn to_json(&self) -> Result<String> {
        Ok(serde_json::to_string_pretty(self)? + "\n")
    }

    fn keys(&self, theorem: &str) -> Result<BTreeSet<CanonicalForm>> {
        self.0
            .get(theorem)
            .into_iter()
            .flatten()
            .map(|s| Ok(canonical_form(&parse_graph6(s)?)))
            .collect()
    }

    /// Replaces the findings for the report's theorem within its corpus,
    /// keeping entries outside it.
    pub fn record(&mut self, report: &AuditReport, items: &[CorpusItem]) -> Result<()> {
        let corpus: BTreeSet<&CanonicalForm> = items.iter().map(|i| &i.key).collect();
        let mut kept = BTreeSet::new();
        for s in self.0.get(&report.theorem_id).into_iter().flatten() {
            if !corpus.contains(&canonical_form(&parse_graph6(s)?)) {
                kept.insert(s.clone());
            }
        }
        kept.extend(report.counterexamples.iter().map(|c| c.graph6.clone()));
        if kept.is_empty() {
            self.0.remove(&report.theorem_id);
        } else {
            self.0.insert(report.theorem_id.clone(), kept);
        }
        Ok(())
    }

    /// Compares a report against the findings expected for its corpus.
    pub fn check(&self, report: &AuditReport, items: &[CorpusItem]) -> Result<BaselineCheck> {
        let expected = self.keys(&report.theorem_id)?;
        let mut got = BTreeSet::new();
        let mut unexpected = Vec::new();
        for c in &report.counterexamples {
            let key = canonical_form(&parse_graph6(&c.graph6)?);
            if !expected.contains(&key) {
                unexpected.push(c.clone());
            }
            got.insert(key);
        }
        let missing = items
            .iter()
            .filter(|i| expected.contains(&i.key) && !got.contains(&i.key))
            .map(|i| i.graph.to_string())
            .collect();
        Ok(BaselineCheck { unexpected, missing })
    }
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct BaselineCheck {
    /// Counterexamples the baseline does not list.
    pub unexpected: Vec<Counterexample>,
    /// Baseline graphs in the corpus that no longer disagree.
    pub missing: Vec<String>,
}

impl BaselineCheck {
    pub fn is_clean(&self) -> bool {
        self.unexpected.is_empty() && self.missing.is_empty()
    }
}

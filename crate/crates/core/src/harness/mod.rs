//! Corpus-scale audits of the recognition predicates against the
//! brute-force oracle.
//!
//! An audit loads a corpus (sorted by canonical form), evaluates one
//! theorem on every graph, possibly in parallel, and merges the outcomes in
//! corpus order, so the report does not depend on how the work was split.

mod audit;
mod corpus;
mod oracle;
mod report;

pub use audit::{evaluate, root_pure, Outcome, TheoremId};
pub use corpus::{generate_iterates, load_corpus, CorpusItem, CorpusSpec, IterateBatch, DEFAULT_MAX_ORDER};
pub use oracle::{oracle_order, OracleVerdict};
pub use report::{AuditReport, Baseline, BaselineCheck, Counterexample, Counts, CorpusDescriptor};

use std::collections::BTreeMap;
use std::time::Instant;

use crate::error::Result;
use crate::exec::Execution;

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct AuditOptions {
    pub execution: Execution,
    /// Permit generated corpora beyond [`DEFAULT_MAX_ORDER`] vertices.
    pub allow_large: bool,
}

/// Loads the corpus and audits it.
pub fn run_audit(theorem_id: &str, spec: &CorpusSpec, options: &AuditOptions) -> Result<AuditReport> {
    let theorem = TheoremId::parse(theorem_id)?;
    let start = Instant::now();
    let (items, _) = load_corpus(spec, options.allow_large, options.execution)?;
    let mut report = audit_items(theorem, spec, &items, options.execution);
    report.wall_time_ms = Some(start.elapsed().as_millis() as u64);
    Ok(report)
}

/// Audits an already loaded corpus.
pub fn audit_items(theorem: TheoremId, spec: &CorpusSpec, items: &[CorpusItem], exec: Execution) -> AuditReport {
    let start = Instant::now();
    let outcomes = exec.map(items, |item| evaluate(theorem, &item.graph));
    let mut counts = Counts::default();
    let mut counterexamples = Vec::new();
    for (item, outcome) in items.iter().zip(outcomes) {
        match outcome {
            Outcome::Agree => counts.agree += 1,
            Outcome::Excluded => counts.excluded += 1,
            Outcome::Skipped => counts.skipped += 1,
            Outcome::Disagree { expected, got } => {
                counts.disagree += 1;
                counterexamples.push(Counterexample {
                    graph6: item.graph.to_string(),
                    expected,
                    got,
                });
            }
        }
    }
    AuditReport {
        theorem_id: theorem.to_string(),
        corpus: CorpusDescriptor {
            spec: spec.clone(),
            size: items.len(),
        },
        counts,
        counterexamples,
        versions: versions(),
        wall_time_ms: Some(start.elapsed().as_millis() as u64),
    }
}

fn versions() -> BTreeMap<String, String> {
    BTreeMap::from([
        (env!("CARGO_PKG_NAME").to_string(), env!("CARGO_PKG_VERSION").to_string()),
        ("report_schema".to_string(), "1".to_string()),
    ])
}

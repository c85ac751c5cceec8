//! Where audit inputs come from.

use std::collections::BTreeMap;
use std::path::PathBuf;

use serde::{Deserialize, Serialize};

use super::oracle::{oracle_order, OracleVerdict};
use crate::error::{Error, Result};
use crate::exec::Execution;
use crate::graph::{canonical_form, connected_graphs_by_order, parse_graph6_lines, CanonicalForm, Graph};
use crate::lineops::iterate_line;

/// Largest order enumerated without an explicit opt-in.
pub const DEFAULT_MAX_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum CorpusSpec {
    /// Every connected graph with `n_min ≤ n ≤ n_max` vertices (and maximum
    /// degree at most `max_degree`, if given), one per isomorphism class.
    Generated {
        n_min: usize,
        n_max: usize,
        max_degree: Option<usize>,
    },
    /// graph6 lines from a file.
    File { path: PathBuf },
    /// `L^depth(G)` for every connected `G` with at most `max_edges` edges.
    Iterates { max_edges: usize, depth: usize },
}

impl CorpusSpec {
    pub fn generated(n_max: usize) -> Self {
        CorpusSpec::Generated {
            n_min: 1,
            n_max,
            max_degree: None,
        }
    }
}

/// A corpus item: the graph in canonical labelling plus its key.
#[derive(Clone, Debug)]
pub struct CorpusItem {
    pub key: CanonicalForm,
    pub graph: Graph,
}

impl CorpusItem {
    pub fn new(g: &Graph) -> Self {
        let key = canonical_form(g);
        CorpusItem {
            graph: key.to_graph(),
            key,
        }
    }
}

/// Graphs of the corpus, deduplicated and sorted by canonical form, plus a
/// note for every source that had to be skipped.
pub fn load_corpus(spec: &CorpusSpec, allow_large: bool, exec: Execution) -> Result<(Vec<CorpusItem>, Vec<String>)> {
    let mut notes = Vec::new();
    let graphs: Vec<Graph> = match spec {
        CorpusSpec::Generated {
            n_min,
            n_max,
            max_degree,
        } => {
            if *n_max > DEFAULT_MAX_ORDER && !allow_large {
                return Err(Error::CorpusTooLarge(format!(
                    "n_max {n_max} exceeds {DEFAULT_MAX_ORDER}; opt in to larger corpora explicitly"
                )));
            }
            connected_graphs_by_order(*n_max, *max_degree, exec)?
                .into_iter()
                .skip(n_min.saturating_sub(1))
                .flatten()
                .collect()
        }
        CorpusSpec::File { path } => parse_graph6_lines(&std::fs::read_to_string(path)?)?,
        CorpusSpec::Iterates { max_edges, depth } => {
            let batch = generate_iterates(*max_edges, *depth, exec)?;
            notes = batch.skipped;
            batch.items.into_iter().map(|(g, _)| g).collect()
        }
    };
    let mut items: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for g in graphs {
        let item = CorpusItem::new(&g);
        items.entry(item.key).or_insert(item.graph);
    }
    Ok((
        items.into_iter().map(|(key, graph)| CorpusItem { key, graph }).collect(),
        notes,
    ))
}

#[derive(Clone, Debug)]
pub struct IterateBatch {
    /// `(L^depth(G), oracle verdict)`, one per isomorphism class, sorted by
    /// canonical form.
    pub items: Vec<(Graph, OracleVerdict)>,
    /// Sources whose iterate could not be formed, with the reason.
    pub skipped: Vec<String>,
}

/// `L^depth(G)` for every connected graph `G` with at most `max_edges`
/// edges. Sources whose iterate vanishes or outgrows the vertex cap are
/// skipped with a note.
pub fn generate_iterates(max_edges: usize, depth: usize, exec: Execution) -> Result<IterateBatch> {
    if depth == 0 {
        return Err(Error::Contract("depth must be at least 1".into()));
    }
    // A connected graph with m edges has at most m + 1 vertices.
    let n_max = (max_edges + 1).min(crate::graph::MAX_ENUMERATION_ORDER);
    if max_edges + 1 > n_max {
        return Err(Error::CorpusTooLarge(format!("sources with up to {max_edges} edges")));
    }
    let sources: Vec<Graph> = connected_graphs_by_order(n_max, None, exec)?
        .into_iter()
        .flatten()
        .filter(|g| g.edge_count() <= max_edges)
        .collect();
    let mut skipped = Vec::new();
    let mut found: BTreeMap<CanonicalForm, Graph> = BTreeMap::new();
    for (g, r) in sources.iter().zip(exec.map(&sources, |g| iterate_line(g, depth))) {
        match r {
            Ok(h) => {
                let item = CorpusItem::new(&h);
                found.entry(item.key).or_insert(item.graph);
            }
            Err(e @ (Error::GraphTooLarge { .. } | Error::EmptyEdgeSet { .. })) => {
                skipped.push(format!("{g}: {e}"));
            }
            Err(e) => return Err(e),
        }
    }
    let graphs: Vec<Graph> = found.into_values().collect();
    let verdicts = exec.map(&graphs, oracle_order);
    let items = graphs
        .into_iter()
        .zip(verdicts)
        .map(|(g, v)| v.map(|v| (g, v)))
        .collect::<Result<_>>()?;
    Ok(IterateBatch { items, skipped })
}

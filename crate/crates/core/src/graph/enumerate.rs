//! Connected graphs up to isomorphism, by vertex extension.
//!
//! Every connected graph on `n + 1` vertices has a vertex whose removal
//! leaves a connected graph (a leaf of any spanning tree), so extending each
//! connected class representative on `n` vertices by one new vertex in all
//! possible ways reaches every class. Duplicates are removed by canonical
//! form. Bounding the maximum degree is hereditary under vertex deletion,
//! so the same argument works for degree-bounded families.

use std::collections::HashSet;

use super::canon::{canonical_form, CanonicalForm};
use super::{Graph, VertexSet};
use crate::error::{Error, Result};
use crate::exec::Execution;

/// Largest order the built-in enumerator accepts.
pub const MAX_ENUMERATION_ORDER: usize = 10;

fn check_order(n: usize) -> Result<()> {
    if n == 0 || n > MAX_ENUMERATION_ORDER {
        return Err(Error::CorpusTooLarge(format!(
            "enumeration order {n} outside 1..={MAX_ENUMERATION_ORDER}"
        )));
    }
    Ok(())
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, each in canonical labelling, sorted by canonical form.
pub fn enumerate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    Ok(connected_graphs_by_order(n, None, Execution::default())?
        .pop()
        .unwrap())
}

/// As [`enumerate_connected_graphs`], restricted to maximum degree at most
/// `max_degree`.
pub fn enumerate_connected_graphs_max_degree(n: usize, max_degree: usize) -> Result<Vec<Graph>> {
    check_order(n)?;
    Ok(connected_graphs_by_order(n, Some(max_degree), Execution::default())?
        .pop()
        .unwrap())
}

/// Levels `1..=n_max`: element `k - 1` holds the connected classes on `k`
/// vertices (optionally degree-bounded).
pub fn connected_graphs_by_order(
    n_max: usize,
    max_degree: Option<usize>,
    exec: Execution,
) -> Result<Vec<Vec<Graph>>> {
    check_order(n_max)?;
    let mut levels = vec![vec![Graph::empty(1).unwrap()]];
    while levels.len() < n_max {
        let parents = levels.last().unwrap();
        levels.push(extend_level(parents, max_degree, exec));
    }
    Ok(levels)
}

fn extend_level(parents: &[Graph], max_degree: Option<usize>, exec: Execution) -> Vec<Graph> {
    let n = parents.first().map_or(1, Graph::n) + 1;
    let chunks: Vec<&[Graph]> = parents.chunks(256).collect();
    let keyed = exec.map(&chunks, |chunk| {
        let mut keys: Vec<u64> = chunk
            .iter()
            .flat_map(|p| children(p, max_degree))
            .map(|child| canonical_form(&child).packed().expect("n <= 11"))
            .collect();
        keys.sort_unstable();
        keys.dedup();
        keys
    });
    let mut seen: HashSet<u64> = HashSet::new();
    for keys in keyed {
        seen.extend(keys);
    }
    let mut forms: Vec<CanonicalForm> = seen
        .into_iter()
        .map(|k| CanonicalForm::from_packed(n, k))
        .collect();
    forms.sort_unstable();
    forms.iter().map(CanonicalForm::to_graph).collect()
}

/// All one-vertex extensions of `parent` with a nonempty neighbourhood that
/// respects the degree bound.
fn children(parent: &Graph, max_degree: Option<usize>) -> Vec<Graph> {
    let eligible: Vec<usize> = (0..parent.n())
        .filter(|&v| max_degree.map_or(true, |d| parent.degree(v) < d))
        .collect();
    let cap = max_degree.unwrap_or(usize::MAX);
    let mut out = Vec::new();
    for mask in 1u64..(1u64 << eligible.len()) {
        if mask.count_ones() as usize > cap {
            continue;
        }
        let nbrs: VertexSet = VertexSet(mask).iter().map(|i| eligible[i]).collect();
        out.push(parent.with_vertex(nbrs).expect("small"));
    }
    out
}

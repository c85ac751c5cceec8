//! Pure induced subgraphs: those whose root sits induced in the root of the
//! host.
//!
//! The local criterion looks at each outside vertex `v` with two or more
//! neighbours in `sub` and asks whether the partition of `sub ∪ {v}` puts
//! two of `v`'s edges into `sub` in different cells. Small graphs (`K3`,
//! `K4 - e`, ...) have several partitions, so `v` counts as harmless only
//! when no partition separates its edges.

use super::require_connected;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::lineops::{first_krausz_partition, krausz_partitions, search_partitions};

/// Generous cap on partitions of a small induced piece; connected graphs
/// other than a handful of tiny ones have exactly one.
const PARTITION_LIMIT: usize = 64;

/// Whether `sub` induces a pure subgraph of the line graph `g`.
pub fn is_pure_embedding(g: &Graph, sub: VertexSet) -> Result<bool> {
    require_connected(g)?;
    if g.n() == 3 && g.edge_count() == 3 {
        return Err(Error::K3Input);
    }
    if first_krausz_partition(g)?.is_none() {
        return Err(Error::NotLineGraph);
    }
    if !sub.is_subset(g.vertices()) || sub.is_empty() {
        return Err(Error::Contract("sub must be a nonempty vertex set of g".into()));
    }
    let h = g.induced_subgraph(sub);
    if !h.is_connected() {
        return Err(Error::Contract("sub must induce a connected subgraph".into()));
    }
    if krausz_partitions(&h, 1)?.is_empty() {
        return Err(Error::NotLineGraph);
    }
    Ok(local_pure(g, sub))
}

/// The local criterion with no preconditions; a piece `sub ∪ {v}` that
/// has no partition at all separates nothing.
pub(crate) fn local_pure(g: &Graph, sub: VertexSet) -> bool {
    g.vertices().difference(sub).iter().all(|v| !separates(g, sub, v))
}

fn separates(g: &Graph, sub: VertexSet, v: usize) -> bool {
    let touched = g.neighbors(v).intersection(sub);
    if touched.len() < 2 {
        return false;
    }
    let piece = sub.with(v);
    let local = g.induced_subgraph(piece);
    // Position of v and its neighbours after relabelling to 0..|piece|.
    let idx = |x: usize| (piece.0 & ((1u64 << x) - 1)).count_ones() as usize;
    let lv = idx(v);
    let nbrs: Vec<usize> = touched.iter().map(idx).collect();
    search_partitions(&local, PARTITION_LIMIT).iter().any(|p| {
        let first = p.cell_of_edge(lv, nbrs[0]);
        nbrs[1..].iter().any(|&y| p.cell_of_edge(lv, y) != first)
    })
}

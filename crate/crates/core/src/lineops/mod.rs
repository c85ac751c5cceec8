//! The line-graph operator and its inverse.

mod krausz;
mod order;
mod preimage;
mod triangles;

pub use krausz::{
    first_krausz_partition, is_line_graph, is_line_graph_any, krausz_partitions, search_partitions,
    KrauszPartition,
};
pub use order::{order_analysis, Order, OrderAnalysis, TerminalReason};
pub use preimage::{
    even_triangle_preimage_check, odd_triangle_star_check, preimage, root_edges_form_star,
    root_edges_form_triangle, root_from_partition, PreimageResult, Root,
};
pub use triangles::{enumerate_triangles, extends_to_k4_minus_e, Parity, TriangleRecord};

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet, MAX_VERTICES};

/// `L(g)` together with the edge behind each of its vertices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LineGraph {
    pub graph: Graph,
    /// `edges[i]` is the edge of the source graph that became vertex `i`.
    pub edges: Vec<(usize, usize)>,
}

/// Line graph with vertices numbered by the lexicographic order of the
/// source edges.
pub fn line_graph(g: &Graph) -> Result<Graph> {
    line_graph_with_edges(g).map(|lg| lg.graph)
}

pub fn line_graph_with_edges(g: &Graph) -> Result<LineGraph> {
    let edges: Vec<(usize, usize)> = g.edges().collect();
    if edges.is_empty() {
        return Err(Error::EmptyEdgeSet { iteration: None });
    }
    if edges.len() > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            vertices: edges.len(),
            iteration: None,
        });
    }
    // Index of every edge incident to each source vertex.
    let mut at = vec![0u64; g.n()];
    for (i, &(u, v)) in edges.iter().enumerate() {
        at[u] |= 1 << i;
        at[v] |= 1 << i;
    }
    let rows = edges
        .iter()
        .enumerate()
        .map(|(i, &(u, v))| (at[u] | at[v]) & !(1u64 << i))
        .collect();
    Ok(LineGraph {
        graph: Graph::from_rows_unchecked(rows),
        edges,
    })
}

/// `L^k(g)`; `k = 0` returns `g`. Errors carry the 1-based iteration that
/// failed.
pub fn iterate_line(g: &Graph, k: usize) -> Result<Graph> {
    let mut cur = g.clone();
    for i in 1..=k {
        cur = line_graph(&cur).map_err(|e| match e {
            Error::EmptyEdgeSet { .. } => Error::EmptyEdgeSet { iteration: Some(i) },
            Error::GraphTooLarge { vertices, .. } => Error::GraphTooLarge {
                vertices,
                iteration: Some(i),
            },
            other => other,
        })?;
    }
    Ok(cur)
}

/// Connected, at least one vertex, and a path (a single vertex counts).
pub fn is_path(g: &Graph) -> bool {
    g.n() >= 1 && g.is_connected() && g.edge_count() + 1 == g.n() && g.max_degree() <= 2
}

/// Connected and 2-regular on at least three vertices.
pub fn is_cycle(g: &Graph) -> bool {
    g.n() >= 3 && g.is_connected() && (0..g.n()).all(|v| g.degree(v) == 2)
}

pub(crate) fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::NotConnected)
    }
}

/// Vertices of `g` whose neighbourhood meets `s` in exactly `k` vertices,
/// excluding `s` itself.
pub(crate) fn attached_exactly(g: &Graph, s: VertexSet, k: usize) -> VertexSet {
    g.vertices()
        .difference(s)
        .iter()
        .filter(|&v| g.neighbors(v).intersection(s).len() == k)
        .collect()
}

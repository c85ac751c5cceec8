//! Simple undirected graphs on at most 64 vertices.
//!
//! Every adjacency row is a single `u64`, so neighbourhood intersection,
//! induced restriction and the embedding search all reduce to word
//! operations. The cap is enforced at construction; anything that would
//! exceed it fails with [`Error::GraphTooLarge`].

mod canon;
mod edgelist;
mod embed;
mod enumerate;
mod graph6;

pub use canon::{canonical_form, canonical_labeling, is_isomorphic, CanonicalForm};
pub use edgelist::{format_edge_list, parse_edge_list};
pub use embed::{
    contains_induced, contains_subgraph, find_all_induced_embeddings, find_induced_embedding,
    for_each_induced_embedding, induced_image_sets, Embedding,
};
pub use enumerate::{
    connected_graphs_by_order, enumerate_connected_graphs, enumerate_connected_graphs_max_degree,
    MAX_ENUMERATION_ORDER,
};
pub use graph6::{encode_graph6, parse_graph6, parse_graph6_lines, GRAPH6_HEADER};

use std::fmt;

use crate::error::{Error, Result};

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 64;

/// A set of vertex indices packed into one machine word.
#[derive(Clone, Copy, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexSet(pub u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    /// The set `{0, 1, .., n-1}`.
    pub fn full(n: usize) -> Self {
        debug_assert!(n <= MAX_VERTICES);
        if n == MAX_VERTICES {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1u64 << v)
    }

    pub fn from_vertices<I: IntoIterator<Item = usize>>(vs: I) -> Self {
        vs.into_iter().fold(VertexSet::EMPTY, |s, v| s.with(v))
    }

    #[inline]
    pub fn contains(self, v: usize) -> bool {
        v < MAX_VERTICES && self.0 >> v & 1 == 1
    }

    #[inline]
    pub fn with(self, v: usize) -> Self {
        VertexSet(self.0 | 1u64 << v)
    }

    #[inline]
    pub fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u64 << v))
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u64 << v;
    }

    #[inline]
    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member, if any.
    #[inline]
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize)
    }

    /// Largest index + 1, or 0 for the empty set.
    pub fn bound(self) -> usize {
        64 - self.0.leading_zeros() as usize
    }

    /// Members in ascending order.
    pub fn iter(self) -> VertexIter {
        VertexIter(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        VertexSet::from_vertices(iter)
    }
}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = VertexIter;
    fn into_iter(self) -> VertexIter {
        self.iter()
    }
}

pub struct VertexIter(u64);

impl Iterator for VertexIter {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let k = self.0.count_ones() as usize;
        (k, Some(k))
    }
}

impl ExactSizeIterator for VertexIter {}

/// Immutable simple graph. Row `i` of `adj` holds the neighbours of `i`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    adj: Vec<u64>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Self> {
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                vertices: n,
                iteration: None,
            });
        }
        Ok(Graph {
            n,
            adj: vec![0; n],
        })
    }

    /// Builds a graph from an edge list. Duplicate edges collapse.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut g = Graph::empty(n)?;
        for &(u, v) in edges {
            if u == v {
                return Err(Error::SelfLoop(u));
            }
            for w in [u, v] {
                if w >= n {
                    return Err(Error::IndexOutOfRange { index: w, n });
                }
            }
            g.adj[u] |= 1 << v;
            g.adj[v] |= 1 << u;
        }
        Ok(g)
    }

    /// Builds a graph from raw adjacency rows, checking symmetry,
    /// irreflexivity and range.
    pub fn from_rows(rows: Vec<u64>) -> Result<Self> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                vertices: n,
                iteration: None,
            });
        }
        let range = VertexSet::full(n).0;
        for (i, &row) in rows.iter().enumerate() {
            if row >> i & 1 == 1 {
                return Err(Error::SelfLoop(i));
            }
            if row & !range != 0 {
                return Err(Error::IndexOutOfRange {
                    index: 63 - row.leading_zeros() as usize,
                    n,
                });
            }
            for j in VertexSet(row) {
                if rows[j] >> i & 1 == 0 {
                    return Err(Error::Contract(format!(
                        "adjacency not symmetric at ({i},{j})"
                    )));
                }
            }
        }
        Ok(Graph { n, adj: rows })
    }

    /// Internal constructor for rows already known to be valid.
    pub(crate) fn from_rows_unchecked(rows: Vec<u64>) -> Self {
        let g = Graph {
            n: rows.len(),
            adj: rows,
        };
        debug_assert!(g.check_invariants());
        g
    }

    fn check_invariants(&self) -> bool {
        let range = VertexSet::full(self.n).0;
        self.adj.iter().enumerate().all(|(i, &row)| {
            row >> i & 1 == 0
                && row & !range == 0
                && VertexSet(row).iter().all(|j| self.adj[j] >> i & 1 == 1)
        })
    }

    #[inline]
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.adj
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        VertexSet(self.adj[v])
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u] >> v & 1 == 1
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].count_ones() as usize
    }

    pub fn degrees(&self) -> Vec<usize> {
        (0..self.n).map(|v| self.degree(v)).collect()
    }

    /// Maximum degree; 0 for edgeless graphs.
    pub fn max_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).max().unwrap_or(0)
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(|r| r.count_ones() as usize).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        (0..self.n).flat_map(move |u| {
            VertexSet(self.adj[u] & !(u64::MAX >> (63 - u)))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// True iff every vertex is reachable from vertex 0. The graphs on
    /// zero and one vertices count as connected.
    pub fn is_connected(&self) -> bool {
        if self.n <= 1 {
            return true;
        }
        self.component_of(0) == self.vertices()
    }

    /// Vertices reachable from `start`.
    pub fn component_of(&self, start: usize) -> VertexSet {
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.difference(seen);
            seen = seen.union(frontier);
        }
        seen
    }

    /// True iff `s` induces a connected subgraph (the empty set counts).
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        let Some(start) = s.first() else {
            return true;
        };
        let mut seen = VertexSet::singleton(start);
        let mut frontier = seen;
        while !frontier.is_empty() {
            let mut next = VertexSet::EMPTY;
            for v in frontier {
                next = next.union(self.neighbors(v));
            }
            frontier = next.intersection(s).difference(seen);
            seen = seen.union(frontier);
        }
        seen == s
    }

    /// Subgraph induced by `s`, relabelled `0..|s|` in ascending order of
    /// the original indices.
    pub fn induced_subgraph(&self, s: VertexSet) -> Graph {
        debug_assert!(s.is_subset(self.vertices()));
        let verts = s.to_vec();
        let rows = verts
            .iter()
            .map(|&u| {
                let nb = self.adj[u] & s.0;
                verts
                    .iter()
                    .enumerate()
                    .filter(|&(_, &w)| nb >> w & 1 == 1)
                    .fold(0u64, |acc, (j, _)| acc | 1 << j)
            })
            .collect();
        Graph::from_rows_unchecked(rows)
    }

    /// Graph with vertex `v` renamed to `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut rows = vec![0u64; self.n];
        for (u, v) in self.edges() {
            rows[perm[u]] |= 1 << perm[v];
            rows[perm[v]] |= 1 << perm[u];
        }
        Graph::from_rows_unchecked(rows)
    }

    /// Adds a vertex adjacent to `nbrs`.
    pub fn with_vertex(&self, nbrs: VertexSet) -> Result<Graph> {
        if self.n == MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                vertices: self.n + 1,
                iteration: None,
            });
        }
        debug_assert!(nbrs.is_subset(self.vertices()));
        let new = self.n;
        let mut rows = self.adj.clone();
        for v in nbrs {
            rows[v] |= 1 << new;
        }
        rows.push(nbrs.0);
        Ok(Graph::from_rows_unchecked(rows))
    }

    /// Disjoint union `self + other`, with `other` shifted up.
    pub fn disjoint_union(&self, other: &Graph) -> Result<Graph> {
        let n = self.n + other.n;
        if n > MAX_VERTICES {
            return Err(Error::GraphTooLarge {
                vertices: n,
                iteration: None,
            });
        }
        let mut rows = self.adj.clone();
        rows.extend(other.adj.iter().map(|r| r << self.n));
        Ok(Graph::from_rows_unchecked(rows))
    }

    // Common families. Panics only when the size exceeds the vertex cap.

    pub fn path(n: usize) -> Graph {
        let edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        Graph::from_edges(n, &edges).expect("path fits")
    }

    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least 3 vertices");
        let mut edges: Vec<_> = (1..n).map(|i| (i - 1, i)).collect();
        edges.push((n - 1, 0));
        Graph::from_edges(n, &edges).expect("cycle fits")
    }

    pub fn complete(n: usize) -> Graph {
        let full = VertexSet::full(n).0;
        Graph::from_rows_unchecked((0..n).map(|i| full & !(1 << i)).collect())
    }

    /// The star `K_{1,k}` with centre 0.
    pub fn star(k: usize) -> Graph {
        let edges: Vec<_> = (1..=k).map(|i| (0, i)).collect();
        Graph::from_edges(k + 1, &edges).expect("star fits")
    }

    /// `K_n` minus the edge `{0, n-1}`.
    pub fn complete_minus_edge(n: usize) -> Graph {
        assert!(n >= 2);
        let mut rows = Graph::complete(n).adj;
        rows[0] &= !(1 << (n - 1));
        rows[n - 1] &= !1;
        Graph::from_rows_unchecked(rows)
    }

    pub fn complete_bipartite(a: usize, b: usize) -> Graph {
        let edges: Vec<_> = (0..a)
            .flat_map(|i| (a..a + b).map(move |j| (i, j)))
            .collect();
        Graph::from_edges(a + b, &edges).expect("bipartite fits")
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=[", self.n)?;
        for (k, (u, v)) in self.edges().enumerate() {
            if k > 0 {
                write!(f, " ")?;
            }
            write!(f, "{u}-{v}")?;
        }
        write!(f, "])")
    }
}

impl fmt::Display for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match encode_graph6(self) {
            Ok(s) => f.write_str(&s),
            Err(_) => write!(f, "{self:?}"),
        }
    }
}

/// Serialized as its graph6 string (the `Display` form).
impl serde::Serialize for Graph {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Serialized as the ascending list of its vertices.
impl serde::Serialize for VertexSet {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn connectivity() {
        assert!(Graph::path(4).is_connected());
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert!(!g.is_connected());
        assert!(Graph::empty(1).unwrap().is_connected());
        assert!(Graph::empty(0).unwrap().is_connected());
    }

    #[test]
    fn max_degree_examples() {
        assert_eq!(Graph::complete(4).max_degree(), 3);
        assert_eq!(Graph::star(3).max_degree(), 3);
        assert_eq!(Graph::cycle(7).max_degree(), 2);
        assert_eq!(Graph::empty(5).unwrap().max_degree(), 0);
    }

    #[test]
    fn induced_subgraph_examples() {
        let k4 = Graph::complete(4);
        for s in [0b0111u64, 0b1011, 0b1101, 0b1110] {
            assert_eq!(k4.induced_subgraph(VertexSet(s)), Graph::complete(3));
        }
        let c5 = Graph::cycle(5);
        assert_eq!(c5.induced_subgraph(VertexSet(0b00111)), Graph::path(3));
        assert_eq!(c5.induced_subgraph(c5.vertices()), c5);
    }

    #[test]
    fn constructor_rejects_bad_input() {
        assert_eq!(Graph::from_edges(3, &[(1, 1)]), Err(Error::SelfLoop(1)));
        assert_eq!(
            Graph::from_edges(3, &[(0, 3)]),
            Err(Error::IndexOutOfRange { index: 3, n: 3 })
        );
        assert!(matches!(
            Graph::empty(65),
            Err(Error::GraphTooLarge { vertices: 65, .. })
        ));
        assert!(Graph::from_rows(vec![0b10, 0b00]).is_err());
        assert!(Graph::from_rows(vec![0b01]).is_err());
    }

    #[test]
    fn edges_are_lexicographic() {
        let g = Graph::from_edges(4, &[(2, 3), (0, 3), (1, 0), (0, 2)]).unwrap();
        let e: Vec<_> = g.edges().collect();
        assert_eq!(e, vec![(0, 1), (0, 2), (0, 3), (2, 3)]);
    }

    #[test]
    fn full_set_at_cap() {
        assert_eq!(VertexSet::full(64).len(), 64);
        assert_eq!(VertexSet::full(0), VertexSet::EMPTY);
        let s = VertexSet::from_vertices([3, 9, 63]);
        assert_eq!(s.to_vec(), vec![3, 9, 63]);
        assert_eq!(s.bound(), 64);
    }
}

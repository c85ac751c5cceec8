//! Partitions of the edge set into cliques with every vertex in at most two
//! of them. A graph has one exactly when it is a line graph.
//!
//! The search repeatedly takes the lexicographically smallest uncovered
//! edge `uv` and branches on the cell that covers it: `{u, v}` plus all of
//! their common uncovered neighbours, or all but one. Candidates go largest
//! first, ties broken by the sorted vertex list. A vertex already in one cell must put
//! all of its remaining edges into its second cell, which forces most
//! choices once the search is under way.

use std::cmp::Reverse;

use super::require_connected;
use crate::error::Result;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Debug, PartialEq, Eq, Hash, serde::Serialize)]
pub struct KrauszPartition {
    /// Each cell is a vertex set inducing a clique with at least one edge.
    pub cells: Vec<VertexSet>,
}

impl KrauszPartition {
    /// Indices of the cells containing `v` (at most two).
    pub fn cells_of(&self, v: usize) -> Vec<usize> {
        (0..self.cells.len())
            .filter(|&i| self.cells[i].contains(v))
            .collect()
    }

    /// The cell holding edge `uv`, if it is covered.
    pub fn cell_of_edge(&self, u: usize, v: usize) -> Option<usize> {
        self.cells
            .iter()
            .position(|c| c.contains(u) && c.contains(v))
    }

    /// Checks the three partition invariants against `g`.
    pub fn verify(&self, g: &Graph) -> Result<(), String> {
        for (i, cell) in self.cells.iter().enumerate() {
            if cell.len() < 2 || !cell.is_subset(g.vertices()) {
                return Err(format!("cell {i} is not a clique with an edge"));
            }
            for v in *cell {
                if !cell.without(v).is_subset(g.neighbors(v)) {
                    return Err(format!("cell {i} is not a clique"));
                }
            }
        }
        for (u, v) in g.edges() {
            let holders = self
                .cells
                .iter()
                .filter(|c| c.contains(u) && c.contains(v))
                .count();
            if holders != 1 {
                return Err(format!("edge {u}-{v} lies in {holders} cells"));
            }
        }
        for v in 0..g.n() {
            if self.cells_of(v).len() > 2 {
                return Err(format!("vertex {v} lies in more than two cells"));
            }
        }
        Ok(())
    }
}

/// Up to `limit` partitions in deterministic order. Empty iff `g` is not a
/// line graph.
pub fn krausz_partitions(g: &Graph, limit: usize) -> Result<Vec<KrauszPartition>> {
    require_connected(g)?;
    Ok(search_partitions(g, limit))
}

/// The first partition in search order, if any.
pub fn first_krausz_partition(g: &Graph) -> Result<Option<KrauszPartition>> {
    Ok(krausz_partitions(g, 1)?.pop())
}

pub fn is_line_graph(g: &Graph) -> Result<bool> {
    Ok(first_krausz_partition(g)?.is_some())
}

/// Line-graph test for graphs that may be disconnected: every component
/// must be a line graph.
pub fn is_line_graph_any(g: &Graph) -> bool {
    let mut left = g.vertices();
    while let Some(v) = left.first() {
        let comp = g.component_of(v);
        left = left.difference(comp);
        if search_partitions(&g.induced_subgraph(comp), 1).is_empty() {
            return false;
        }
    }
    true
}

/// Partition search without the connectivity precondition. On a
/// disconnected graph a partition covers every component.
pub fn search_partitions(g: &Graph, limit: usize) -> Vec<KrauszPartition> {
    let mut state = State {
        g,
        uncovered: g.rows().to_vec(),
        uses: vec![0; g.n()],
        cells: Vec::new(),
    };
    let mut out = Vec::new();
    if limit > 0 {
        state.search(limit, &mut out);
    }
    out
}

struct State<'a> {
    g: &'a Graph,
    /// Uncovered neighbours of each vertex.
    uncovered: Vec<u64>,
    /// Cells each vertex already belongs to.
    uses: Vec<u8>,
    cells: Vec<VertexSet>,
}

impl State<'_> {
    fn search(&mut self, limit: usize, out: &mut Vec<KrauszPartition>) {
        let Some((u, v)) = self.next_edge() else {
            out.push(KrauszPartition {
                cells: self.cells.clone(),
            });
            return;
        };
        for cell in self.candidates(u, v) {
            self.apply(cell, true);
            self.search(limit, out);
            self.apply(cell, false);
            if out.len() >= limit {
                return;
            }
        }
    }

    fn next_edge(&self) -> Option<(usize, usize)> {
        (0..self.g.n()).find_map(|u| {
            let above = self.uncovered[u] & !(u64::MAX >> (63 - u));
            (above != 0).then(|| (u, above.trailing_zeros() as usize))
        })
    }

    fn unc(&self, v: usize) -> VertexSet {
        VertexSet(self.uncovered[v])
    }

    fn is_uncovered_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|x| s.without(x).is_subset(self.unc(x)))
    }

    fn candidates(&self, u: usize, v: usize) -> Vec<VertexSet> {
        let base = VertexSet::from_vertices([u, v]);
        if self.uses[u] >= 2 || self.uses[v] >= 2 {
            return vec![];
        }
        let forced = [u, v].into_iter().find(|&x| self.uses[x] == 1);
        let mut cliques = Vec::new();
        if let Some(x) = forced {
            let cell = self.unc(x).with(x);
            if self.is_uncovered_clique(cell) {
                cliques.push(cell);
            }
        } else {
            // If two common neighbours were both left out, each would sit in
            // the second cells of u and of v, covering their edge twice. So
            // the cell takes all common neighbours, or all but one.
            let common = self.unc(u).intersection(self.unc(v));
            let all = base.union(common);
            cliques.push(all);
            cliques.extend(common.iter().map(|w| all.without(w)));
            cliques.retain(|&c| self.is_uncovered_clique(c));
        }
        cliques.retain(|&c| self.admissible(c));
        cliques.sort_by_cached_key(|c| (Reverse(c.len()), c.to_vec()));
        cliques
    }

    /// Placing `cell` leaves every member able to finish: a vertex entering
    /// its second cell must have no edges left, and one entering its first
    /// must have its leftover edges forming a single clique.
    fn admissible(&self, cell: VertexSet) -> bool {
        cell.iter().all(|x| {
            let left = self.unc(x).difference(cell);
            match self.uses[x] {
                0 => left.iter().all(|y| self.uses[y] < 2) && self.is_uncovered_clique(left),
                1 => left.is_empty(),
                _ => false,
            }
        })
    }

    fn apply(&mut self, cell: VertexSet, on: bool) {
        for x in cell {
            let others = cell.without(x).0;
            if on {
                self.uncovered[x] &= !others;
                self.uses[x] += 1;
            } else {
                self.uncovered[x] |= others;
                self.uses[x] -= 1;
            }
        }
        if on {
            self.cells.push(cell);
        } else {
            self.cells.pop();
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;

    #[test]
    fn claw_has_none() {
        assert!(krausz_partitions(&Graph::star(3), 10).unwrap().is_empty());
        assert!(!is_line_graph(&Graph::star(3)).unwrap());
    }

    #[test]
    fn triangle_has_two() {
        let ps = krausz_partitions(&Graph::complete(3), 10).unwrap();
        assert_eq!(ps.len(), 2);
        assert_eq!(ps[0].cells, vec![VertexSet(0b111)]);
        assert_eq!(ps[1].cells.len(), 3);
        for p in &ps {
            p.verify(&Graph::complete(3)).unwrap();
        }
    }

    #[test]
    fn pentagon_has_one() {
        let ps = krausz_partitions(&Graph::cycle(5), 10).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].cells.len(), 5);
        assert!(ps[0].cells.iter().all(|c| c.len() == 2));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::from_edges(3, &[(0, 1)]).unwrap();
        assert_eq!(krausz_partitions(&g, 1), Err(Error::NotConnected));
    }

    #[test]
    fn big_clique_is_one_cell() {
        let ps = krausz_partitions(&Graph::complete(12), 5).unwrap();
        assert_eq!(ps.len(), 1);
        assert_eq!(ps[0].cells, vec![VertexSet::full(12)]);
        let ps = krausz_partitions(&Graph::complete(64), 5).unwrap();
        assert_eq!(ps.len(), 1);
    }

    #[test]
    fn single_vertex_has_empty_partition() {
        let ps = krausz_partitions(&Graph::empty(1).unwrap(), 5).unwrap();
        assert_eq!(ps, vec![KrauszPartition { cells: vec![] }]);
    }

    #[test]
    fn limit_is_respected() {
        assert_eq!(krausz_partitions(&Graph::complete(3), 1).unwrap().len(), 1);
        assert!(krausz_partitions(&Graph::complete(3), 0).unwrap().is_empty());
    }
}

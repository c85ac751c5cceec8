//! Root reconstruction from a Krausz partition.
//!
//! Root vertices are the cells, followed by one extra vertex for every
//! vertex of `g` that lies in exactly one cell. Each vertex of `g` then maps
//! to the root edge joining the (one or two) root vertices that contain it.

use super::krausz::{search_partitions, KrauszPartition};
use super::triangles::{Parity, TriangleRecord};
use super::require_connected;
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph, MAX_VERTICES};
use crate::patterns;

/// One reconstructed root `H` with `L(H) ≅ g`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Root {
    pub graph: Graph,
    pub partition: KrauszPartition,
    /// `edge_of_vertex[v]` is the root edge (smaller endpoint first) that
    /// vertex `v` of `g` stands for. Together these are an explicit
    /// isomorphism `g → L(H)`.
    pub edge_of_vertex: Vec<(usize, usize)>,
}

impl Root {
    /// Recomputes adjacency of `g` from the root edges.
    pub fn verify(&self, g: &Graph) -> bool {
        let n = g.n();
        if self.edge_of_vertex.len() != n || self.graph.edge_count() != n {
            return false;
        }
        let share = |a: (usize, usize), b: (usize, usize)| {
            a.0 == b.0 || a.0 == b.1 || a.1 == b.0 || a.1 == b.1
        };
        let edges_ok = self
            .edge_of_vertex
            .iter()
            .all(|&(a, b)| a < b && b < self.graph.n() && self.graph.has_edge(a, b));
        let distinct = {
            let mut e = self.edge_of_vertex.clone();
            e.sort_unstable();
            e.dedup();
            e.len() == n
        };
        edges_ok
            && distinct
            && (0..n).all(|u| {
                (u + 1..n).all(|v| {
                    g.has_edge(u, v) == share(self.edge_of_vertex[u], self.edge_of_vertex[v])
                })
            })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PreimageResult {
    /// One root normally; `K3` yields both `K3` and `K_{1,3}`.
    pub roots: Vec<Root>,
    pub ambiguous: bool,
    /// Set only once every root has been re-checked against `g`.
    pub validated: bool,
}

impl PreimageResult {
    pub fn first(&self) -> &Root {
        &self.roots[0]
    }
}

/// Roots of a connected graph, validated. `K3` is reported with both of its
/// roots and `ambiguous` set.
pub fn preimage(g: &Graph) -> Result<PreimageResult> {
    require_connected(g)?;
    if g.n() == 0 {
        return Err(Error::Contract("preimage of the empty graph".into()));
    }
    let triangle = g.n() == 3 && g.edge_count() == 3;
    let limit = if triangle { 2 } else { 1 };
    let partitions = search_partitions(g, limit);
    if partitions.is_empty() {
        return Err(Error::NotLineGraph);
    }
    let roots = partitions
        .into_iter()
        .map(|p| root_from_partition(g, p))
        .collect::<Result<Vec<_>>>()?;
    if let Some(bad) = roots.iter().position(|r| !r.verify(g)) {
        return Err(Error::Contract(format!("root {bad} failed validation")));
    }
    Ok(PreimageResult {
        ambiguous: roots.len() > 1,
        roots,
        validated: true,
    })
}

/// The root built from one particular partition of `g` (not re-validated).
pub fn root_from_partition(g: &Graph, partition: KrauszPartition) -> Result<Root> {
    let n = g.n();
    let mut holders: Vec<Vec<usize>> = vec![Vec::new(); n];
    for (i, cell) in partition.cells.iter().enumerate() {
        for v in *cell {
            holders[v].push(i);
        }
    }
    let mut size = partition.cells.len();
    let mut edge_of_vertex = Vec::with_capacity(n);
    for hs in &holders {
        let e = match hs[..] {
            [a, b] => (a, b),
            [a] => {
                size += 1;
                (a, size - 1)
            }
            // Only a lone vertex lies in no cell; its root is a single edge.
            [] => {
                size += 2;
                (size - 2, size - 1)
            }
            _ => return Err(Error::Contract("vertex in more than two cells".into())),
        };
        edge_of_vertex.push(e);
    }
    if size > MAX_VERTICES {
        return Err(Error::GraphTooLarge {
            vertices: size,
            iteration: None,
        });
    }
    let graph = Graph::from_edges(size, &edge_of_vertex)?;
    Ok(Root {
        graph,
        partition,
        edge_of_vertex,
    })
}

fn root_edges(root: &Root, t: &TriangleRecord) -> Result<[(usize, usize); 3]> {
    let vs = t.vertices.to_vec();
    if vs.len() != 3 || vs.iter().any(|&v| v >= root.edge_of_vertex.len()) {
        return Err(Error::Contract("triangle does not index the graph".into()));
    }
    Ok([0, 1, 2].map(|i| root.edge_of_vertex[vs[i]]))
}

/// The three root edges share one endpoint.
pub fn root_edges_form_star(root: &Root, t: &TriangleRecord) -> Result<bool> {
    let es = root_edges(root, t)?;
    let [a, b, c] = es;
    Ok([a.0, a.1]
        .into_iter()
        .any(|x| [b, c].iter().all(|e| e.0 == x || e.1 == x)))
}

/// The three root edges form a triangle: three endpoints, pairwise shared.
pub fn root_edges_form_triangle(root: &Root, t: &TriangleRecord) -> Result<bool> {
    let es = root_edges(root, t)?;
    let mut ends: Vec<usize> = es.iter().flat_map(|e| [e.0, e.1]).collect();
    ends.sort_unstable();
    ends.dedup();
    Ok(ends.len() == 3 && !root_edges_form_star(root, t)?)
}

fn require_validated(result: &PreimageResult) -> Result<()> {
    if result.validated && !result.roots.is_empty() {
        Ok(())
    } else {
        Err(Error::Contract("preimage result not validated".into()))
    }
}

/// Odd triangle: its three root edges meet at a vertex of the root.
pub fn odd_triangle_star_check(
    g: &Graph,
    t: &TriangleRecord,
    result: &PreimageResult,
) -> Result<bool> {
    require_validated(result)?;
    if !t.verify(g) || t.parity != Parity::Odd {
        return Err(Error::Contract("expected an odd triangle of g".into()));
    }
    root_edges_form_star(result.first(), t)
}

/// Even triangle outside the exceptional graphs: its root edges form a
/// triangle of the root.
pub fn even_triangle_preimage_check(
    g: &Graph,
    t: &TriangleRecord,
    result: &PreimageResult,
) -> Result<bool> {
    if let Some(name) = exceptional_name(g) {
        return Err(Error::ExceptionalGraph(name.into()));
    }
    require_validated(result)?;
    if !t.verify(g) || t.parity != Parity::Even {
        return Err(Error::Contract("expected an even triangle of g".into()));
    }
    root_edges_form_triangle(result.first(), t)
}

/// Name of the exceptional graph (`K3`, `E1`, `E2`, `E3`) isomorphic to `g`.
pub(crate) fn exceptional_name(g: &Graph) -> Option<&'static str> {
    [
        ("K3", Graph::complete(3)),
        ("E1", patterns::e1()),
        ("E2", patterns::e2()),
        ("E3", patterns::e3()),
    ]
    .into_iter()
    .find(|(_, h)| is_isomorphic(g, h))
    .map(|(name, _)| name)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::lineops::{enumerate_triangles, line_graph};

    #[test]
    fn triangle_has_both_roots() {
        let r = preimage(&Graph::complete(3)).unwrap();
        assert!(r.ambiguous && r.validated);
        assert_eq!(r.roots.len(), 2);
        assert!(is_isomorphic(&r.roots[0].graph, &Graph::star(3)));
        assert!(is_isomorphic(&r.roots[1].graph, &Graph::complete(3)));
    }

    #[test]
    fn claw_has_no_root() {
        assert_eq!(preimage(&Graph::star(3)), Err(Error::NotLineGraph));
    }

    #[test]
    fn path_grows() {
        let r = preimage(&Graph::path(3)).unwrap();
        assert!(!r.ambiguous);
        assert!(is_isomorphic(&r.first().graph, &Graph::path(4)));
        let k1 = preimage(&Graph::empty(1).unwrap()).unwrap();
        assert_eq!(k1.first().graph, Graph::complete(2));
    }

    #[test]
    fn diamond_root_is_paw() {
        let g = Graph::complete_minus_edge(4);
        let r = preimage(&g).unwrap();
        let h = &r.first().graph;
        assert_eq!((h.n(), h.edge_count()), (4, 4));
        assert!(is_isomorphic(&line_graph(h).unwrap(), &g));
    }

    #[test]
    fn tree_root_of_64_vertices_is_too_large() {
        assert!(matches!(
            preimage(&Graph::path(64)),
            Err(Error::GraphTooLarge { vertices: 65, .. })
        ));
    }

    #[test]
    fn odd_triangles_map_to_stars() {
        // Every triangle of the octahedron is even, so the star check has
        // nothing to say there; K4 = L(K_{1,4}) and L(K5) have odd ones.
        assert!(enumerate_triangles(&patterns::e3()).iter().all(|t| !t.is_odd()));
        for g in [Graph::complete(4), line_graph(&Graph::complete(5)).unwrap()] {
            let r = preimage(&g).unwrap();
            let odd: Vec<_> = enumerate_triangles(&g).into_iter().filter(|t| t.is_odd()).collect();
            assert!(!odd.is_empty());
            for t in &odd {
                assert!(odd_triangle_star_check(&g, t, &r).unwrap());
            }
        }
    }

    #[test]
    fn triangle_root_edges_of_claw_root_form_star() {
        let g = Graph::complete(3);
        let r = preimage(&g).unwrap();
        let t = enumerate_triangles(&g)[0];
        assert!(root_edges_form_star(&r.roots[0], &t).unwrap());
        assert!(root_edges_form_triangle(&r.roots[1], &t).unwrap());
        // Even triangle given to the odd check is a contract violation.
        assert!(matches!(
            odd_triangle_star_check(&g, &t, &r),
            Err(Error::Contract(_))
        ));
    }

    #[test]
    fn exceptional_inputs_rejected() {
        for g in [Graph::complete(3), patterns::e2()] {
            let r = preimage(&g).unwrap();
            let t = enumerate_triangles(&g)[0];
            assert!(matches!(
                even_triangle_preimage_check(&g, &t, &r),
                Err(Error::ExceptionalGraph(_))
            ));
        }
    }

    #[test]
    fn even_triangle_of_family_member_has_triangle_root() {
        let g = patterns::make_l(patterns::FamilyId::new(1, 2).unwrap()).unwrap();
        let r = preimage(&g).unwrap();
        let evens: Vec<_> = enumerate_triangles(&g)
            .into_iter()
            .filter(|t| !t.is_odd())
            .collect();
        assert_eq!(evens.len(), 1);
        assert!(even_triangle_preimage_check(&g, &evens[0], &r).unwrap());
    }
}

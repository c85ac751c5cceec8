//! The Δ = 3 second-order families `L_{k,n}` and their line graphs.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph};
use crate::lineops::line_graph;

/// `k` end blocks (`K4 - e`) and a spine of `n` path vertices.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FamilyId {
    pub k: usize,
    pub n: usize,
}

impl FamilyId {
    pub fn new(k: usize, n: usize) -> Result<Self> {
        if (k == 1 || k == 2) && n >= k {
            Ok(FamilyId { k, n })
        } else {
            Err(Error::InvalidFamily { k, n })
        }
    }

    /// Vertex count of `L_{k,n}`.
    pub fn order(self) -> usize {
        if self.k == 1 {
            self.n + 3
        } else {
            self.n + 6
        }
    }
}

impl std::fmt::Display for FamilyId {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "L({},{})", self.k, self.n)
    }
}

/// `L_{k,n}`: a `K4 - e` on `u=0, w=1, x=2, v1=3` (tips `x`, `v1`), the path
/// `v1 v2 … vn` on `3..n+3`, and for `k = 2` a second `K4 - e` on
/// `vn, a, b, c` with `vn` and `c` as its tips.
pub fn make_l(id: FamilyId) -> Result<Graph> {
    let FamilyId { k, n } = FamilyId::new(id.k, id.n)?;
    let mut edges = vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3)];
    edges.extend((3..n + 2).map(|v| (v, v + 1)));
    if k == 2 {
        let (vn, a, b, c) = (n + 2, n + 3, n + 4, n + 5);
        edges.extend([(vn, a), (vn, b), (a, b), (a, c), (b, c)]);
    }
    Graph::from_edges(id.order(), &edges)
}

/// `L(L_{k,n})`, the Δ = 4 third-order family.
pub fn make_ll(id: FamilyId) -> Result<Graph> {
    line_graph(&make_l(id)?)
}

fn recognize_with(g: &Graph, build: fn(FamilyId) -> Result<Graph>, size: fn(FamilyId) -> usize) -> Option<FamilyId> {
    // The vertex count pins down `n` for each `k`.
    [1, 2].into_iter().find_map(|k| {
        let base = size(FamilyId { k, n: 0 });
        let n = g.n().checked_sub(base)?;
        let id = FamilyId::new(k, n).ok()?;
        let h = build(id).ok()?;
        is_isomorphic(g, &h).then_some(id)
    })
}

/// `(k, n)` with `g ≅ L_{k,n}`.
pub fn recognize_family(g: &Graph) -> Option<FamilyId> {
    recognize_with(g, make_l, FamilyId::order)
}

/// `(k, n)` with `g ≅ L(L_{k,n})`.
pub fn recognize_ll_family(g: &Graph) -> Option<FamilyId> {
    // L_{k,n} has 5k + n - 1 edges.
    recognize_with(g, make_ll, |id| 5 * id.k + id.n - 1)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn smallest_member_is_diamond() {
        let g = make_l(FamilyId::new(1, 1).unwrap()).unwrap();
        assert!(is_isomorphic(&g, &Graph::complete_minus_edge(4)));
    }

    #[test]
    fn shapes() {
        let g = make_l(FamilyId::new(1, 2).unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count()), (5, 6));
        let g = make_l(FamilyId::new(2, 2).unwrap()).unwrap();
        assert_eq!((g.n(), g.edge_count(), g.max_degree()), (8, 11, 3));
        let ll = make_ll(FamilyId::new(1, 2).unwrap()).unwrap();
        assert_eq!((ll.n(), ll.max_degree()), (6, 4));
    }

    #[test]
    fn invalid_ids() {
        assert!(FamilyId::new(2, 1).is_err());
        assert!(FamilyId::new(3, 5).is_err());
        assert!(FamilyId::new(1, 0).is_err());
    }

    #[test]
    fn round_trip() {
        for k in 1..=2 {
            for n in k..=8 {
                let id = FamilyId::new(k, n).unwrap();
                assert_eq!(recognize_family(&make_l(id).unwrap()), Some(id));
                assert_eq!(recognize_ll_family(&make_ll(id).unwrap()), Some(id));
            }
        }
        assert_eq!(recognize_family(&Graph::cycle(6)), None);
    }
}

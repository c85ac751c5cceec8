use serde::Serialize;

use super::attached_exactly;
use crate::graph::{Graph, VertexSet};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Parity {
    Odd,
    Even,
}

/// A triangle and its parity. Only vertices outside the triangle are
/// consulted: it is odd iff one of them sees exactly one or all three of
/// its corners.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct TriangleRecord {
    pub vertices: VertexSet,
    pub parity: Parity,
}

impl TriangleRecord {
    pub fn classify(g: &Graph, vertices: VertexSet) -> TriangleRecord {
        debug_assert_eq!(vertices.len(), 3);
        let odd = !attached_exactly(g, vertices, 1).is_empty()
            || !attached_exactly(g, vertices, 3).is_empty();
        TriangleRecord {
            vertices,
            parity: if odd { Parity::Odd } else { Parity::Even },
        }
    }

    /// Triangle still present in `g` with the recorded parity.
    pub fn verify(&self, g: &Graph) -> bool {
        let vs = self.vertices.to_vec();
        vs.len() == 3
            && vs.iter().all(|&v| v < g.n())
            && g.has_edge(vs[0], vs[1])
            && g.has_edge(vs[0], vs[2])
            && g.has_edge(vs[1], vs[2])
            && TriangleRecord::classify(g, self.vertices).parity == self.parity
    }

    pub fn is_odd(&self) -> bool {
        self.parity == Parity::Odd
    }
}

/// All triangles in ascending order of their vertex sets.
pub fn enumerate_triangles(g: &Graph) -> Vec<TriangleRecord> {
    let mut out = Vec::new();
    for a in 0..g.n() {
        let above_a = g.neighbors(a).iter().filter(|&b| b > a);
        for b in above_a {
            let common = g.neighbors(a).intersection(g.neighbors(b));
            for c in common.iter().filter(|&c| c > b) {
                out.push(TriangleRecord::classify(g, VertexSet::from_vertices([a, b, c])));
            }
        }
    }
    out
}

/// Some outside vertex sees exactly two corners, i.e. the triangle lies in
/// an induced `K4 - e`.
pub fn extends_to_k4_minus_e(g: &Graph, triangle: VertexSet) -> bool {
    !attached_exactly(g, triangle, 2).is_empty()
}

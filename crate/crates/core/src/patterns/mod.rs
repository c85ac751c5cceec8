//! Named graphs and parametric families.

mod catalog;
mod families;

pub use catalog::{
    build_catalog, catalog, emit_catalog, parse_fixture, pattern, patterns, validate_catalog,
    validate_entries, PatternEntry, Source, TRANSCRIBED,
};
pub use families::{make_l, make_ll, recognize_family, recognize_ll_family, FamilyId};

use crate::graph::Graph;
use crate::lineops::line_graph;

/// `K_{1,3}` plus an edge between two leaves (the paw).
pub fn claw_plus_edge() -> Graph {
    Graph::from_edges(4, &[(0, 1), (0, 2), (0, 3), (1, 2)]).unwrap()
}

/// `E1 = L(K_{1,3} + e)`, i.e. `K4 - e`.
pub fn e1() -> Graph {
    line_graph(&claw_plus_edge()).unwrap()
}

/// `E2 = L(E1)`, the wheel on five vertices.
pub fn e2() -> Graph {
    line_graph(&e1()).unwrap()
}

/// `E3 = L(K4)`, the octahedron.
pub fn e3() -> Graph {
    line_graph(&Graph::complete(4)).unwrap()
}

//! Classification of graphs with maximum degree 3 or 4.

use std::ops::ControlFlow;

use serde::Serialize;

use super::{excluded_as, first_forbidden, require_connected};
use crate::error::{Error, Result};
use crate::graph::{for_each_induced_embedding, Graph, VertexSet};
use crate::patterns::{pattern, recognize_family, recognize_ll_family, FamilyId};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Delta3Class {
    pub is_line: bool,
    /// `(k, n)` when `g ≅ L_{k,n}`, the only Δ = 3 second-order graphs.
    pub second_order: Option<FamilyId>,
    /// Δ = 3 graphs are never `L^3` of anything.
    pub never_third: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Delta4Class {
    pub is_line: bool,
    /// `(k, n)` when `g ≅ L(L_{k,n})`, the only Δ = 4 third-order graphs.
    pub third_order: Option<FamilyId>,
    /// Δ = 4 graphs are never `L^4` of anything.
    pub never_fourth: bool,
}

fn require_degree(g: &Graph, expected: usize) -> Result<()> {
    match g.max_degree() {
        d if d == expected => Ok(()),
        found => Err(Error::WrongDegree { expected, found }),
    }
}

pub fn delta3_classify(g: &Graph) -> Result<Delta3Class> {
    require_connected(g)?;
    require_degree(g, 3)?;
    if let Some(name) = excluded_as(g, &["G2"]) {
        return Err(Error::ExcludedInput(name.into()));
    }
    Ok(Delta3Class {
        is_line: first_forbidden(g, &["G1", "G4", "G7"]).is_none(),
        second_order: recognize_family(g),
        never_third: true,
    })
}

/// Excluded inputs for the Δ = 4 statement.
pub const DELTA4_EXCLUSIONS: [&str; 6] = ["G3", "G8", "G9", "H1", "H2", "H3"];

pub fn delta4_classify(g: &Graph) -> Result<Delta4Class> {
    require_connected(g)?;
    require_degree(g, 4)?;
    if let Some(name) = excluded_as(g, &DELTA4_EXCLUSIONS) {
        return Err(Error::ExcludedInput(name.into()));
    }
    let is_line = first_forbidden(g, &["G1", "G2", "G4", "G5", "G6", "G7"]).is_none()
        && pendant_occurrence(pattern("G3")?, g).is_none();
    Ok(Delta4Class {
        is_line,
        third_order: recognize_ll_family(g),
        never_fourth: true,
    })
}

/// Vertex set of an induced copy of `p` joined to the rest of `g` by exactly
/// one edge.
pub fn pendant_occurrence(p: &Graph, g: &Graph) -> Option<VertexSet> {
    let mut found = None;
    for_each_induced_embedding(p, g, |e| {
        let image = e.image();
        let outside = g.vertices().difference(image);
        let joins: usize = image.iter().map(|v| g.neighbors(v).intersection(outside).len()).sum();
        if joins == 1 {
            found = Some(image);
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

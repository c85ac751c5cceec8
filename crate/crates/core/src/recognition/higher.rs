//! Conditions for being a second-, third- or higher-order line graph.

use std::ops::ControlFlow;

use serde::Serialize;

use super::purity::local_pure;
use super::{excluded_as, first_forbidden, require_connected, Certificate, Verdict};
use crate::error::{Error, Result};
use crate::graph::{contains_induced, for_each_induced_embedding, is_isomorphic, Embedding, Graph, VertexSet};
use crate::lineops::{enumerate_triangles, extends_to_k4_minus_e, preimage, TriangleRecord};
use crate::patterns::{e2, pattern};

/// Graphs the higher-order statements set aside.
pub const HIGHER_EXCLUSIONS: [&str; 6] = ["K3", "G8", "G9", "H1", "H2", "H3"];
const SECOND_ORDER_EXCLUSIONS: [&str; 5] = ["G8", "G9", "H1", "H2", "H3"];
const LG: [&str; 6] = ["LG2", "LG3", "LG4", "LG5", "LG6", "LG7"];

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SecondOrderMode {
    /// Forbids G2–G7 only.
    Literal,
    /// Also forbids G1, as the sufficiency argument requires.
    Repaired,
}

/// Every triangle lies in an induced `K4 - e`.
fn triangles_extend(g: &Graph) -> Option<Certificate> {
    enumerate_triangles(g)
        .into_iter()
        .find(|t| !extends_to_k4_minus_e(g, t.vertices))
        .map(|t| Certificate::TriangleWitness {
            triangles: vec![t],
            reason: "triangle lies in no induced K4 - e".into(),
        })
}

/// The characterization of `L^2` graphs: triangles extend to `K4 - e`, no
/// induced G2–G7 (plus G1 when repaired), and no pure induced L(G2)–L(G7).
pub fn second_order_test(g: &Graph, mode: SecondOrderMode) -> Result<Verdict> {
    require_connected(g)?;
    if let Some(name) = excluded_as(g, &SECOND_ORDER_EXCLUSIONS) {
        return Ok(Verdict::excluded(name));
    }
    if let Some(w) = triangles_extend(g) {
        return Ok(Verdict::no(w));
    }
    let forbidden: &[&str] = match mode {
        SecondOrderMode::Literal => &["G2", "G3", "G4", "G5", "G6", "G7"],
        SecondOrderMode::Repaired => &["G1", "G2", "G3", "G4", "G5", "G6", "G7"],
    };
    if let Some(w) = first_forbidden(g, forbidden) {
        return Ok(Verdict::no(w));
    }
    for name in LG {
        if let Some(embedding) = pure_occurrence(pattern(name)?, g) {
            return Ok(Verdict::no(Certificate::ForbiddenWitness {
                pattern: name.to_string(),
                embedding,
            }));
        }
    }
    Ok(Verdict::yes(Certificate::ConditionsHold))
}

/// First induced copy of `p` in `g` whose image is pure.
fn pure_occurrence(p: &Graph, g: &Graph) -> Option<Embedding> {
    let mut seen = std::collections::HashSet::new();
    let mut found = None;
    for_each_induced_embedding(p, g, |e| {
        let image = e.image();
        if seen.insert(image) && local_pure(g, image) {
            found = Some(e.clone());
            return ControlFlow::Break(());
        }
        ControlFlow::Continue(())
    });
    found
}

/// Sufficient condition for `L^2`: triangles extend to `K4 - e` and none of
/// G1–G7, F1, F2 is induced. A No means "inconclusive".
pub fn second_order_sufficient(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    if let Some(name) = excluded_as(g, &HIGHER_EXCLUSIONS) {
        return Ok(Verdict::excluded(name));
    }
    if let Some(w) = triangles_extend(g) {
        return Ok(Verdict::no(w));
    }
    Ok(match first_forbidden(g, &FORBIDDEN_WITH_F) {
        Some(w) => Verdict::no(w),
        None => Verdict::yes(Certificate::ConditionsHold),
    })
}

const FORBIDDEN_WITH_F: [&str; 9] = ["G1", "G2", "G3", "G4", "G5", "G6", "G7", "F1", "F2"];

/// Necessary condition for `L^3`: odd triangles extend to `K4 - e`, even
/// triangles lie in an induced `E2`.
pub fn third_order_necessary(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    if let Some(name) = excluded_as(g, &HIGHER_EXCLUSIONS) {
        return Ok(Verdict::excluded(name));
    }
    let e2 = e2();
    for t in enumerate_triangles(g) {
        let ok = if t.is_odd() {
            extends_to_k4_minus_e(g, t.vertices)
        } else {
            in_induced_copy(&e2, g, t)
        };
        if !ok {
            let reason = if t.is_odd() {
                "odd triangle lies in no induced K4 - e"
            } else {
                "even triangle lies in no induced L(K4 - e)"
            };
            return Ok(Verdict::no(Certificate::TriangleWitness {
                triangles: vec![t],
                reason: reason.into(),
            }));
        }
    }
    Ok(Verdict::yes(Certificate::ConditionsHold))
}

/// Some induced copy of the connected graph `p` contains triangle `t`.
fn in_induced_copy(p: &Graph, g: &Graph, t: TriangleRecord) -> bool {
    // Every vertex of a connected copy is within reach of the triangle, so
    // restrict the search to a ball around it.
    let mut ball = t.vertices;
    for _ in 0..p.n() {
        let grown = ball.iter().fold(ball, |acc, v| acc.union(g.neighbors(v)));
        if grown == ball {
            break;
        }
        ball = grown;
    }
    let local = g.induced_subgraph(ball);
    let pos = |x: usize| (ball.0 & ((1u64 << x) - 1)).count_ones() as usize;
    let want = VertexSet::from_vertices(t.vertices.iter().map(pos));
    let mut found = false;
    for_each_induced_embedding(p, &local, |e| {
        if want.is_subset(e.image()) {
            found = true;
            ControlFlow::Break(())
        } else {
            ControlFlow::Continue(())
        }
    });
    found
}

/// Sufficient condition for `L^n`, `n ≥ 2`: the first `n - 1` roots exist
/// and are claw-free, and none of G1–G7, F1, F2 is induced.
pub fn higher_order_sufficient(g: &Graph, n: usize) -> Result<Verdict> {
    require_connected(g)?;
    if n < 2 {
        return Err(Error::Contract("order must be at least 2".into()));
    }
    if let Some(name) = excluded_as(g, &HIGHER_EXCLUSIONS) {
        return Ok(Verdict::excluded(name));
    }
    if let Some(w) = first_forbidden(g, &FORBIDDEN_WITH_F) {
        return Ok(Verdict::no(w));
    }
    let claw = Graph::star(3);
    let mut chain = vec![g.clone()];
    for _ in 1..n {
        let root = match preimage(chain.last().unwrap()) {
            Ok(r) => r.roots.into_iter().next().unwrap().graph,
            Err(Error::NotLineGraph) => return Ok(Verdict::no(Certificate::RootChain(chain))),
            Err(e) => return Err(e),
        };
        let clawed = contains_induced(&claw, &root);
        chain.push(root);
        if clawed {
            return Ok(Verdict::no(Certificate::RootChain(chain)));
        }
        // A cycle repeats forever; no need to walk further.
        if is_isomorphic(&chain[chain.len() - 1], &chain[chain.len() - 2]) {
            break;
        }
    }
    Ok(Verdict::yes(Certificate::RootChain(chain)))
}

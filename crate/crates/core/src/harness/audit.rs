//! One predicate-versus-oracle comparison per theorem, per graph.

use std::collections::BTreeSet;
use std::fmt;

use itertools::Itertools;

use super::oracle::oracle_order;
use crate::error::{Error, Result};
use crate::graph::{canonical_form, is_isomorphic, Graph, VertexSet};
use crate::lineops::{
    enumerate_triangles, is_line_graph, krausz_partitions, line_graph, preimage, root_from_partition,
    Order,
};
use crate::recognition::{
    beineke_test, delta3_classify, delta4_classify, even_pair_classify, higher_order_sufficient,
    is_pure_embedding, second_order_sufficient, second_order_test, soltes_test, third_order_necessary,
    van_rooij_test, Decision, EvenPairClass, SecondOrderMode, SoltesVariant, Verdict,
};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum TheoremId {
    FirstOrderEquivalence,
    WhitneyUniqueness,
    EvenPair,
    InducedClosure,
    EvenShare,
    PureInduced,
    SecondOrderLiteral,
    SecondOrderRepaired,
    SecondOrderSufficient,
    ThirdOrderNecessary,
    HigherOrder,
    Delta3,
    Delta4,
}

impl TheoremId {
    pub const ALL: [TheoremId; 13] = [
        Self::FirstOrderEquivalence,
        Self::WhitneyUniqueness,
        Self::EvenPair,
        Self::InducedClosure,
        Self::EvenShare,
        Self::PureInduced,
        Self::SecondOrderLiteral,
        Self::SecondOrderRepaired,
        Self::SecondOrderSufficient,
        Self::ThirdOrderNecessary,
        Self::HigherOrder,
        Self::Delta3,
        Self::Delta4,
    ];

    pub fn as_str(self) -> &'static str {
        match self {
            Self::FirstOrderEquivalence => "first_order_equivalence",
            Self::WhitneyUniqueness => "whitney_uniqueness",
            Self::EvenPair => "even_pair",
            Self::InducedClosure => "induced_closure",
            Self::EvenShare => "even_share",
            Self::PureInduced => "pure_induced",
            Self::SecondOrderLiteral => "second_order_literal",
            Self::SecondOrderRepaired => "second_order_repaired",
            Self::SecondOrderSufficient => "second_order_sufficient",
            Self::ThirdOrderNecessary => "third_order_necessary",
            Self::HigherOrder => "higher_order",
            Self::Delta3 => "delta3",
            Self::Delta4 => "delta4",
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|t| t.as_str() == s)
            .ok_or_else(|| Error::UnknownTheorem(s.to_string()))
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Outcome {
    Agree,
    Disagree { expected: String, got: String },
    /// On the statement's exclusion list.
    Excluded,
    /// Outside the statement's hypotheses.
    Skipped,
}

fn disagree(expected: impl Into<String>, got: impl Into<String>) -> Outcome {
    Outcome::Disagree {
        expected: expected.into(),
        got: got.into(),
    }
}

/// Subset enumeration for the per-subgraph audits stops here.
const SUBSET_AUDIT_MAX_ORDER: usize = 12;
const HIGHER_ORDERS: std::ops::RangeInclusive<usize> = 2..=4;

/// Compares one theorem's predicate with the oracle on one graph. Errors
/// out of a predicate count as disagreements, not audit failures.
pub fn evaluate(theorem: TheoremId, g: &Graph) -> Outcome {
    match try_evaluate(theorem, g) {
        Ok(o) => o,
        Err(e) => disagree("a result", format!("error: {e}")),
    }
}

fn try_evaluate(theorem: TheoremId, g: &Graph) -> Result<Outcome> {
    use TheoremId::*;
    if !g.is_connected() {
        return Ok(Outcome::Skipped);
    }
    Ok(match theorem {
        FirstOrderEquivalence => first_order(g)?,
        WhitneyUniqueness => whitney(g)?,
        EvenPair => even_pair(g)?,
        InducedClosure => induced_closure(g)?,
        EvenShare => even_share(g)?,
        PureInduced => pure_induced(g)?,
        SecondOrderLiteral => second_order(g, SecondOrderMode::Literal)?,
        SecondOrderRepaired => second_order(g, SecondOrderMode::Repaired)?,
        SecondOrderSufficient => sufficient(g, second_order_sufficient(g)?, 2)?,
        ThirdOrderNecessary => third_order(g)?,
        HigherOrder => higher_order(g)?,
        Delta3 => delta3(g)?,
        Delta4 => delta4(g)?,
    })
}

fn is_k3(g: &Graph) -> bool {
    g.n() == 3 && g.edge_count() == 3
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "Yes"
    } else {
        "No"
    }
}

fn decision(v: &Verdict) -> &'static str {
    match v.result {
        Decision::Yes => "Yes",
        Decision::No => "No",
        Decision::Excluded => "Excluded",
    }
}

fn first_order(g: &Graph) -> Result<Outcome> {
    let truth = is_line_graph(g)?;
    let mut runs = vec![
        ("beineke".to_string(), beineke_test(g)),
        ("van_rooij".to_string(), van_rooij_test(g)),
    ];
    for v in SoltesVariant::ALL {
        runs.push((format!("soltes:{v:?}").to_lowercase(), soltes_test(g, v)));
    }
    let mut bad = Vec::new();
    for (name, r) in runs {
        match r {
            Ok(v) if v.is_yes() != truth => bad.push(format!("{name}={}", decision(&v))),
            Ok(v) if !v.verify(g) => bad.push(format!("{name} certificate fails")),
            Ok(_) => {}
            Err(e) => bad.push(format!("{name} error: {e}")),
        }
    }
    Ok(if bad.is_empty() {
        Outcome::Agree
    } else {
        disagree(format!("every test {}", yes_no(truth)), bad.join(", "))
    })
}

fn whitney(g: &Graph) -> Result<Outcome> {
    if !is_line_graph(g)? {
        return Ok(Outcome::Skipped);
    }
    let mut classes = BTreeSet::new();
    for p in krausz_partitions(g, 64)? {
        let root = root_from_partition(g, p)?;
        if !root.verify(g) || !is_isomorphic(&line_graph(&root.graph)?, g) {
            return Ok(disagree("L(root) = g", format!("root {} does not recompose", root.graph)));
        }
        classes.insert(canonical_form(&root.graph));
    }
    let expected: BTreeSet<_> = if is_k3(g) {
        [Graph::complete(3), Graph::star(3)].iter().map(canonical_form).collect()
    } else {
        // Any one root; uniqueness is what is being checked.
        classes.iter().take(1).cloned().collect()
    };
    let pre = preimage(g)?;
    let flags_ok = pre.validated && pre.ambiguous == is_k3(g);
    Ok(if classes == expected && flags_ok {
        Outcome::Agree
    } else {
        disagree(
            format!("{} root class(es)", expected.len()),
            format!(
                "{} root class(es) [{}], ambiguous={}, validated={}",
                classes.len(),
                classes.iter().map(|c| c.to_graph().to_string()).join(" "),
                pre.ambiguous,
                pre.validated
            ),
        )
    })
}

fn even_pair(g: &Graph) -> Result<Outcome> {
    if !is_line_graph(g)? {
        return Ok(Outcome::Skipped);
    }
    Ok(match even_pair_classify(g)? {
        Some(p) if p.class == EvenPairClass::Other => disagree(
            "even pairs only in E1, E2, E3",
            format!("even triangles {:?} and {:?} share an edge", p.triangles[0].vertices.to_vec(), p.triangles[1].vertices.to_vec()),
        ),
        _ => Outcome::Agree,
    })
}

/// Nonempty vertex sets inducing connected subgraphs.
fn connected_subsets(g: &Graph) -> impl Iterator<Item = VertexSet> + '_ {
    (1u64..(1u64 << g.n())).map(VertexSet).filter(move |&s| g.is_connected_set(s))
}

fn induced_closure(g: &Graph) -> Result<Outcome> {
    if g.n() > SUBSET_AUDIT_MAX_ORDER || !is_line_graph(g)? {
        return Ok(Outcome::Skipped);
    }
    for s in connected_subsets(g) {
        let v = beineke_test(&g.induced_subgraph(s))?;
        if !v.is_yes() {
            return Ok(disagree(
                "every induced subgraph passes",
                format!("subgraph on {:?} fails", s.to_vec()),
            ));
        }
    }
    Ok(Outcome::Agree)
}

fn even_share(g: &Graph) -> Result<Outcome> {
    if is_k3(g) || !is_line_graph(g)? {
        return Ok(Outcome::Skipped);
    }
    let triangles = enumerate_triangles(g);
    for t in triangles.iter().filter(|t| !t.is_odd()) {
        let shares = triangles
            .iter()
            .any(|u| u.vertices != t.vertices && u.vertices.intersection(t.vertices).len() == 2);
        if !shares {
            return Ok(disagree(
                "every even triangle shares an edge with another triangle",
                format!("even triangle {:?} shares none", t.vertices.to_vec()),
            ));
        }
    }
    Ok(Outcome::Agree)
}

/// Purity read off the roots themselves: the root edges standing for `sub`
/// span an induced subgraph of the root of `g`, for every partition of `g`.
pub fn root_pure(g: &Graph, sub: VertexSet) -> Result<bool> {
    for p in krausz_partitions(g, 64)? {
        let root = root_from_partition(g, p)?;
        let touched = VertexSet::from_vertices(
            sub.iter().flat_map(|x| {
                let (a, b) = root.edge_of_vertex[x];
                [a, b]
            }),
        );
        let chord = g.vertices().difference(sub).iter().any(|x| {
            let (a, b) = root.edge_of_vertex[x];
            touched.contains(a) && touched.contains(b)
        });
        if chord {
            return Ok(false);
        }
    }
    Ok(true)
}

fn pure_induced(g: &Graph) -> Result<Outcome> {
    if g.n() > SUBSET_AUDIT_MAX_ORDER || is_k3(g) || !is_line_graph(g)? {
        return Ok(Outcome::Skipped);
    }
    let mut bad = Vec::new();
    for s in connected_subsets(g) {
        if !is_line_graph(&g.induced_subgraph(s))? {
            continue;
        }
        let local = is_pure_embedding(g, s)?;
        let truth = root_pure(g, s)?;
        if local != truth {
            bad.push(format!("{:?}: local={local} root={truth}", s.to_vec()));
        }
    }
    Ok(if bad.is_empty() {
        Outcome::Agree
    } else {
        disagree("local criterion matches root-level purity", bad.join("; "))
    })
}

fn order_of(g: &Graph) -> Result<Order> {
    Ok(oracle_order(g)?.order)
}

fn second_order(g: &Graph, mode: SecondOrderMode) -> Result<Outcome> {
    let v = second_order_test(g, mode)?;
    if v.result == Decision::Excluded {
        return Ok(Outcome::Excluded);
    }
    let order = order_of(g)?;
    Ok(if v.is_yes() != order.at_least(2) {
        disagree(format!("{} (order {order})", yes_no(order.at_least(2))), decision(&v))
    } else if !v.verify(g) {
        disagree("verifiable certificate", "certificate fails")
    } else {
        Outcome::Agree
    })
}

/// One-directional check: a Yes must be backed by the oracle.
fn sufficient(g: &Graph, v: Verdict, k: usize) -> Result<Outcome> {
    if v.result == Decision::Excluded {
        return Ok(Outcome::Excluded);
    }
    if !v.verify(g) {
        return Ok(disagree("verifiable certificate", "certificate fails"));
    }
    if !v.is_yes() {
        return Ok(Outcome::Agree);
    }
    let order = order_of(g)?;
    Ok(if order.at_least(k) {
        Outcome::Agree
    } else {
        disagree(format!("order >= {k}"), format!("Yes, but order {order}"))
    })
}

fn third_order(g: &Graph) -> Result<Outcome> {
    let v = third_order_necessary(g)?;
    if v.result == Decision::Excluded {
        return Ok(Outcome::Excluded);
    }
    if !v.verify(g) {
        return Ok(disagree("verifiable certificate", "certificate fails"));
    }
    if v.is_yes() {
        return Ok(Outcome::Agree);
    }
    let order = order_of(g)?;
    Ok(if order.at_least(3) {
        disagree(format!("Yes (order {order})"), "No")
    } else {
        Outcome::Agree
    })
}

fn higher_order(g: &Graph) -> Result<Outcome> {
    let mut order = None;
    for k in HIGHER_ORDERS {
        let v = higher_order_sufficient(g, k)?;
        if v.result == Decision::Excluded {
            return Ok(Outcome::Excluded);
        }
        if !v.verify(g) {
            return Ok(disagree("verifiable certificate", format!("certificate for n={k} fails")));
        }
        if v.is_yes() {
            let o = match order {
                Some(o) => o,
                None => *order.insert(order_of(g)?),
            };
            if !o.at_least(k) {
                return Ok(disagree(format!("order >= {k}"), format!("Yes for n={k}, but order {o}")));
            }
        }
    }
    Ok(Outcome::Agree)
}

fn delta3(g: &Graph) -> Result<Outcome> {
    if g.max_degree() != 3 {
        return Ok(Outcome::Skipped);
    }
    let c = match delta3_classify(g) {
        Err(Error::ExcludedInput(_)) => return Ok(Outcome::Excluded),
        r => r?,
    };
    let order = order_of(g)?;
    let family_ok = c.second_order.map_or(true, |id| crate::patterns::make_l(id).is_ok_and(|h| is_isomorphic(&h, g)));
    let agree = c.is_line == order.at_least(1)
        && c.second_order.is_some() == order.at_least(2)
        && !order.at_least(3)
        && family_ok;
    Ok(if agree {
        Outcome::Agree
    } else {
        disagree(
            format!("line={} second_order={} order<3 (order {order})", order.at_least(1), order.at_least(2)),
            format!("line={} second_order={:?}", c.is_line, c.second_order.map(|f| f.to_string())),
        )
    })
}

fn delta4(g: &Graph) -> Result<Outcome> {
    if g.max_degree() != 4 {
        return Ok(Outcome::Skipped);
    }
    let c = match delta4_classify(g) {
        Err(Error::ExcludedInput(_)) => return Ok(Outcome::Excluded),
        r => r?,
    };
    let order = order_of(g)?;
    let family_ok = c.third_order.map_or(true, |id| crate::patterns::make_ll(id).is_ok_and(|h| is_isomorphic(&h, g)));
    let agree = c.is_line == order.at_least(1)
        && c.third_order.is_some() == order.at_least(3)
        && !order.at_least(4)
        && family_ok;
    Ok(if agree {
        Outcome::Agree
    } else {
        disagree(
            format!("line={} third_order={} order<4 (order {order})", order.at_least(1), order.at_least(3)),
            format!("line={} third_order={:?}", c.is_line, c.third_order.map(|f| f.to_string())),
        )
    })
}

//! Recognition and classification predicates, each returning a checkable
//! verdict.
//!
//! All predicates take connected graphs; disconnected input is rejected
//! with [`Error::NotConnected`]. Exclusion lists are matched by isomorphism
//! against the pattern catalog.

mod degree;
mod first_order;
mod higher;
mod purity;
mod verdict;

pub use degree::{
    delta3_classify, delta4_classify, pendant_occurrence, Delta3Class, Delta4Class,
    DELTA4_EXCLUSIONS,
};
pub use first_order::{
    beineke_test, even_pair_classify, soltes_test, van_rooij_test, EvenPair, EvenPairClass,
    SoltesVariant,
};
pub use higher::{
    higher_order_sufficient, second_order_sufficient, second_order_test, third_order_necessary,
    SecondOrderMode, HIGHER_EXCLUSIONS,
};
pub use purity::is_pure_embedding;
pub use verdict::{Certificate, Decision, Verdict};

use crate::error::{Error, Result};
use crate::graph::{find_induced_embedding, is_isomorphic, Graph};
use crate::lineops::first_krausz_partition;
use crate::patterns::pattern;

fn require_connected(g: &Graph) -> Result<()> {
    if g.is_connected() {
        Ok(())
    } else {
        Err(Error::NotConnected)
    }
}

/// Witness for the first listed pattern with an induced copy in `g`.
fn first_forbidden(g: &Graph, names: &[&str]) -> Option<Certificate> {
    names.iter().find_map(|&name| {
        let p = pattern(name).expect("catalog name");
        find_induced_embedding(p, g).map(|embedding| Certificate::ForbiddenWitness {
            pattern: name.to_string(),
            embedding,
        })
    })
}

/// First listed graph (catalog names or `K3`) isomorphic to `g`.
fn excluded_as(g: &Graph, names: &[&'static str]) -> Option<&'static str> {
    names.iter().copied().find(|&name| {
        if name == "K3" {
            g.n() == 3 && g.edge_count() == 3
        } else {
            is_isomorphic(g, pattern(name).expect("catalog name"))
        }
    })
}

/// Partition certificate for a graph a forbidden-subgraph test accepted.
/// Falls back to `NoPartition`, which then fails to verify: a Yes without a
/// partition means the characterization itself broke.
fn line_certificate(g: &Graph) -> Certificate {
    match first_krausz_partition(g) {
        Ok(Some(p)) => Certificate::Partition(p),
        _ => Certificate::NoPartition,
    }
}

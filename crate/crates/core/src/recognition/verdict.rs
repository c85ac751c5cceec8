use serde::Serialize;

use crate::graph::{is_isomorphic, Embedding, Graph};
use crate::lineops::{line_graph, search_partitions, KrauszPartition, TriangleRecord};
use crate::patterns::pattern;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Decision {
    Yes,
    No,
    /// The input is on the statement's exclusion list.
    Excluded,
}

/// Evidence behind a [`Verdict`]; every variant can be re-checked against
/// the input with [`Verdict::verify`].
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Certificate {
    /// An induced copy of a catalog pattern.
    ForbiddenWitness { pattern: String, embedding: Embedding },
    Partition(KrauszPartition),
    /// Triangles (and why they matter) that break a triangle condition.
    TriangleWitness { triangles: Vec<TriangleRecord>, reason: String },
    /// `chain[0]` is the input and `L(chain[i + 1]) ≅ chain[i]`.
    RootChain(Vec<Graph>),
    /// The input is isomorphic to this catalog entry.
    ExclusionName(String),
    /// Exhaustive partition search came back empty.
    NoPartition,
    /// Every condition was checked and none failed.
    ConditionsHold,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Verdict {
    pub result: Decision,
    pub certificate: Certificate,
}

impl Verdict {
    pub fn yes(certificate: Certificate) -> Self {
        Verdict {
            result: Decision::Yes,
            certificate,
        }
    }

    pub fn no(certificate: Certificate) -> Self {
        Verdict {
            result: Decision::No,
            certificate,
        }
    }

    pub fn excluded(name: &str) -> Self {
        Verdict {
            result: Decision::Excluded,
            certificate: Certificate::ExclusionName(name.to_string()),
        }
    }

    pub fn is_yes(&self) -> bool {
        self.result == Decision::Yes
    }

    pub fn is_no(&self) -> bool {
        self.result == Decision::No
    }

    /// Re-checks the certificate against `g` without trusting the code
    /// that produced it.
    pub fn verify(&self, g: &Graph) -> bool {
        match &self.certificate {
            Certificate::ForbiddenWitness { pattern: name, embedding } => {
                pattern_graph(name).is_some_and(|p| embedding.verify(&p, g))
            }
            Certificate::Partition(p) => p.verify(g).is_ok(),
            Certificate::TriangleWitness { triangles, .. } => {
                !triangles.is_empty() && triangles.iter().all(|t| t.verify(g))
            }
            Certificate::RootChain(chain) => {
                chain.first() == Some(g)
                    && chain.windows(2).all(|w| {
                        line_graph(&w[1]).is_ok_and(|l| is_isomorphic(&l, &w[0]))
                    })
            }
            Certificate::ExclusionName(name) => {
                pattern_graph(name).is_some_and(|p| is_isomorphic(&p, g))
            }
            Certificate::NoPartition => search_partitions(g, 1).is_empty(),
            Certificate::ConditionsHold => true,
        }
    }
}

/// Catalog lookup that also knows `K3`.
fn pattern_graph(name: &str) -> Option<Graph> {
    if name == "K3" {
        Some(Graph::complete(3))
    } else {
        pattern(name).ok().cloned()
    }
}

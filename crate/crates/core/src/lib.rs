//! Line graphs and iterated line graphs: construction, root
//! reconstruction, forbidden-subgraph recognition, and an exhaustive audit
//! harness that checks the recognition predicates against a brute-force
//! oracle over every small connected graph.
//!
//! - [`graph`]: 64-vertex bitset graphs, graph6, canonical forms, induced
//!   embeddings, enumeration of connected graphs.
//! - [`lineops`]: `L(G)`, Krausz partitions, roots, triangle parity, order.
//! - [`patterns`]: the forbidden-pattern catalog and the `L_{k,n}` families.
//! - [`recognition`]: the predicates, each returning a checkable verdict.
//! - [`harness`]: corpora, the oracle, audits, reports and findings.
//!
//! The `parallel` feature (on by default) spreads enumeration and audits
//! over a rayon pool; without it everything runs in a plain loop with
//! identical results.

pub mod error;
pub mod exec;
pub mod graph;
pub mod harness;
pub mod lineops;
pub mod patterns;
pub mod recognition;

pub use error::{Error, Result};

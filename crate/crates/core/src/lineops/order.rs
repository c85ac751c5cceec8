//! How many times a graph can be "un-lined".

use serde::Serialize;

use super::preimage::preimage;
use super::{is_cycle, is_path, require_connected};
use crate::error::{Error, Result};
use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Order {
    Finite(usize),
    Infinite,
}

impl Order {
    /// `self ≥ k` with infinity above every finite value.
    pub fn at_least(self, k: usize) -> bool {
        match self {
            Order::Finite(m) => m >= k,
            Order::Infinite => true,
        }
    }
}

impl std::fmt::Display for Order {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Order::Finite(k) => write!(f, "{k}"),
            Order::Infinite => f.write_str("infinite"),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum TerminalReason {
    NotLineGraph,
    CycleFixedPoint,
    PathUnbounded,
    /// The chain met `K3`, whose `K3` root is a cycle; the larger branch
    /// (infinite) is reported.
    Ambiguous,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderAnalysis {
    pub order: Order,
    /// `chain[0] = g`, `chain[i + 1]` a root of `chain[i]`.
    pub chain: Vec<Graph>,
    pub terminal_reason: TerminalReason,
}

impl OrderAnalysis {
    /// Each link recomposes: `L(chain[i + 1]) ≅ chain[i]`.
    pub fn verify(&self) -> bool {
        self.chain.windows(2).all(|w| {
            super::line_graph(&w[1]).is_ok_and(|l| crate::graph::is_isomorphic(&l, &w[0]))
        })
    }
}

/// Follows roots until the chain stops or becomes provably endless.
///
/// A cycle is its own root, and a path `P_k` has root `P_{k+1}`, so both
/// are infinite. Otherwise the root is unique and has at least as many
/// edges as the current graph has vertices, so the walk ends quickly; if it
/// has not within `max_depth` roots, `DepthExceeded` is returned.
pub fn order_analysis(g: &Graph, max_depth: usize) -> Result<OrderAnalysis> {
    require_connected(g)?;
    let mut chain = vec![g.clone()];
    loop {
        let cur = chain.last().unwrap();
        let steps = chain.len() - 1;
        let infinite = |reason| OrderAnalysis {
            order: Order::Infinite,
            chain: chain.clone(),
            terminal_reason: reason,
        };
        if cur.n() == 3 && cur.edge_count() == 3 {
            return Ok(infinite(TerminalReason::Ambiguous));
        }
        if is_cycle(cur) {
            return Ok(infinite(TerminalReason::CycleFixedPoint));
        }
        if is_path(cur) {
            return Ok(infinite(TerminalReason::PathUnbounded));
        }
        if steps >= max_depth {
            return Err(Error::DepthExceeded(max_depth));
        }
        match preimage(cur) {
            Ok(r) => {
                let next = r.roots.into_iter().next().unwrap().graph;
                chain.push(next);
            }
            Err(Error::NotLineGraph) => {
                return Ok(OrderAnalysis {
                    order: Order::Finite(steps),
                    chain,
                    terminal_reason: TerminalReason::NotLineGraph,
                })
            }
            Err(e) => return Err(e),
        }
    }
}

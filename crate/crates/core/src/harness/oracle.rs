//! Ground truth by brute force: walk the root chain.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{encode_graph6, Graph};
use crate::lineops::{line_graph, order_analysis, Order, TerminalReason};

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct OracleVerdict {
    pub order: Order,
    /// graph6 of `g`, its root, the root's root, ...
    pub chain: Vec<String>,
    pub terminal_reason: TerminalReason,
}

impl OracleVerdict {
    /// Every link recomposes under `line_graph`.
    pub fn verify(&self) -> bool {
        let graphs: Result<Vec<Graph>> = self.chain.iter().map(|s| crate::graph::parse_graph6(s)).collect();
        let Ok(graphs) = graphs else { return false };
        graphs.windows(2).all(|w| {
            line_graph(&w[1]).is_ok_and(|l| crate::graph::is_isomorphic(&l, &w[0]))
        })
    }
}

/// Root chains only lengthen by vertex count one step at a time and stop
/// once a graph repeats its shape, so this is far beyond any real chain.
fn depth_for(g: &Graph) -> usize {
    4 * g.n() + 16
}

/// The order of `g` with the chain that proves it.
pub fn oracle_order(g: &Graph) -> Result<OracleVerdict> {
    let a = order_analysis(g, depth_for(g))?;
    Ok(OracleVerdict {
        order: a.order,
        chain: a.chain.iter().map(encode_graph6).collect::<Result<_>>()?,
        terminal_reason: a.terminal_reason,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn examples() {
        assert_eq!(oracle_order(&Graph::cycle(9)).unwrap().order, Order::Infinite);
        let d = oracle_order(&Graph::complete_minus_edge(4)).unwrap();
        assert_eq!(d.order, Order::Finite(2));
        assert_eq!(d.chain.len(), 3);
        assert!(d.verify());
        assert_eq!(oracle_order(&Graph::star(3)).unwrap().order, Order::Finite(0));
    }

    #[test]
    fn tampered_chain_fails() {
        let mut d = oracle_order(&Graph::complete_minus_edge(4)).unwrap();
        d.chain[1] = encode_graph6(&Graph::star(3)).unwrap();
        assert!(!d.verify());
    }
}

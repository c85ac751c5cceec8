//! Plain edge-list text: whitespace separated `u v` pairs, 0-based, with an
//! optional leading `n=k` token fixing the vertex count. `#` starts a
//! comment that runs to the end of the line.

use super::{Graph, MAX_VERTICES};
use crate::error::{Error, Result};

pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut tokens = text
        .lines()
        .map(|l| l.split('#').next().unwrap_or(""))
        .flat_map(str::split_whitespace)
        .peekable();

    let mut declared = None;
    if let Some(tok) = tokens.peek() {
        if let Some(k) = tok.strip_prefix("n=") {
            let k: usize = k
                .parse()
                .map_err(|_| Error::MalformedEdgeList(format!("bad header {tok:?}")))?;
            declared = Some(k);
            tokens.next();
        }
    }

    let nums = tokens
        .map(|t| {
            t.parse::<usize>()
                .map_err(|_| Error::MalformedEdgeList(format!("bad vertex index {t:?}")))
        })
        .collect::<Result<Vec<_>>>()?;
    if nums.len() % 2 != 0 {
        return Err(Error::MalformedEdgeList("odd number of indices".into()));
    }
    let edges: Vec<(usize, usize)> = nums.chunks(2).map(|c| (c[0], c[1])).collect();
    if let Some(&(u, _)) = edges.iter().find(|(u, v)| u == v) {
        return Err(Error::SelfLoop(u));
    }
    let n = match declared {
        Some(k) => k,
        None => {
            let top = nums.iter().copied().max().map_or(0, |m| m + 1);
            if top > MAX_VERTICES {
                return Err(Error::IndexOutOfRange {
                    index: top - 1,
                    n: MAX_VERTICES,
                });
            }
            top
        }
    };
    Graph::from_edges(n, &edges)
}

/// Inverse of [`parse_edge_list`]: an `n=k` header line then one edge per line.
pub fn format_edge_list(g: &Graph) -> String {
    let mut out = format!("n={}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

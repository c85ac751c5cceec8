//! Induced-subgraph embedding search.
//!
//! Backtracking over pattern vertices in a connectivity-first order. The
//! candidate set for each pattern vertex is one bitset expression: unused
//! host vertices adjacent to the images of its earlier pattern neighbours
//! and non-adjacent to the images of its earlier non-neighbours. Candidates
//! are tried in ascending host order, so the first embedding found is
//! deterministic.

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use super::{Graph, VertexSet};

/// Injective map from pattern vertices to host vertices that preserves
/// both adjacency and non-adjacency.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, serde::Serialize)]
pub struct Embedding {
    pub map: Vec<usize>,
}

impl Embedding {
    pub fn image(&self) -> VertexSet {
        self.map.iter().copied().collect()
    }

    /// Re-checks the induced property against the two graphs.
    pub fn verify(&self, pattern: &Graph, host: &Graph) -> bool {
        if self.map.len() != pattern.n() || self.image().len() != pattern.n() {
            return false;
        }
        if self.map.iter().any(|&h| h >= host.n()) {
            return false;
        }
        (0..pattern.n()).all(|u| {
            (u + 1..pattern.n())
                .all(|v| pattern.has_edge(u, v) == host.has_edge(self.map[u], self.map[v]))
        })
    }
}

/// Pattern vertices ordered so each one (after the first of its component)
/// has an earlier neighbour; starts from the highest-degree vertex.
fn search_order(pattern: &Graph) -> Vec<usize> {
    let n = pattern.n();
    let mut order = Vec::with_capacity(n);
    let mut placed = VertexSet::EMPTY;
    while order.len() < n {
        let remaining = pattern.vertices().difference(placed);
        let frontier = remaining.iter().filter(|&v| {
            !pattern.neighbors(v).intersection(placed).is_empty()
        });
        let pick = frontier
            .max_by_key(|&v| (pattern.neighbors(v).intersection(placed).len(), pattern.degree(v), usize::MAX - v))
            .or_else(|| remaining.iter().max_by_key(|&v| (pattern.degree(v), usize::MAX - v)))
            .unwrap();
        order.push(pick);
        placed.insert(pick);
    }
    order
}

/// Calls `visit` for every induced embedding; stops early on `Break`.
pub fn for_each_induced_embedding<F>(pattern: &Graph, host: &Graph, mut visit: F)
where
    F: FnMut(&Embedding) -> ControlFlow<()>,
{
    let k = pattern.n();
    if k > host.n() {
        return;
    }
    if k == 0 {
        let _ = visit(&Embedding { map: vec![] });
        return;
    }
    let order = search_order(pattern);
    let host_deg: Vec<usize> = host.degrees();
    // Host vertices whose degree can accommodate each pattern vertex.
    let fits: Vec<VertexSet> = (0..k)
        .map(|p| {
            let d = pattern.degree(p);
            (0..host.n()).filter(|&h| host_deg[h] >= d).collect()
        })
        .collect();
    let mut map = vec![usize::MAX; k];
    let mut used = VertexSet::EMPTY;
    let _ = extend(pattern, host, &order, &fits, 0, &mut map, &mut used, &mut visit);
}

#[allow(clippy::too_many_arguments)]
fn extend<F>(
    pattern: &Graph,
    host: &Graph,
    order: &[usize],
    fits: &[VertexSet],
    depth: usize,
    map: &mut Vec<usize>,
    used: &mut VertexSet,
    visit: &mut F,
) -> ControlFlow<()>
where
    F: FnMut(&Embedding) -> ControlFlow<()>,
{
    if depth == order.len() {
        return visit(&Embedding { map: map.clone() });
    }
    let p = order[depth];
    let mut cand = fits[p].difference(*used);
    for &q in &order[..depth] {
        let img = host.neighbors(map[q]);
        cand = if pattern.has_edge(p, q) {
            cand.intersection(img)
        } else {
            cand.difference(img)
        };
        if cand.is_empty() {
            return ControlFlow::Continue(());
        }
    }
    for h in cand {
        map[p] = h;
        used.insert(h);
        let flow = extend(pattern, host, order, fits, depth + 1, map, used, visit);
        *used = used.without(h);
        flow?;
    }
    map[p] = usize::MAX;
    ControlFlow::Continue(())
}

pub fn find_induced_embedding(pattern: &Graph, host: &Graph) -> Option<Embedding> {
    let mut found = None;
    for_each_induced_embedding(pattern, host, |e| {
        found = Some(e.clone());
        ControlFlow::Break(())
    });
    found
}

pub fn find_all_induced_embeddings(pattern: &Graph, host: &Graph) -> Vec<Embedding> {
    let mut all = Vec::new();
    for_each_induced_embedding(pattern, host, |e| {
        all.push(e.clone());
        ControlFlow::Continue(())
    });
    all
}

pub fn contains_induced(pattern: &Graph, host: &Graph) -> bool {
    find_induced_embedding(pattern, host).is_some()
}

/// Some injective map sending every pattern edge to a host edge
/// (non-adjacent pattern pairs are unconstrained).
pub fn contains_subgraph(pattern: &Graph, host: &Graph) -> bool {
    fn go(pattern: &Graph, host: &Graph, order: &[usize], map: &mut [usize], used: VertexSet) -> bool {
        let Some((&p, rest)) = order.split_first() else {
            return true;
        };
        let mut cand = host.vertices().difference(used);
        for q in pattern.neighbors(p) {
            if map[q] != usize::MAX {
                cand = cand.intersection(host.neighbors(map[q]));
            }
        }
        for h in cand.iter().filter(|&h| host.degree(h) >= pattern.degree(p)) {
            map[p] = h;
            if go(pattern, host, rest, map, used.with(h)) {
                return true;
            }
        }
        map[p] = usize::MAX;
        false
    }
    if pattern.n() > host.n() || pattern.edge_count() > host.edge_count() {
        return false;
    }
    let order = search_order(pattern);
    go(pattern, host, &order, &mut vec![usize::MAX; pattern.n()], VertexSet::EMPTY)
}

/// Distinct vertex sets of `host` inducing a copy of `pattern`, ascending.
pub fn induced_image_sets(pattern: &Graph, host: &Graph) -> Vec<VertexSet> {
    let mut sets = BTreeSet::new();
    for_each_induced_embedding(pattern, host, |e| {
        sets.insert(e.image());
        ControlFlow::Continue(())
    });
    sets.into_iter().collect()
}

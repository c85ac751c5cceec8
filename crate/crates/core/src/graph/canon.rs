//! Canonical labelling by individualisation-refinement.
//!
//! The ordered partition is refined to an equitable one (cells split by
//! neighbour counts into every other cell), then the search branches on the
//! first smallest non-singleton cell. Each discrete leaf yields a relabelled
//! adjacency matrix; the lexicographically largest one is the canonical
//! form. Automorphisms found when two leaves coincide prune sibling
//! branches that lie in the same orbit of the pointwise stabiliser of the
//! current prefix.

use std::cmp::Ordering;

use super::{Graph, VertexSet};

/// Adjacency rows of a graph relabelled into canonical order. Two graphs
/// have equal forms iff they are isomorphic.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct CanonicalForm {
    n: usize,
    rows: Vec<u64>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn rows(&self) -> &[u64] {
        &self.rows
    }

    /// The canonical representative as a graph.
    pub fn to_graph(&self) -> Graph {
        Graph::from_rows_unchecked(self.rows.clone())
    }

    /// Upper triangle packed column by column (the graph6 bit order).
    /// Only meaningful for `n <= 11`, where it fits a word; used as a
    /// compact dedupe key by the enumerator.
    pub fn packed(&self) -> Option<u64> {
        if self.n > 11 {
            return None;
        }
        let mut key = 0u64;
        for j in 1..self.n {
            for i in 0..j {
                key = key << 1 | (self.rows[i] >> j & 1);
            }
        }
        Some(key)
    }

    pub fn from_packed(n: usize, key: u64) -> CanonicalForm {
        assert!(n <= 11);
        let mut rows = vec![0u64; n];
        let total = n * n.saturating_sub(1) / 2;
        let mut k = 0;
        for j in 1..n {
            for i in 0..j {
                if key >> (total - 1 - k) & 1 == 1 {
                    rows[i] |= 1 << j;
                    rows[j] |= 1 << i;
                }
                k += 1;
            }
        }
        CanonicalForm { n, rows }
    }
}

pub fn canonical_form(g: &Graph) -> CanonicalForm {
    let lab = canonical_labeling(g);
    CanonicalForm {
        n: g.n(),
        rows: relabel_rows(g, &lab),
    }
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    if a.n() != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut da = a.degrees();
    let mut db = b.degrees();
    da.sort_unstable();
    db.sort_unstable();
    da == db && canonical_form(a) == canonical_form(b)
}

/// `lab[i]` is the original vertex placed at canonical position `i`.
pub fn canonical_labeling(g: &Graph) -> Vec<usize> {
    let n = g.n();
    if n == 0 {
        return vec![];
    }
    let mut search = Search {
        g,
        first: None,
        first_path: Vec::new(),
        best: None,
        autos: Vec::new(),
    };
    let mut cells = vec![g.vertices()];
    refine(g, &mut cells);
    search.descend(cells, &mut Vec::new());
    search.best.expect("at least one leaf").1
}

/// Rows of the graph with vertex `lab[i]` moved to position `i`.
fn relabel_rows(g: &Graph, lab: &[usize]) -> Vec<u64> {
    let n = lab.len();
    let mut pos = [0usize; 64];
    for (i, &v) in lab.iter().enumerate() {
        pos[v] = i;
    }
    (0..n)
        .map(|i| {
            g.neighbors(lab[i])
                .iter()
                .fold(0u64, |acc, w| acc | 1 << pos[w])
        })
        .collect()
}

/// Splits cells until each is equitable with respect to every other.
fn refine(g: &Graph, cells: &mut Vec<VertexSet>) {
    loop {
        let mut changed = false;
        let mut w = 0;
        while w < cells.len() {
            let splitter = cells[w];
            let mut next = Vec::with_capacity(cells.len());
            for &cell in cells.iter() {
                if cell.len() == 1 {
                    next.push(cell);
                    continue;
                }
                let mut buckets: Vec<(u32, VertexSet)> = Vec::new();
                for v in cell {
                    let k = (g.rows()[v] & splitter.0).count_ones();
                    match buckets.iter_mut().find(|(c, _)| *c == k) {
                        Some((_, s)) => s.insert(v),
                        None => buckets.push((k, VertexSet::singleton(v))),
                    }
                }
                if buckets.len() > 1 {
                    changed = true;
                    buckets.sort_unstable_by_key(|&(k, _)| k);
                }
                next.extend(buckets.into_iter().map(|(_, s)| s));
            }
            *cells = next;
            w += 1;
        }
        if !changed {
            return;
        }
    }
}

struct Search<'a> {
    g: &'a Graph,
    first: Option<(Vec<u64>, Vec<usize>)>,
    first_path: Vec<usize>,
    best: Option<(Vec<u64>, Vec<usize>)>,
    autos: Vec<Vec<usize>>,
}

impl Search<'_> {
    /// Returns `Some(level)` when the search should unwind to the node at
    /// depth `level` (a leaf matched the first leaf, so everything below
    /// the divergence point is an image of the first subtree).
    fn descend(&mut self, cells: Vec<VertexSet>, prefix: &mut Vec<usize>) -> Option<usize> {
        let target = cells
            .iter()
            .enumerate()
            .filter(|(_, c)| c.len() > 1)
            .min_by_key(|&(i, c)| (c.len(), i))
            .map(|(i, _)| i);
        let Some(t) = target else {
            return self.leaf(&cells, prefix);
        };
        let level = prefix.len();
        let mut tried: Vec<usize> = Vec::new();
        for v in cells[t] {
            if !tried.is_empty() && self.same_orbit(prefix, &tried, v) {
                continue;
            }
            tried.push(v);
            let mut child = Vec::with_capacity(cells.len() + 1);
            child.extend_from_slice(&cells[..t]);
            child.push(VertexSet::singleton(v));
            child.push(cells[t].without(v));
            child.extend_from_slice(&cells[t + 1..]);
            refine(self.g, &mut child);
            prefix.push(v);
            let jump = self.descend(child, prefix);
            prefix.pop();
            if let Some(j) = jump {
                if j < level {
                    return Some(j);
                }
            }
        }
        None
    }

    fn leaf(&mut self, cells: &[VertexSet], prefix: &[usize]) -> Option<usize> {
        let lab: Vec<usize> = cells.iter().map(|c| c.first().unwrap()).collect();
        let cert = relabel_rows(self.g, &lab);
        let Some((first_cert, first_lab)) = &self.first else {
            self.first = Some((cert.clone(), lab.clone()));
            self.first_path = prefix.to_vec();
            self.best = Some((cert, lab));
            return None;
        };
        if *first_cert == cert {
            self.autos.push(automorphism(first_lab, &lab));
            let common = self
                .first_path
                .iter()
                .zip(prefix)
                .take_while(|(a, b)| a == b)
                .count();
            return Some(common);
        }
        let (best_cert, best_lab) = self.best.as_ref().unwrap();
        match cert.cmp(best_cert) {
            Ordering::Equal => {
                let a = automorphism(best_lab, &lab);
                self.autos.push(a);
            }
            Ordering::Greater => self.best = Some((cert, lab)),
            Ordering::Less => {}
        }
        None
    }

    /// Is `v` in the orbit of some already tried vertex under the group
    /// generated by the known automorphisms that fix `prefix` pointwise?
    fn same_orbit(&self, prefix: &[usize], tried: &[usize], v: usize) -> bool {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        let mut any = false;
        for a in &self.autos {
            if prefix.iter().all(|&p| a[p] == p) {
                any = true;
                for (x, &y) in a.iter().enumerate() {
                    let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                    if rx != ry {
                        parent[rx] = ry;
                    }
                }
            }
        }
        if !any {
            return false;
        }
        let rv = find(&mut parent, v);
        tried.iter().any(|&u| find(&mut parent, u) == rv)
    }
}

/// Permutation sending `from[i]` to `to[i]`.
fn automorphism(from: &[usize], to: &[usize]) -> Vec<usize> {
    let mut a = vec![0; from.len()];
    for (&x, &y) in from.iter().zip(to) {
        a[x] = y;
    }
    a
}

//! The named pattern catalog and its consistency checks.

use std::sync::OnceLock;

use serde::Serialize;

use super::{claw_plus_edge, e1, e2, e3};
use crate::error::{Error, Result};
use crate::graph::{contains_induced, contains_subgraph, is_isomorphic, parse_graph6, Graph};
use crate::lineops::{is_line_graph_any, line_graph};

const FIXTURE: &str = include_str!("../../fixtures/patterns.g6");

/// Names read from the fixture file, in catalog order.
pub const TRANSCRIBED: [&str; 11] = ["G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9", "H1", "H2", "H3"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub enum Source {
    /// Read from the named line of the fixture.
    Transcribed(String),
    /// Rebuilt from the given expression.
    Constructed(String),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PatternEntry {
    pub name: String,
    pub graph: Graph,
    pub source: Source,
}

/// Parses "NAME graph6" lines; blank lines and `#` comments are skipped.
pub fn parse_fixture(text: &str) -> Result<Vec<(String, Graph)>> {
    let mut out = Vec::new();
    for (i, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let (Some(name), Some(code), None) = (parts.next(), parts.next(), parts.next()) else {
            return Err(Error::MalformedGraph6(format!("fixture line {}: {line:?}", i + 1)));
        };
        out.push((name.to_string(), parse_graph6(code)?));
    }
    Ok(out)
}

/// Builds the full catalog from fixture entries: G1 and the derived graphs
/// are constructed, the rest taken from `transcribed`.
pub fn build_catalog(transcribed: &[(String, Graph)]) -> Result<Vec<PatternEntry>> {
    let lookup = |name: &str| -> Result<Graph> {
        transcribed
            .iter()
            .find(|(n, _)| n == name)
            .map(|(_, g)| g.clone())
            .ok_or_else(|| Error::UnknownPattern(name.to_string()))
    };
    let constructed = |name: &str, graph: Graph, expr: &str| PatternEntry {
        name: name.to_string(),
        graph,
        source: Source::Constructed(expr.to_string()),
    };
    let mut out = vec![constructed("G1", Graph::star(3), "K_{1,3}")];
    for name in TRANSCRIBED {
        out.push(PatternEntry {
            name: name.to_string(),
            graph: lookup(name)?,
            source: Source::Transcribed(name.to_string()),
        });
    }
    out.push(constructed("E1", line_graph(&claw_plus_edge())?, "L(K_{1,3}+e)"));
    out.push(constructed("E2", line_graph(&out.last().unwrap().graph)?, "L(E1)"));
    out.push(constructed("E3", line_graph(&Graph::complete(4))?, "L(K4)"));
    out.push(constructed("F1", line_graph(&lookup("G4")?)?, "L(G4)"));
    out.push(constructed("F2", line_graph(&lookup("G2")?)?, "L(G2)"));
    for i in 2..=7 {
        let g = line_graph(&lookup(&format!("G{i}"))?)?;
        out.push(constructed(&format!("LG{i}"), g, &format!("L(G{i})")));
    }
    Ok(out)
}

/// The catalog built from the committed fixture.
pub fn catalog() -> &'static [PatternEntry] {
    static CATALOG: OnceLock<Vec<PatternEntry>> = OnceLock::new();
    CATALOG.get_or_init(|| {
        let fixture = parse_fixture(FIXTURE).expect("committed pattern fixture parses");
        build_catalog(&fixture).expect("committed pattern fixture is complete")
    })
}

/// Catalog entry by name.
pub fn pattern(name: &str) -> Result<&'static Graph> {
    catalog()
        .iter()
        .find(|e| e.name == name)
        .map(|e| &e.graph)
        .ok_or_else(|| Error::UnknownPattern(name.to_string()))
}

/// Catalog entries for a list of names, in the same order.
pub fn patterns(names: &[&str]) -> Vec<&'static PatternEntry> {
    names
        .iter()
        .map(|&n| catalog().iter().find(|e| e.name == n).expect("catalog name"))
        .collect()
}

/// The catalog as "NAME graph6" lines.
pub fn emit_catalog() -> String {
    catalog()
        .iter()
        .map(|e| format!("{} {}\n", e.name, e.graph))
        .collect()
}

/// Every consistency problem in `entries`; empty means valid.
pub fn validate_entries(entries: &[PatternEntry]) -> Vec<String> {
    let mut bad = Vec::new();
    let get = |name: &str| entries.iter().find(|e| e.name == name).map(|e| &e.graph);
    let beineke: Vec<String> = (1..=9).map(|i| format!("G{i}")).collect();
    let mut required: Vec<String> = beineke.clone();
    required.extend(["H1", "H2", "H3", "E1", "E2", "E3", "F1", "F2"].map(String::from));
    required.extend((2..=7).map(|i| format!("LG{i}")));
    for name in &required {
        if get(name).is_none() {
            bad.push(format!("{name} missing"));
        }
    }
    if !bad.is_empty() {
        return bad;
    }
    let g = |name: &str| get(name).unwrap();

    if !is_isomorphic(g("G1"), &Graph::star(3)) {
        bad.push("G1 is not K_{1,3}".into());
    }
    for (name, delta) in [("G3", 4), ("G5", 4), ("G8", 4), ("G6", 5), ("G9", 5)] {
        if g(name).max_degree() != delta {
            bad.push(format!("max degree of {name} is {}, expected {delta}", g(name).max_degree()));
        }
    }
    for host in ["G5", "G6", "G7"] {
        if !contains_subgraph(g("G4"), g(host)) {
            bad.push(format!("G4 is not a subgraph of {host}"));
        }
    }
    if !contains_subgraph(g("G2"), g("G3")) {
        bad.push("G3 does not contain G2".into());
    }
    if !(0..g("G2").n()).any(|v| g("G2").degree(v) == 2) {
        bad.push("G2 has no degree-2 vertex".into());
    }
    for name in &beineke {
        let h = g(name);
        if !h.is_connected() || is_line_graph_any(h) {
            bad.push(format!("{name} is a line graph or disconnected"));
        } else if let Some(v) = (0..h.n()).find(|&v| !is_line_graph_any(&h.induced_subgraph(h.vertices().without(v)))) {
            bad.push(format!("{name} is not minimal: deleting vertex {v} leaves a non-line graph"));
        }
    }
    for (i, a) in beineke.iter().enumerate() {
        for b in &beineke[i + 1..] {
            if is_isomorphic(g(a), g(b)) {
                bad.push(format!("{a} and {b} are isomorphic"));
            }
        }
    }
    // The H graphs: connected non-line graphs free of G1-G7, none of them
    // G8 or G9; H1 is the one that still contains G8.
    let small: Vec<&Graph> = beineke[..7].iter().map(|n| g(n)).collect();
    let hs = ["H1", "H2", "H3"];
    for name in hs {
        let h = g(name);
        if !h.is_connected() || is_line_graph_any(h) {
            bad.push(format!("{name} is a line graph or disconnected"));
        }
        if let Some(i) = small.iter().position(|p| contains_induced(p, h)) {
            bad.push(format!("{name} contains G{}", i + 1));
        }
        for other in ["G8", "G9"] {
            if is_isomorphic(h, g(other)) {
                bad.push(format!("{name} is isomorphic to {other}"));
            }
        }
    }
    if is_isomorphic(g("H2"), g("H3")) || is_isomorphic(g("H1"), g("H2")) || is_isomorphic(g("H1"), g("H3")) {
        bad.push("H graphs are not pairwise distinct".into());
    }
    if !contains_induced(g("G8"), g("H1")) {
        bad.push("H1 does not contain G8".into());
    }
    // Constructed entries must recompute from their expressions.
    let recompute = |name: &str| -> Option<Graph> {
        match name {
            "E1" => line_graph(&claw_plus_edge()).ok(),
            "E2" => line_graph(g("E1")).ok(),
            "E3" => line_graph(&Graph::complete(4)).ok(),
            "F1" => line_graph(g("G4")).ok(),
            "F2" => line_graph(g("G2")).ok(),
            lg if lg.starts_with("LG") => line_graph(g(&lg[1..])).ok(),
            _ => None,
        }
    };
    for e in entries {
        if let Source::Constructed(_) = e.source {
            if e.name == "G1" {
                continue;
            }
            if recompute(&e.name).as_ref() != Some(&e.graph) {
                bad.push(format!("{} does not match its expression", e.name));
            }
        }
    }
    if !is_isomorphic(g("E1"), &e1()) || !is_isomorphic(g("E2"), &e2()) || !is_isomorphic(g("E3"), &e3()) {
        bad.push("E chain inconsistent".into());
    }
    bad
}

pub fn validate_catalog() -> Vec<String> {
    validate_entries(catalog())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn fixture() -> Vec<(String, Graph)> {
        parse_fixture(FIXTURE).unwrap()
    }

    fn swapped(a: &str, b: &str) -> Vec<(String, Graph)> {
        fixture()
            .into_iter()
            .map(|(n, g)| {
                let n = if n == a { b.to_string() } else if n == b { a.to_string() } else { n };
                (n, g)
            })
            .collect()
    }

    #[test]
    fn committed_catalog_is_valid() {
        assert_eq!(validate_catalog(), Vec::<String>::new());
        assert_eq!(catalog().len(), 12 + 3 + 2 + 6);
    }

    #[test]
    fn named_entries() {
        assert!(is_isomorphic(pattern("G1").unwrap(), &Graph::star(3)));
        let e1 = pattern("E1").unwrap();
        assert_eq!((e1.n(), e1.edge_count()), (4, 5));
        let e3 = pattern("E3").unwrap();
        assert!(e3.n() == 6 && (0..6).all(|v| e3.degree(v) == 4));
        assert!(matches!(pattern("G10"), Err(Error::UnknownPattern(_))));
    }

    #[test]
    fn swapping_entries_is_caught() {
        for (a, b) in [("G3", "G5"), ("G5", "G8"), ("G6", "G9"), ("G2", "G4")] {
            let entries = build_catalog(&swapped(a, b)).unwrap();
            assert!(!validate_entries(&entries).is_empty(), "{a}<->{b}");
        }
    }

    #[test]
    fn wrong_claw_is_caught() {
        let mut entries = catalog().to_vec();
        entries[0].graph = Graph::path(4);
        assert!(validate_entries(&entries)
            .iter()
            .any(|v| v.contains("G1")));
    }

    #[test]
    fn missing_entry_is_reported() {
        let partial: Vec<_> = fixture().into_iter().filter(|(n, _)| n != "H2").collect();
        assert!(matches!(build_catalog(&partial), Err(Error::UnknownPattern(_))));
        let mut entries = catalog().to_vec();
        entries.retain(|e| e.name != "F2");
        assert_eq!(validate_entries(&entries), vec!["F2 missing".to_string()]);
    }

    #[test]
    fn fixture_lines_must_be_pairs() {
        assert!(parse_fixture("G2").is_err());
        assert!(parse_fixture("# only a comment\n\n").unwrap().is_empty());
    }

    #[test]
    fn emitted_catalog_reparses() {
        let back = parse_fixture(&emit_catalog()).unwrap();
        assert_eq!(back.len(), catalog().len());
        for ((n, g), e) in back.iter().zip(catalog()) {
            assert_eq!((n, g), (&e.name, &e.graph));
        }
    }
}

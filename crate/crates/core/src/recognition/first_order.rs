//! Tests for being a line graph at all.

use serde::Serialize;

use super::{excluded_as, first_forbidden, line_certificate, require_connected, Certificate, Verdict};
use crate::error::{Error, Result};
use crate::graph::{is_isomorphic, Graph};
use crate::lineops::{enumerate_triangles, first_krausz_partition, TriangleRecord};
use crate::patterns::{e1, e2, e3};

const BEINEKE: [&str; 9] = ["G1", "G2", "G3", "G4", "G5", "G6", "G7", "G8", "G9"];

/// No induced copy of any of G1–G9.
pub fn beineke_test(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    Ok(match first_forbidden(g, &BEINEKE) {
        Some(w) => Verdict::no(w),
        None => Verdict::yes(line_certificate(g)),
    })
}

/// The five equivalent statements, each evaluated as written.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SoltesVariant {
    /// `g` is a line graph (partition search).
    A,
    /// No induced G1–G9.
    B,
    /// No induced G1–G8, and `g` is not G9.
    C,
    /// No induced G1–G7 or G9, and `g` is neither G8 nor H1.
    D,
    /// No induced G1–G7, and `g` is none of G8, G9, H1, H2, H3.
    E,
}

impl SoltesVariant {
    pub const ALL: [SoltesVariant; 5] = [Self::A, Self::B, Self::C, Self::D, Self::E];

    pub fn parse(s: &str) -> Option<Self> {
        Some(match s.to_ascii_lowercase().as_str() {
            "a" => Self::A,
            "b" => Self::B,
            "c" => Self::C,
            "d" => Self::D,
            "e" => Self::E,
            _ => return None,
        })
    }
}

pub fn soltes_test(g: &Graph, variant: SoltesVariant) -> Result<Verdict> {
    require_connected(g)?;
    let (forbidden, whole): (&[&str], &[&str]) = match variant {
        SoltesVariant::A => {
            return Ok(match first_krausz_partition(g)? {
                Some(p) => Verdict::yes(Certificate::Partition(p)),
                None => Verdict::no(Certificate::NoPartition),
            })
        }
        SoltesVariant::B => (&BEINEKE, &[]),
        SoltesVariant::C => (&BEINEKE[..8], &["G9"]),
        SoltesVariant::D => (&["G1", "G2", "G3", "G4", "G5", "G6", "G7", "G9"], &["G8", "H1"]),
        SoltesVariant::E => (&BEINEKE[..7], &["G8", "G9", "H1", "H2", "H3"]),
    };
    if let Some(w) = first_forbidden(g, forbidden) {
        return Ok(Verdict::no(w));
    }
    if let Some(name) = excluded_as(g, whole) {
        return Ok(Verdict::no(Certificate::ExclusionName(name.to_string())));
    }
    Ok(Verdict::yes(line_certificate(g)))
}

/// Claw-free, and two odd triangles sharing an edge always span a `K4`.
pub fn van_rooij_test(g: &Graph) -> Result<Verdict> {
    require_connected(g)?;
    if let Some(w) = first_forbidden(g, &["G1"]) {
        return Ok(Verdict::no(w));
    }
    let odd: Vec<TriangleRecord> = enumerate_triangles(g).into_iter().filter(|t| t.is_odd()).collect();
    for (i, s) in odd.iter().enumerate() {
        for t in &odd[i + 1..] {
            if s.vertices.intersection(t.vertices).len() != 2 {
                continue;
            }
            let ends = s.vertices.union(t.vertices).difference(s.vertices.intersection(t.vertices)).to_vec();
            if !g.has_edge(ends[0], ends[1]) {
                return Ok(Verdict::no(Certificate::TriangleWitness {
                    triangles: vec![*s, *t],
                    reason: "odd triangles share an edge but their far corners are not adjacent".into(),
                }));
            }
        }
    }
    Ok(Verdict::yes(line_certificate(g)))
}

/// Which exceptional graph holds a pair of even triangles sharing an edge.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum EvenPairClass {
    E1,
    E2,
    E3,
    /// A pair exists but the graph is none of the three: a counterexample.
    Other,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EvenPair {
    pub class: EvenPairClass,
    pub triangles: [TriangleRecord; 2],
}

/// The first pair of even triangles sharing an edge, and which exceptional
/// graph `g` is; `None` if no such pair exists.
pub fn even_pair_classify(g: &Graph) -> Result<Option<EvenPair>> {
    require_connected(g)?;
    if first_krausz_partition(g)?.is_none() {
        return Err(Error::NotLineGraph);
    }
    let even: Vec<TriangleRecord> = enumerate_triangles(g).into_iter().filter(|t| !t.is_odd()).collect();
    for (i, s) in even.iter().enumerate() {
        if let Some(t) = even[i + 1..].iter().find(|t| s.vertices.intersection(t.vertices).len() == 2) {
            let class = [(EvenPairClass::E1, e1()), (EvenPairClass::E2, e2()), (EvenPairClass::E3, e3())]
                .into_iter()
                .find(|(_, h)| is_isomorphic(g, h))
                .map_or(EvenPairClass::Other, |(c, _)| c);
            return Ok(Some(EvenPair {
                class,
                triangles: [*s, *t],
            }));
        }
    }
    Ok(None)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::patterns::pattern;

    #[test]
    fn claw_and_friends() {
        let v = beineke_test(&Graph::star(3)).unwrap();
        assert!(v.is_no() && v.verify(&Graph::star(3)));
        assert!(matches!(&v.certificate, Certificate::ForbiddenWitness { pattern, .. } if pattern == "G1"));
        assert!(beineke_test(&Graph::cycle(5)).unwrap().is_yes());
        let e2 = e2();
        let v = beineke_test(&e2).unwrap();
        assert!(v.is_yes() && v.verify(&e2));
    }

    #[test]
    fn soltes_on_g9_and_h1() {
        let g9 = pattern("G9").unwrap();
        for variant in SoltesVariant::ALL {
            let v = soltes_test(g9, variant).unwrap();
            assert!(v.is_no() && v.verify(g9), "{variant:?}");
        }
        let h1 = pattern("H1").unwrap();
        assert!(soltes_test(h1, SoltesVariant::D).unwrap().is_no());
        assert!(soltes_test(h1, SoltesVariant::E).unwrap().is_no());
    }

    #[test]
    fn van_rooij_odd_pair() {
        // K4 - e on 0..4 (tips 0, 3) plus vertex 4 joined only to 1.
        let g = Graph::from_edges(5, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3), (1, 4)]).unwrap();
        // Vertex 1 also centres a claw, which is what gets reported.
        let v = van_rooij_test(&g).unwrap();
        assert!(v.is_no() && v.verify(&g));
        assert!(beineke_test(&g).unwrap().is_no());
        // K5 - e is claw-free; its odd triangles fail the K4 condition.
        let g3 = pattern("G3").unwrap();
        let v = van_rooij_test(g3).unwrap();
        assert!(v.is_no() && v.verify(g3));
        assert!(matches!(v.certificate, Certificate::TriangleWitness { .. }));
        assert!(van_rooij_test(&Graph::star(3)).unwrap().is_no());
    }

    #[test]
    fn even_pairs() {
        let got = even_pair_classify(&e1()).unwrap().unwrap();
        assert_eq!(got.class, EvenPairClass::E1);
        assert_eq!(even_pair_classify(&Graph::cycle(6)).unwrap(), None);
        assert_eq!(even_pair_classify(&Graph::star(3)), Err(Error::NotLineGraph));
    }

    #[test]
    fn disconnected_rejected() {
        let g = Graph::empty(2).unwrap();
        assert_eq!(beineke_test(&g), Err(Error::NotConnected));
        assert_eq!(soltes_test(&g, SoltesVariant::C), Err(Error::NotConnected));
    }
}

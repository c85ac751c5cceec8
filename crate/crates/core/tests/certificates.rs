//! Every verdict over the small corpus carries a certificate that
//! re-verifies, and certificates moved to the wrong graph are caught.

use linegraph_core::exec::Execution;
use linegraph_core::graph::{connected_graphs_by_order, Graph};
use linegraph_core::recognition::{
    beineke_test, higher_order_sufficient, second_order_sufficient, second_order_test, soltes_test,
    third_order_necessary, van_rooij_test, Certificate, SecondOrderMode, SoltesVariant, Verdict,
};
use linegraph_core::Result;

fn corpus() -> Vec<Graph> {
    connected_graphs_by_order(7, None, Execution::default())
        .unwrap()
        .into_iter()
        .flatten()
        .collect()
}

fn all_verdicts(g: &Graph) -> Vec<(String, Result<Verdict>)> {
    let mut out = vec![
        ("beineke".to_string(), beineke_test(g)),
        ("van_rooij".to_string(), van_rooij_test(g)),
        ("literal".to_string(), second_order_test(g, SecondOrderMode::Literal)),
        ("repaired".to_string(), second_order_test(g, SecondOrderMode::Repaired)),
        ("sufficient".to_string(), second_order_sufficient(g)),
        ("third".to_string(), third_order_necessary(g)),
    ];
    for v in SoltesVariant::ALL {
        out.push((format!("{v:?}"), soltes_test(g, v)));
    }
    for n in 2..=4 {
        out.push((format!("higher {n}"), higher_order_sufficient(g, n)));
    }
    out
}

#[test]
fn certificates_reverify() {
    for g in corpus() {
        for (name, v) in all_verdicts(&g) {
            let v = v.unwrap();
            assert!(v.verify(&g), "{name} on {g}: {:?}", v.certificate);
        }
    }
}

#[test]
fn certificates_do_not_transfer() {
    // A claw witness does not fit a cycle, a cycle's partition does not fit
    // a claw.
    let claw = Graph::star(3);
    let c5 = Graph::cycle(5);
    let no = beineke_test(&claw).unwrap();
    assert!(no.is_no() && !no.verify(&c5));
    let yes = beineke_test(&c5).unwrap();
    assert!(matches!(yes.certificate, Certificate::Partition(_)));
    assert!(!yes.verify(&claw));
    let chain = higher_order_sufficient(&c5, 3).unwrap();
    assert!(chain.is_yes() && !chain.verify(&Graph::cycle(6)));
}

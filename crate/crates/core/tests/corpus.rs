use std::collections::BTreeMap;

use leakyforce::format::{emit_graph6, parse_corpus};
use leakyforce::verify::run_theorem_suite;
use leakyforce::Family;

const CORPUS: &str = include_str!("../fixtures/connected_upto6.g6");

#[test]
fn corpus_counts() {
    let graphs = parse_corpus(CORPUS).unwrap();
    let mut by_order: BTreeMap<usize, usize> = BTreeMap::new();
    for g in &graphs {
        assert!(g.is_connected());
        *by_order.entry(g.n()).or_default() += 1;
    }
    // connected graphs up to isomorphism
    assert_eq!(
        by_order,
        BTreeMap::from([(1, 1), (2, 1), (3, 2), (4, 6), (5, 21), (6, 112)])
    );
}

#[test]
fn corpus_words_are_canonical_emissions() {
    for line in CORPUS.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()) {
        let g = parse_corpus(line).unwrap().pop().unwrap();
        assert_eq!(emit_graph6(&g).unwrap(), line.trim());
    }
}

#[test]
fn family_words() {
    assert_eq!(emit_graph6(&Family::Paw.build().unwrap()).unwrap(), "C{");
    assert_eq!(
        emit_graph6(&Family::CompleteTimesK2(3).build().unwrap()).unwrap(),
        "E{Sw"
    );
    assert_eq!(emit_graph6(&Family::Path(3).build().unwrap()).unwrap(), "Bg");
    assert_eq!(emit_graph6(&Family::Complete(3).build().unwrap()).unwrap(), "Bw");
}

#[test]
fn suite_on_small_orders() {
    let graphs: Vec<_> = parse_corpus(CORPUS)
        .unwrap()
        .into_iter()
        .filter(|g| g.n() <= 4)
        .collect();
    let report = run_theorem_suite(&graphs, 2);
    assert_eq!(report.graphs, 10);
    assert_eq!(report.totals.violations, 0, "{:#?}", report.violations);
    assert!(report.resource_errors.is_empty());
}

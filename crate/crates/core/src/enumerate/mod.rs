//! Exhaustive enumeration of small connected graphs up to isomorphism, and
//! the harnesses built on it: definitional-versus-structural cross
//! validation, the verdict census and the hypergraph search.
//!
//! Connected graphs on `n` vertices are grown from the connected graphs on
//! `n - 1` vertices by attaching a new vertex to a nonempty neighbor set.
//! Every connected graph has a vertex whose removal keeps it connected, so
//! this reaches every isomorphism class; duplicates are merged by canonical
//! form. Results come back in canonical-code order regardless of how many
//! worker threads took part.

pub mod canon;
pub mod graph6;
pub mod hypergraph;

use std::collections::BTreeSet;

use itertools::Itertools;
use rayon::prelude::*;
use serde::Serialize;

pub use canon::CanonicalGraph;
pub use hypergraph::{coned_pair, hypergraph_nci_search, HypergraphSearchParams};

use crate::classify::{classify, is_nci_definitional, Verdict};
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

fn check_order(n: usize) -> Result<()> {
    if (1..=canon::MAX_ORDER).contains(&n) {
        Ok(())
    } else {
        Err(Error::OutOfRange {
            what: "vertex count",
            min: 1,
            max: canon::MAX_ORDER,
            actual: n,
        })
    }
}

/// Canonical forms of all connected graphs on `n` vertices, sorted.
///
/// Exhaustiveness is checked in the test suite up to 7 vertices; `n = 8`
/// works but takes minutes.
pub fn connected_canonical_forms(n: usize) -> Result<Vec<CanonicalGraph>> {
    check_order(n)?;
    let mut layer = vec![CanonicalGraph { n: 1, bits: 0 }];
    for k in 2..=n {
        let candidates: BTreeSet<(usize, Vec<(usize, usize)>)> = layer
            .iter()
            .flat_map(|parent| {
                let base = parent.edge_pairs();
                (1u32..1 << (k - 1)).map(move |nbrs| {
                    let mut edges = base.clone();
                    edges.extend((0..k - 1).filter(|&i| nbrs >> i & 1 == 1).map(|i| (i, k - 1)));
                    (k, edges)
                })
            })
            .collect();
        let forms: BTreeSet<CanonicalGraph> = candidates
            .into_par_iter()
            .map(|(k, edges)| CanonicalGraph::from_edges(k, &edges).expect("k <= MAX_ORDER"))
            .collect();
        layer = forms.into_iter().collect();
    }
    Ok(layer)
}

/// One representative per isomorphism class of connected graphs on `n`
/// vertices, named `v1..vn`, in canonical-code order.
pub fn generate_connected_graphs(n: usize) -> Result<Vec<Graph>> {
    Ok(connected_canonical_forms(n)?
        .iter()
        .map(CanonicalGraph::to_graph)
        .collect())
}

/// Canonical forms reached by canonicalizing every connected labeled graph on
/// `n` vertices. Independent of the growth procedure; used to check it.
pub fn labeled_connected_canonical_forms(n: usize) -> Result<BTreeSet<CanonicalGraph>> {
    check_order(n)?;
    let pairs: Vec<(usize, usize)> = (0..n).tuple_combinations().collect();
    let forms = (0u64..1 << pairs.len())
        .into_par_iter()
        .filter_map(|mask| {
            let edges: Vec<(usize, usize)> = pairs
                .iter()
                .enumerate()
                .filter(|(k, _)| mask >> k & 1 == 1)
                .map(|(_, &p)| p)
                .collect();
            canon::code_is_connected(n, &edges)
                .then(|| CanonicalGraph::from_edges(n, &edges).expect("n checked"))
        })
        .collect::<BTreeSet<_>>();
    Ok(forms)
}

/// A graph on which the two deciders disagree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Mismatch {
    pub graph6: String,
    pub edges: Vec<(VertexId, VertexId)>,
    pub definitional: Verdict,
    pub structural: Verdict,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CrossValidation {
    pub checked: usize,
    pub mismatches: Vec<Mismatch>,
}

fn edge_list(g: &Graph) -> Vec<(VertexId, VertexId)> {
    g.edges()
        .iter()
        .map(|e| {
            let (a, b) = e.endpoints();
            (a.clone(), b.clone())
        })
        .collect()
}

/// Runs both deciders on every connected graph with `n` vertices.
pub fn cross_validate(n: usize) -> Result<CrossValidation> {
    let graphs = generate_connected_graphs(n)?;
    Ok(cross_validate_graphs(&graphs))
}

/// Runs both deciders on the given graphs, reporting disagreements in input
/// order.
pub fn cross_validate_graphs(graphs: &[Graph]) -> CrossValidation {
    let mismatches = graphs
        .par_iter()
        .filter_map(|g| {
            let definitional = is_nci_definitional(g).verdict;
            let structural = classify(g).verdict;
            (definitional != structural).then(|| Mismatch {
                graph6: graph6::encode(g),
                edges: edge_list(g),
                definitional,
                structural,
            })
        })
        .collect();
    CrossValidation {
        checked: graphs.len(),
        mismatches,
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CensusRow {
    pub n: usize,
    pub connected_count: usize,
    pub nci_count: usize,
    pub neither_count: usize,
    pub ci_count: usize,
}

/// Verdict counts over connected isomorphism classes for `n = 1..=n_max`,
/// using the structural classifier.
pub fn nci_census(n_max: usize) -> Result<Vec<CensusRow>> {
    check_order(n_max)?;
    (1..=n_max)
        .map(|n| {
            let verdicts: Vec<Verdict> = generate_connected_graphs(n)?
                .par_iter()
                .map(|g| classify(g).verdict)
                .collect();
            let count = |v: Verdict| verdicts.iter().filter(|&&x| x == v).count();
            Ok(CensusRow {
                n,
                connected_count: verdicts.len(),
                nci_count: count(Verdict::NCI),
                neither_count: count(Verdict::NEITHER),
                ci_count: count(Verdict::CI),
            })
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn class_counts() {
        let counts: Vec<usize> = (1..=6)
            .map(|n| connected_canonical_forms(n).unwrap().len())
            .collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn growth_matches_labeled_recount() {
        for n in 1..=5 {
            let grown: BTreeSet<_> = connected_canonical_forms(n).unwrap().into_iter().collect();
            assert_eq!(grown, labeled_connected_canonical_forms(n).unwrap(), "n = {n}");
        }
    }

    #[test]
    fn representatives_are_connected_and_distinct() {
        let graphs = generate_connected_graphs(5).unwrap();
        let forms: BTreeSet<_> = graphs.iter().map(|g| CanonicalGraph::of(g).unwrap()).collect();
        assert_eq!(forms.len(), graphs.len());
        assert!(graphs.iter().all(Graph::is_connected));
        let names: Vec<&str> = graphs[0].vertices().iter().map(VertexId::as_str).collect();
        assert_eq!(names, ["v1", "v2", "v3", "v4", "v5"]);
    }

    #[test]
    fn order_bounds() {
        assert!(generate_connected_graphs(0).is_err());
        assert!(generate_connected_graphs(9).is_err());
        assert!(nci_census(9).is_err());
        assert_eq!(generate_connected_graphs(1).unwrap().len(), 1);
    }

    #[test]
    fn small_census() {
        let rows = nci_census(4).unwrap();
        assert_eq!(
            rows[1],
            CensusRow { n: 2, connected_count: 1, nci_count: 0, neither_count: 0, ci_count: 1 }
        );
        assert_eq!((rows[2].connected_count, rows[2].nci_count), (2, 2));
        assert_eq!((rows[3].connected_count, rows[3].nci_count), (6, 6));
        for r in rows {
            assert_eq!(r.connected_count, r.nci_count + r.neither_count + r.ci_count);
        }
    }

    #[test]
    fn cross_validation_json() {
        let cv = cross_validate(5).unwrap();
        assert_eq!(
            serde_json::to_string(&cv).unwrap(),
            r#"{"checked":21,"mismatches":[]}"#
        );
    }
}

//! Deciding whether a graph is a nearly complete intersection.
//!
//! Two independent deciders live here. [`is_nci_definitional`] inverts every
//! vertex and tests each result for being a complete intersection.
//! [`classify`] never inverts anything: it dispatches on connectivity and
//! size, and for five or more vertices looks for an [`Obstruction`], a
//! five-vertex induced subgraph with a leaf whose spanning tree is a path or
//! the tree `T` with the leaf's neighbor at tree-degree two.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::ideal::{graph_of, MonomialIdeal, NciStatus};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum Verdict {
    CI,
    NCI,
    NEITHER,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Method {
    Definitional,
    Structural,
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Method::Definitional => "definitional",
            Method::Structural => "structural",
        })
    }
}

/// Shape of the spanning tree in an obstruction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TreeType {
    /// Degree multiset {1,1,2,2,2}.
    P5,
    /// Degree multiset {1,1,1,2,3}.
    T,
}

/// A five-vertex witness that a connected graph is not an NCI.
///
/// `vertices[0]` is a leaf of the induced subgraph, `vertices[1]` its unique
/// neighbor. For a path the vertices are listed in path order; for `T` the
/// branch vertex comes third, followed by its two leaves.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Obstruction {
    pub vertices: Vec<VertexId>,
    pub tree_type: TreeType,
    pub tree_edges: BTreeSet<Edge>,
}

impl Obstruction {
    /// Checks every witness condition against `g` from scratch.
    pub fn is_valid_for(&self, g: &Graph) -> bool {
        if self.vertices.len() != 5 || self.tree_edges.len() != 4 {
            return false;
        }
        let set: BTreeSet<&VertexId> = self.vertices.iter().collect();
        if set.len() != 5 || !set.iter().all(|v| g.contains_vertex(v)) {
            return false;
        }
        let Ok(h) = g.induced_subgraph(set.iter().copied()) else {
            return false;
        };
        let v1 = &self.vertices[0];
        if h.degree(v1) != Ok(1) || !self.tree_edges.is_subset(h.edges()) {
            return false;
        }
        let index: BTreeMap<&VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let spans = crate::graph::is_forest(
            5,
            self.tree_edges.iter().map(|e| {
                let (a, b) = e.endpoints();
                (index[a], index[b])
            }),
        );
        if !spans {
            return false;
        }
        let deg = tree_degrees(&self.tree_edges);
        let tree_nbrs: Vec<&VertexId> =
            self.tree_edges.iter().filter_map(|e| e.other(v1)).collect();
        if deg[v1] != 1 || tree_nbrs.len() != 1 || deg[tree_nbrs[0]] != 2 {
            return false;
        }
        let mut multiset: Vec<usize> = deg.values().copied().collect();
        multiset.sort_unstable();
        match self.tree_type {
            TreeType::P5 => multiset == [1, 1, 2, 2, 2],
            TreeType::T => multiset == [1, 1, 1, 2, 3],
        }
    }
}

fn tree_degrees(tree: &BTreeSet<Edge>) -> BTreeMap<&VertexId, usize> {
    let mut deg = BTreeMap::new();
    for e in tree {
        let (a, b) = e.endpoints();
        *deg.entry(a).or_insert(0) += 1;
        *deg.entry(b).or_insert(0) += 1;
    }
    deg
}

/// Supporting evidence attached to a verdict.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(untagged)]
pub enum Evidence {
    FailingVertex { failing_vertex: VertexId },
    Obstruction(Obstruction),
    Rule { rule: String },
}

impl Evidence {
    fn rule(tag: &str) -> Self {
        Evidence::Rule {
            rule: tag.to_owned(),
        }
    }
}

/// Rule tags used by the structural classifier.
pub mod rules {
    pub const COMPLETE_INTERSECTION: &str = "complete-intersection";
    pub const DISCONNECTED: &str = "disconnected";
    pub const AT_MOST_TWO_VERTICES: &str = "at-most-two-vertices";
    pub const THREE_OR_FOUR_VERTICES: &str = "three-or-four-vertices";
    pub const NO_OBSTRUCTION: &str = "no-obstruction";
    pub const LOW_DEGREE_GENERATOR: &str = "generator-of-degree-below-two";
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ClassificationReport {
    pub verdict: Verdict,
    pub method: Method,
    pub evidence: Option<Evidence>,
}

impl ClassificationReport {
    pub fn is_nci(&self) -> bool {
        self.verdict == Verdict::NCI
    }

    pub fn obstruction(&self) -> Option<&Obstruction> {
        match &self.evidence {
            Some(Evidence::Obstruction(o)) => Some(o),
            _ => None,
        }
    }
}

/// Decides NCI by inverting every vertex. The first vertex (in name order)
/// whose inversion is not a complete intersection is reported.
pub fn is_nci_definitional(g: &Graph) -> ClassificationReport {
    let report = |verdict, evidence| ClassificationReport {
        verdict,
        method: Method::Definitional,
        evidence,
    };
    if g.is_ci_graph() {
        return report(Verdict::CI, None);
    }
    for v in g.vertices() {
        let inverted = g.invert_vertex(v).expect("vertex of g");
        if !inverted.is_ci_graph() {
            return report(
                Verdict::NEITHER,
                Some(Evidence::FailingVertex {
                    failing_vertex: v.clone(),
                }),
            );
        }
    }
    report(Verdict::NCI, None)
}

/// Looks for a qualifying spanning tree of the five-vertex graph `h` with
/// `leaf` as `v1`: a path or `T` in which the leaf's neighbor has degree two.
/// Returns the first in spanning-tree enumeration order.
pub fn qualifying_tree(h: &Graph, leaf: &VertexId) -> Option<Obstruction> {
    if h.vertex_count() != 5 || h.degree(leaf).ok()? != 1 {
        return None;
    }
    let v2 = h.neighbors(leaf).ok()?.pop_first()?;
    for tree in h.spanning_trees().ok()? {
        let deg = tree_degrees(&tree);
        if deg[&v2] != 2 {
            continue;
        }
        let tree_type = match deg.values().max() {
            Some(2) => TreeType::P5,
            Some(3) => TreeType::T,
            _ => continue,
        };
        let vertices = order_witness(&tree, leaf, &v2, tree_type);
        return Some(Obstruction {
            vertices,
            tree_type,
            tree_edges: tree,
        });
    }
    None
}

/// Whether `h` has any spanning tree in which `v2` has degree two. With `v2`
/// the neighbor of a leaf of a five-vertex `h`, this is equivalent to
/// [`qualifying_tree`] succeeding: the only five-vertex tree shape it rules
/// out is the star.
pub fn has_spanning_tree_with_degree_two_at(h: &Graph, v2: &VertexId) -> bool {
    h.spanning_trees()
        .map(|trees| {
            trees
                .iter()
                .any(|t| t.iter().filter(|e| e.contains(v2)).count() == 2)
        })
        .unwrap_or(false)
}

fn order_witness(
    tree: &BTreeSet<Edge>,
    v1: &VertexId,
    v2: &VertexId,
    tree_type: TreeType,
) -> Vec<VertexId> {
    let step = |prev: &VertexId, cur: &VertexId| -> Vec<VertexId> {
        let mut next: Vec<VertexId> = tree
            .iter()
            .filter_map(|e| e.other(cur))
            .filter(|w| *w != prev)
            .cloned()
            .collect();
        next.sort();
        next
    };
    let mut order = vec![v1.clone(), v2.clone()];
    let v3 = step(v1, v2).pop().expect("v2 has tree degree two");
    order.push(v3.clone());
    match tree_type {
        TreeType::P5 => {
            let v4 = step(v2, &v3).pop().expect("path continues");
            let v5 = step(&v3, &v4).pop().expect("path continues");
            order.extend([v4, v5]);
        }
        TreeType::T => order.extend(step(v2, &v3)),
    }
    order
}

/// Scans five-vertex subsets in lexicographic order of sorted names and
/// returns the first witness found.
pub fn find_obstruction(g: &Graph) -> Result<Option<Obstruction>> {
    if g.vertex_count() < 5 {
        return Err(Error::TooFewVertices {
            needed: 5,
            actual: g.vertex_count(),
        });
    }
    for subset in g.vertices().iter().combinations(5) {
        let h = g.induced_subgraph(subset.iter().copied())?;
        if !h.is_connected() {
            continue;
        }
        for v1 in &subset {
            if let Some(o) = qualifying_tree(&h, v1) {
                return Ok(Some(o));
            }
        }
    }
    Ok(None)
}

/// Structural classification without computing any inversion.
pub fn classify(g: &Graph) -> ClassificationReport {
    let report = |verdict, tag: &str| ClassificationReport {
        verdict,
        method: Method::Structural,
        evidence: Some(Evidence::rule(tag)),
    };
    if g.is_ci_graph() {
        return report(Verdict::CI, rules::COMPLETE_INTERSECTION);
    }
    if !g.is_connected() {
        return report(Verdict::NEITHER, rules::DISCONNECTED);
    }
    match g.vertex_count() {
        // Unreachable after the CI test; a connected graph this small is a
        // vertex or an edge.
        0..=2 => report(Verdict::CI, rules::AT_MOST_TWO_VERTICES),
        3 | 4 => report(Verdict::NCI, rules::THREE_OR_FOUR_VERTICES),
        _ => match find_obstruction(g).expect("at least five vertices") {
            Some(o) => ClassificationReport {
                verdict: Verdict::NEITHER,
                method: Method::Structural,
                evidence: Some(Evidence::Obstruction(o)),
            },
            None => report(Verdict::NCI, rules::NO_OBSTRUCTION),
        },
    }
}

/// Classifies an arbitrary squarefree ideal. Ideals generated in degrees one
/// and two go through their graph; anything else is checked against the
/// definition directly, reporting the failing variable as the failing vertex.
pub fn classify_ideal(ideal: &MonomialIdeal, method: Method) -> Result<ClassificationReport> {
    if ideal.universe() == &ideal.support() {
        if let Ok(g) = graph_of(ideal) {
            return Ok(match method {
                Method::Structural => classify(&g),
                Method::Definitional => is_nci_definitional(&g),
            });
        }
    }
    let report = |verdict, evidence| ClassificationReport {
        verdict,
        method: Method::Definitional,
        evidence,
    };
    if ideal.is_complete_intersection() {
        ideal.nci_status()?;
        return Ok(report(Verdict::CI, None));
    }
    Ok(match ideal.nci_status()? {
        NciStatus::Nci => report(Verdict::NCI, None),
        NciStatus::CompleteIntersection => report(Verdict::CI, None),
        NciStatus::LowDegreeGenerator(_) => report(
            Verdict::NEITHER,
            Some(Evidence::rule(rules::LOW_DEGREE_GENERATOR)),
        ),
        NciStatus::FailingVariable(x) => report(
            Verdict::NEITHER,
            Some(Evidence::FailingVertex {
                failing_vertex: VertexId::from(&x),
            }),
        ),
    })
}

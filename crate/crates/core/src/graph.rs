//! Finite simple graphs with named vertices.
//!
//! Isolated vertices are first-class members of the vertex set. They matter:
//! the edge ideal of a graph carries a linear generator for every isolated
//! vertex, and inversion leaves the neighbors of the inverted vertex behind as
//! isolated vertices.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;
use std::str::FromStr;

use itertools::Itertools;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest graph [`Graph::spanning_trees`] accepts.
pub const SPANNING_TREE_VERTEX_CAP: usize = 8;

/// A vertex name: a nonempty token of ASCII alphanumerics and underscores.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(try_from = "String", into = "String")]
pub struct VertexId(String);

impl VertexId {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_token(&name) {
            Ok(VertexId(name))
        } else {
            Err(Error::InvalidName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

pub(crate) fn is_token(s: &str) -> bool {
    !s.is_empty() && s.chars().all(|c| c.is_ascii_alphanumeric() || c == '_')
}

impl FromStr for VertexId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

impl TryFrom<String> for VertexId {
    type Error = Error;

    fn try_from(s: String) -> Result<Self> {
        VertexId::new(s)
    }
}

impl TryFrom<&str> for VertexId {
    type Error = Error;

    fn try_from(s: &str) -> Result<Self> {
        VertexId::new(s)
    }
}

impl From<VertexId> for String {
    fn from(v: VertexId) -> String {
        v.0
    }
}

impl fmt::Display for VertexId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

/// An unordered pair of distinct vertices, stored with the smaller name first.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge(VertexId, VertexId);

impl Edge {
    pub fn new(u: VertexId, v: VertexId) -> Result<Self> {
        match u.cmp(&v) {
            std::cmp::Ordering::Less => Ok(Edge(u, v)),
            std::cmp::Ordering::Greater => Ok(Edge(v, u)),
            std::cmp::Ordering::Equal => Err(Error::Loop(u.0)),
        }
    }

    pub fn endpoints(&self) -> (&VertexId, &VertexId) {
        (&self.0, &self.1)
    }

    pub fn contains(&self, v: &VertexId) -> bool {
        &self.0 == v || &self.1 == v
    }

    /// The endpoint opposite `v`, if `v` is an endpoint.
    pub fn other(&self, v: &VertexId) -> Option<&VertexId> {
        if &self.0 == v {
            Some(&self.1)
        } else if &self.1 == v {
            Some(&self.0)
        } else {
            None
        }
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.0, self.1)
    }
}

impl Serialize for Edge {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        (&self.0, &self.1).serialize(s)
    }
}

/// A finite simple graph. Equality is labeled equality: same vertex names,
/// same edges.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: BTreeSet<VertexId>,
    edges: BTreeSet<Edge>,
}

impl Graph {
    pub fn new() -> Self {
        Self::default()
    }

    /// Builds a graph from name pairs, declaring endpoints implicitly.
    ///
    /// ```
    /// use nci::Graph;
    /// let triangle = Graph::from_pairs([("a", "b"), ("a", "c"), ("b", "c")]).unwrap();
    /// assert_eq!(triangle.edge_count(), 3);
    /// ```
    pub fn from_pairs<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self> {
        let mut g = Graph::new();
        for (u, v) in pairs {
            g.add_edge(VertexId::new(u)?, VertexId::new(v)?)?;
        }
        Ok(g)
    }

    /// Builds a graph from explicit vertices and edges. Every edge endpoint
    /// must be listed among the vertices.
    pub fn from_parts(
        vertices: impl IntoIterator<Item = VertexId>,
        edges: impl IntoIterator<Item = Edge>,
    ) -> Result<Self> {
        let vertices: BTreeSet<VertexId> = vertices.into_iter().collect();
        let mut out = BTreeSet::new();
        for e in edges {
            for v in [&e.0, &e.1] {
                if !vertices.contains(v) {
                    return Err(Error::UnknownVertex(v.to_string()));
                }
            }
            if out.contains(&e) {
                return Err(Error::DuplicateEdge(e.0.to_string(), e.1.to_string()));
            }
            out.insert(e);
        }
        Ok(Graph {
            vertices,
            edges: out,
        })
    }

    /// Returns `true` if the vertex was not already present.
    pub fn add_vertex(&mut self, v: VertexId) -> bool {
        self.vertices.insert(v)
    }

    /// Adds an edge and both endpoints. Loops and repeated edges are errors.
    pub fn add_edge(&mut self, u: VertexId, v: VertexId) -> Result<()> {
        let e = Edge::new(u, v)?;
        if self.edges.contains(&e) {
            return Err(Error::DuplicateEdge(e.0.to_string(), e.1.to_string()));
        }
        self.vertices.insert(e.0.clone());
        self.vertices.insert(e.1.clone());
        self.edges.insert(e);
        Ok(())
    }

    pub fn vertices(&self) -> &BTreeSet<VertexId> {
        &self.vertices
    }

    pub fn edges(&self) -> &BTreeSet<Edge> {
        &self.edges
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn contains_vertex(&self, v: &VertexId) -> bool {
        self.vertices.contains(v)
    }

    pub fn has_edge(&self, u: &VertexId, v: &VertexId) -> bool {
        Edge::new(u.clone(), v.clone()).is_ok_and(|e| self.edges.contains(&e))
    }

    fn check_vertex(&self, v: &VertexId) -> Result<()> {
        if self.vertices.contains(v) {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.to_string()))
        }
    }

    /// The vertices sharing an edge with `v`.
    pub fn neighbors(&self, v: &VertexId) -> Result<BTreeSet<VertexId>> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter_map(|e| e.other(v)).cloned().collect())
    }

    pub fn degree(&self, v: &VertexId) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    pub fn degrees(&self) -> BTreeMap<&VertexId, usize> {
        let mut deg: BTreeMap<&VertexId, usize> = self.vertices.iter().map(|v| (v, 0)).collect();
        for e in &self.edges {
            *deg.get_mut(&e.0).expect("endpoint is a vertex") += 1;
            *deg.get_mut(&e.1).expect("endpoint is a vertex") += 1;
        }
        deg
    }

    pub fn isolated_vertices(&self) -> BTreeSet<VertexId> {
        self.degrees()
            .into_iter()
            .filter(|&(_, d)| d == 0)
            .map(|(v, _)| v.clone())
            .collect()
    }

    /// The subgraph on `subset` keeping every edge with both endpoints inside.
    pub fn induced_subgraph<'a>(
        &self,
        subset: impl IntoIterator<Item = &'a VertexId>,
    ) -> Result<Graph> {
        let mut vertices = BTreeSet::new();
        for v in subset {
            if !self.vertices.contains(v) {
                return Err(Error::NotASubset(v.to_string()));
            }
            vertices.insert(v.clone());
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| vertices.contains(&e.0) && vertices.contains(&e.1))
            .cloned()
            .collect();
        Ok(Graph { vertices, edges })
    }

    /// Inversion at `v`: drop `v`, keep every other vertex, and keep only the
    /// edges among vertices that are not neighbors of `v`.
    ///
    /// ```
    /// use nci::{Graph, VertexId};
    /// let p3 = Graph::from_pairs([("a", "b"), ("b", "c")]).unwrap();
    /// let inv = p3.invert_vertex(&VertexId::new("a").unwrap()).unwrap();
    /// assert_eq!(inv.vertex_count(), 2);
    /// assert_eq!(inv.edge_count(), 0);
    /// ```
    pub fn invert_vertex(&self, v: &VertexId) -> Result<Graph> {
        let nbrs = self.neighbors(v)?;
        let mut vertices = self.vertices.clone();
        vertices.remove(v);
        let edges = self
            .edges
            .iter()
            .filter(|e| !e.contains(v) && !nbrs.contains(&e.0) && !nbrs.contains(&e.1))
            .cloned()
            .collect();
        Ok(Graph { vertices, edges })
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_values().max().unwrap_or(0)
    }

    /// A graph is a complete intersection exactly when it is a disjoint union
    /// of edges and isolated vertices, i.e. no vertex has degree above one.
    pub fn is_ci_graph(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.edges
            .iter()
            .all(|e| seen.insert(&e.0) && seen.insert(&e.1))
    }

    /// Connected components, each as a vertex set, ordered by smallest member.
    pub fn components(&self) -> Vec<BTreeSet<VertexId>> {
        let mut adj: BTreeMap<&VertexId, Vec<&VertexId>> =
            self.vertices.iter().map(|v| (v, Vec::new())).collect();
        for e in &self.edges {
            adj.get_mut(&e.0).expect("endpoint").push(&e.1);
            adj.get_mut(&e.1).expect("endpoint").push(&e.0);
        }
        let mut seen: BTreeSet<&VertexId> = BTreeSet::new();
        let mut out = Vec::new();
        for start in &self.vertices {
            if !seen.insert(start) {
                continue;
            }
            let mut comp = BTreeSet::new();
            let mut queue = VecDeque::from([start]);
            while let Some(u) = queue.pop_front() {
                comp.insert(u.clone());
                for &w in &adj[u] {
                    if seen.insert(w) {
                        queue.push_back(w);
                    }
                }
            }
            out.push(comp);
        }
        out
    }

    /// Exactly one component. The empty graph counts as connected.
    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    /// Every spanning tree, as an edge set, in lexicographic order of the
    /// chosen edges. Empty iff the graph is disconnected.
    pub fn spanning_trees(&self) -> Result<Vec<BTreeSet<Edge>>> {
        let n = self.vertices.len();
        if n > SPANNING_TREE_VERTEX_CAP {
            return Err(Error::SizeCap {
                what: "spanning tree enumeration vertex count",
                limit: SPANNING_TREE_VERTEX_CAP,
                actual: n,
            });
        }
        if n <= 1 {
            return Ok(vec![BTreeSet::new()]);
        }
        let index: BTreeMap<&VertexId, usize> =
            self.vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
        let edges: Vec<(&Edge, usize, usize)> = self
            .edges
            .iter()
            .map(|e| (e, index[&e.0], index[&e.1]))
            .collect();
        let trees = edges
            .iter()
            .combinations(n - 1)
            .filter(|choice| is_forest(n, choice.iter().map(|&&(_, a, b)| (a, b))))
            .map(|choice| choice.into_iter().map(|&(e, _, _)| e.clone()).collect())
            .collect();
        Ok(trees)
    }
}

/// Union-find acyclicity check; `n - 1` acyclic edges on `n` vertices span.
pub(crate) fn is_forest(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(parent: &mut [usize], mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for (a, b) in edges {
        let (ra, rb) = (find(&mut parent, a), find(&mut parent, b));
        if ra == rb {
            return false;
        }
        parent[ra] = rb;
    }
    true
}

/// Standard graph families used throughout the tests and the guide.
pub mod families {
    use super::{Graph, VertexId};

    fn x(i: usize) -> VertexId {
        VertexId::new(format!("x{i}")).expect("valid name")
    }

    /// The path `x1 - x2 - ... - xn`.
    pub fn path(n: usize) -> Graph {
        let mut g = Graph::new();
        if n == 1 {
            g.add_vertex(x(1));
        }
        for i in 1..n {
            g.add_edge(x(i), x(i + 1)).expect("simple");
        }
        g
    }

    /// The cycle on `x1..xn`, `n >= 3`.
    pub fn cycle(n: usize) -> Graph {
        assert!(n >= 3, "cycles need at least three vertices");
        let mut g = path(n);
        g.add_edge(x(n), x(1)).expect("simple");
        g
    }

    /// The complete graph on `x1..xn`.
    pub fn complete(n: usize) -> Graph {
        let mut g = Graph::new();
        for i in 1..=n {
            g.add_vertex(x(i));
            for j in 1..i {
                g.add_edge(x(j), x(i)).expect("simple");
            }
        }
        g
    }

    /// The star with center `x0` and leaves `x1..xn`.
    pub fn star(n: usize) -> Graph {
        let mut g = Graph::new();
        g.add_vertex(x(0));
        for i in 1..=n {
            g.add_edge(x(0), x(i)).expect("simple");
        }
        g
    }

    /// The five-vertex tree `t1 t2, t2 t3, t3 t4, t3 t5`: a two-edge tail
    /// ending at a branch vertex of degree three.
    pub fn tree_t() -> Graph {
        Graph::from_pairs([("t1", "t2"), ("t2", "t3"), ("t3", "t4"), ("t3", "t5")])
            .expect("simple")
    }
}

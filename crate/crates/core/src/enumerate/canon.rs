//! Canonical forms of small graphs by exhaustive permutation search.
//!
//! A graph on `n <= 8` vertices is encoded by its upper-triangle adjacency
//! bits in row-major order, `(0,1), (0,2), ..., (0,n-1), (1,2), ...`, with the
//! first pair as the most significant bit. The canonical form is the minimum
//! code over all `n!` relabelings, so two graphs are isomorphic exactly when
//! their canonical codes agree.

use std::collections::BTreeMap;
use std::sync::OnceLock;

use itertools::Itertools;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{Graph, VertexId};

/// Largest vertex count with an exact canonical form.
pub const MAX_ORDER: usize = 8;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct CanonicalGraph {
    pub n: usize,
    pub bits: u32,
}

fn pair_count(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Bit position of the pair `(i, j)`, `i < j`, counted from the least
/// significant end.
fn pair_shift(n: usize, i: usize, j: usize) -> u32 {
    let pos = i * n - i * (i + 1) / 2 + (j - i - 1);
    (pair_count(n) - 1 - pos) as u32
}

fn shift_table(n: usize) -> [[u32; MAX_ORDER]; MAX_ORDER] {
    let mut t = [[0; MAX_ORDER]; MAX_ORDER];
    for i in 0..n {
        for j in i + 1..n {
            t[i][j] = pair_shift(n, i, j);
            t[j][i] = t[i][j];
        }
    }
    t
}

fn permutations(n: usize) -> &'static [[u8; MAX_ORDER]] {
    static TABLES: OnceLock<Vec<Vec<[u8; MAX_ORDER]>>> = OnceLock::new();
    let tables = TABLES.get_or_init(|| {
        (0..=MAX_ORDER)
            .map(|n| {
                (0..n as u8)
                    .permutations(n)
                    .map(|p| {
                        let mut a = [0u8; MAX_ORDER];
                        a[..n].copy_from_slice(&p);
                        a
                    })
                    .collect()
            })
            .collect()
    });
    &tables[n]
}

impl CanonicalGraph {
    /// Code of the labeled graph given by `edges` on vertices `0..n`, without
    /// any minimization.
    pub fn labeled_code(n: usize, edges: &[(usize, usize)]) -> u32 {
        edges
            .iter()
            .map(|&(a, b)| 1u32 << pair_shift(n, a.min(b), a.max(b)))
            .fold(0, |x, y| x | y)
    }

    /// Minimum code over all relabelings of `edges` on vertices `0..n`.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        if n > MAX_ORDER {
            return Err(Error::SizeCap {
                what: "canonical form vertex count",
                limit: MAX_ORDER,
                actual: n,
            });
        }
        let shifts = shift_table(n);
        let bits = permutations(n)
            .iter()
            .map(|p| {
                edges
                    .iter()
                    .map(|&(a, b)| 1u32 << shifts[p[a] as usize][p[b] as usize])
                    .fold(0, |x, y| x | y)
            })
            .min()
            .unwrap_or(0);
        Ok(CanonicalGraph { n, bits })
    }

    /// Canonical form of a named graph; vertices are taken in name order.
    pub fn of(g: &Graph) -> Result<Self> {
        let index: BTreeMap<&VertexId, usize> =
            g.vertices().iter().enumerate().map(|(i, v)| (v, i)).collect();
        let edges: Vec<(usize, usize)> = g
            .edges()
            .iter()
            .map(|e| {
                let (a, b) = e.endpoints();
                (index[a], index[b])
            })
            .collect();
        Self::from_edges(g.vertex_count(), &edges)
    }

    /// The adjacency bits as a `0`/`1` string, most significant first.
    pub fn bitstring(&self) -> String {
        let len = pair_count(self.n);
        (0..len)
            .map(|k| {
                if self.bits >> (len - 1 - k) & 1 == 1 {
                    '1'
                } else {
                    '0'
                }
            })
            .collect()
    }

    pub fn edge_pairs(&self) -> Vec<(usize, usize)> {
        (0..self.n)
            .tuple_combinations()
            .filter(|&(i, j)| self.bits >> pair_shift(self.n, i, j) & 1 == 1)
            .collect()
    }

    /// The canonical representative with vertices named `v1..vn`.
    pub fn to_graph(&self) -> Graph {
        let name = |i: usize| VertexId::new(format!("v{}", i + 1)).expect("valid name");
        let mut g = Graph::new();
        for i in 0..self.n {
            g.add_vertex(name(i));
        }
        for (i, j) in self.edge_pairs() {
            g.add_edge(name(i), name(j)).expect("simple");
        }
        g
    }
}

/// Connectivity of a graph given as an adjacency code on `0..n`.
pub(crate) fn code_is_connected(n: usize, edges: &[(usize, usize)]) -> bool {
    if n == 0 {
        return true;
    }
    let mut adj = [0u8; MAX_ORDER];
    for &(a, b) in edges {
        adj[a] |= 1 << b;
        adj[b] |= 1 << a;
    }
    let full: u16 = (1u16 << n) - 1;
    let mut seen: u16 = 1;
    let mut frontier: u16 = 1;
    while frontier != 0 {
        let mut next = 0u16;
        for v in 0..n {
            if frontier >> v & 1 == 1 {
                next |= adj[v] as u16;
            }
        }
        frontier = next & !seen;
        seen |= next;
    }
    seen == full
}

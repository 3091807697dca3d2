#![allow(dead_code)]

use nci::{Graph, Monomial, MonomialIdeal, Variable, VertexId};
use proptest::prelude::*;

pub fn name(i: usize) -> VertexId {
    VertexId::new(format!("x{i}")).unwrap()
}

/// The labeled graph on `x0..x{n-1}` whose edges are picked by `mask` over the
/// pairs `(i, j)`, `i < j`, in row-major order.
pub fn graph_from_mask(n: usize, mask: u64) -> Graph {
    let mut g = Graph::new();
    for i in 0..n {
        g.add_vertex(name(i));
    }
    let mut k = 0;
    for i in 0..n {
        for j in i + 1..n {
            if mask >> k & 1 == 1 {
                g.add_edge(name(i), name(j)).unwrap();
            }
            k += 1;
        }
    }
    g
}

pub fn pairs(n: usize) -> usize {
    n * n.saturating_sub(1) / 2
}

/// Arbitrary labeled graphs with `lo..=hi` vertices.
pub fn graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    (lo..=hi).prop_flat_map(|n| {
        let full = if pairs(n) == 0 { 1 } else { 1u64 << pairs(n) };
        (0..full).prop_map(move |mask| graph_from_mask(n, mask))
    })
}

pub fn connected_graphs(lo: usize, hi: usize) -> impl Strategy<Value = Graph> {
    graphs(lo, hi).prop_filter("connected", Graph::is_connected)
}

pub fn var(i: usize) -> Variable {
    Variable::new(format!("y{i}")).unwrap()
}

/// Squarefree ideals on up to `vars` variables with up to `gens` generators.
pub fn squarefree_ideals(vars: usize, gens: usize) -> impl Strategy<Value = MonomialIdeal> {
    prop::collection::vec(1u32..(1 << vars), 1..=gens).prop_map(|masks| {
        let gens = masks.into_iter().map(|m| {
            let xs: Vec<Variable> = (0..32).filter(|i| m >> i & 1 == 1).map(var).collect();
            Monomial::product(&xs)
        });
        MonomialIdeal::from_generators(gens).unwrap()
    })
}

/// Monomials in `vars` variables with exponents below `max_exp`, never 1.
pub fn monomials(vars: usize, max_exp: u32) -> impl Strategy<Value = Monomial> {
    prop::collection::vec(0..max_exp, vars)
        .prop_filter("not the unit monomial", |e| e.iter().any(|&x| x > 0))
        .prop_map(|e| {
            Monomial::from_exponents(
                e.into_iter()
                    .enumerate()
                    .filter(|&(_, x)| x > 0)
                    .map(|(i, x)| (var(i), x)),
            )
        })
}

/// Relabels every vertex through `perm`, which maps index `i` to `perm[i]`.
pub fn relabel(g: &Graph, perm: &[usize]) -> Graph {
    let idx = |v: &VertexId| v.as_str()[1..].parse::<usize>().unwrap();
    let mut h = Graph::new();
    for v in g.vertices() {
        h.add_vertex(name(perm[idx(v)]));
    }
    for e in g.edges() {
        let (u, v) = e.endpoints();
        h.add_edge(name(perm[idx(u)]), name(perm[idx(v)])).unwrap();
    }
    h
}

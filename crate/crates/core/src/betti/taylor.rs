//! Graded Betti numbers from the Taylor complex.
//!
//! The Taylor complex of `I = (m_1, ..., m_g)` has a basis element `e_S` for
//! every subset `S` of generators, in homological degree `|S|` and multidegree
//! `lcm(S)`. Tensoring with the residue field kills every boundary coefficient
//! except those where dropping a generator leaves the lcm unchanged, so the
//! complex splits into one strand per multidegree. The homology of the strand
//! at `m` in degree `i` has dimension `beta_{i,m}(R/I)`.

use std::collections::HashMap;

use rayon::prelude::*;

use super::linalg::{rank, SparseRow};
use crate::ideal::{Monomial, Variable};

/// One multidegree strand of the specialized Taylor complex.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TaylorStrand {
    pub multidegree: Monomial,
    /// Generator subsets with lcm equal to `multidegree`, as bitmasks over
    /// the generator order used to build the strand, grouped by size.
    pub basis: Vec<Vec<u32>>,
    /// `boundary_ranks[k]` is the rank of the map from size-`k` subsets to
    /// size-`k-1` subsets; index 0 is always 0.
    pub boundary_ranks: Vec<usize>,
}

impl TaylorStrand {
    pub fn total_degree(&self) -> u32 {
        self.multidegree.degree()
    }

    /// Homology dimension in each homological degree.
    pub fn homology_ranks(&self) -> Vec<usize> {
        (0..self.basis.len())
            .map(|i| {
                let next = self.boundary_ranks.get(i + 1).copied().unwrap_or(0);
                self.basis[i].len() - self.boundary_ranks[i] - next
            })
            .collect()
    }
}

/// Builds every strand of the Taylor complex on `gens`, in the given order,
/// sorted by exponent vector. Callers bound `gens.len()`; there are
/// `2^gens.len()` basis elements.
pub fn taylor_strands(gens: &[&Monomial]) -> Vec<TaylorStrand> {
    let g = gens.len();
    assert!(g < 32, "subset masks are u32");
    let vars: Vec<Variable> = {
        let mut v: Vec<Variable> = gens.iter().flat_map(|m| m.support().cloned()).collect();
        v.sort();
        v.dedup();
        v
    };
    let exps: Vec<Vec<u32>> = gens
        .iter()
        .map(|m| vars.iter().map(|x| m.exponent(x)).collect())
        .collect();

    // lcm of every subset, built from the subset without its lowest bit.
    let count = 1usize << g;
    let mut lcms: Vec<Box<[u32]>> = Vec::with_capacity(count);
    lcms.push(vec![0; vars.len()].into_boxed_slice());
    for mask in 1..count {
        let low = mask.trailing_zeros() as usize;
        let rest = &lcms[mask & (mask - 1)];
        let l: Box<[u32]> = rest
            .iter()
            .zip(&exps[low])
            .map(|(&a, &b)| a.max(b))
            .collect();
        lcms.push(l);
    }

    let mut groups: HashMap<&[u32], Vec<u32>> = HashMap::new();
    for (mask, l) in lcms.iter().enumerate() {
        groups.entry(l).or_default().push(mask as u32);
    }
    let mut groups: Vec<(&[u32], Vec<u32>)> = groups.into_iter().collect();
    groups.sort();

    groups
        .into_par_iter()
        .map(|(l, masks)| {
            let multidegree =
                Monomial::from_exponents(vars.iter().cloned().zip(l.iter().copied()));
            strand(multidegree, masks, g)
        })
        .collect()
}

fn strand(multidegree: Monomial, masks: Vec<u32>, g: usize) -> TaylorStrand {
    let mut basis: Vec<Vec<u32>> = vec![Vec::new(); g + 1];
    for m in masks {
        basis[m.count_ones() as usize].push(m);
    }
    while basis.len() > 1 && basis.last().is_some_and(Vec::is_empty) {
        basis.pop();
    }
    let index: Vec<HashMap<u32, usize>> = basis
        .iter()
        .map(|b| b.iter().enumerate().map(|(i, &m)| (m, i)).collect())
        .collect();

    let mut boundary_ranks = vec![0; basis.len()];
    for k in 1..basis.len() {
        let faces = &index[k - 1];
        let rows: Vec<SparseRow> = basis[k]
            .iter()
            .map(|&s| {
                let mut row: SparseRow = Vec::with_capacity(k);
                let mut bits = s;
                let mut pos = 0;
                while bits != 0 {
                    let bit = bits & bits.wrapping_neg();
                    bits &= bits - 1;
                    if let Some(&col) = faces.get(&(s ^ bit)) {
                        row.push((col, if pos % 2 == 0 { 1 } else { -1 }));
                    }
                    pos += 1;
                }
                row.sort_unstable_by_key(|&(c, _)| c);
                row
            })
            .collect();
        boundary_ranks[k] = rank(&rows);
    }
    TaylorStrand {
        multidegree,
        basis,
        boundary_ranks,
    }
}

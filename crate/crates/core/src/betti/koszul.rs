//! Squarefree Betti numbers from upper Koszul simplicial complexes.
//!
//! For a squarefree ideal and a set `U` of variables, the complex
//! `K^U = { F ⊆ U : the product of U \ F lies in I }` satisfies
//! `beta_{i,U}(R/I) = dim H~_{i-2}(K^U)` for `i >= 1`. This route shares no
//! code with the Taylor computation beyond the rank routine, and serves as a
//! cross-check for it.

use std::collections::{BTreeMap, HashMap};

use super::linalg::{rank, SparseRow};
use crate::error::{Error, Result};
use crate::ideal::MonomialIdeal;

/// Largest support the subset sweep accepts.
pub const KOSZUL_SUPPORT_CAP: usize = 20;

/// Graded Betti numbers `(i, j) -> beta_{i,j}(R/I)` of a squarefree ideal.
pub fn squarefree_betti_numbers(ideal: &MonomialIdeal) -> Result<BTreeMap<(usize, u32), u64>> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if let Some(g) = ideal.generators().iter().find(|g| !g.is_squarefree()) {
        return Err(Error::NotSquarefree(g.to_string()));
    }
    let vars: Vec<_> = ideal.support().into_iter().collect();
    if vars.len() > KOSZUL_SUPPORT_CAP {
        return Err(Error::SizeCap {
            what: "Koszul route support size",
            limit: KOSZUL_SUPPORT_CAP,
            actual: vars.len(),
        });
    }
    let gens: Vec<u32> = ideal
        .generators()
        .iter()
        .map(|g| {
            g.support()
                .map(|x| 1u32 << vars.binary_search(x).expect("support"))
                .fold(0, |a, b| a | b)
        })
        .collect();
    let in_ideal = |m: u32| gens.iter().any(|&g| g & m == g);

    let mut table = BTreeMap::from([((0, 0), 1u64)]);
    for u in 1u32..1 << vars.len() {
        if !in_ideal(u) {
            continue;
        }
        // Faces F ⊆ U with U \ F in I, grouped by size.
        let mut faces: Vec<Vec<u32>> = vec![Vec::new(); u.count_ones() as usize + 1];
        let mut f = u;
        loop {
            if in_ideal(u & !f) {
                faces[f.count_ones() as usize].push(f);
            }
            if f == 0 {
                break;
            }
            f = (f - 1) & u;
        }
        let ranks = boundary_ranks(&faces);
        let j = u.count_ones();
        // H~_d lives on faces of size d + 1; beta_i uses d = i - 2.
        for size in 0..faces.len() {
            let next = ranks.get(size + 1).copied().unwrap_or(0);
            let h = faces[size].len() - ranks[size] - next;
            if h > 0 {
                *table.entry((size + 1, j)).or_insert(0) += h as u64;
            }
        }
    }
    Ok(table)
}

/// Ranks of the augmented simplicial boundary maps, indexed by source face size.
fn boundary_ranks(faces: &[Vec<u32>]) -> Vec<usize> {
    let index: Vec<HashMap<u32, usize>> = faces
        .iter()
        .map(|fs| fs.iter().enumerate().map(|(i, &f)| (f, i)).collect())
        .collect();
    let mut ranks = vec![0; faces.len()];
    for size in 1..faces.len() {
        let rows: Vec<SparseRow> = faces[size]
            .iter()
            .map(|&f| {
                let mut row: SparseRow = Vec::new();
                let mut bits = f;
                let mut pos = 0;
                while bits != 0 {
                    let bit = bits & bits.wrapping_neg();
                    bits &= bits - 1;
                    let col = index[size - 1][&(f ^ bit)];
                    row.push((col, if pos % 2 == 0 { 1 } else { -1 }));
                    pos += 1;
                }
                row.sort_unstable_by_key(|&(c, _)| c);
                row
            })
            .collect();
        ranks[size] = rank(&rows);
    }
    ranks
}

//! Graded Betti numbers of `R/I` and the total-rank bound for ideals that
//! are not complete intersections.
//!
//! All ranks are computed exactly over the rationals; nothing here touches
//! floating point.

pub mod koszul;
pub mod linalg;
pub mod taylor;

use std::collections::BTreeMap;

use serde::ser::{SerializeMap, SerializeStruct};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal};

pub use taylor::TaylorStrand;

/// Largest number of minimal generators [`betti_table`] accepts.
pub const TAYLOR_GENERATOR_CAP: usize = 16;

/// Graded Betti numbers `beta_{i,j}(R/I)`, indexed by homological degree `i`
/// and total internal degree `j`. Only nonzero entries are stored.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BettiTable {
    entries: BTreeMap<(usize, u32), u64>,
    height: usize,
}

impl BettiTable {
    pub fn from_entries(entries: BTreeMap<(usize, u32), u64>, height: usize) -> Self {
        let entries = entries.into_iter().filter(|&(_, r)| r > 0).collect();
        BettiTable { entries, height }
    }

    pub fn entries(&self) -> &BTreeMap<(usize, u32), u64> {
        &self.entries
    }

    pub fn get(&self, i: usize, j: u32) -> u64 {
        self.entries.get(&(i, j)).copied().unwrap_or(0)
    }

    pub fn height(&self) -> usize {
        self.height
    }

    pub fn projective_dimension(&self) -> usize {
        self.entries.keys().map(|&(i, _)| i).max().unwrap_or(0)
    }

    /// `(beta_0, ..., beta_pd)`, the row sums.
    pub fn sequence(&self) -> Vec<u64> {
        let mut seq = vec![0; self.projective_dimension() + 1];
        for (&(i, _), &r) in &self.entries {
            seq[i] += r;
        }
        seq
    }

    pub fn total(&self) -> u64 {
        self.entries.values().sum()
    }

    /// Entries of row `i` as `j -> rank`.
    pub fn row(&self, i: usize) -> BTreeMap<u32, u64> {
        self.entries
            .range((i, 0)..=(i, u32::MAX))
            .map(|(&(_, j), &r)| (j, r))
            .collect()
    }
}

struct Row<'a>(usize, &'a BettiTable);

impl Serialize for Row<'_> {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        struct Entries(BTreeMap<u32, u64>);
        impl Serialize for Entries {
            fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
                let mut m = s.serialize_map(Some(self.0.len()))?;
                for (j, r) in &self.0 {
                    m.serialize_entry(&j.to_string(), r)?;
                }
                m.end()
            }
        }
        let mut st = s.serialize_struct("Row", 2)?;
        st.serialize_field("i", &self.0)?;
        st.serialize_field("entries", &Entries(self.1.row(self.0)))?;
        st.end()
    }
}

impl Serialize for BettiTable {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let rows: Vec<Row> = (0..=self.projective_dimension()).map(|i| Row(i, self)).collect();
        let mut st = s.serialize_struct("BettiTable", 4)?;
        st.serialize_field("height", &self.height)?;
        st.serialize_field("rows", &rows)?;
        st.serialize_field("sequence", &self.sequence())?;
        st.serialize_field("total", &self.total())?;
        st.end()
    }
}

/// Row sums of a table.
pub fn betti_sequence(table: &BettiTable) -> Vec<u64> {
    table.sequence()
}

fn check_taylor_input(ideal: &MonomialIdeal) -> Result<()> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.generator_count() > TAYLOR_GENERATOR_CAP {
        return Err(Error::SizeCap {
            what: "Taylor complex generator count",
            limit: TAYLOR_GENERATOR_CAP,
            actual: ideal.generator_count(),
        });
    }
    Ok(())
}

/// The Taylor strands of `ideal`, with generators ordered by degree and then
/// lexicographically.
pub fn taylor_strands(ideal: &MonomialIdeal) -> Result<Vec<TaylorStrand>> {
    check_taylor_input(ideal)?;
    Ok(taylor::taylor_strands(&ideal.sorted_generators()))
}

/// Graded Betti numbers of `R/I` via the Taylor complex.
///
/// ```
/// use nci::{betti::betti_table, MonomialIdeal};
/// let p4 = MonomialIdeal::parse_generators(&["a*b", "b*c", "c*d"]).unwrap();
/// assert_eq!(betti_table(&p4).unwrap().sequence(), vec![1, 3, 2]);
/// ```
pub fn betti_table(ideal: &MonomialIdeal) -> Result<BettiTable> {
    check_taylor_input(ideal)?;
    Ok(table_from_generators(&ideal.sorted_generators(), ideal.height()?))
}

/// Same as [`betti_table`] with an explicit generator order. Homology ranks do
/// not depend on it; only the boundary signs change.
pub fn betti_table_with_order(gens: &[&Monomial], height: usize) -> BettiTable {
    table_from_generators(gens, height)
}

fn table_from_generators(gens: &[&Monomial], height: usize) -> BettiTable {
    let mut entries = BTreeMap::new();
    for strand in taylor::taylor_strands(gens) {
        let j = strand.total_degree();
        for (i, h) in strand.homology_ranks().into_iter().enumerate() {
            if h > 0 {
                *entries.entry((i, j)).or_insert(0) += h as u64;
            }
        }
    }
    BettiTable::from_entries(entries, height)
}

/// Graded Betti numbers of a squarefree ideal via upper Koszul complexes.
pub fn betti_table_koszul(ideal: &MonomialIdeal) -> Result<BettiTable> {
    let entries = koszul::squarefree_betti_numbers(ideal)?;
    Ok(BettiTable::from_entries(entries, ideal.height()?))
}

/// Comparison of the total Betti number against `2^c + 2^(c-1)`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct TotalRankCheck {
    pub total: u64,
    pub height: usize,
    pub bound: u64,
    pub meets_bound: bool,
    pub equality: bool,
}

/// Checks the total-rank lower bound for a monomial ideal that is not a
/// complete intersection.
pub fn total_rank_check(ideal: &MonomialIdeal) -> Result<TotalRankCheck> {
    if ideal.is_zero() {
        return Err(Error::ZeroIdeal);
    }
    if ideal.is_complete_intersection() {
        return Err(Error::CompleteIntersection);
    }
    let table = betti_table(ideal)?;
    Ok(check_against_bound(table.total(), table.height()))
}

pub(crate) fn check_against_bound(total: u64, height: usize) -> TotalRankCheck {
    let bound = (1u64 << height) + (1u64 << (height - 1));
    TotalRankCheck {
        total,
        height,
        bound,
        meets_bound: total >= bound,
        equality: total == bound,
    }
}

fn poly_mul(a: &[u64], b: &[u64]) -> Vec<u64> {
    let mut out = vec![0; a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    out
}

fn times_one_plus_t_pow(base: &[u64], k: usize) -> Vec<u64> {
    (0..k).fold(base.to_vec(), |p, _| poly_mul(&p, &[1, 1]))
}

/// Coefficients of the two generating functions that attain the total-rank
/// bound at height `c`: `(1+3t+2t^2)(1+t)^(c-2)` and, for `c >= 3`,
/// `(1+5t+5t^2+t^3)(1+t)^(c-3)`.
pub fn equality_polynomials(c: usize) -> Result<(Vec<u64>, Option<Vec<u64>>)> {
    if c < 2 {
        return Err(Error::OutOfRange {
            what: "height",
            min: 2,
            max: usize::MAX,
            actual: c,
        });
    }
    let first = times_one_plus_t_pow(&[1, 3, 2], c - 2);
    let second = (c >= 3).then(|| times_one_plus_t_pow(&[1, 5, 5, 1], c - 3));
    Ok((first, second))
}

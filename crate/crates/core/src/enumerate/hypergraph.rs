//! Bounded search for nearly complete intersections with a generator of
//! degree at least three.
//!
//! Two sources feed the search. The structured family takes two disjoint
//! hyperedges `A` and `B` and cones every vertex of `A ∪ B` over an apex `g`:
//! generators `∏A`, `∏B` and `x·g` for each `x` in `A ∪ B`. The random source
//! draws antichains of squarefree supports from a seeded ChaCha stream. The
//! search reports what it finds and claims nothing about completeness.

use std::collections::BTreeSet;

use rand::seq::index::sample;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::ideal::{Monomial, MonomialIdeal, Variable};

/// Letters available to the search, `a` through `j`.
const ALPHABET: &str = "abcdefghij";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct HypergraphSearchParams {
    pub max_vars: usize,
    pub max_gens: usize,
    pub max_degree: usize,
    pub sample_count: usize,
    pub seed: u64,
}

impl Default for HypergraphSearchParams {
    fn default() -> Self {
        HypergraphSearchParams {
            max_vars: 7,
            max_gens: 8,
            max_degree: 3,
            sample_count: 1000,
            seed: 0,
        }
    }
}

impl HypergraphSearchParams {
    fn validate(&self) -> Result<()> {
        if self.max_vars > ALPHABET.len() {
            return Err(Error::OutOfRange {
                what: "max_vars",
                min: 0,
                max: ALPHABET.len(),
                actual: self.max_vars,
            });
        }
        if self.max_degree < 3 {
            return Err(Error::OutOfRange {
                what: "max_degree",
                min: 3,
                max: usize::MAX,
                actual: self.max_degree,
            });
        }
        Ok(())
    }
}

fn letter(i: usize) -> Variable {
    Variable::new(&ALPHABET[i..=i]).expect("letters are valid names")
}

/// The coned pair with `|A| = p` and `|B| = q`.
///
/// `A` takes the first `p` letters and `B` the next `q`. The apex is `g` when
/// that letter is free, so `(3, 3)` and `(2, 2)` produce the familiar
/// `(abc, def, ag, ..., fg)` and `(ab, cd, ag, bg, cg, dg)`; for larger parts
/// the apex is the first letter after `B`.
///
/// ```
/// use nci::enumerate::coned_pair;
/// let i = coned_pair(3, 3).unwrap();
/// assert_eq!(i.to_string(), "(a*g, b*g, c*g, d*g, e*g, f*g, a*b*c, d*e*f)");
/// assert!(i.is_nci().unwrap());
/// ```
pub fn coned_pair(p: usize, q: usize) -> Result<MonomialIdeal> {
    let used = p + q;
    if p == 0 || q == 0 || used >= ALPHABET.len() {
        return Err(Error::OutOfRange {
            what: "coned pair total part size",
            min: 2,
            max: ALPHABET.len() - 1,
            actual: used,
        });
    }
    let apex = letter(if used <= 6 { 6 } else { used });
    let a: Vec<Variable> = (0..p).map(letter).collect();
    let b: Vec<Variable> = (p..used).map(letter).collect();
    let mut gens = vec![Monomial::product(&a), Monomial::product(&b)];
    gens.extend(a.iter().chain(&b).map(|x| Monomial::product([x, &apex])));
    MonomialIdeal::from_generators(gens)
}

fn qualifies(ideal: &MonomialIdeal) -> Result<bool> {
    Ok(ideal.generators().iter().any(|g| g.degree() >= 3) && ideal.is_nci()?)
}

/// Runs the structured family, then `sample_count` random draws, and returns
/// every qualifying ideal once, in discovery order.
pub fn hypergraph_nci_search(params: &HypergraphSearchParams) -> Result<Vec<MonomialIdeal>> {
    params.validate()?;
    let mut seen = BTreeSet::new();
    let mut found = Vec::new();
    let mut keep = |ideal: MonomialIdeal| -> Result<()> {
        if qualifies(&ideal)? && seen.insert(ideal.clone()) {
            found.push(ideal);
        }
        Ok(())
    };

    for p in 1..=params.max_degree {
        for q in p..=params.max_degree {
            let ideal = match coned_pair(p, q) {
                Ok(i) => i,
                Err(_) => continue,
            };
            if ideal.support().len() <= params.max_vars
                && ideal.generator_count() <= params.max_gens
            {
                keep(ideal)?;
            }
        }
    }

    let top = params.max_degree.min(params.max_vars);
    if top >= 2 && params.max_gens >= 1 {
        let mut rng = ChaCha8Rng::seed_from_u64(params.seed);
        for _ in 0..params.sample_count {
            if let Some(ideal) = draw_antichain(&mut rng, params.max_vars, params.max_gens, top) {
                keep(ideal)?;
            }
        }
    }
    Ok(found)
}

/// One random draw; `None` when the supports do not form an antichain.
fn draw_antichain(
    rng: &mut ChaCha8Rng,
    vars: usize,
    max_gens: usize,
    top: usize,
) -> Option<MonomialIdeal> {
    let count = rng.gen_range(1..=max_gens);
    let supports: Vec<BTreeSet<usize>> = (0..count)
        .map(|_| {
            let size = rng.gen_range(2..=top);
            sample(rng, vars, size).into_iter().collect()
        })
        .collect();
    let antichain = supports.iter().enumerate().all(|(i, s)| {
        supports
            .iter()
            .enumerate()
            .all(|(j, t)| i == j || !s.is_subset(t))
    });
    if !antichain {
        return None;
    }
    let gens = supports.iter().map(|s| {
        let xs: Vec<Variable> = s.iter().map(|&i| letter(i)).collect();
        Monomial::product(&xs)
    });
    MonomialIdeal::from_generators(gens).ok()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(max_vars: usize, max_gens: usize, samples: usize) -> HypergraphSearchParams {
        HypergraphSearchParams {
            max_vars,
            max_gens,
            max_degree: 3,
            sample_count: samples,
            seed: 7,
        }
    }

    #[test]
    fn two_two_cone_is_nci_but_excluded() {
        let i = coned_pair(2, 2).unwrap();
        let expected = MonomialIdeal::parse_generators(&["a*b", "c*d", "a*g", "b*g", "c*g", "d*g"]);
        assert_eq!(i, expected.unwrap());
        assert!(i.is_nci().unwrap());
        let found = hypergraph_nci_search(&params(5, 6, 0)).unwrap();
        assert!(!found.contains(&i));
    }

    #[test]
    fn rediscovers_three_three_cone() {
        let target = MonomialIdeal::parse_generators(&[
            "a*b*c", "d*e*f", "a*g", "b*g", "c*g", "d*g", "e*g", "f*g",
        ])
        .unwrap();
        let found = hypergraph_nci_search(&params(7, 8, 0)).unwrap();
        assert!(found.contains(&target));
    }

    #[test]
    fn two_variables_find_nothing() {
        assert!(hypergraph_nci_search(&params(2, 8, 200)).unwrap().is_empty());
    }

    #[test]
    fn bounds_are_enforced() {
        assert!(hypergraph_nci_search(&params(11, 8, 0)).is_err());
        let low = HypergraphSearchParams { max_degree: 2, ..params(5, 5, 0) };
        assert!(hypergraph_nci_search(&low).is_err());
    }

    #[test]
    fn search_is_reproducible_and_sound() {
        let p = params(7, 8, 3000);
        let first = hypergraph_nci_search(&p).unwrap();
        assert_eq!(first, hypergraph_nci_search(&p).unwrap());
        for ideal in &first {
            assert!(ideal.is_squarefree());
            assert!(ideal.generators().iter().any(|g| g.degree() >= 3));
            assert!(ideal.is_nci().unwrap());
        }
    }
}

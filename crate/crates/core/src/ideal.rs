//! Monomials, monomial ideals and the edge-ideal correspondence.
//!
//! Ideals are always stored by their minimal generating set. The unit ideal
//! cannot be represented; any operation that would produce it fails with
//! [`Error::UnitIdeal`].

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::{is_token, Edge, Graph, VertexId};

/// A polynomial-ring variable. Same naming rules as [`VertexId`].
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(transparent)]
pub struct Variable(String);

impl Variable {
    pub fn new(name: impl Into<String>) -> Result<Self> {
        let name = name.into();
        if is_token(&name) {
            Ok(Variable(name))
        } else {
            Err(Error::InvalidName(name))
        }
    }

    pub fn as_str(&self) -> &str {
        &self.0
    }
}

impl fmt::Display for Variable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.0)
    }
}

impl FromStr for Variable {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Variable::new(s)
    }
}

impl From<&VertexId> for Variable {
    fn from(v: &VertexId) -> Self {
        Variable(v.as_str().to_owned())
    }
}

impl From<&Variable> for VertexId {
    fn from(x: &Variable) -> Self {
        VertexId::new(x.as_str()).expect("variable names are valid vertex names")
    }
}

/// A monomial as a map from variables to positive exponents. The empty map
/// is the monomial 1.
#[derive(Clone, Debug, Default, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Monomial(BTreeMap<Variable, u32>);

impl Monomial {
    pub fn one() -> Self {
        Self::default()
    }

    /// The squarefree product of the given variables.
    pub fn product<'a>(vars: impl IntoIterator<Item = &'a Variable>) -> Self {
        Monomial(vars.into_iter().map(|x| (x.clone(), 1)).collect())
    }

    /// Builds a monomial from `(variable, exponent)` pairs; zero exponents are
    /// dropped and repeated variables multiply.
    pub fn from_exponents(pairs: impl IntoIterator<Item = (Variable, u32)>) -> Self {
        let mut map = BTreeMap::new();
        for (x, e) in pairs {
            if e > 0 {
                *map.entry(x).or_insert(0) += e;
            }
        }
        Monomial(map)
    }

    pub fn is_one(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self) -> u32 {
        self.0.values().sum()
    }

    pub fn exponent(&self, x: &Variable) -> u32 {
        self.0.get(x).copied().unwrap_or(0)
    }

    pub fn exponents(&self) -> &BTreeMap<Variable, u32> {
        &self.0
    }

    pub fn is_squarefree(&self) -> bool {
        self.0.values().all(|&e| e == 1)
    }

    pub fn support(&self) -> impl Iterator<Item = &Variable> {
        self.0.keys()
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().all(|(x, &e)| other.exponent(x) >= e)
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        let mut map = self.0.clone();
        for (x, &e) in &other.0 {
            let slot = map.entry(x.clone()).or_insert(0);
            *slot = (*slot).max(e);
        }
        Monomial(map)
    }

    /// True when the supports share no variable.
    pub fn is_coprime_to(&self, other: &Monomial) -> bool {
        self.0.keys().all(|x| !other.0.contains_key(x))
    }

    /// A nonconstant power of `x` alone.
    pub fn is_pure_power_of(&self, x: &Variable) -> bool {
        self.0.len() == 1 && self.0.contains_key(x)
    }

    /// The monomial obtained by setting `x = 1`.
    pub fn without(&self, x: &Variable) -> Monomial {
        let mut map = self.0.clone();
        map.remove(x);
        Monomial(map)
    }

    /// Ordering by total degree, then lexicographically.
    pub fn degree_lex_cmp(&self, other: &Monomial) -> std::cmp::Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.cmp(other))
    }
}

impl fmt::Display for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return f.write_str("1");
        }
        for (i, (x, &e)) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str("*")?;
            }
            if e == 1 {
                write!(f, "{x}")?;
            } else {
                write!(f, "{x}^{e}")?;
            }
        }
        Ok(())
    }
}

impl Serialize for Monomial {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

/// Parses `x1*x2^2`-style products. The bare token `1` is the monomial 1.
impl FromStr for Monomial {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_monomial(s).map_err(|m| Error::parse(1, m))
    }
}

pub(crate) fn parse_monomial(s: &str) -> std::result::Result<Monomial, String> {
    let s = s.trim();
    if s == "1" {
        return Ok(Monomial::one());
    }
    let mut pairs = Vec::new();
    for factor in s.split('*') {
        let factor = factor.trim();
        let (name, exp) = match factor.split_once('^') {
            Some((name, exp)) => {
                let exp: u32 = exp
                    .trim()
                    .parse()
                    .map_err(|_| format!("malformed exponent in factor {factor:?}"))?;
                if exp == 0 {
                    return Err(format!("malformed exponent in factor {factor:?}: must be positive"));
                }
                (name.trim(), exp)
            }
            None => (factor, 1),
        };
        let x = Variable::new(name).map_err(|_| format!("malformed factor {factor:?}"))?;
        pairs.push((x, exp));
    }
    Ok(Monomial::from_exponents(pairs))
}

/// Keeps the divisibility-minimal monomials. Every dropped monomial is a
/// multiple of a kept one. Fails if any input is the monomial 1.
pub fn minimalize(gens: impl IntoIterator<Item = Monomial>) -> Result<BTreeSet<Monomial>> {
    let mut gens: Vec<Monomial> = gens.into_iter().collect();
    if gens.iter().any(Monomial::is_one) {
        return Err(Error::UnitIdeal);
    }
    gens.sort_by(Monomial::degree_lex_cmp);
    gens.dedup();
    let mut kept: Vec<Monomial> = Vec::with_capacity(gens.len());
    for m in gens {
        if !kept.iter().any(|k| k.divides(&m)) {
            kept.push(m);
        }
    }
    Ok(kept.into_iter().collect())
}

/// A monomial ideal given by its minimal generators inside an explicit
/// variable universe. The universe may be larger than the support.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct MonomialIdeal {
    generators: BTreeSet<Monomial>,
    universe: BTreeSet<Variable>,
}

/// Outcome of checking the three defining conditions of a nearly complete
/// intersection on a squarefree ideal.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NciStatus {
    /// Condition (1) fails: this generator has degree below two.
    LowDegreeGenerator(Monomial),
    /// Condition (2) fails.
    CompleteIntersection,
    /// Condition (3) fails: setting this variable to 1 leaves a non-CI ideal.
    FailingVariable(Variable),
    Nci,
}

impl MonomialIdeal {
    /// Minimalizes `gens` and checks every generator variable lies in `universe`.
    pub fn new(
        gens: impl IntoIterator<Item = Monomial>,
        universe: impl IntoIterator<Item = Variable>,
    ) -> Result<Self> {
        let generators = minimalize(gens)?;
        let universe: BTreeSet<Variable> = universe.into_iter().collect();
        for g in &generators {
            if let Some(x) = g.support().find(|x| !universe.contains(*x)) {
                return Err(Error::UnknownVariable(x.to_string()));
            }
        }
        Ok(MonomialIdeal {
            generators,
            universe,
        })
    }

    /// An ideal whose universe is exactly the support of its generators.
    pub fn from_generators(gens: impl IntoIterator<Item = Monomial>) -> Result<Self> {
        let generators = minimalize(gens)?;
        let universe = generators.iter().flat_map(|g| g.support().cloned()).collect();
        Ok(MonomialIdeal {
            generators,
            universe,
        })
    }

    /// Shorthand for tests and examples: each string is one generator in
    /// `a*b^2` notation.
    ///
    /// ```
    /// use nci::MonomialIdeal;
    /// let i = MonomialIdeal::parse_generators(&["a*b", "a*c", "b*c"]).unwrap();
    /// assert!(i.is_nci().unwrap());
    /// ```
    pub fn parse_generators(gens: &[&str]) -> Result<Self> {
        let gens = gens
            .iter()
            .map(|s| s.parse::<Monomial>())
            .collect::<Result<Vec<_>>>()?;
        Self::from_generators(gens)
    }

    pub fn zero(universe: impl IntoIterator<Item = Variable>) -> Self {
        MonomialIdeal {
            generators: BTreeSet::new(),
            universe: universe.into_iter().collect(),
        }
    }

    pub fn generators(&self) -> &BTreeSet<Monomial> {
        &self.generators
    }

    /// Generators ordered by degree, then lexicographically.
    pub fn sorted_generators(&self) -> Vec<&Monomial> {
        let mut gens: Vec<&Monomial> = self.generators.iter().collect();
        gens.sort_by(|a, b| a.degree_lex_cmp(b));
        gens
    }

    pub fn universe(&self) -> &BTreeSet<Variable> {
        &self.universe
    }

    pub fn is_zero(&self) -> bool {
        self.generators.is_empty()
    }

    pub fn generator_count(&self) -> usize {
        self.generators.len()
    }

    /// Variables appearing in at least one minimal generator.
    pub fn support(&self) -> BTreeSet<Variable> {
        self.generators
            .iter()
            .flat_map(|g| g.support().cloned())
            .collect()
    }

    pub fn is_squarefree(&self) -> bool {
        self.generators.iter().all(Monomial::is_squarefree)
    }

    /// `I(x = 1)`: set `x` to one in every generator and minimalize. The
    /// universe loses `x`.
    pub fn substitute_one(&self, x: &Variable) -> Result<MonomialIdeal> {
        if !self.universe.contains(x) {
            return Err(Error::UnknownVariable(x.to_string()));
        }
        if self.generators.iter().any(|g| g.is_pure_power_of(x)) {
            return Err(Error::UnitIdeal);
        }
        let generators = minimalize(self.generators.iter().map(|g| g.without(x)))?;
        let mut universe = self.universe.clone();
        universe.remove(x);
        Ok(MonomialIdeal {
            generators,
            universe,
        })
    }

    /// Minimal generators with pairwise disjoint supports. The zero ideal
    /// qualifies.
    pub fn is_complete_intersection(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.generators
            .iter()
            .all(|g| g.support().all(|x| seen.insert(x)))
    }

    /// Checks the three defining conditions in order and reports the first
    /// one that fails. Only squarefree ideals are accepted.
    pub fn nci_status(&self) -> Result<NciStatus> {
        if let Some(g) = self.generators.iter().find(|g| !g.is_squarefree()) {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        if let Some(g) = self.generators.iter().find(|g| g.degree() < 2) {
            return Ok(NciStatus::LowDegreeGenerator(g.clone()));
        }
        if self.is_complete_intersection() {
            return Ok(NciStatus::CompleteIntersection);
        }
        for x in self.support() {
            if !self.substitute_one(&x)?.is_complete_intersection() {
                return Ok(NciStatus::FailingVariable(x));
            }
        }
        Ok(NciStatus::Nci)
    }

    pub fn is_nci(&self) -> Result<bool> {
        Ok(self.nci_status()? == NciStatus::Nci)
    }

    /// Height of the ideal: the smallest set of variables meeting the support
    /// of every minimal generator. For edge ideals this is a minimum vertex
    /// cover.
    pub fn height(&self) -> Result<usize> {
        if self.is_zero() {
            return Err(Error::ZeroIdeal);
        }
        let vars: Vec<Variable> = self.support().into_iter().collect();
        if vars.len() > 64 {
            return Err(Error::SizeCap {
                what: "height computation support size",
                limit: 64,
                actual: vars.len(),
            });
        }
        let masks: Vec<u64> = self
            .generators
            .iter()
            .map(|g| {
                g.support()
                    .map(|x| 1u64 << vars.binary_search(x).expect("support"))
                    .fold(0, |a, b| a | b)
            })
            .collect();
        Ok(min_hitting_set(&masks, 0, vars.len()) as usize)
    }
}

/// Exact minimum hitting set by branching on the variables of the first
/// unhit set, pruned by the best size found so far.
fn min_hitting_set(sets: &[u64], chosen: u64, best: usize) -> u32 {
    let size = chosen.count_ones();
    let Some(&unhit) = sets.iter().find(|&&s| s & chosen == 0) else {
        return size;
    };
    let mut best = best as u32;
    if size + 1 >= best {
        return best;
    }
    let mut bits = unhit;
    while bits != 0 {
        let bit = bits & bits.wrapping_neg();
        bits &= bits - 1;
        best = best.min(min_hitting_set(sets, chosen | bit, best as usize));
    }
    best
}

impl fmt::Display for MonomialIdeal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("(")?;
        for (i, g) in self.sorted_generators().into_iter().enumerate() {
            if i > 0 {
                f.write_str(", ")?;
            }
            write!(f, "{g}")?;
        }
        f.write_str(")")
    }
}

/// The edge ideal: one quadratic generator per edge and one linear generator
/// per isolated vertex, over the vertex set as universe.
pub fn edge_ideal(g: &Graph) -> MonomialIdeal {
    let mut generators: BTreeSet<Monomial> = g
        .edges()
        .iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            Monomial::product([&Variable::from(u), &Variable::from(v)])
        })
        .collect();
    generators.extend(
        g.isolated_vertices()
            .iter()
            .map(|v| Monomial::product([&Variable::from(v)])),
    );
    MonomialIdeal {
        generators,
        universe: g.vertices().iter().map(Variable::from).collect(),
    }
}

/// The graph of a squarefree ideal generated in degrees one and two:
/// vertices are the universe and quadratic generators become edges.
pub fn graph_of(ideal: &MonomialIdeal) -> Result<Graph> {
    let mut edges = Vec::new();
    for g in ideal.generators() {
        if !g.is_squarefree() {
            return Err(Error::NotSquarefree(g.to_string()));
        }
        match g.degree() {
            1 => {}
            2 => {
                let mut it = g.support().map(VertexId::from);
                let (u, v) = (it.next().expect("deg 2"), it.next().expect("deg 2"));
                edges.push(Edge::new(u, v)?);
            }
            d => return Err(Error::NotAGraphGenerator(g.to_string(), d)),
        }
    }
    Graph::from_parts(ideal.universe().iter().map(VertexId::from), edges)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn ideal(gens: &[&str]) -> MonomialIdeal {
        MonomialIdeal::parse_generators(gens).unwrap()
    }

    fn gens(ms: &[&str]) -> BTreeSet<Monomial> {
        ms.iter().map(|s| s.parse().unwrap()).collect()
    }

    fn var(s: &str) -> Variable {
        Variable::new(s).unwrap()
    }

    #[test]
    fn minimalize_examples() {
        let m = |s: &str| s.parse::<Monomial>().unwrap();
        assert_eq!(minimalize([m("b"), m("b*c"), m("c")]).unwrap(), gens(&["b", "c"]));
        assert_eq!(minimalize([m("b"), m("b*c")]).unwrap(), gens(&["b"]));
        assert_eq!(minimalize([m("a*b")]).unwrap(), gens(&["a*b"]));
        assert_eq!(minimalize([m("a"), Monomial::one()]), Err(Error::UnitIdeal));
    }

    #[test]
    fn monomial_parsing() {
        let m: Monomial = "x1*x2^2".parse().unwrap();
        assert_eq!(m.degree(), 3);
        assert_eq!(m.to_string(), "x1*x2^2");
        assert!("x^0".parse::<Monomial>().is_err());
        assert!("x^".parse::<Monomial>().is_err());
        assert!("a**b".parse::<Monomial>().is_err());
        assert_eq!("a*a".parse::<Monomial>().unwrap().to_string(), "a^2");
    }

    #[test]
    fn support_examples() {
        let s = |v: &[&str]| v.iter().map(|x| var(x)).collect::<BTreeSet<_>>();
        assert_eq!(ideal(&["a*b", "a*c", "b*c"]).support(), s(&["a", "b", "c"]));
        assert_eq!(
            ideal(&["a*b", "a*c", "b*c", "d"]).support(),
            s(&["a", "b", "c", "d"])
        );
        assert!(MonomialIdeal::zero([var("a")]).support().is_empty());
    }

    #[test]
    fn substitute_one_examples() {
        let tri = ideal(&["a*b", "b*c", "a*c"]);
        let at_a = tri.substitute_one(&var("a")).unwrap();
        assert_eq!(at_a.generators(), &gens(&["b", "c"]));
        assert_eq!(at_a.universe().len(), 2);

        let p = ideal(&["a*b", "b*c"]);
        assert_eq!(p.substitute_one(&var("a")).unwrap().generators(), &gens(&["b"]));

        let hyper = ideal(&["a*b*c", "d*e*f", "a*g", "b*g", "c*g", "d*g", "e*g", "f*g"]);
        assert_eq!(
            hyper.substitute_one(&var("g")).unwrap().generators(),
            &gens(&["a", "b", "c", "d", "e", "f"])
        );

        // Variable outside the support leaves generators alone.
        let ambient =
            MonomialIdeal::new(gens(&["a*b"]), [var("a"), var("b"), var("z")]).unwrap();
        assert_eq!(ambient.substitute_one(&var("z")).unwrap().generators(), &gens(&["a*b"]));

        assert_eq!(
            ideal(&["a", "b*c"]).substitute_one(&var("a")),
            Err(Error::UnitIdeal)
        );
        assert_eq!(
            tri.substitute_one(&var("q")),
            Err(Error::UnknownVariable("q".into()))
        );
    }

    #[test]
    fn complete_intersection_examples() {
        assert!(ideal(&["b", "c"]).is_complete_intersection());
        assert!(!ideal(&["a*b", "a*c", "b*c"]).is_complete_intersection());
        assert!(ideal(&["x1*y1", "x2*y2", "x3*y3"]).is_complete_intersection());
        assert!(MonomialIdeal::zero([]).is_complete_intersection());
    }

    #[test]
    fn nci_examples() {
        assert!(ideal(&["a*b", "a*c", "b*c"]).is_nci().unwrap());
        assert!(!ideal(&["a*b"]).is_nci().unwrap());
        assert!(ideal(&["a*b*c", "d*e*f", "a*g", "b*g", "c*g", "d*g", "e*g", "f*g"])
            .is_nci()
            .unwrap());
        let g = Graph::from_pairs([
            ("f", "d"),
            ("f", "g"),
            ("g", "d"),
            ("d", "b"),
            ("b", "c"),
            ("b", "a"),
            ("d", "e"),
        ])
        .unwrap();
        assert!(!edge_ideal(&g).is_nci().unwrap());
        assert!(matches!(
            ideal(&["a^2*b", "b*c"]).is_nci(),
            Err(Error::NotSquarefree(_))
        ));
        assert_eq!(
            ideal(&["a", "b*c", "c*d"]).nci_status().unwrap(),
            NciStatus::LowDegreeGenerator("a".parse().unwrap())
        );
    }

    #[test]
    fn edge_ideal_examples() {
        let g = Graph::from_pairs([("a", "b"), ("a", "c"), ("b", "c")])
            .map(|mut t| {
                t.add_vertex(VertexId::new("d").unwrap());
                t
            })
            .unwrap();
        assert_eq!(edge_ideal(&g), ideal(&["a*b", "a*c", "b*c", "d"]));
        let p = Graph::from_pairs([("a", "b"), ("b", "c")]).unwrap();
        assert_eq!(edge_ideal(&p), ideal(&["a*b", "b*c"]));
        let empty = edge_ideal(&Graph::new());
        assert!(empty.is_zero() && empty.universe().is_empty());
    }

    #[test]
    fn graph_of_examples() {
        let i = ideal(&["a*b", "a*c", "b*c", "d"]);
        let g = graph_of(&i).unwrap();
        assert_eq!(g.edge_count(), 3);
        assert_eq!(g.isolated_vertices().len(), 1);
        assert_eq!(edge_ideal(&g), i);
        assert_eq!(graph_of(&ideal(&["a*b"])).unwrap().vertex_count(), 2);
        assert!(matches!(
            graph_of(&ideal(&["a*b*c", "a*d"])),
            Err(Error::NotAGraphGenerator(_, 3))
        ));
        assert!(matches!(graph_of(&ideal(&["a^2"])), Err(Error::NotSquarefree(_))));
    }

    fn brute_force_height(i: &MonomialIdeal) -> usize {
        let vars: Vec<Variable> = i.support().into_iter().collect();
        (0u32..1 << vars.len())
            .filter(|mask| {
                i.generators().iter().all(|g| {
                    vars.iter()
                        .enumerate()
                        .any(|(k, x)| mask >> k & 1 == 1 && g.exponent(x) > 0)
                })
            })
            .map(|mask| mask.count_ones() as usize)
            .min()
            .unwrap()
    }

    #[test]
    fn height_examples() {
        let tri = ideal(&["a*b", "a*c", "b*c"]);
        assert_eq!(brute_force_height(&tri), 2);
        assert_eq!(tri.height().unwrap(), 2);
        assert_eq!(ideal(&["b", "c"]).height().unwrap(), 2);
        let p5 = edge_ideal(&families::path(5));
        assert_eq!(brute_force_height(&p5), 2);
        assert_eq!(p5.height().unwrap(), 2);
        let c5 = edge_ideal(&families::cycle(5));
        assert_eq!(c5.height().unwrap(), brute_force_height(&c5));
        assert_eq!(MonomialIdeal::zero([]).height(), Err(Error::ZeroIdeal));
    }

    #[test]
    fn height_matches_brute_force_on_small_graphs() {
        for g in crate::enumerate::generate_connected_graphs(6).unwrap() {
            let i = edge_ideal(&g);
            assert_eq!(i.height().unwrap(), brute_force_height(&i), "{g:?}");
        }
    }
}

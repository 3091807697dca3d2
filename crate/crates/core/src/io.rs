//! Text formats: edge lists, graph6 detection, monomial lists and DOT export.
//!
//! Edge lists hold one record per line. Two tokens declare an edge, one token
//! declares a vertex, and blank lines or lines starting with `#` are skipped.
//! Monomial lists hold one generator per line in `x1*x2^2` notation, with an
//! optional leading `vars: a b c` header fixing the universe.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::classify::Obstruction;
use crate::enumerate::graph6;
use crate::error::{Error, Result};
use crate::graph::{Edge, Graph, VertexId};
use crate::ideal::{parse_monomial, Monomial, MonomialIdeal, Variable};

/// How [`parse_graph_input`] should read its text.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum GraphFormat {
    /// graph6 when the text is a single whitespace-free line that decodes as
    /// graph6, edge list otherwise.
    #[default]
    Auto,
    EdgeList,
    Graph6,
}

fn records(text: &str) -> impl Iterator<Item = (usize, &str)> {
    text.lines()
        .enumerate()
        .map(|(i, l)| (i + 1, l.trim()))
        .filter(|(_, l)| !l.is_empty() && !l.starts_with('#'))
}

fn vertex(line: usize, token: &str) -> Result<VertexId> {
    VertexId::new(token).map_err(|_| Error::parse(line, format!("malformed vertex name {token:?}")))
}

/// Parses the edge-list format. Errors carry the offending line number.
///
/// ```
/// let g = nci::io::parse_edge_list("a b\na c\nb c\nd\n").unwrap();
/// assert_eq!((g.vertex_count(), g.edge_count()), (4, 3));
/// ```
pub fn parse_edge_list(text: &str) -> Result<Graph> {
    let mut g = Graph::new();
    for (line, record) in records(text) {
        let tokens: Vec<&str> = record.split_whitespace().collect();
        match tokens[..] {
            [v] => {
                g.add_vertex(vertex(line, v)?);
            }
            [u, v] => {
                let (u, v) = (vertex(line, u)?, vertex(line, v)?);
                if u == v {
                    return Err(Error::parse(line, format!("loop at vertex {u}")));
                }
                if g.has_edge(&u, &v) {
                    return Err(Error::parse(line, format!("duplicate edge {u} {v}")));
                }
                g.add_edge(u, v)?;
            }
            _ => {
                return Err(Error::parse(
                    line,
                    format!("expected one or two tokens, found {}", tokens.len()),
                ))
            }
        }
    }
    Ok(g)
}

fn looks_like_graph6(text: &str) -> bool {
    let mut lines = records(text);
    match (lines.next(), lines.next()) {
        (Some((_, l)), None) => !l.contains(char::is_whitespace) && graph6::decode(l).is_ok(),
        _ => false,
    }
}

/// Reads a graph in the requested format.
///
/// Under [`GraphFormat::Auto`] a lone token such as `Bw` that happens to be
/// valid graph6 is read as graph6; pass [`GraphFormat::EdgeList`] to force the
/// single-vertex reading.
pub fn parse_graph_input(text: &str, format: GraphFormat) -> Result<Graph> {
    match format {
        GraphFormat::EdgeList => parse_edge_list(text),
        GraphFormat::Graph6 => {
            let (line, record) = records(text)
                .next()
                .ok_or_else(|| Error::parse(1, "empty graph6 input"))?;
            graph6::decode(record).map_err(|e| match e {
                Error::Parse { message, .. } => Error::Parse { line, message },
                other => other,
            })
        }
        GraphFormat::Auto if looks_like_graph6(text) => parse_graph_input(text, GraphFormat::Graph6),
        GraphFormat::Auto => parse_edge_list(text),
    }
}

/// Writes edges as `u v` lines, then isolated vertices on lines of their own.
pub fn render_edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for e in g.edges() {
        let (u, v) = e.endpoints();
        let _ = writeln!(out, "{u} {v}");
    }
    for v in g.isolated_vertices() {
        let _ = writeln!(out, "{v}");
    }
    out
}

/// A parsed ideal together with notes for the diagnostic stream.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ParsedIdeal {
    pub ideal: MonomialIdeal,
    pub warnings: Vec<String>,
}

/// Parses the monomial-list format and minimalizes the generators.
///
/// ```
/// let parsed = nci::io::parse_ideal_input("a*b\na*b*c\n").unwrap();
/// assert_eq!(parsed.ideal.to_string(), "(a*b)");
/// assert_eq!(parsed.warnings.len(), 1);
/// ```
pub fn parse_ideal_input(text: &str) -> Result<ParsedIdeal> {
    let mut universe: Option<BTreeSet<Variable>> = None;
    let mut gens: Vec<Monomial> = Vec::new();
    for (idx, (line, record)) in records(text).enumerate() {
        if let Some(rest) = record.strip_prefix("vars:") {
            if idx != 0 {
                return Err(Error::parse(line, "the vars: header must come first"));
            }
            let vars = rest
                .split_whitespace()
                .map(|t| Variable::new(t).map_err(|_| Error::parse(line, format!("malformed variable {t:?}"))))
                .collect::<Result<BTreeSet<_>>>()?;
            universe = Some(vars);
            continue;
        }
        let m = parse_monomial(record).map_err(|m| Error::parse(line, m))?;
        if m.is_one() {
            return Err(Error::parse(line, "generator 1 makes the unit ideal"));
        }
        if let Some(u) = &universe {
            if let Some(x) = m.support().find(|x| !u.contains(*x)) {
                return Err(Error::parse(line, format!("variable {x} is not declared in vars:")));
            }
        }
        gens.push(m);
    }
    let given: BTreeSet<Monomial> = gens.iter().cloned().collect();
    let ideal = match universe {
        Some(u) => MonomialIdeal::new(gens.iter().cloned(), u)?,
        None => MonomialIdeal::from_generators(gens.iter().cloned())?,
    };
    let mut warnings = Vec::new();
    if given.len() < gens.len() {
        warnings.push(format!(
            "dropped {} repeated generator(s)",
            gens.len() - given.len()
        ));
    }
    let dropped: Vec<String> = given
        .difference(ideal.generators())
        .map(Monomial::to_string)
        .collect();
    if !dropped.is_empty() {
        warnings.push(format!(
            "input is not an antichain; dropped non-minimal generator(s): {}",
            dropped.join(", ")
        ));
    }
    Ok(ParsedIdeal { ideal, warnings })
}

fn quote(v: &VertexId) -> String {
    format!("\"{v}\"")
}

/// Graphviz rendering. Obstruction vertices carry `obstruction="v1"` through
/// `"v5"` in witness order and tree edges carry `tree="true"`.
pub fn to_dot(g: &Graph, obstruction: Option<&Obstruction>) -> String {
    let mut out = String::from("graph G {\n");
    for v in g.vertices() {
        let role = obstruction.and_then(|o| o.vertices.iter().position(|w| w == v));
        match role {
            Some(i) => {
                let _ = writeln!(out, "  {} [obstruction=\"v{}\"];", quote(v), i + 1);
            }
            None => {
                let _ = writeln!(out, "  {};", quote(v));
            }
        }
    }
    let in_tree = |e: &Edge| obstruction.is_some_and(|o| o.tree_edges.contains(e));
    for e in g.edges() {
        let (u, v) = e.endpoints();
        if in_tree(e) {
            let _ = writeln!(out, "  {} -- {} [tree=\"true\"];", quote(u), quote(v));
        } else {
            let _ = writeln!(out, "  {} -- {};", quote(u), quote(v));
        }
    }
    out.push_str("}\n");
    out
}

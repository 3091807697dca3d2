//! Text and JSON shapes for command output.

use std::fmt::Write as _;

use nci::enumerate::{graph6, CensusRow, CrossValidation};
use nci::{BettiTable, ClassificationReport, Evidence, Graph, MonomialIdeal, TotalRankCheck};
use serde_json::{json, Value};

pub fn classification(r: &ClassificationReport) -> String {
    let mut out = format!("verdict: {}\nmethod: {}\n", r.verdict, r.method);
    match &r.evidence {
        Some(Evidence::FailingVertex { failing_vertex }) => {
            let _ = writeln!(out, "failing vertex: {failing_vertex}");
        }
        Some(Evidence::Obstruction(o)) => {
            let names: Vec<&str> = o.vertices.iter().map(|v| v.as_str()).collect();
            let edges: Vec<String> = o.tree_edges.iter().map(|e| e.to_string()).collect();
            let _ = writeln!(out, "obstruction: {:?} on {}", o.tree_type, names.join(" "));
            let _ = writeln!(out, "tree edges: {}", edges.join(" "));
        }
        Some(Evidence::Rule { rule }) => {
            let _ = writeln!(out, "rule: {rule}");
        }
        None => {}
    }
    out
}

fn edges_json(g: &Graph) -> Vec<[&str; 2]> {
    g.edges()
        .iter()
        .map(|e| {
            let (u, v) = e.endpoints();
            [u.as_str(), v.as_str()]
        })
        .collect()
}

pub fn graph_json(g: &Graph) -> Value {
    json!({
        "vertices": g.vertices(),
        "edges": edges_json(g),
        "isolated": g.isolated_vertices(),
    })
}

pub fn enumerated_json(g: &Graph) -> Value {
    json!({
        "graph6": graph6::encode(g),
        "edges": edges_json(g),
    })
}

pub fn generator_strings(i: &MonomialIdeal) -> Vec<String> {
    i.sorted_generators().iter().map(|m| m.to_string()).collect()
}

/// Rows are indexed by `j - i`, columns by `i`, with `.` for zero.
pub fn betti(t: &BettiTable) -> String {
    let pd = t.projective_dimension();
    let max_row = t
        .entries()
        .keys()
        .map(|&(i, j)| j as usize - i)
        .max()
        .unwrap_or(0);
    let cell = |x: u64| if x == 0 { ".".to_string() } else { x.to_string() };
    let width = t
        .sequence()
        .iter()
        .map(|x| x.to_string().len())
        .max()
        .unwrap_or(1);
    let mut out = format!("height: {}\n", t.height());
    let mut line = |label: String, cells: Vec<String>| {
        let _ = write!(out, "{label:>6}");
        for c in cells {
            let _ = write!(out, " {c:>width$}");
        }
        out.push('\n');
    };
    line(String::new(), (0..=pd).map(|i| i.to_string()).collect());
    line("total:".into(), t.sequence().into_iter().map(cell).collect());
    for r in 0..=max_row {
        let cells = (0..=pd).map(|i| cell(t.get(i, (i + r) as u32))).collect();
        line(format!("{r}:"), cells);
    }
    out
}

pub fn total_rank(c: &TotalRankCheck) -> String {
    let status = match (c.meets_bound, c.equality) {
        (true, true) => "meets the bound with equality",
        (true, false) => "meets the bound",
        (false, _) => "VIOLATES the bound",
    };
    format!(
        "total {} height {} bound {}: {status}\n",
        c.total, c.height, c.bound
    )
}

pub fn cross_validation(cv: &CrossValidation) -> String {
    let mut out = format!("checked {} graphs, {} mismatches\n", cv.checked, cv.mismatches.len());
    for m in &cv.mismatches {
        let _ = writeln!(
            out,
            "{}  definitional {}  structural {}",
            m.graph6, m.definitional, m.structural
        );
    }
    out
}

pub fn census(rows: &[CensusRow]) -> String {
    let mut out = String::from("n  connected  nci  neither  ci\n");
    for r in rows {
        let _ = writeln!(
            out,
            "{:<2} {:>9} {:>4} {:>8} {:>3}",
            r.n, r.connected_count, r.nci_count, r.neither_count, r.ci_count
        );
    }
    out
}

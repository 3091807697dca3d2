use std::io::Write;
use std::process::{Command, Output, Stdio};

const EXAMPLE: &str = "f d\nf g\ng d\nd b\nb c\nb a\nd e\n";

fn nci(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_nci"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap()
}

#[test]
fn classify_example_graph_as_json() {
    let o = nci(&["classify", "--format", "json", "-"], EXAMPLE);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["verdict"], "NEITHER");
    assert_eq!(v["method"], "structural");
    assert_eq!(v["evidence"]["tree_type"], "T");
    assert_eq!(v["evidence"]["vertices"].as_array().unwrap().len(), 5);
    assert_eq!(v["evidence"]["tree_edges"].as_array().unwrap().len(), 4);
}

#[test]
fn text_and_json_verdicts_agree() {
    for (input, verdict) in [("a b\nb c\n", "NCI"), ("a b\n", "CI"), (EXAMPLE, "NEITHER")] {
        for extra in [&[][..], &["--definitional"][..]] {
            let mut args = vec!["classify"];
            args.extend_from_slice(extra);
            let text = stdout(&nci(&args, input));
            assert!(text.starts_with(&format!("verdict: {verdict}\n")), "{text}");
            args.extend(["--format", "json"]);
            assert_eq!(json(&nci(&args, input))["verdict"], verdict);
        }
    }
}

#[test]
fn definitional_evidence_is_failing_vertex() {
    let v = json(&nci(&["classify", "--definitional", "--format", "json"], EXAMPLE));
    assert_eq!(v["method"], "definitional");
    assert_eq!(v["evidence"], serde_json::json!({"failing_vertex": "a"}));
}

#[test]
fn dot_output_marks_witness() {
    let dot = stdout(&nci(&["classify", "--format", "dot"], EXAMPLE));
    assert!(dot.starts_with("graph G {"));
    for k in 1..=5 {
        assert!(dot.contains(&format!("obstruction=\"v{k}\"")));
    }
    assert_eq!(dot.matches("tree=\"true\"").count(), 4);
}

#[test]
fn invert_prints_edges_then_isolated() {
    let o = nci(&["invert", "--vertex", "f"], EXAMPLE);
    assert_eq!(stdout(&o), "a b\nb c\nd\ne\ng\n");
    let v = json(&nci(&["invert", "--vertex", "c", "--format", "json"], EXAMPLE));
    assert_eq!(v["edges"].as_array().unwrap().len(), 4);
    assert_eq!(v["isolated"], serde_json::json!(["a", "b"]));
}

#[test]
fn betti_of_five_cycle() {
    let v = json(&nci(&["betti", "--format", "json", "--inline", "a b;b c;c d;d e;e a"], ""));
    assert_eq!(v["sequence"], serde_json::json!([1, 5, 5, 1]));
    assert_eq!(v["height"], 3);
    assert_eq!(v["total"], 12);
    assert_eq!(v["rows"][1], serde_json::json!({"i": 1, "entries": {"2": 5}}));
}

#[test]
fn betti_from_ideal_input() {
    let v = json(&nci(&["betti", "--ideal", "--format", "json"], "a*b\nb*c\nc*d\n"));
    assert_eq!(v["sequence"], serde_json::json!([1, 3, 2]));
}

#[test]
fn total_rank_reports_equality() {
    let v = json(&nci(&["total-rank", "--format", "json", "--inline", "a b;b c;a c"], ""));
    assert_eq!(v["total"], 6);
    assert_eq!(v["bound"], 6);
    assert_eq!(v["equality"], true);
}

#[test]
fn cross_validate_five() {
    let o = nci(&["cross-validate", "--n", "5", "--format", "json"], "");
    assert_eq!(json(&o), serde_json::json!({"checked": 21, "mismatches": []}));
}

#[test]
fn census_rows() {
    let v = json(&nci(&["census", "--n-max", "4", "--format", "json"], ""));
    let rows = v.as_array().unwrap();
    assert_eq!(rows.len(), 4);
    assert_eq!(
        rows[1],
        serde_json::json!({"n": 2, "connected_count": 1, "nci_count": 0, "neither_count": 0, "ci_count": 1})
    );
    assert_eq!(rows[3]["nci_count"], 6);
}

#[test]
fn enumerate_lists_graph6() {
    let out = stdout(&nci(&["enumerate", "--n", "4"], ""));
    assert_eq!(out.lines().count(), 6);
    assert!(out.lines().any(|l| l == "C~"));
}

#[test]
fn graph6_input_is_detected() {
    let v = json(&nci(&["classify", "--format", "json"], "C~\n"));
    assert_eq!(v["verdict"], "NCI");
    let forced = nci(&["classify", "--input-format", "edges"], "C~\n");
    assert_eq!(forced.status.code(), Some(2));
}

#[test]
fn ideal_warnings_go_to_stderr() {
    let o = nci(&["ci-check", "--ideal"], "a*b\na*b*c\n");
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o), "(a*b): CI\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("warning"));
}

#[test]
fn hypergraph_search_finds_coned_pair() {
    let v = json(&nci(&["hypergraph-search", "--samples", "0", "--format", "json"], ""));
    let expected = serde_json::json!(["a*g", "b*g", "c*g", "d*g", "e*g", "f*g", "a*b*c", "d*e*f"]);
    assert!(v["ideals"].as_array().unwrap().contains(&expected));
    let empty = json(&nci(&["hypergraph-search", "--max-vars", "2", "--format", "json"], ""));
    assert_eq!(empty["ideals"], serde_json::json!([]));
}

#[test]
fn exit_codes() {
    assert_eq!(nci(&["classify"], "a a\n").status.code(), Some(2));
    assert_eq!(nci(&["classify"], "a b\nb a\n").status.code(), Some(2));
    assert_eq!(nci(&["classify", "--ideal"], "x^0\n").status.code(), Some(2));
    assert_eq!(nci(&["classify", "--ideal"], "a\n1\n").status.code(), Some(2));
    assert_eq!(nci(&["classify", "--unknown-flag"], "").status.code(), Some(2));
    assert_eq!(nci(&["invert", "--vertex", "z"], "a b\n").status.code(), Some(3));
    assert_eq!(nci(&["total-rank"], "a b\n").status.code(), Some(3));
    assert_eq!(nci(&["enumerate", "--n", "9"], "").status.code(), Some(3));
    assert_eq!(nci(&["hypergraph-search", "--max-degree", "2"], "").status.code(), Some(3));
    assert_eq!(nci(&["betti", "--format", "dot"], "a b\n").status.code(), Some(3));
    let o = nci(&["classify"], "a b\nb c\nb a\n");
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));
}

#[test]
fn output_flag_writes_file() {
    let dir = tempfile::tempdir().unwrap();
    let path = dir.path().join("report.json");
    let o = nci(&["census", "--n-max", "3", "--format", "json", "--output", path.to_str().unwrap()], "");
    assert_eq!(o.status.code(), Some(0));
    assert!(o.stdout.is_empty());
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written, stdout(&nci(&["census", "--n-max", "3", "--format", "json"], "")));
}

#[test]
fn repeated_runs_are_byte_identical() {
    for args in [
        &["cross-validate", "--n", "6", "--format", "json"][..],
        &["hypergraph-search", "--samples", "500", "--seed", "11"][..],
        &["classify", "--format", "dot"][..],
    ] {
        let a = nci(args, EXAMPLE);
        let b = nci(args, EXAMPLE);
        assert_eq!(a.stdout, b.stdout);
    }
}

use std::io::Write;
use std::process::{Command, Output};

fn hytrex(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_hytrex")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn graph_file(json: &str) -> tempfile::NamedTempFile {
    let mut f = tempfile::NamedTempFile::new().unwrap();
    f.write_all(json.as_bytes()).unwrap();
    f
}

fn family_file(tokens: &[&str]) -> tempfile::NamedTempFile {
    let mut args = vec!["family"];
    args.extend_from_slice(tokens);
    args.push("--json");
    let out = hytrex(&args);
    assert!(out.status.success(), "{}", stderr(&out));
    graph_file(&stdout(&out))
}

#[test]
fn interior_of_the_hexagon() {
    let f = family_file(&["cycle", "3"]);
    let out = hytrex(&["interior", f.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(stdout(&out), "1 + x + x^2\n");
    assert_eq!(stderr(&out), "order: e1,e2,e3\n");
}

#[test]
fn exterior_depends_on_the_hyperedge_class() {
    let f = family_file(&["complete_bipartite", "2", "3"]);
    let path = f.path().to_str().unwrap();
    assert_eq!(stdout(&hytrex(&["exterior", path, "--hyperedges", "e"])), "1 + y + y^2\n");
    assert_eq!(stdout(&hytrex(&["exterior", path, "--hyperedges", "v"])), "1 + 2y\n");
}

#[test]
fn family_input_needs_no_file() {
    let out = hytrex(&["interior", "family", "ladder", "3"]);
    assert_eq!(stdout(&out), "1 + 3x + 3x^2 + x^3\n");
}

#[test]
fn json_polynomials_are_coefficient_arrays() {
    let out = hytrex(&["interior", "family", "complete_bipartite", "3", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v, serde_json::json!([1, 4, 1]));
}

#[test]
fn order_is_reported_and_validated() {
    let out = hytrex(&["hypertrees", "family", "cycle", "3", "--order", "e3,e1,e2"]);
    assert!(out.status.success());
    assert_eq!(stderr(&out), "order: e3,e1,e2\n");
    assert!(stdout(&out).ends_with("3 hypertrees\n"));
    let bad = hytrex(&["interior", "family", "cycle", "3", "--order", "e1,e9,e2"]);
    assert_eq!(bad.status.code(), Some(2));
}

#[test]
fn hypertree_json_lists_inactivities() {
    let out = hytrex(&["hypertrees", "family", "complete_bipartite", "2", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let rows = v["hypertrees"].as_array().unwrap();
    assert_eq!(rows.len(), 3);
    let ext: Vec<u64> = rows.iter().map(|r| r["external_inactivity"].as_u64().unwrap()).collect();
    let mut sorted = ext.clone();
    sorted.sort();
    assert_eq!(sorted, [0, 1, 2]);
}

#[test]
fn tutte_of_the_triangle() {
    let out = hytrex(&["tutte", "family", "cycle", "3"]);
    assert_eq!(stdout(&out), "T(x, y) = y + x + x^2\nI(x) = 1 + x + x^2\nX(y) = 1 + 2y\n");
}

#[test]
fn transforms_chain_through_files() {
    let out = hytrex(&["transform", "contract", "family", "cycle", "3", "--at", "e1", "--json"]);
    assert!(out.status.success(), "{}", stderr(&out));
    let f = graph_file(&stdout(&out));
    assert_eq!(stdout(&hytrex(&["interior", f.path().to_str().unwrap()])), "1 + x\n");
    let joined = hytrex(&[
        "transform", "edge-join", "family", "cycle", "2", "--with", "family cycle 2", "--at", "v1", "--at", "e1",
        "--at", "v1", "--at", "e1", "--json",
    ]);
    let f = graph_file(&stdout(&joined));
    assert_eq!(stdout(&hytrex(&["interior", f.path().to_str().unwrap()])), "1 + 2x + x^2\n");
}

#[test]
fn decomposition_as_json() {
    let out = hytrex(&["transform", "decompose", "family", "complete_bipartite", "2", "3", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    let coeffs: Vec<i64> = v["terms"].as_array().unwrap().iter().map(|t| t["coefficient"].as_i64().unwrap()).collect();
    assert_eq!(coeffs, [1, -1]);
}

#[test]
fn seeded_families_are_reproducible() {
    let a = stdout(&hytrex(&["family", "ear_graph", "6", "--seed", "3", "--json"]));
    let b = stdout(&hytrex(&["family", "ear_graph", "6", "--seed", "3", "--json"]));
    assert_eq!(a, b);
}

#[test]
fn quick_suite_reports_json_and_exits_zero() {
    let out = hytrex(&["verify", "all", "--seed", "7", "--quick"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["passed"], true);
    assert_eq!(v["seed"], 7);
    assert_eq!(v["checks"].as_array().unwrap().len(), 11);
}

#[test]
fn full_suite_at_seed_seven() {
    let out = hytrex(&["verify", "all", "--seed", "7"]);
    assert_eq!(out.status.code(), Some(0), "{}", stderr(&out));
}

#[test]
fn single_check_runs() {
    let out = hytrex(&["verify", "negative_controls"]);
    assert_eq!(out.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&out)).unwrap();
    assert_eq!(v["verdict"], "pass");
}

#[test]
fn output_is_independent_of_threads() {
    let one = hytrex(&["hypertrees", "family", "complete_bipartite", "3", "4", "--threads", "1"]);
    let four = hytrex(&["hypertrees", "family", "complete_bipartite", "3", "4", "--threads", "4"]);
    assert_eq!(stdout(&one), stdout(&four));
}

#[test]
fn input_errors_exit_two() {
    assert_eq!(hytrex(&["interior", "/no/such/file.json"]).status.code(), Some(2));
    assert_eq!(hytrex(&["interior", "--bogus", "x"]).status.code(), Some(2));
    assert_eq!(hytrex(&["verify", "nonsense"]).status.code(), Some(2));
    let malformed = graph_file("{\"v\": [\"a\"]");
    assert_eq!(hytrex(&["interior", malformed.path().to_str().unwrap()]).status.code(), Some(2));
    let disconnected = graph_file(r#"{"v":["a","b"],"e":["x","y"],"adj":[["a","x"],["b","y"]]}"#);
    let out = hytrex(&["interior", disconnected.path().to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    assert!(stderr(&out).contains("not connected"));
}

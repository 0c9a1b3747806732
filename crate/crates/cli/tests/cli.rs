//! End-to-end CLI behavior: output shapes, exit codes, schema diagnostics,
//! and the Groebner cache.

use std::process::{Command, Output};

fn icl(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_icl"))
        .args(args)
        .output()
        .expect("run icl")
}

fn stdout(o: &Output) -> String {
    String::from_utf8_lossy(&o.stdout).trim().to_string()
}

#[test]
fn gb_human_and_json() {
    let o = icl(&["ideal", "gb", "--ideal", "x^2 - y, x*y - 1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x^2 - y, x*y - 1, y^2 - x");
    let o = icl(&["ideal", "gb", "--ideal", "x^2 - y, x*y - 1", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["basis"][2], "y^2 - x");
}

#[test]
fn membership_and_colength() {
    let o = icl(&["ideal", "member", "--ideal", "x^2, y^2", "--f", "x^2 + y^2"]);
    assert_eq!(stdout(&o), "true");
    let o = icl(&["ideal", "colength", "--ideal", "x^2, y^2"]);
    assert_eq!(stdout(&o), "4");
}

#[test]
fn monomial_closure_json_shape() {
    let o = icl(&["ideal", "closure", "--monomial", "[[2,0],[0,2]]", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let gens: Vec<&str> = v["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
    assert_eq!(gens, vec!["y^2", "x*y", "x^2"]);
}

#[test]
fn fp_ring_flag() {
    // coefficients print as canonical residues: -1 is 65536
    let o = icl(&["ideal", "gb", "--ring", "x,y/Fp:65537", "--ideal", "x^2 - y, x*y - 1"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "x^2 + 65536*y, x*y + 65536, y^2 + 65536*x");
}

#[test]
fn exit_codes() {
    // 0: closed check succeeding
    assert_eq!(icl(&["ideal", "is-closed", "--ideal", "x^2, x*y, y^2"]).status.code(), Some(0));
    // 2: inconclusive reduction probe
    let o = icl(&["ideal", "reduction", "--ideal", "x^2, y^2", "--sub", "x^2"]);
    assert_eq!(o.status.code(), Some(2));
    // 3: parse failure
    let o = icl(&["ideal", "gb", "--ideal", "x^2 +"]);
    assert_eq!(o.status.code(), Some(3));
    // 3: bad ring spec
    let o = icl(&["ideal", "gb", "--ring", "x,y/GF9", "--ideal", "x"]);
    assert_eq!(o.status.code(), Some(3));
}

#[test]
fn trace_emits_base_point_tree() {
    let o = icl(&["ideal", "is-closed", "--ideal", "x^2, y^3", "--trace", "--json"]);
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["closed"], false);
    assert_eq!(v["trace"]["point"], "origin");
    assert!(v["trace"]["children"].as_array().is_some());
}

#[test]
fn schema_error_pointer() {
    let dir = std::env::temp_dir();
    let path = dir.join("icl_cli_schema_err.json");
    std::fs::write(&path, r#"{"ring":{"vars":["x","y"]},"objects":{},"tasks":[]}"#).unwrap();
    let o = icl(&["run", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    let err = String::from_utf8_lossy(&o.stderr);
    assert!(err.contains("/ring/field"), "stderr was: {err}");

    std::fs::write(&path, r#"{"ring":{"vars":["x","y"],"field":"Q"},"objects":{"I":{"gens":["x"]}},"tasks":[{"op":"frobnicate","target":"I"}]}"#).unwrap();
    let o = icl(&["run", path.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(3));
    assert!(String::from_utf8_lossy(&o.stderr).contains("/tasks/0/op"));
}

#[test]
fn problem_file_runs_tasks() {
    let path = std::env::temp_dir().join("icl_cli_problem_ok.json");
    std::fs::write(
        &path,
        r#"{"version":1,"ring":{"vars":["x","y"],"field":"Q"},
            "objects":{"I":{"gens":["x^2","y^2"]},"J":{"gens":["x","y"]}},
            "tasks":[{"op":"quotient","target":"I","other":"J"},
                     {"op":"dim","target":"I"},
                     {"op":"closure","target":"I"}]}"#,
    )
    .unwrap();
    let o = icl(&["run", path.to_str().unwrap(), "--json"]);
    assert!(o.status.success());
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    let results = v["results"].as_array().unwrap();
    assert_eq!(results.len(), 3);
    assert_eq!(results[1]["result"]["dim"], 0);
    let closure: Vec<&str> = results[2]["result"]["generators"].as_array().unwrap().iter().map(|g| g.as_str().unwrap()).collect();
    assert_eq!(closure, vec!["y^2", "x*y", "x^2"]);
}

#[test]
fn cache_round_trip_and_poison_recovery() {
    let dir = std::env::temp_dir().join("icl_cli_gb_cache_test");
    let _ = std::fs::remove_dir_all(&dir);
    let d = dir.to_str().unwrap();
    let fresh = stdout(&icl(&["ideal", "gb", "--ideal", "x^2 - y, x*y - 1", "--cache", d]));
    let entries: Vec<_> = std::fs::read_dir(&dir).unwrap().collect();
    assert_eq!(entries.len(), 1);
    let cached = stdout(&icl(&["ideal", "gb", "--ideal", "x^2 - y, x*y - 1", "--cache", d]));
    assert_eq!(fresh, cached);
    // poison the entry; the invariant check must reject and recompute it
    let entry = entries[0].as_ref().unwrap().path();
    std::fs::write(&entry, r#"["x"]"#).unwrap();
    let recomputed = stdout(&icl(&["ideal", "gb", "--ideal", "x^2 - y, x*y - 1", "--cache", d]));
    assert_eq!(fresh, recomputed);
    assert_ne!(std::fs::read_to_string(&entry).unwrap(), r#"["x"]"#);
}

#[test]
fn verify_exit_zero_on_pass() {
    let o = icl(&["verify", "itoh", "--exponents", "2,2", "--nmax", "2", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    let v: serde_json::Value = serde_json::from_str(&stdout(&o)).unwrap();
    assert_eq!(v["verdict"]["kind"], "Pass");
}

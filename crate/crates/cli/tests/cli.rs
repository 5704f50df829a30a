use std::process::{Command, Output};

use serde_json::Value;
use tautilt::dynkin::auslander_presentation;
use tautilt_cli::dsl::{parse_dsl, to_dsl};

fn tautilt(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_tautilt"))
        .args(args)
        .output()
        .expect("binary runs")
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).expect("stdout is JSON")
}

const SINK: &str = "vertices: 3 4 5\narrow: a : 4 -> 3\narrow: b : 5 -> 3\n";

#[test]
fn count_a1_is_one() {
    let out = tautilt(&["count", "--series", "A", "--rank", "1"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 1);
    for field in ["input", "route", "count", "nodes", "edges", "p", "elapsed_ms"] {
        assert!(v.get(field).is_some(), "missing {field}");
    }
}

#[test]
fn count_all_routes_agree() {
    let out = tautilt(&["count", "--series", "d", "--rank", "5", "--route", "all", "--threads", "2"]);
    assert_eq!(out.status.code(), Some(0));
    let v = json(&out);
    assert_eq!(v["count"], 56);
    assert_eq!(v["agree"], true);
    let routes = v["routes"].as_array().unwrap();
    assert_eq!(routes.len(), 4);
}

#[test]
fn enumerate_file_writes_dot() {
    let dir = tempfile::tempdir().unwrap();
    let file = dir.path().join("sink.dsl");
    let dot = dir.path().join("sink.dot");
    std::fs::write(&file, SINK).unwrap();
    let out = tautilt(&[
        "enumerate",
        file.to_str().unwrap(),
        "--dot",
        dot.to_str().unwrap(),
        "--labels",
        "dims",
    ]);
    assert_eq!(out.status.code(), Some(0), "{}", String::from_utf8_lossy(&out.stderr));
    let v = json(&out);
    assert_eq!(v["nodes"], 14);
    assert_eq!(v["edges"], 21);
    assert_eq!(v["node_list"].as_array().unwrap().len(), 14);
    let text = std::fs::read_to_string(&dot).unwrap();
    assert!(text.starts_with("digraph exchange {"));
    assert_eq!(text.matches(" -> ").count(), 21);
    assert_eq!(text.matches("[label=\"[").count(), 14);
    // Deterministic output.
    let again = tautilt(&["enumerate", file.to_str().unwrap(), "--labels", "dims", "--threads", "1"]);
    let w = json(&again);
    assert_eq!(v["node_list"], w["node_list"]);
    assert_eq!(v["edge_list"], w["edge_list"]);
}

#[test]
fn enumerate_series_defaults_to_reduced_algebra() {
    let out = tautilt(&["enumerate", "--series", "D", "--rank", "4"]);
    assert_eq!(json(&out)["nodes"], 28);
    let out = tautilt(&["enumerate", "--series", "A", "--rank", "3", "--algebra", "gamma"]);
    assert_eq!(json(&out)["tilting"], 4);
}

#[test]
fn verify_lists() {
    let out = tautilt(&["verify", "--series", "D", "--rank", "4"]);
    assert_eq!(out.status.code(), Some(0));
    assert_eq!(json(&out)["passed"], true);
    let out = tautilt(&["verify", "--series", "A", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn exit_codes_and_error_json() {
    let dir = tempfile::tempdir().unwrap();
    let bad = dir.path().join("bad.dsl");
    std::fs::write(&bad, "vertices: 1 2\narrow: a : 1 -> 9\n").unwrap();
    let out = tautilt(&["enumerate", bad.to_str().unwrap()]);
    assert_eq!(out.status.code(), Some(2));
    let err: Value = serde_json::from_slice(&out.stderr).unwrap();
    assert_eq!(err["error"], "Parse");
    assert_eq!(err["exit_code"], 2);

    let kron = dir.path().join("kronecker.dsl");
    std::fs::write(&kron, "vertices: 1 2\narrow: a : 1 -> 2\narrow: b : 1 -> 2\n").unwrap();
    let out = tautilt(&["enumerate", kron.to_str().unwrap(), "--budget", "10"]);
    assert_eq!(out.status.code(), Some(3));

    let out = tautilt(&["count", "--series", "A", "--rank", "2", "--field", "100"]);
    assert_eq!(out.status.code(), Some(3));
    let out = tautilt(&["count", "--series", "E", "--rank", "9"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tautilt(&["count", "--rank", "3"]);
    assert_eq!(out.status.code(), Some(2));
    let out = tautilt(&["frobnicate"]);
    assert_eq!(out.status.code(), Some(2));
}

#[test]
fn present_round_trips() {
    for s in ["A1", "A4", "D4", "D6", "E6", "E7", "E8"] {
        let spec = s.parse().unwrap();
        let series = &s[..1];
        let rank = &s[1..];
        let out = tautilt(&["present", "--series", series, "--rank", rank]);
        assert_eq!(out.status.code(), Some(0));
        let text = String::from_utf8(out.stdout).unwrap();
        let parsed = parse_dsl(&text).unwrap().build().unwrap();
        let direct = auslander_presentation(spec, tautilt::DEFAULT_PRIME).unwrap();
        assert_eq!(parsed.dim(), direct.dim(), "{s}");
        assert_eq!(parsed.cartan_matrix(), direct.cartan_matrix(), "{s}");
        assert_eq!(to_dsl(&parsed), text);
    }
}

#[test]
fn d4_file_with_written_relations() {
    let text = "vertices: 1 2 3 4 5 6 7 8\n\
        arrow: u1 : 2 -> 1\narrow: u2 : 3 -> 2\narrow: u3 : 4 -> 3\narrow: u4 : 5 -> 3\n\
        arrow: u5 : 6 -> 4\narrow: u6 : 6 -> 5\narrow: u7 : 7 -> 6\narrow: u8 : 8 -> 6\n\
        relation: u1*u2 = 0\nrelation: u3*u5 - u4*u6 = 0\nrelation: u5*u7 = 0\nrelation: u6*u8 = 0\n";
    let alg = parse_dsl(text).unwrap().build().unwrap();
    let direct = auslander_presentation("D4".parse().unwrap(), tautilt::DEFAULT_PRIME).unwrap();
    assert_eq!(alg.dim(), direct.dim());
    assert!(alg.same_bound_quiver_shape(&direct));
}

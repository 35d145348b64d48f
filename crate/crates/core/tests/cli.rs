use std::path::Path;
use std::process::{Command, Output};

use serde_json::Value;

fn fqsym(args: &[&str], cache: Option<&Path>) -> Output {
    let mut cmd = Command::new(env!("CARGO_BIN_EXE_fqsym"));
    cmd.args(args);
    match cache {
        Some(dir) => cmd.env("FQSYM_CACHE_DIR", dir),
        None => cmd.arg("--no-cache"),
    };
    cmd.output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> Value {
    serde_json::from_str(stdout(o).trim()).unwrap()
}

fn perms(v: &Value) -> Vec<String> {
    v["terms"]
        .as_array()
        .unwrap()
        .iter()
        .map(|t| t["perm"].as_array().unwrap().iter().map(|d| d.to_string()).collect())
        .collect()
}

#[test]
fn expand_s_4132() {
    let o = fqsym(&["expand", "--basis", "S", "--index", "4132"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["basis"], "G");
    let mut got = perms(&v);
    got.sort();
    assert_eq!(got, ["1234", "1243", "2134", "2143", "3124", "3142", "4123", "4132"]);
}

#[test]
fn expand_onto_another_basis() {
    let o = fqsym(&["expand", "--basis", "S", "--index", "4132", "--to", "S"], None);
    let v = json(&o);
    assert_eq!(v["basis"], "S");
    assert_eq!(perms(&v), ["4132"]);
}

#[test]
fn convert_round_trips_through_json() {
    let o = fqsym(&["convert", "--elem", "2*M[231] - 1/2*M[21]", "--to", "F"], None);
    assert_eq!(o.status.code(), Some(0));
    let as_f = stdout(&o);
    let o = fqsym(&["convert", "--elem", as_f.trim(), "--to", "M"], None);
    let v = json(&o);
    assert_eq!(v["basis"], "M");
    let o = fqsym(&["convert", "--elem", &v.to_string(), "--to", "F"], None);
    assert_eq!(stdout(&o), as_f);
}

#[test]
fn text_format() {
    let o = fqsym(&["--format", "text", "expand", "--basis", "S", "--index", "21"], None);
    assert_eq!(stdout(&o).trim(), "G[1,2] + G[2,1]");
}

#[test]
fn fhat_to_f_matrix() {
    let o = fqsym(&["matrix", "--from", "Fhat", "--to", "F", "--n", "3"], None);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["entries"][5], serde_json::json!(["1", "1", "1", "0", "0", "1"]));
}

#[test]
fn cache_does_not_change_output() {
    let dir = tempfile::tempdir().unwrap();
    let args = ["matrix", "--from", "S", "--to", "M", "--n", "4"];
    let cold = fqsym(&args, Some(dir.path()));
    assert!(dir.path().join("v1").join("S-M-4.json").exists());
    let warm = fqsym(&args, Some(dir.path()));
    let uncached = fqsym(&args, None);
    assert_eq!(cold.stdout, warm.stdout);
    assert_eq!(cold.stdout, uncached.stdout);

    let conv = ["convert", "--elem", "S[2413] + 3*S[12]", "--to", "V"];
    let cached = fqsym(&conv, Some(dir.path()));
    assert_eq!(cached.status.code(), Some(0));
    assert_eq!(cached.stdout, fqsym(&conv, None).stdout);
}

#[test]
fn verify_suites_pass() {
    for args in [
        &["verify", "weyl", "--n", "4"][..],
        &["verify", "moebius", "--n", "3"],
        &["verify", "cauchy", "--degree", "2", "--letters", "2,2"],
        &["verify", "splitting", "--degree", "3"],
    ] {
        let o = fqsym(args, None);
        assert_eq!(o.status.code(), Some(0), "{args:?}: {}", stdout(&o));
    }
}

#[test]
fn split_counterexample_exits_one() {
    let o = fqsym(
        &["split", "--factors", "G[1]", "G[12]", "--H", "G[132]", "--class", "pr"],
        None,
    );
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["holds"], false);
    assert_eq!(v["in_declared_class"], false);

    let o = fqsym(&["split", "--factors", "G[1]", "G[12]", "--H", "S[123]"], None);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["holds"], true);
}

#[test]
fn poset_dot_and_json() {
    let o = fqsym(&["poset", "catenohedron", "--n", "3"], None);
    assert!(stdout(&o).starts_with("digraph"));
    let o = fqsym(&["--format", "json", "poset", "permutohedron", "--n", "3"], None);
    assert_eq!(o.status.code(), Some(0));
    json(&o);
}

#[test]
fn weyl_and_cauchy() {
    let o = fqsym(&["weyl", "--perm", "21", "--letters", "2"], None);
    assert_eq!(o.status.code(), Some(0));
    let o = fqsym(&["cauchy", "--degree", "2", "--mode", "hypoplactic"], None);
    assert_eq!(o.status.code(), Some(0));
}

#[test]
fn errors_exit_two() {
    for args in [
        &["expand", "--basis", "S", "--index", "1234567"][..],
        &["expand", "--basis", "Q", "--index", "12"],
        &["expand", "--basis", "G", "--index", "113"],
        &["convert", "--elem", "S[12", "--to", "G"],
        &["frobnicate"],
    ] {
        let o = fqsym(args, None);
        assert_eq!(o.status.code(), Some(2), "{args:?}");
        assert!(!o.stderr.is_empty());
    }
}

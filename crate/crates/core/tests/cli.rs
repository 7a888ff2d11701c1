use std::path::PathBuf;
use std::process::{Command, Output};

use serde_json::Value;

fn data(name: &str) -> String {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("tests/data").join(name).display().to_string()
}

fn run(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_fraccomp"))
        .args(args)
        .env_remove("FRACCOMP_MAX_ENUM")
        .output()
        .unwrap()
}

fn json(out: &Output) -> Value {
    serde_json::from_slice(&out.stdout).unwrap_or_else(|e| panic!("{e}: {}", String::from_utf8_lossy(&out.stdout)))
}

fn value(v: &Value, key: &str) -> String {
    let r = &v["values"][key];
    format!("{}/{}", r["num"].as_str().unwrap(), r["den"].as_str().unwrap())
}

#[test]
fn output_is_deterministic() {
    for args in [
        vec!["lp", "verify", "two_x.lp"],
        vec!["hyper", "params", "triangle.h"],
        vec!["graph", "budget", "c5.g", "--b", "3"],
        vec!["graph", "chromatic", "petersen.col"],
        vec!["matroid", "verify", "u23.m", "--validate"],
    ] {
        let args: Vec<String> = args.iter().map(|a| if a.contains('.') { data(a) } else { a.to_string() }).collect();
        let args: Vec<&str> = args.iter().map(String::as_str).collect();
        let a = run(&args);
        let b = run(&args);
        assert_eq!(a.status.code(), Some(0), "{args:?}: {}", String::from_utf8_lossy(&a.stdout));
        assert_eq!(a.stdout, b.stdout);
    }
}

#[test]
fn complement_round_trip() {
    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let once = dir.join("cli_once.lp");
    let twice = dir.join("cli_twice.lp");
    let src = data("two_x.lp");
    assert!(run(&["lp", "complement", &src, "-o", once.to_str().unwrap()]).status.success());
    assert!(run(&["lp", "complement", once.to_str().unwrap(), "-o", twice.to_str().unwrap()]).status.success());
    let original = fraccomp::ratlp::parse_lp(&std::fs::read_to_string(src).unwrap()).unwrap();
    let back = fraccomp::ratlp::parse_lp(&std::fs::read_to_string(twice).unwrap()).unwrap();
    assert_eq!(original, back);

    let h1 = dir.join("cli_dual.h");
    let h2 = dir.join("cli_dual2.h");
    assert!(run(&["hyper", "dual", &data("c5.h"), "-o", h1.to_str().unwrap()]).status.success());
    assert!(run(&["hyper", "dual", h1.to_str().unwrap(), "-o", h2.to_str().unwrap()]).status.success());
    let a = fraccomp::hypergraph::parse_hypergraph(&std::fs::read_to_string(data("c5.h")).unwrap()).unwrap();
    let b = fraccomp::hypergraph::parse_hypergraph(&std::fs::read_to_string(h2).unwrap()).unwrap();
    assert!(fraccomp::hypergraph::same_incidence(&a, &b));
}

#[test]
fn reported_values() {
    let v = json(&run(&["hyper", "params", &data("triangle.h")]));
    for key in ["k_f", "p_f", "mu_f", "tau_f"] {
        assert_eq!(value(&v, key), "3/2");
    }
    let v = json(&run(&["graph", "budget", &data("c5.g"), "--b", "3"]));
    assert_eq!(value(&v, "t"), "5/1");
    let v = json(&run(&["lp", "ip-pair", &data("two_x.lp")]));
    assert_eq!(v["status"], "ok");
    let v = json(&run(&["game", "verify", &data("identity.game")]));
    assert_eq!(value(&v, "v"), "1/2");
    assert_eq!(value(&v, "v_bar"), "1/2");
}

#[test]
fn exit_codes() {
    assert_eq!(run(&["--version"]).status.code(), Some(0));
    assert_eq!(run(&["hyper", "params", "/nonexistent.h"]).status.code(), Some(2));
    assert_eq!(run(&["hyper", "params", &data("c5.g")]).status.code(), Some(2));
    assert_eq!(run(&["lp", "frobnicate"]).status.code(), Some(2));

    let dir = PathBuf::from(env!("CARGO_TARGET_TMPDIR"));
    let edgeless = dir.join("cli_edgeless.g");
    std::fs::write(&edgeless, "graph 3\n").unwrap();
    let out = run(&["graph", "budget", edgeless.to_str().unwrap(), "--b", "1"]);
    assert_eq!(out.status.code(), Some(1));
    assert_eq!(json(&out)["status"], "error");

    let out = run(&["--max-enum", "2", "graph", "chromatic", &data("petersen.col")]);
    assert_eq!(out.status.code(), Some(3));
}

#[test]
fn budget_flag_overrides_environment() {
    let bin = env!("CARGO_BIN_EXE_fraccomp");
    let petersen = data("petersen.col");
    let env_only = Command::new(bin)
        .args(["graph", "chromatic", &petersen])
        .env("FRACCOMP_MAX_ENUM", "2")
        .output()
        .unwrap();
    assert_eq!(env_only.status.code(), Some(3));
    let flag = Command::new(bin)
        .args(["--max-enum", "100000", "graph", "chromatic", &petersen])
        .env("FRACCOMP_MAX_ENUM", "2")
        .output()
        .unwrap();
    assert_eq!(flag.status.code(), Some(0));
}

#[test]
fn table_output() {
    let out = run(&["--output", "table", "hyper", "params", &data("triangle.h")]);
    let text = String::from_utf8(out.stdout).unwrap();
    assert!(text.starts_with("status\tok"));
    assert!(text.contains("value\tk_f\t3/2\t1.5"));
}

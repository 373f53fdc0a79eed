use std::path::PathBuf;
use std::process::{Command, Output};

use tempfile::TempDir;

struct Workspace {
    dir: TempDir,
}

impl Workspace {
    fn new() -> Self {
        let w = Workspace { dir: tempfile::tempdir().unwrap() };
        w.write("weil.alg", "ring: Q\nvars: e1 e2\nrels: e1^2 ; e2^2\n");
        w.write("sq0.alg", "ring: Q\nvars: e1 e2\nrels: e1^2 ; e1*e2 ; e2^2\n");
        w.write("cusp.alg", "ring: Q\nvars: X Y\nrels: X^2 - Y^3\n");
        w.write("line.alg", "ring: Q\nvars: X\n");
        w.write("zero_row.txt", "e1, e2\n0, 0\n");
        w.write("simplex.txt", "# three rows\n1 + e1, e2\n1, 0\n1 + e2, e1\n");
        w.write("dtilde.txt", "e1, 0\n0, e2\n");
        w
    }

    fn write(&self, name: &str, text: &str) -> PathBuf {
        let p = self.dir.path().join(name);
        std::fs::write(&p, text).unwrap();
        p
    }

    fn run(&self, args: &[&str]) -> Output {
        Command::new(env!("CARGO_BIN_EXE_nbhd")).current_dir(self.dir.path()).args(args).output().unwrap()
    }
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json(o: &Output) -> serde_json::Value {
    serde_json::from_slice(&o.stdout).unwrap_or_else(|e| panic!("not JSON ({e}): {}", stdout(o)))
}

#[test]
fn nf_reduces_in_the_squares_only_algebra() {
    let w = Workspace::new();
    let o = w.run(&["nf", "--algebra", "weil.alg", "--poly", "e1^2+e1*e2"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "e1*e2");
    let o = w.run(&["--json", "nf", "--algebra", "weil.alg", "--poly", "e1^2+e1*e2"]);
    assert_eq!(json(&o)["normal_form"], "e1*e2");
}

#[test]
fn neighbour_verdicts_and_exit_codes() {
    let w = Workspace::new();
    let o = w.run(&["neighbour", "--algebra", "weil.alg", "--a", "e1,e2", "--b", "0,0"]);
    assert_eq!(o.status.code(), Some(1));
    assert!(stdout(&o).contains("e1*e2"), "{}", stdout(&o));
    let o = w.run(&["--json", "neighbour", "--algebra", "weil.alg", "--a", "e1,e2", "--b", "0,0"]);
    assert_eq!(o.status.code(), Some(1));
    let v = json(&o);
    assert_eq!(v["neighbours"], false);
    assert_eq!(v["witness"]["value"], "e1*e2");
    let o = w.run(&["neighbour", "--algebra", "sq0.alg", "--a", "e1,e2", "--b", "0,0"]);
    assert_eq!(o.status.code(), Some(0));
    // presented domain: X -> e1, Y -> 0 respects X^2 - Y^3
    let o = w.run(&["neighbour", "--algebra", "sq0.alg", "--domain", "cusp.alg", "--a", "e1,0", "--b", "-e1,e2"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
}

#[test]
fn matrix_subcommands() {
    let w = Workspace::new();
    assert_eq!(w.run(&["simplex", "--algebra", "weil.alg", "--matrix", "zero_row.txt"]).status.code(), Some(1));
    assert_eq!(w.run(&["simplex", "--algebra", "sq0.alg", "--matrix", "simplex.txt"]).status.code(), Some(0));
    assert_eq!(w.run(&["dtilde", "--algebra", "sq0.alg", "--matrix", "dtilde.txt"]).status.code(), Some(0));
    let o = w.run(&["--json", "dtilde", "--algebra", "weil.alg", "--matrix", "zero_row.txt"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["member"], false);

    let o = w.run(&["affine", "--algebra", "sq0.alg", "--matrix", "simplex.txt", "--coeffs", "1,-1,1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "e1 + e2 + 1, e1 + e2");
    // the rows of zero_row.txt are not neighbours
    let o = w.run(&["affine", "--algebra", "weil.alg", "--matrix", "zero_row.txt", "--coeffs", "1/2,1/2"]);
    assert_eq!(o.status.code(), Some(1));
    let o = w.run(&["affine", "--algebra", "sq0.alg", "--matrix", "simplex.txt", "--coeffs", "1,1,1"]);
    assert_eq!(o.status.code(), Some(2));

    let o = w.run(&["extend", "--algebra", "sq0.alg", "--matrix", "dtilde.txt", "--coeffs", "2,-1"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "e1, 0\n0, e2\n2*e1, -e2");
    let o = w.run(&["--json", "extend", "--algebra", "weil.alg", "--matrix", "zero_row.txt", "--coeffs", "1,1"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(json(&o)["kind"], "negative");
}

#[test]
fn decompose_and_universal() {
    let w = Workspace::new();
    let o = w.run(&["decompose", "--poly", "X^2", "--vars", "X"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(stdout(&o).trim(), "X: X_0 + X_1");
    let o = w.run(&["--json", "decompose", "--kernel", "X_1*X_0 - X_0^2", "--algebra", "line.alg"]);
    assert_eq!(o.status.code(), Some(0));
    assert_eq!(json(&o)["terms"][0]["generator"], "-X_0 + X_1");
    let o = w.run(&["decompose", "--kernel", "X_0", "--algebra", "line.alg"]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(w.run(&["decompose", "--vars", "X"]).status.code(), Some(2));

    let o = w.run(&["--json", "universal", "--algebra", "line.alg"]);
    assert_eq!(o.status.code(), Some(0));
    let v = json(&o);
    assert_eq!(v["relations"], serde_json::json!(["dX_1^2"]));
    assert_eq!(v["vertices"][1], "{X -> X_0 + dX_1}");
}

#[test]
fn gb_prints_one_polynomial_per_line() {
    let w = Workspace::new();
    w.write("gb.alg", "ring: Q\nvars: X Y\nrels: X^2 - Y ; X*Y - 1\nstrategy: groebner\n");
    let o = w.run(&["--order", "lex", "gb", "--algebra", "gb.alg"]);
    assert_eq!(o.status.code(), Some(0), "{}", String::from_utf8_lossy(&o.stderr));
    let lines: Vec<String> = stdout(&o).lines().map(str::to_string).collect();
    assert_eq!(lines.len(), 2);
    assert!(lines.contains(&"X - Y^2".to_string()) || lines.contains(&"-Y^2 + X".to_string()), "{lines:?}");
}

#[test]
fn usage_and_input_errors_exit_2() {
    let w = Workspace::new();
    assert_eq!(w.run(&["bogus"]).status.code(), Some(2));
    assert_eq!(w.run(&[]).status.code(), Some(2));
    assert_eq!(w.run(&["--order", "weird", "nf", "--algebra", "weil.alg", "--poly", "1"]).status.code(), Some(2));
    assert_eq!(w.run(&["nf", "--algebra", "missing.alg", "--poly", "1"]).status.code(), Some(2));
    assert_eq!(w.run(&["nf", "--algebra", "weil.alg", "--poly", "e3"]).status.code(), Some(2));
    let o = w.run(&["--json", "nf", "--algebra", "weil.alg", "--poly", "(("]);
    assert_eq!(o.status.code(), Some(2));
    assert!(json(&o)["error"].is_string());
    let o = w.run(&["--json", "frobnicate"]);
    assert_eq!(o.status.code(), Some(2));
    assert_eq!(json(&o)["kind"], "usage");
    assert_eq!(w.run(&["verify", "--cases", "0"]).status.code(), Some(2));
    assert_eq!(w.run(&["--help"]).status.code(), Some(0));
}

#[test]
fn verify_json_run() {
    let w = Workspace::new();
    let o = w.run(&["--seed", "42", "--json", "verify", "--cases", "20", "--rings", "Q,Z/2", "--p-max", "1"]);
    assert_eq!(o.status.code(), Some(0), "{}", stdout(&o));
    let v = json(&o);
    assert_eq!(v["config"]["seed"], 42);
    let checks = v["checks"].as_array().unwrap();
    assert!(checks.iter().all(|c| c["verdict"] != "fail"));
    assert!(checks.iter().any(|c| c["id"] == "square-zero/Z2" && c["verdict"] == "expected-divergence"));
    let text = w.run(&["--seed", "42", "verify", "--cases", "5", "--rings", "Z", "--p-max", "1", "--n-max", "1"]);
    assert_eq!(text.status.code(), Some(0));
    assert!(stdout(&text).contains("checks, 0 failed"));
}

#[test]
fn verify_default_run_passes() {
    let w = Workspace::new();
    let o = w.run(&["verify", "--seed", "42", "--json"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(json(&o)["checks"].as_array().unwrap().len() > 100);
}

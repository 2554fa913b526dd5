//! The `belitskii` binary: exit codes, error lines and output stability.

use std::path::PathBuf;
use std::process::{Command, Output};

const WORKED: &str = "7
0 1 0 3 -2 0 1
0 0 0 1 -1 0 0
0 0 0 0 0 0 1
0 0 0 0 0 0 0
0 0 0 0 0 1 0
0 0 0 0 0 0 0
0 0 0 0 0 0 0
";

fn bin() -> Command {
    let mut c = Command::new(env!("CARGO_BIN_EXE_belitskii"));
    c.env_remove("BELITSKII_JOBS");
    c
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn stderr(o: &Output) -> String {
    String::from_utf8(o.stderr.clone()).unwrap()
}

fn temp_file(name: &str, text: &str) -> PathBuf {
    let dir = std::env::temp_dir().join(format!("belitskii-cli-{}", std::process::id()));
    std::fs::create_dir_all(&dir).unwrap();
    let path = dir.join(name);
    std::fs::write(&path, text).unwrap();
    path
}

fn assert_error(o: &Output, code: i32, kind: &str) {
    assert_eq!(o.status.code(), Some(code), "{}", stderr(o));
    let err = stderr(o);
    assert_eq!(err.lines().count(), 1, "{err}");
    assert!(err.starts_with(&format!("error: {kind}: ")), "{err}");
    assert!(o.stdout.is_empty());
}

#[test]
fn canon_worked_example() {
    let path = temp_file("worked.txt", WORKED);
    let o = run(&["canon", path.to_str().unwrap(), "--show-witness"]);
    assert!(o.status.success());
    let out = stdout(&o);
    assert!(out.starts_with("124|37|56: 25\n7\n0 1 0 0 0 0 0\n0 0 0 1 1 0 0\n"), "{out}");
    assert!(out.contains("witness:\n"));
}

#[test]
fn canon_error_codes() {
    let bad = temp_file("bad.txt", "2\n0 x\n0 0\n");
    assert_error(&run(&["canon", bad.to_str().unwrap()]), 2, "parse");
    let lower = temp_file("lower.txt", "2\n0 0\n1 0\n");
    assert_error(&run(&["canon", lower.to_str().unwrap()]), 3, "not-strictly-upper");
    let diag = temp_file("diag.txt", "2\n1 0\n0 0\n");
    assert_eq!(run(&["canon", diag.to_str().unwrap()]).status.code(), Some(3));
    assert_error(&run(&["canon", "/nonexistent/matrix.txt"]), 2, "parse");
}

#[test]
fn canon_over_gf2_notes_parameters() {
    let mut rows = vec![vec!["0"; 8]; 8];
    for (i, j) in [(1, 2), (2, 5), (5, 6), (3, 4), (4, 7), (7, 8), (5, 7), (1, 3)] {
        rows[i - 1][j - 1] = "1";
    }
    let body: Vec<String> = rows.iter().map(|r| r.join(" ")).collect();
    let path = temp_file("gf2.txt", &format!("field=2\n8\n{}\n", body.join("\n")));
    let o = run(&["canon", path.to_str().unwrap()]);
    assert!(o.status.success(), "{}", stderr(&o));
    let out = stdout(&o);
    assert!(out.starts_with("1256|3478: 57|_13_\nparams: 13=1\n"), "{out}");
    assert!(out.contains("note: over GF(2) every parameter is 1\n"), "{out}");
}

#[test]
fn check_yes_no() {
    let yes = run(&["check", "123|478|56: 57|24|_25_"]);
    assert_eq!((yes.status.code(), stdout(&yes).as_str()), (Some(0), "yes\n"));
    let no = run(&["check", "123|478|56: 57|24|25"]);
    assert_eq!((no.status.code(), stdout(&no).as_str()), (Some(1), "no\n"));
    assert_error(&run(&["check", "12|34: 1x"]), 2, "invalid-graph-type");
}

#[test]
fn empty_symbol_is_accepted() {
    let o = run(&["check", "12|34: ∅"]);
    assert_eq!(stdout(&o), "yes\n");
    let o = run(&["enumerate", "3"]);
    let out = stdout(&o);
    assert!(out.contains(": empty\n") && !out.contains('∅'), "{out}");
}

#[test]
fn enumerate_out_of_range() {
    assert_error(&run(&["enumerate", "11"]), 2, "out-of-range");
    assert_error(&run(&["enumerate", "0"]), 2, "out-of-range");
}

#[test]
fn enumerate_is_stable_across_jobs() {
    let one = run(&["enumerate", "7", "--jobs", "1"]);
    let three = run(&["enumerate", "7", "--jobs", "3"]);
    let env = bin().args(["enumerate", "7"]).env("BELITSKII_JOBS", "2").output().unwrap();
    assert!(one.status.success());
    assert_eq!(one.stdout, three.stdout);
    assert_eq!(one.stdout, env.stdout);
    let bad = bin().args(["enumerate", "3"]).env("BELITSKII_JOBS", "many").output().unwrap();
    assert_error(&bad, 2, "parse");
}

#[test]
fn enumerate_writes_file() {
    let path = temp_file("n6.txt", "");
    let o = run(&["enumerate", "6", "--indecomposable", "--out", path.to_str().unwrap()]);
    assert_eq!(stdout(&o), "n=6 forms=19 partitions=16\n");
    let written = std::fs::read_to_string(&path).unwrap();
    assert_eq!(written.lines().count(), 20);
}

#[test]
fn combine_and_construct() {
    let o = run(&["combine", "12|34: 13", "12|34: 13", "--cross", "2,5", "--cross", "4,7"]);
    assert_eq!(stdout(&o), "1256|3478: 57|_13_\n");
    let o = run(&["combine", "12|34: 13", "12|34: 13", "--all", "--indecomposable"]);
    assert_eq!(stdout(&o).lines().count(), 6);
    assert_error(&run(&["combine", "12|34: 13", "12|34: 13", "--cross", "1,5"]), 2, "invalid-cross");
    assert_eq!(stdout(&run(&["construct3", "6", "0"])), "145|236: 24\n");
    assert_error(&run(&["construct3", "7", "0"]), 2, "out-of-range");
}

#[test]
fn dsim_exit_codes() {
    let a = temp_file("a.txt", "3\n0 2 10\n0 0 5\n0 0 0\n");
    let b = temp_file("b.txt", "3\n0 1 1\n0 0 1\n0 0 0\n");
    let c = temp_file("c.txt", "3\n0 1 10\n0 0 1\n0 0 0\n");
    let yes = run(&["dsim", a.to_str().unwrap(), b.to_str().unwrap()]);
    assert_eq!(yes.status.code(), Some(0));
    assert!(stdout(&yes).starts_with("yes\n"));
    let no = run(&["dsim", a.to_str().unwrap(), c.to_str().unwrap()]);
    assert_eq!((no.status.code(), stdout(&no).as_str()), (Some(1), "no\n"));
}

#[test]
fn verify_tables_codes() {
    let o = run(&["verify-tables", "6", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(0));
    let o = run(&["verify-tables", "8", "--jobs", "1"]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("- 145|236|78: 24|17") && out.contains("+ 12|34|56|78: 57|13|15"), "{out}");
}

#[test]
fn dot_and_coset() {
    let o = run(&["dot", "12|34: 13"]);
    assert!(stdout(&o).starts_with("digraph G {"));
    let path = temp_file("worked-coset.txt", WORKED);
    let o = run(&["coset", path.to_str().unwrap()]);
    assert!(stdout(&o).starts_with("124|37|56\n"));
    let o = run(&["dot", path.to_str().unwrap()]);
    assert!(o.status.success() && stdout(&o).contains("->"));
}

#[test]
fn usage_errors() {
    assert_error(&run(&["frobnicate"]), 2, "usage");
    assert_error(&run(&["enumerate", "seven"]), 2, "usage");
    assert_error(&run(&[]), 2, "usage");
    assert_eq!(run(&["--help"]).status.code(), Some(0));
}

use std::io::Write;
use std::process::{Command, Output, Stdio};

use serde_json::Value;

fn run(args: &[&str], stdin: &str) -> Output {
    let mut child = Command::new(env!("CARGO_BIN_EXE_hypodom"))
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .expect("spawn hypodom");
    child.stdin.take().unwrap().write_all(stdin.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn json_lines(o: &Output) -> Vec<Value> {
    stdout(o).lines().map(|l| serde_json::from_str(l).unwrap()).collect()
}

fn gen(args: &[&str]) -> String {
    let o = run(&[&["gen"], args].concat(), "");
    assert!(o.status.success(), "{}", String::from_utf8_lossy(&o.stderr));
    stdout(&o)
}

fn classes(v: &Value) -> Vec<&str> {
    v["classes"].as_array().unwrap().iter().map(|c| c.as_str().unwrap()).collect()
}

#[test]
fn analyze_c7() {
    let o = run(&["analyze"], &gen(&["cycle", "--n", "7"]));
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["gamma"], 3);
    assert_eq!(recs[0]["n"], 7);
    assert_eq!(recs[0]["bondage"], 3);
    assert!(classes(&recs[0]).contains(&"hypo-UD"));
}

#[test]
fn analyze_c4_is_in_both_hypo_classes() {
    let recs = json_lines(&run(&["analyze"], &gen(&["cycle", "--n", "4"])));
    let c = classes(&recs[0]);
    assert!(c.contains(&"hypo-ED") && c.contains(&"hypo-UD"));
    assert_eq!(recs[0]["gamma_set_count"], 6);
}

#[test]
fn analyze_edge_list_input() {
    let o = run(&["analyze", "--format", "edgelist", "--cap-gamma-sets", "10"], "4 4\n0 1\n1 2\n2 3\n3 0\n");
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs[0]["gamma_sets"].as_array().unwrap().len(), 6);
}

#[test]
fn malformed_line_keeps_going_and_exits_2() {
    let c4 = gen(&["cycle", "--n", "4"]);
    let o = run(&["analyze"], &format!("{c4}not graph6 ###\n{c4}"));
    assert_eq!(o.status.code(), Some(2));
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 3);
    assert_eq!(recs[1]["error"], "malformed graph6");
    assert_eq!(recs[1]["line"], 2);
    assert_eq!(recs[2]["input_id"], 3);
}

#[test]
fn gen_families() {
    assert_eq!(gen(&["extr1", "--k", "2", "--t", "2"]).lines().count(), 1);
    assert_eq!(gen(&["kminusm", "--n", "6"]).trim(), "E]~o");
    let extremall = gen(&["extremall", "--k", "1", "--max-n", "16"]);
    assert_eq!(extremall.lines().count(), 5);
    let recs = json_lines(&run(&["analyze"], &extremall));
    assert!(recs.iter().all(|r| classes(r).contains(&"hypo-UD")));
    assert_eq!(run(&["gen", "cycle"], "").status.code(), Some(2));
}

#[test]
fn verify_single_claim_and_all() {
    let o = run(&["verify", "CIRCU"], "");
    assert!(o.status.success());
    let recs = json_lines(&o);
    assert_eq!(recs.len(), 1);
    assert_eq!(recs[0]["claim"], "CIRCU");
    assert_eq!(recs[0]["failures"].as_array().unwrap().len(), 0);

    let o = run(&["verify", "all", "--max-n", "6"], "");
    assert!(o.status.success(), "{}", stdout(&o));
    assert!(json_lines(&o).len() >= 20);
}

#[test]
fn verify_reads_a_stream() {
    let o = run(&["enumerate", "--n", "6", "--kind", "connected"], "");
    let stream = stdout(&o);
    assert_eq!(stream.lines().count(), 112);
    let path = std::env::temp_dir().join(format!("hypodom-cli-{}.g6", std::process::id()));
    std::fs::write(&path, stream).unwrap();
    let o = run(&["verify", "UDVC", "--stream", path.to_str().unwrap()], "");
    std::fs::remove_file(&path).ok();
    assert!(o.status.success());
    assert_eq!(json_lines(&o)[0]["scanned"], 112);
}

#[test]
fn search_selfcomp_on_order_five() {
    let five = stdout(&run(&["enumerate", "--n", "5"], ""));
    assert_eq!(five.lines().count(), 34);
    let o = run(&["search", "SELFCOMP"], &five);
    assert!(o.status.success());
    assert_eq!(json_lines(&o).len(), 2);
}

#[test]
fn unknown_names_are_usage_errors() {
    assert_eq!(run(&["verify", "NOPE"], "").status.code(), Some(2));
    assert_eq!(run(&["search", "NOPE", "--builtin"], "").status.code(), Some(2));
    assert_eq!(run(&["frobnicate"], "").status.code(), Some(2));
}

#[test]
fn output_is_independent_of_jobs() {
    let stream = stdout(&run(&["enumerate", "--n", "6"], ""));
    let one = stdout(&run(&["--jobs", "1", "analyze"], &stream));
    let four = stdout(&run(&["--jobs", "4", "analyze"], &stream));
    assert_eq!(one, four);
    assert_eq!(one.lines().count(), 156);
}

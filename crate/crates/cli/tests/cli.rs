use std::io::Write;
use std::process::{Command, Output, Stdio};

fn bin() -> Command {
    Command::new(env!("CARGO_BIN_EXE_permutomino"))
}

fn run(args: &[&str]) -> Output {
    bin().args(args).output().expect("binary runs")
}

fn run_with_stdin(args: &[&str], input: &str) -> Output {
    let mut child = bin()
        .args(args)
        .stdin(Stdio::piped())
        .stdout(Stdio::piped())
        .stderr(Stdio::piped())
        .spawn()
        .unwrap();
    child.stdin.take().unwrap().write_all(input.as_bytes()).unwrap();
    child.wait_with_output().unwrap()
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

#[test]
fn count() {
    let o = run(&["count", "--n", "7"]);
    assert!(o.status.success());
    assert_eq!(stdout(&o), "8468\n");
    let o = run(&["count", "--n", "3", "--sequence"]);
    assert_eq!(stdout(&o), "1\t1\n2\t4\n3\t18\n");
}

#[test]
fn usage_errors_exit_two() {
    assert_eq!(run(&["count", "--n", "0"]).status.code(), Some(2));
    assert_eq!(run(&["count"]).status.code(), Some(2));
    assert_eq!(run(&["generate", "--n", "40"]).status.code(), Some(2));
    assert_eq!(run(&["series", "nope"]).status.code(), Some(2));
}

#[test]
fn census_header_once() {
    let out = stdout(&run(&["census", "--n", "3"]));
    assert_eq!(out.matches("level").count(), 1);
    assert!(out.contains("3\t1\tG\t2\n"));
    assert_eq!(out.lines().count(), 8);
}

#[test]
fn generate_jsonl_then_render() {
    let out = stdout(&run(&["generate", "--n", "4", "--with-path"]));
    let lines: Vec<&str> = out.lines().collect();
    assert_eq!(lines.len(), 84);
    assert!(lines.iter().all(|l| l.contains("\"path\":[")));
    let o = run_with_stdin(&["render"], lines[0]);
    assert!(o.status.success());
    let grid = stdout(&o);
    assert_eq!(grid.lines().count(), 4);
    assert!(grid.contains('#'));
    let svg = stdout(&run_with_stdin(&["render", "--format", "svg"], lines[0]));
    assert!(svg.contains("<svg"));
}

#[test]
fn generate_to_file() {
    let path = std::env::temp_dir().join(format!("permutomino-cli-{}.jsonl", std::process::id()));
    let o = run(&["generate", "--n", "3", "--out", path.to_str().unwrap()]);
    assert!(o.status.success());
    assert!(o.stdout.is_empty());
    let text = std::fs::read_to_string(&path).unwrap();
    std::fs::remove_file(&path).unwrap();
    assert_eq!(text.lines().count(), 18);
    let o = run(&["render", "--input", "/nonexistent/permutomino"]);
    assert_eq!(o.status.code(), Some(2));
}

#[test]
fn render_rejects_bad_record() {
    let o = run_with_stdin(&["render"], r#"{"n":2,"cols":[[1,2],[1,2]],"label":{"k":2,"class":"B"}}"#);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("invalid permutomino"));
}

#[test]
fn series_output() {
    assert_eq!(stdout(&run(&["series", "f1", "--order", "3"])), "0\t0\n1\t1\n2\t4\n3\t18\n");
    let biv = stdout(&run(&["series", "b", "--order", "2"]));
    assert_eq!(biv, "0\t0\n1\t0,1\n2\t0,0,2\n");
}

#[test]
fn oracle_and_pairs() {
    assert_eq!(stdout(&run(&["oracle", "--n", "4"])), "84\n");
    let pairs = stdout(&run(&["oracle", "--n", "2", "--pairs"]));
    assert!(pairs.contains("pairs\t12\n"));
    assert!(pairs.ends_with("distinct\t4\n"));
}

#[test]
fn verify_passes() {
    let o = run(&["verify", "--max-n", "4"]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.lines().all(|l| l.starts_with("PASS")));
    assert_eq!(out.lines().count(), 13);
}

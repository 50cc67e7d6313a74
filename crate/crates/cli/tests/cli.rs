use std::path::PathBuf;
use std::process::{Command, Output};

const C6: &str = "3\n0 3\n1 4\n2 5\n3 1\n4 2\n5 0\n";

fn bipan(args: &[&str]) -> Output {
    Command::new(env!("CARGO_BIN_EXE_bipan")).args(args).output().expect("binary runs")
}

fn stdout(o: &Output) -> String {
    String::from_utf8(o.stdout.clone()).unwrap()
}

fn scratch(name: &str, contents: &str) -> PathBuf {
    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join(name);
    std::fs::write(&path, contents).unwrap();
    path
}

fn k33() -> PathBuf {
    let o = bipan(&["gen", "--family", "complete", "--a", "3"]);
    scratch("k33.txt", &stdout(&o))
}

#[test]
fn check_reports_each_condition() {
    let c6 = scratch("check-c6.txt", C6);
    let o = bipan(&["check", c6.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("strongly connected: yes\n"));
    assert!(out.contains("condition A: ok\n"));
    assert!(out.contains("min degree: violated"));

    let o = bipan(&["check", k33().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("degree cap: violated (vertex x1: d+ = 3, d- = 3, cap 2)"));
}

#[test]
fn check_flags_condition_a_violation() {
    // The 6-cycle plus y1 -> x1: x1 and x2 share y1 as in-neighbour at degree sum 5.
    let d = scratch("check-chord.txt", "3\n0 3\n1 4\n2 5\n3 1\n4 2\n5 0\n3 0\n");
    let o = bipan(&["check", d.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    let out = stdout(&o);
    assert!(out.contains("condition A: violated"), "{out}");
    assert!(out.ends_with("hypotheses: fail\n"));
}

#[test]
fn parse_errors_name_the_line() {
    let bad = scratch("bad.txt", "3\n0 3\n3 x\n");
    let o = bipan(&["check", bad.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(2));
    assert!(String::from_utf8_lossy(&o.stderr).contains("line 3"));

    let same_side = scratch("same-side.txt", "3\n0 1\n");
    assert_eq!(bipan(&["spectrum", same_side.to_str().unwrap()]).status.code(), Some(2));
    assert_eq!(bipan(&["check", "/nonexistent/digraph.txt"]).status.code(), Some(2));
}

#[test]
fn spectrum_lists_certificates() {
    let o = bipan(&["spectrum", k33().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    let mut lines = out.lines();
    assert_eq!(lines.next(), Some("2:yes 4:yes 6:yes bipancyclic:yes exceptional-cycle:no"));
    assert_eq!(lines.count(), 3);

    let c6 = scratch("spectrum-c6.txt", C6);
    let out = stdout(&bipan(&["spectrum", c6.to_str().unwrap()]));
    assert_eq!(out, "2:no 4:no 6:yes bipancyclic:no exceptional-cycle:yes\n6: [x1,y1,x2,y2,x3,y3]\n");

    let empty = scratch("empty.txt", "3\n");
    let out = stdout(&bipan(&["spectrum", empty.to_str().unwrap()]));
    assert_eq!(out, "2:no 4:no 6:no bipancyclic:no exceptional-cycle:no\n");
}

#[test]
fn trace_follows_or_refuses() {
    let o = bipan(&["trace", k33().to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("== branch\ndegree-cap-violated"));
    assert!(out.ends_with("bipancyclic via these certificates\n"));

    let c6 = scratch("trace-c6.txt", C6);
    let o = bipan(&["trace", c6.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(1));
    assert_eq!(stdout(&o), "refused: exceptional directed 2a-cycle\n");
}

#[test]
fn verify_exhaustive_a3() {
    let out_file = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("verify.jsonl");
    let o = bipan(&["verify", "--a", "3", "--out", out_file.to_str().unwrap()]);
    assert_eq!(o.status.code(), Some(0));
    let out = stdout(&o);
    assert!(out.contains("digraphs examined: 262144\n"));
    assert!(out.contains("hypothesis passers: 1762\n"));
    assert!(out.contains("conclusion failures: 0\n"));
    assert_eq!(std::fs::read_to_string(out_file).unwrap(), "");
}

#[test]
fn sweep_argument_errors() {
    assert_eq!(bipan(&["verify", "--a", "9"]).status.code(), Some(2));
    assert_eq!(bipan(&["verify", "--a", "4"]).status.code(), Some(2));
    assert_eq!(bipan(&["verify", "--a", "3", "--seed", "1"]).status.code(), Some(2));
    assert_eq!(bipan(&["verify", "--a", "4", "--mode", "random"]).status.code(), Some(2));
    assert_eq!(bipan(&["verify", "--a", "4", "--mode", "random", "--seed", "1", "--prob", "0"]).status.code(), Some(2));
    assert_eq!(bipan(&["search", "--a", "3", "--k", "0", "--l", "3"]).status.code(), Some(2));
}

#[test]
fn search_sharpness_and_budget() {
    let o = bipan(&["search", "--a", "3", "--k", "1"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witnesses: 180\n"));

    let o = bipan(&["search", "--a", "3", "--k", "0"]);
    assert_eq!(o.status.code(), Some(0));
    assert!(stdout(&o).contains("witnesses: 0\n"));

    let o = bipan(&[
        "verify",
        "--a",
        "5",
        "--mode",
        "random",
        "--seed",
        "3",
        "--samples",
        "50",
        "--prob",
        "0.8",
        "--budget-nodes",
        "1",
    ]);
    assert_eq!(o.status.code(), Some(3));
    assert!(stdout(&o).contains("status: budget exhausted\n"));
}

#[test]
fn random_sweeps_repeat_across_workers() {
    let run = |workers: &str| {
        let o = bipan(&[
            "search",
            "--a",
            "4",
            "--k",
            "2",
            "--mode",
            "random",
            "--seed",
            "21",
            "--samples",
            "2000",
            "--prob",
            "0.6",
            "--workers",
            workers,
        ]);
        assert_eq!(o.status.code(), Some(0));
        let out = stdout(&o);
        out.lines().filter(|l| !l.starts_with("runtime:")).collect::<Vec<_>>().join("\n")
    };
    assert_eq!(run("1"), run("3"));
}

#[test]
fn gen_families() {
    let cycle = stdout(&bipan(&["gen", "--family", "cycle", "--a", "3"]));
    assert_eq!(cycle.lines().count(), 7);
    let complete = stdout(&bipan(&["gen", "--family", "complete", "--a", "3"]));
    assert_eq!(complete.lines().count(), 19);

    let args = ["gen", "--family", "random", "--a", "4", "--prob", "0.5", "--seed", "77"];
    let first = stdout(&bipan(&args));
    assert_eq!(first, stdout(&bipan(&args)));
    assert!(first.starts_with("4\n"));

    let path = PathBuf::from(env!("CARGO_TARGET_TMPDIR")).join("gen-random.txt");
    let mut with_out = args.to_vec();
    with_out.extend(["--out", path.to_str().unwrap()]);
    assert_eq!(bipan(&with_out).status.code(), Some(0));
    assert_eq!(std::fs::read_to_string(&path).unwrap(), first);

    assert_eq!(bipan(&["gen", "--family", "random", "--a", "4", "--prob", "0.5"]).status.code(), Some(2));
    assert_eq!(bipan(&["gen", "--family", "cycle", "--a", "3", "--seed", "1"]).status.code(), Some(2));
}

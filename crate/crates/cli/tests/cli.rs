use std::path::PathBuf;
use std::process::Command;

fn corpus(name: &str) -> String {
    let p: PathBuf = [env!("CARGO_MANIFEST_DIR"), "..", "..", "corpus", name].iter().collect();
    p.to_string_lossy().into_owned()
}

fn run(args: &[&str]) -> (i32, String, String) {
    let out = Command::new(env!("CARGO_BIN_EXE_shiftlab")).args(args).output().unwrap();
    (
        out.status.code().unwrap(),
        String::from_utf8(out.stdout).unwrap(),
        String::from_utf8(out.stderr).unwrap(),
    )
}

#[test]
fn fischer_cover_of_redundant_even_presentation() {
    let (code, out, _) = run(&["cover", "fischer", &corpus("even4.graph")]);
    assert_eq!(code, 0);
    assert_eq!(out.lines().filter(|l| l.starts_with("vertex ")).count(), 2);
    assert!(out.contains("alphabet 0 1"));
}

#[test]
fn decoder_block_of_even_map() {
    let (code, out, _) = run(&["map", "decoder", &corpus("evenmap.code"), "--max-len", "4"]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "decoder-block 1 anticipation 0"));
}

#[test]
fn theorem_checks_exit_codes() {
    let (code, out, _) = run(&["check", "t42", &corpus("xor.code")]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "status agree-negative"));
    let (code, out, _) = run(&["check", "t42", &corpus("evenmap.code")]);
    assert_eq!(code, 0);
    assert!(out.lines().any(|l| l == "status agree-positive"));
    let (code, out, _) = run(&["check", "t33", &corpus("xor.code")]);
    assert_eq!(code, 0, "{out}");
}

#[test]
fn hyperbolic_report_line() {
    let (_, out, _) = run(&["map", "hyperbolic", &corpus("xor.code")]);
    assert!(out.lines().any(|l| l == "hyperbolic word 0 d 2 k 0 blocks 00 11"), "{out}");
}

#[test]
fn input_errors_exit_one() {
    let (code, _, err) = run(&["lang", "count", &corpus("missing.graph"), "3"]);
    assert_eq!(code, 1);
    assert!(err.contains("missing.graph"));
    let (code, _, _) = run(&["lang", "count", &corpus("golden.graph"), "3", "--max-len", "0"]);
    assert_eq!(code, 1);
    let dir = std::env::temp_dir().join("shiftlab-cli-test");
    std::fs::create_dir_all(&dir).unwrap();
    let bad = dir.join("bad.graph");
    std::fs::write(&bad, "alphabet 0 1\nvertex A\nedge A A 2\n").unwrap();
    let (code, _, err) = run(&["cover", "fischer", bad.to_str().unwrap()]);
    assert_eq!(code, 1);
    assert!(err.contains("line 3"), "{err}");
}

#[test]
fn tsv_format() {
    let (_, out, _) = run(&["lang", "count", &corpus("golden.graph"), "3", "--format", "tsv"]);
    assert_eq!(out, "lang-count\tcount\t1 2\nlang-count\tcount\t2 3\nlang-count\tcount\t3 5\n");
}

#[test]
fn sync_and_points() {
    let (_, out, _) = run(&["sync", "check", &corpus("even.graph"), "0"]);
    assert!(out.contains("verdict not-synchronizing"));
    assert_eq!(out.lines().filter(|l| l.starts_with("witness ")).count(), 2);
    let (_, out, _) = run(&["sync", "half", &corpus("dyck2.oracle"), "(1.)1", "--horizon", "4"]);
    assert!(out.contains("verdict holds-at-horizon"));
    let (_, out, _) = run(&["code", "apply", &corpus("xor.code"), "0/1/0"]);
    assert!(out.contains("point 0/11/0"));
}

#[test]
fn run_all_reports_every_criterion() {
    let (_, out, _) = run(&["corpus", "run-all"]);
    for n in 1..=10 {
        assert!(out.lines().any(|l| l.starts_with(&format!("criterion {n} "))));
    }
}
